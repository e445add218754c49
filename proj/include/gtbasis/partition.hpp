#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gtbasis/errors.hpp"
#include "gtbasis/rational.hpp"

namespace gtb {

/// A partition: weakly decreasing sequence of nonnegative integers with
/// trailing zeros stripped. Doubles as a polynomial highest weight and as
/// a Young-diagram shape.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw NegativeEntry("partition part " + std::to_string(parts_[i]) + " is negative");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw NotWeaklyDecreasing("parts " + std::to_string(parts_[i]) + "," +
                                          std::to_string(parts_[i + 1]) + " are not weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Number of nonzero parts.
    int length() const { return static_cast<int>(parts_.size()); }

    bool empty() const { return parts_.empty(); }

    /// 1-indexed part; zero beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    /// Total number of cells |λ|.
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    const std::vector<int>& parts() const { return parts_; }

    /// Conjugate (transposed) partition; column c of λ has height λ'_c.
    Partition conjugate() const {
        if (parts_.empty()) return Partition{};
        std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int c = 0; c < p; ++c) ++conj[static_cast<std::size_t>(c)];
        return Partition(std::move(conj));
    }

    /// Zero-padded copy of the parts, length n. Throws when n < length().
    std::vector<int> padded(int n) const {
        if (n < length())
            throw WeightTooLong("cannot pad partition of length " + std::to_string(length()) +
                                " to " + std::to_string(n));
        std::vector<int> out(static_cast<std::size_t>(n), 0);
        std::copy(parts_.begin(), parts_.end(), out.begin());
        return out;
    }

    /// First min(n, length) parts zero-padded to length n: the forced shape
    /// of row n in a stabilized infinite pattern.
    std::vector<int> cut(int n) const {
        std::vector<int> out(static_cast<std::size_t>(n), 0);
        for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = part(i);
        return out;
    }

    bool operator==(const Partition& o) const = default;
    auto operator<=>(const Partition& o) const = default;

    /// "2,1" (empty string for the empty partition).
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    /// Parses a comma-separated list; the empty string is the empty partition.
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            std::string tok{text.substr(pos, next - pos)};
            tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }),
                      tok.end());
            if (tok.empty()) throw ShapeError("empty component in weight '" + std::string(text) + "'");
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw ShapeError("cannot parse weight component '" + tok + "'");
            }
            if (used != tok.size()) throw ShapeError("cannot parse weight component '" + tok + "'");
            parts.push_back(value);
            pos = next + 1;
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
};

/// Exact dimension of the irreducible gl(n)-module V^λ by the Weyl product
/// formula ∏_{i<j} (λ_i − λ_j + j − i)/(j − i).
inline Integer weyl_dimension(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw WeightTooLong("weight of length " + std::to_string(lambda.length()) +
                            " does not fit in rank " + std::to_string(n));
    Integer num = 1, den = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            num *= lambda.part(i) - lambda.part(j) + j - i;
            den *= j - i;
        }
    return num / den;
}

}  // namespace gtb
