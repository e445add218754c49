#pragma once

#include <stdexcept>
#include <string>

namespace gtb {

/// Base class for all validation and computation errors of the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotWeaklyDecreasing : public Error {
public:
    explicit NotWeaklyDecreasing(const std::string& what) : Error(what) {}
};

class NegativeEntry : public Error {
public:
    explicit NegativeEntry(const std::string& what) : Error(what) {}
};

class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Carries the (row, column) pair of the first failing interlacing relation,
/// 1-indexed with rows counted from the bottom of the triangle.
class InterlacingViolation : public Error {
public:
    InterlacingViolation(int row, int col, const std::string& what)
        : Error(what), row_(row), col_(col) {}
    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_;
    int col_;
};

class WeightTooLong : public Error {
public:
    explicit WeightTooLong(const std::string& what) : Error(what) {}
};

class EntryOutOfRange : public Error {
public:
    explicit EntryOutOfRange(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class ContextMismatch : public Error {
public:
    explicit ContextMismatch(const std::string& what) : Error(what) {}
};

class ZeroVectorError : public Error {
public:
    explicit ZeroVectorError(const std::string& what) : Error(what) {}
};

/// The basis constructor produced a null vector; signals a convention error
/// and must never fire in the accepted configuration.
class ZeroVectorProduced : public Error {
public:
    explicit ZeroVectorProduced(const std::string& what) : Error(what) {}
};

/// The constructed family is linearly dependent; same severity as above.
class RankDeficient : public Error {
public:
    explicit RankDeficient(const std::string& what) : Error(what) {}
};

}  // namespace gtb
