// Command-line front end: deterministic, scriptable access to the pattern
// enumeration, basis construction, spectral verification and embedding
// machinery. Output is newline-delimited JSON (or plain text) so runs are
// diffable; identical inputs produce byte-identical output.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage/validation error.

#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "gtbasis/colimit.hpp"
#include "gtbasis/json_io.hpp"
#include "gtbasis/lowering.hpp"
#include "gtbasis/partition.hpp"
#include "gtbasis/pattern.hpp"
#include "gtbasis/quantum_minor.hpp"
#include "gtbasis/tableau.hpp"
#include "gtbasis/verify.hpp"
#include "gtbasis/weyl_module.hpp"

namespace {

struct Options {
    std::string weight;
    int rank = 0;
    int max_degree = 0;
    int wedge = 0;
    std::string output;
    std::string format = "json";
    bool perturb = false;
};

class OutputStream {
public:
    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw gtb::Error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int run_dim(const Options& opt) {
    const gtb::Partition lambda = gtb::Partition::parse(opt.weight);
    const gtb::Integer dim = gtb::weyl_dimension(lambda, opt.rank);
    const auto patterns = gtb::enumerate_patterns(lambda, opt.rank);
    OutputStream out(opt.output);
    if (opt.format == "text") {
        out.get() << dim.str() << "\n";
    } else {
        gtb::Json j;
        j["weight"] = lambda.parts();
        j["rank"] = opt.rank;
        j["weyl_dimension"] = dim.str();
        j["pattern_count"] = patterns.size();
        out.get() << j.dump() << "\n";
    }
    return gtb::Integer(patterns.size()) == dim ? 0 : 1;
}

int run_patterns(const Options& opt) {
    const gtb::Partition lambda = gtb::Partition::parse(opt.weight);
    if (opt.max_degree <= 0 && opt.rank <= 0)
        throw gtb::Error("patterns needs --rank (finite patterns) or --max-degree (infinite)");
    OutputStream out(opt.output);
    if (opt.max_degree > 0) {
        for (const auto& inf : gtb::enumerate_infinite_patterns(lambda, opt.max_degree)) {
            if (opt.format == "text") {
                out.get() << "deg=" << inf.degree() << " " << inf.triangle().to_string() << "\n";
            } else {
                gtb::Json j;
                j["weight"] = lambda.parts();
                j["degree"] = inf.degree();
                j["rows"] = inf.triangle().rows();
                out.get() << j.dump() << "\n";
            }
        }
        return 0;
    }
    for (const auto& p : gtb::enumerate_patterns(lambda, opt.rank)) {
        if (opt.format == "text")
            out.get() << p.to_string() << "\n";
        else
            out.get() << gtb::pattern_to_json(p).dump() << "\n";
    }
    return 0;
}

int run_tableaux(const Options& opt) {
    const gtb::Partition lambda = gtb::Partition::parse(opt.weight);
    OutputStream out(opt.output);
    for (const auto& p : gtb::enumerate_patterns(lambda, opt.rank)) {
        const gtb::Tableau t = gtb::pattern_to_tableau(p);
        if (opt.format == "text")
            out.get() << t.to_string() << "\n";
        else
            out.get() << gtb::tableau_to_json(t).dump() << "\n";
    }
    return 0;
}

int run_basis(const Options& opt) {
    const gtb::Partition lambda = gtb::Partition::parse(opt.weight);
    OutputStream out(opt.output);
    for (const auto& [pattern, vector] : gtb::gt_basis(lambda, opt.rank)) {
        if (opt.format == "text") {
            out.get() << pattern.to_string() << " -> " << vector.to_string() << "\n";
        } else {
            gtb::Json j;
            j["pattern"] = gtb::pattern_to_json(pattern);
            j["vector"] = gtb::vector_to_json(vector);
            out.get() << j.dump() << "\n";
        }
    }
    return 0;
}

int run_spectrum(const Options& opt) {
    const gtb::Partition lambda = gtb::Partition::parse(opt.weight);
    OutputStream out(opt.output);
    bool all_match = true;
    gtb::StraightenCache cache{gtb::ModuleContext(lambda, opt.rank)};
    for (const auto& [pattern, vector] : gtb::gt_basis(lambda, opt.rank)) {
        for (int m = 1; m <= opt.rank; ++m) {
            const auto report = gtb::spectral_check(pattern, m, vector, &cache);
            all_match = all_match && report.match;
            if (opt.format == "text") {
                out.get() << pattern.to_string() << " m=" << m << " "
                          << (report.match ? "match" : "MISMATCH") << "\n";
            } else {
                out.get() << gtb::spectral_report_to_json(pattern, report).dump() << "\n";
            }
        }
    }
    return all_match ? 0 : 1;
}

int run_verify(const Options& opt) {
    const gtb::Partition lambda = gtb::Partition::parse(opt.weight);
    gtb::VerifyOptions vopt;
    vopt.threads = gtb::configured_threads();
    vopt.perturb = opt.perturb;
    const gtb::VerifyReport report = gtb::verify_weight(lambda, opt.rank, vopt);
    OutputStream out(opt.output);
    if (opt.format == "text")
        out.get() << report.to_text();
    else
        out.get() << report.to_json().dump() << "\n";
    return report.ok() ? 0 : 1;
}

int run_embed(const Options& opt) {
    const gtb::Partition lambda = gtb::Partition::parse(opt.weight);
    OutputStream out(opt.output);
    bool all_stable = true;
    for (const auto& inf : gtb::enumerate_infinite_patterns(lambda, opt.rank)) {
        const auto tower = gtb::stable_basis_vector(inf);
        const auto result = gtb::stability_check(inf, opt.rank + 1);
        all_stable = all_stable && result.stable;
        const gtb::ModuleVector embedded = tower.at_rank(opt.rank + 1);
        if (opt.format == "text") {
            out.get() << "deg=" << inf.degree() << " " << inf.triangle().to_string() << " -> "
                      << embedded.to_string() << (result.stable ? " stable" : " UNSTABLE") << "\n";
        } else {
            gtb::Json j;
            j["weight"] = lambda.parts();
            j["degree"] = inf.degree();
            j["rows"] = inf.triangle().rows();
            j["base_rank"] = tower.base_rank;
            j["to_rank"] = opt.rank + 1;
            j["vector"] = gtb::vector_to_json(embedded);
            j["stable"] = result.stable;
            out.get() << j.dump() << "\n";
        }
    }
    return all_stable ? 0 : 1;
}

int run_fundamental(const Options& opt) {
    OutputStream out(opt.output);
    const auto matches = gtb::match_fundamental_basis(opt.wedge, opt.rank);
    for (const auto& match : matches) {
        if (opt.format == "text") {
            out.get() << match.monomial.to_string() << " <-> " << match.pattern.to_string()
                      << " scalar=" << gtb::coeff_to_string(match.scalar) << "\n";
        } else {
            gtb::Json j;
            j["monomial"] = match.monomial.columns();
            j["pattern"] = gtb::pattern_to_json(match.pattern);
            j["scalar"] = gtb::coeff_to_string(match.scalar);
            out.get() << j.dump() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gelfand-Tsetlin basis engine for polynomial gl(n) representations"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool needs_rank) {
        cmd->add_option("--weight", opt.weight,
                        "comma-separated highest weight; empty string is the empty weight");
        auto* rank = cmd->add_option("--rank", opt.rank, "gl(n) rank");
        if (needs_rank) rank->required();
        cmd->add_option("--output", opt.output, "output path (default: stdout)");
        cmd->add_option("--format", opt.format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    auto* dim = app.add_subcommand("dim", "dimension by product formula and enumeration count");
    add_common(dim, true);
    auto* patterns = app.add_subcommand("patterns", "enumerate Gelfand-Tsetlin patterns");
    add_common(patterns, false);
    patterns->add_option("--max-degree", opt.max_degree,
                         "list infinite patterns of degree <= bound instead of rank patterns");
    auto* tableaux = app.add_subcommand("tableaux", "enumerate semistandard tableaux");
    add_common(tableaux, true);
    auto* basis = app.add_subcommand("basis", "emit (pattern, basis vector) pairs");
    add_common(basis, true);
    auto* spectrum = app.add_subcommand("spectrum", "quantum minor spectral reports");
    add_common(spectrum, true);
    auto* verify = app.add_subcommand("verify", "run the full property suite");
    add_common(verify, true);
    verify->add_flag("--perturb", opt.perturb, "inject one coefficient fault (self-test)");
    auto* embed_cmd = app.add_subcommand("embed", "embed basis vectors one rank up");
    add_common(embed_cmd, true);
    auto* fundamental = app.add_subcommand("fundamental", "wedge basis of (1^k) vs the GT basis");
    add_common(fundamental, true);
    fundamental->add_option("--wedge", opt.wedge, "wedge degree k")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (dim->parsed()) return run_dim(opt);
        if (patterns->parsed()) return run_patterns(opt);
        if (tableaux->parsed()) return run_tableaux(opt);
        if (basis->parsed()) return run_basis(opt);
        if (spectrum->parsed()) return run_spectrum(opt);
        if (verify->parsed()) return run_verify(opt);
        if (embed_cmd->parsed()) return run_embed(opt);
        if (fundamental->parsed()) return run_fundamental(opt);
    } catch (const gtb::RankDeficient& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const gtb::ZeroVectorProduced& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const gtb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
