#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gtbasis/module_vector.hpp"
#include "gtbasis/monomial.hpp"
#include "gtbasis/partition.hpp"
#include "gtbasis/pattern.hpp"
#include "gtbasis/quantum_minor.hpp"
#include "gtbasis/rational.hpp"
#include "gtbasis/tableau.hpp"

namespace gtb {

/// Insertion-ordered JSON keeps the documented key layout byte-stable.
using Json = nlohmann::ordered_json;

/// {"n": 2, "rows": [[1],[1,0]]} with rows stored bottom-up.
inline Json pattern_to_json(const GTPattern& p) {
    Json j;
    j["n"] = p.rank();
    j["rows"] = p.rows();
    return j;
}

inline GTPattern pattern_from_json(const Json& j) {
    const auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    GTPattern p = GTPattern::validate(rows);
    if (j.contains("n") && j.at("n").get<int>() != p.rank())
        throw ShapeError("pattern rank field disagrees with row count");
    return p;
}

/// {"shape":[2,1],"rows":[[1,1],[2]]}
inline Json tableau_to_json(const Tableau& t) {
    Json j;
    j["shape"] = t.shape().parts();
    j["rows"] = t.rows();
    return j;
}

inline Tableau tableau_from_json(const Json& j, int max_entry) {
    Tableau t = Tableau::validate(j.at("rows").get<std::vector<std::vector<int>>>(), max_entry);
    if (j.contains("shape") && j.at("shape").get<std::vector<int>>() != t.shape().parts())
        throw ShapeError("tableau shape field disagrees with row lengths");
    return t;
}

/// {"lambda":[2,1],"n":3,"terms":[{"columns":[[1,2],[1]],"coeff":"1"}]} with
/// exact "p/q" coefficient strings and terms in the canonical monomial order.
inline Json vector_to_json(const ModuleVector& v) {
    Json j;
    j["lambda"] = v.context().shape.parts();
    j["n"] = v.context().rank;
    Json terms = Json::array();
    for (const auto& [m, c] : v.terms()) {
        Json t;
        t["columns"] = m.columns();
        t["coeff"] = coeff_to_string(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline ModuleVector vector_from_json(const Json& j) {
    ModuleContext ctx(Partition(j.at("lambda").get<std::vector<int>>()), j.at("n").get<int>());
    ModuleVector v(ctx);
    for (const auto& t : j.at("terms")) {
        ColumnMonomial m(t.at("columns").get<std::vector<std::vector<int>>>());
        if (!ctx.admits(m))
            throw ShapeError("term " + m.to_string() + " does not match the vector context");
        v.add_term(m, coeff_from_string(t.at("coeff").get<std::string>()));
    }
    return v;
}

/// {"pattern":…,"m":2,"expected":[c0,c1,…],"status":"match"} with integer
/// coefficient arrays for the eigenvalue polynomial.
inline Json spectral_report_to_json(const GTPattern& pattern, const SpectralReport& report) {
    Json j;
    j["pattern"] = pattern_to_json(pattern);
    j["m"] = report.m;
    Json expected = Json::array();
    for (const auto& c : report.expected) expected.push_back(static_cast<long long>(c));
    j["expected"] = std::move(expected);
    j["status"] = report.match ? "match" : "mismatch";
    if (!report.match) j["mismatch_power"] = report.mismatch_power;
    return j;
}

}  // namespace gtb
