#pragma once

#include <json.hpp>

#include "dbar.hpp"
#include "hankel.hpp"

namespace polyfock {

/// ordered_json everywhere: insertion order is part of the byte-identical
/// output contract of the CLI.
using Json = nlohmann::ordered_json;

/// Scalar as {"terms": [[h, "p/q"], ...]} meaning sum over terms of
/// (p/q) t^h with t = sqrt(m).  Term order follows the canonical map.
inline Json to_json(const Scalar& s) {
    Json terms = Json::array();
    for (const auto& [h, c] : s.terms()) terms.push_back(Json::array({h, format_rational(c)}));
    return Json{{"terms", terms}};
}

/// PolyPoly as {"terms": [[j, k, scalar], ...]} meaning sum of
/// scalar * zbar^j z^k.
inline Json to_json(const PolyPoly& p) {
    Json terms = Json::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back(Json::array({key.first, key.second, to_json(c)}));
    return Json{{"terms", terms}};
}

inline Json to_json(const Classification& c) {
    Json j{{"operator_kind", kind_name(c.operator_kind)},
           {"symbol_degree", c.symbol_degree},
           {"N", c.N},
           {"verdict", verdict_name(c.verdict)}};
    if (c.growth_degree)
        j["growth_degree"] = *c.growth_degree;
    else
        j["growth_degree"] = nullptr; // norm sequence identically zero
    return j;
}

inline Json to_json(const SolutionReport& r) {
    return Json{{"u", to_json(r.u)},
                {"residual_ok", r.residual_ok},
                {"orthogonal_ok", r.orthogonal_ok},
                {"norm_sq", to_json(r.norm_sq)}};
}

} // namespace polyfock
