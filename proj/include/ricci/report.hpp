#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/digraph.hpp"
#include "ricci/markov.hpp"
#include "ricci/rational.hpp"
#include "ricci/rigidity.hpp"
#include "ricci/spectral.hpp"

namespace ricci {

/// Insertion-ordered JSON so report serialization is deterministic.
using Json = nlohmann::ordered_json;

/// Every rational is emitted as the exact "p/q" string plus a derived
/// float; the float is always recomputable from the string.
inline Json rational_json(const Rational& r) {
    return Json{{"frac", fraction_str(r)}, {"value", to_double(r)}};
}

/// Recomputes the "value" of every {"frac", "value"} node from its "frac".
/// Serializing before and after must give identical bytes.
inline void rederive_floats(Json& j) {
    if (j.is_object()) {
        if (j.contains("frac") && j.contains("value"))
            j["value"] =
                to_double(parse_rational(j["frac"].get<std::string>()));
        for (auto& [key, val] : j.items()) rederive_floats(val);
    } else if (j.is_array()) {
        for (auto& val : j) rederive_floats(val);
    }
}

inline Json json_info(const Analysis& a) {
    return Json{{"vertices", a.size()},
                {"edges", a.g.edge_count()},
                {"eulerian", is_eulerian(a.g)},
                {"diameter", diameter(a.d)}};
}

inline Json json_ricci(const Analysis& a, const RicciReport& r) {
    Json pairs = Json::array();
    for (size_t i = 0; i < r.pairs.size(); ++i)
        pairs.push_back(Json{{"x", a.g.name(r.pairs[i].first)},
                             {"y", a.g.name(r.pairs[i].second)},
                             {"kappa", rational_json(r.kappa[i])}});
    return Json{{"pairs", pairs},
                {"K", rational_json(r.K)},
                {"Lambda", rational_json(r.Lambda)}};
}

inline Json json_mean(const Analysis& a, const MeanCurvatures& mc) {
    Json rows = Json::array();
    for (int x = 0; x < a.size(); ++x)
        rows.push_back(Json{{"vertex", a.g.name(x)},
                            {"H", rational_json(mc.H[x])},
                            {"H_rev", rational_json(mc.H_rev[x])}});
    return Json{{"vertices", rows},
                {"Lambda", rational_json(lambda_sup(mc))}};
}

inline Json json_bounds(const Analysis& a, const RicciReport& r) {
    const int diam = diameter(a.d);
    Json j{{"K", rational_json(r.K)},
           {"Lambda", rational_json(r.Lambda)},
           {"diameter", diam},
           {"applicable", r.K > 0}};
    if (r.K > 0) {
        const BonnetMyers bm = bonnet_myers(r, diam);
        j["bound"] = rational_json(bm.bound);
        j["holds"] = bm.holds;
        j["equality"] = bm.equality;
    }
    j["pairwise_check"] = pairwise_diameter_check(a, r);
    return j;
}

inline Json json_suspension(const Analysis& a, const SuspensionCheck& s,
                            int x, int y) {
    return Json{{"x", a.g.name(x)},          {"y", a.g.name(y)},
                {"covered", s.covered},      {"kappa_const", s.kappa_const},
                {"mixed_max", s.mixed_max},  {"all", s.all()}};
}

inline Json json_maximal(const Analysis& a, const RigidityVerdict& v) {
    Json j{{"K", rational_json(v.K)},
           {"Lambda", rational_json(v.Lambda)},
           {"diameter", v.diam},
           {"applicable", v.applicable}};
    if (v.applicable) j["bound"] = rational_json(v.bound);
    j["is_maximal"] = v.is_maximal;
    Json poles = Json::array();
    for (size_t i = 0; i < v.poles.size(); ++i) {
        Json p{{"x", a.g.name(v.poles[i].first)},
               {"y", a.g.name(v.poles[i].second)}};
        if (i < v.suspension.size()) {
            p["covered"] = v.suspension[i].covered;
            p["kappa_const"] = v.suspension[i].kappa_const;
            p["mixed_max"] = v.suspension[i].mixed_max;
        }
        poles.push_back(p);
    }
    j["poles"] = poles;
    if (v.is_maximal) {
        j["suspension_ok"] = v.suspension_ok;
        j["pole_identity"] = v.pole_identity;
        j["laplacian_equality"] = v.laplacian_equality;
        j["eigen_equality"] = v.eigen_equality;
        j["lambda1"] = v.lambda1;
        j["lambda1_matches"] = v.lambda1_matches;
    }
    j["all_pass"] = v.all_pass();
    return j;
}

inline Json json_spectrum(const Spectrum& s, const Rational& K) {
    Json vals = Json::array();
    for (double v : s.values) vals.push_back(v);
    return Json{{"eigenvalues", vals},
                {"lambda1", lambda1(s)},
                {"K", rational_json(K)},
                {"lichnerowicz_margin", lambda1(s) - to_double(K)}};
}

}  // namespace ricci
