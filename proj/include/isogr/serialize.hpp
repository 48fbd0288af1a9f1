#pragma once

// JSON encoding of the library types. Rationals are strings ("5/2") so that
// no value ever passes through floating point.

#include <json.hpp>

#include "isogr/verify.hpp"

namespace isogr {

inline constexpr const char* kSchema = "isogr-exc/1";

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const Weight& w) {
    json a = json::array();
    for (const auto& x : w) a.push_back(x.str());
    return a;
}

inline json to_json(const WeylElement& v) { return v.str(); }

inline json to_json(const std::vector<Weight>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(to_json(w));
    return a;
}

inline json to_json(const GrassmannianContext& c) {
    json j;
    j["series"] = std::string(1, series_char(c.series()));
    j["n"] = c.n;
    j["k"] = c.k;
    j["coordinates"] = c.N;
    j["xi"] = to_json(c.xi);
    j["beta"] = to_json(c.beta);
    j["beta_bar"] = to_json(c.beta_bar);
    j["rho"] = to_json(c.G.rho());
    j["theta"] = to_json(c.theta);
    j["r"] = to_json(c.r);
    json rs = json::array();
    for (const auto& x : c.r_seq) rs.push_back(x.str());
    j["r_levels"] = rs;
    j["j_step"] = to_json(c.j_step);
    json J = json::array(), A = json::array();
    for (std::size_t i = 0; i < c.J.size(); ++i) {
        J.push_back(c.J[i].str());
        A.push_back(c.a_of_j[i]);
    }
    j["J"] = J;
    j["a_of_j"] = A;
    j["dim"] = c.dimX;
    j["special_representatives"] = c.special_reps().size();
    return j;
}

inline json to_json(const Block& b) {
    json j;
    j["j"] = to_json(b.j);
    j["a"] = b.a;
    j["kind"] = to_string(b.kind);
    if (b.experimental) j["experimental"] = true;
    j["size"] = b.size();
    j["outer"] = to_json(b.outer);
    j["inner"] = to_json(b.inner);
    j["weights"] = to_json(b.weights);
    json bounds = json::object();
    for (const auto& [name, v] : b.bounds) bounds[name] = v.str();
    j["bounds"] = bounds;
    return j;
}

inline json to_json(const GradedRepSum& s) {
    json a = json::array();
    for (const auto& t : s.terms()) a.push_back({{"degree", t.degree}, {"weight", to_json(t.weight)}, {"mult", t.mult}});
    return a;
}

inline json to_json(const Witness& w) {
    json j;
    j["weights"] = to_json(w.weights);
    json e = json::array();
    for (const auto& v : w.elements) e.push_back(v.str());
    j["elements"] = e;
    if (w.degree >= 0) j["degree"] = w.degree;
    j["note"] = w.note;
    return j;
}

inline json to_json(const VerificationReport& r) {
    json j;
    j["subject"] = r.subject;
    j["label"] = r.label;
    if (r.experimental) j["experimental"] = true;
    j["pass"] = r.passed();
    json checks = json::array();
    for (const auto& c : r.checks) {
        json cj{{"name", c.name}, {"pass", c.pass}, {"units", c.units}, {"failures", c.failures}};
        if (c.witness) cj["witness"] = to_json(*c.witness);
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

inline json to_json(const std::vector<std::vector<Rational>>& m) {
    json a = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.str());
        a.push_back(r);
    }
    return a;
}

inline json to_json(const DualClasses& d) {
    return json{{"order", to_json(d.order)},
                {"coefficients", to_json(d.coeffs)},
                {"gram", to_json(d.gram)},
                {"integral", d.integral},
                {"unitriangular", d.unitriangular}};
}

inline json to_json(const VerySpecialReport& r) {
    json a = json::array();
    for (const auto& [v, phi] : r.entries) {
        bool vs = phi.is_integer() && phi > 0;
        a.push_back({{"v", v.str()}, {"phi", phi.str()}, {"very_special", vs}});
    }
    return json{{"a", r.a}, {"elements", a}, {"very_special_count", r.very_special().size()}};
}

inline json envelope(const std::string& command, json result) {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["result"] = std::move(result);
    return j;
}

}  // namespace isogr
