#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "isogr/levi.hpp"
#include "isogr/reptheory.hpp"

namespace isogr {

struct GradedTerm {
    int degree;
    Weight weight;
    long long mult;

    friend bool operator==(const GradedTerm&, const GradedTerm&) = default;
};

// Finite formal sum of graded irreducible representations, kept in canonical
// order (degree, then weight) with merged multiplicities.
class GradedRepSum {
public:
    GradedRepSum() = default;

    void add(int degree, const Weight& w, long long mult) {
        if (mult == 0) return;
        acc_[{degree, w}] += mult;
        rebuild();
    }
    void add_all(const GradedRepSum& o, long long factor = 1) {
        for (const auto& t : o.terms_) acc_[{t.degree, t.weight}] += factor * t.mult;
        rebuild();
    }

    const std::vector<GradedTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    std::vector<GradedTerm> in_degree(int d) const {
        std::vector<GradedTerm> out;
        for (const auto& t : terms_)
            if (t.degree == d) out.push_back(t);
        return out;
    }
    int max_degree() const { return terms_.empty() ? -1 : terms_.back().degree; }

    friend bool operator==(const GradedRepSum& a, const GradedRepSum& b) { return a.terms_ == b.terms_; }

    std::string str() const {
        std::string s;
        for (const auto& t : terms_) {
            if (!s.empty()) s += " + ";
            s += "H" + std::to_string(t.degree) + ":" + t.weight.str();
            if (t.mult != 1) s += "x" + std::to_string(t.mult);
        }
        return s.empty() ? "0" : s;
    }

private:
    std::map<std::pair<int, Weight>, long long> acc_;
    std::vector<GradedTerm> terms_;

    void rebuild() {
        terms_.clear();
        for (auto it = acc_.begin(); it != acc_.end();) {
            if (it->second == 0) {
                it = acc_.erase(it);
                continue;
            }
            terms_.push_back({it->first.first, it->first.second, it->second});
            ++it;
        }
    }
};

// Whether a G-highest weight is the trivial representation. In series A the
// coordinates are GL-style and any constant vector is trivial for SL.
inline bool is_trivial_g_weight(const GrassmannianContext& ctx, const Weight& kappa) {
    if (ctx.series() == Series::A) {
        for (std::size_t i = 1; i < kappa.size(); ++i)
            if (kappa[i] != kappa[0]) return false;
        return true;
    }
    return kappa.is_zero();
}

// Borel-Weil-Bott for the bundle U^lam.
inline GradedRepSum cohomology(const GrassmannianContext& ctx, const Weight& lam) {
    if (!ctx.is_l_dominant(lam)) throw std::invalid_argument("cohomology: not L-dominant " + lam.str());
    GradedRepSum out;
    const Weight x = lam + ctx.G.rho();
    if (!ctx.G.is_regular(x)) return out;
    out.add(ctx.G.negative_pairings(x), ctx.G.dominant(x) - ctx.G.rho(), 1);
    return out;
}

inline long long g_dimension(const GrassmannianContext& ctx, const Weight& kappa) { return ctx.G.weyl_dimension(kappa); }

// Ext^*(U^lam, U^mu) = H^*(X, U^{lam dual} (x) U^mu) as a graded G-representation.
inline const GradedRepSum& ext_groups(const GrassmannianContext& ctx, const Weight& lam, const Weight& mu) {
    thread_local std::unordered_map<std::string, GradedRepSum> cache;
    std::string key = ctx.name() + "|" + lam.str() + "|" + mu.str();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    GradedRepSum out;
    const Weight dual = ctx.dual_l_weight(lam);
    for (const auto& [nu, c] : levi_tensor_decompose(ctx, mu, dual)) {
        GradedRepSum h = cohomology(ctx, nu);
        out.add_all(h, c);
    }
    return cache.emplace(key, std::move(out)).first->second;
}

// Ext in the G-equivariant category: for each special representative v the
// multiplicity of V_L^{v rho - rho} in V^mu (x) V^{lam dual}, placed in
// degree l(v). Series A matches up to the central shift forced by the
// total degrees.
inline GradedRepSum equivariant_ext(const GrassmannianContext& ctx, const Weight& lam, const Weight& mu) {
    GradedRepSum out;
    const auto& table = levi_tensor_decompose(ctx, mu, ctx.dual_l_weight(lam));
    Weight shift(ctx.N);
    if (ctx.series() == Series::A)
        shift = Weight::constant(ctx.N, (mu.sum() - lam.sum()) / Rational(static_cast<std::int64_t>(ctx.N)));
    const Weight& rho = ctx.G.rho();
    for (const auto& v : ctx.special_reps()) {
        Weight target = v.act(rho) - rho + shift;
        auto it = table.find(target);
        if (it != table.end()) out.add(length(ctx.G, v), v.act(rho) - rho, it->second);
    }
    return out;
}

// Total dimension of each degree, indexed by degree.
inline std::map<int, long long> graded_dimension(const GrassmannianContext& ctx, const GradedRepSum& s) {
    std::map<int, long long> out;
    for (const auto& t : s.terms()) out[t.degree] += t.mult * g_dimension(ctx, t.weight);
    return out;
}

// Degree-wise multiplicity of the trivial G-representation.
inline std::map<int, long long> invariant_dimension(const GrassmannianContext& ctx, const GradedRepSum& s) {
    std::map<int, long long> out;
    for (const auto& t : s.terms())
        if (is_trivial_g_weight(ctx, t.weight)) out[t.degree] += t.mult;
    return out;
}

inline long long hom_dimension(const GrassmannianContext& ctx, const Weight& lam, const Weight& mu) {
    long long d = 0;
    for (const auto& t : ext_groups(ctx, lam, mu).terms())
        if (t.degree == 0) d += t.mult * g_dimension(ctx, t.weight);
    return d;
}

inline long long euler_pairing(const GrassmannianContext& ctx, const Weight& lam, const Weight& mu) {
    long long chi = 0;
    for (const auto& t : ext_groups(ctx, lam, mu).terms()) {
        long long d = t.mult * g_dimension(ctx, t.weight);
        chi += t.degree % 2 ? -d : d;
    }
    return chi;
}

}  // namespace isogr
