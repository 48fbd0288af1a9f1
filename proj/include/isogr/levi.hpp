#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "isogr/rootsys.hpp"
#include "isogr/weyl.hpp"

namespace isogr {

class inadmissible_context : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

// beta-bar: among positive roots of the same length as beta with beta
// coefficient one, the one maximising the pairing with rho.
inline Weight max_root_with_unit_coefficient(const RootDatum& g, std::size_t simple_index) {
    const Weight& beta = g.simple_roots().at(simple_index);
    const Rational len = scalar_product(beta, beta);
    const Weight* best = nullptr;
    Rational best_val;
    for (const auto& a : g.positive_roots()) {
        if (scalar_product(a, a) != len) continue;
        auto c = g.simple_root_coefficients(a);
        if (!c || (*c)[simple_index] != 1) continue;
        Rational v = scalar_product(g.rho(), a);
        if (!best || v > best_val) {
            best = &a;
            best_val = v;
        }
    }
    if (!best) throw std::logic_error("no root with unit coefficient");
    return *best;
}

// Index of the Grassmannian of the simple system rs for the k-th node:
// (rho, beta_bar + beta) / (xi, beta).
inline Rational grassmannian_index(const RootSystem& rs, int k) {
    RootDatum g = rs.datum();
    Weight beta = g.simple_roots().at(k - 1);
    Weight bbar = max_root_with_unit_coefficient(g, k - 1);
    Weight xi = fundamental_weight(rs, k);
    return scalar_product(g.rho(), bbar + beta) / scalar_product(xi, beta);
}

}  // namespace detail

// Marked-vertex data of an isotropic (or ordinary, in series A) Grassmannian
// G/P with P maximal for the node k, together with the chain of subgroups
// H_a (coordinates a+1..n) used to build the blocks.
class GrassmannianContext {
public:
    RootSystem rs;
    int n;           // rank
    int k;           // marked node, 1 based
    int b;           // top level, always k-1
    std::size_t N;   // number of epsilon-coordinates (n, or n+1 in series A)
    Rational e;
    Weight xi;
    Weight beta;
    Weight beta_bar;
    Rational r;
    std::vector<Rational> r_seq;  // r_0 .. r_b
    Weight theta;
    Rational j_step;
    std::vector<Rational> J;
    std::vector<int> a_of_j;  // parallel to J
    int dimX;
    bool maximal_b;  // series B with k = n

    RootDatum G;      // full group
    RootDatum L;      // Levi: GL_k on the first k coordinates times the inner factor
    RootDatum L_out;  // GL_k block alone, ambient coordinates
    RootDatum L_in;   // inner factor alone, ambient coordinates

    Series series() const { return rs.series; }
    std::size_t inner_size() const { return N - static_cast<std::size_t>(k); }
    bool has_inner() const { return inner_size() > 0; }

    std::string name() const {
        return std::string(1, series_char(rs.series)) + std::to_string(n) + ",k=" + std::to_string(k);
    }

    // ---- subgroup chain, in the ambient coordinates of G
    RootDatum H_ambient(int a) const {
        check_level(a);
        return RootDatum(N, {Factor{rs.series, static_cast<std::size_t>(a), N - a}});
    }
    RootDatum M_ambient(int a) const {
        check_level(a);
        std::vector<Factor> fs{Factor{Series::A, static_cast<std::size_t>(a), static_cast<std::size_t>(k - a)}};
        if (has_inner()) fs.push_back(Factor{inner_series(), static_cast<std::size_t>(k), inner_size()});
        return RootDatum(N, fs);
    }
    // ---- the same subgroups on their own coordinates a+1..n
    RootDatum H_local(int a) const {
        check_level(a);
        return RootDatum::simple(rs.series, N - a);
    }
    RootDatum M_local(int a) const {
        check_level(a);
        std::vector<Factor> fs{Factor{Series::A, 0, static_cast<std::size_t>(k - a)}};
        if (has_inner()) fs.push_back(Factor{inner_series(), static_cast<std::size_t>(k - a), inner_size()});
        return RootDatum(N - a, fs);
    }
    RootDatum inner_local() const {
        if (!has_inner()) throw std::logic_error("context has no inner factor");
        return RootDatum::simple(inner_series(), inner_size());
    }
    Series inner_series() const { return rs.series; }

    // ---- restriction and embedding maps
    Weight restrict_h(int a, const Weight& lam) const {
        check_level(a);
        check_rank(lam);
        return lam.slice(a, N);
    }
    Weight embed_h(int a, const Weight& mu) const {
        check_level(a);
        if (mu.size() != N - a) throw std::invalid_argument("embed_h: length mismatch");
        return Weight(a).concat(mu);
    }
    Weight embed_inner(const Weight& nu) const {
        if (nu.size() != inner_size()) throw std::invalid_argument("embed_inner: length mismatch");
        return Weight(static_cast<std::size_t>(k)).concat(nu);
    }
    Weight restrict_inner(const Weight& lam) const {
        check_rank(lam);
        return lam.slice(k, N);
    }

    bool is_l_dominant(const Weight& lam) const { return L.is_dominant(lam); }

    // Weight lattice of G (series B/D admit the spin class).
    bool in_weight_lattice(const Weight& lam) const {
        if (lam.size() != N) return false;
        auto c = lam.lattice_class();
        if (c == LatticeClass::integral) return true;
        return c == LatticeClass::spin && (rs.series == Series::B || rs.series == Series::D);
    }

    // -w_0^L lam
    Weight dual_l_weight(const Weight& lam) const {
        if (!is_l_dominant(lam)) throw std::invalid_argument("dual_l_weight: not L-dominant " + lam.str());
        return -longest_l_.act(lam);
    }
    const WeylElement& longest_l() const { return longest_l_; }
    const WeylElement& longest_g() const { return longest_g_; }

    Rational xi_pairing(const Weight& lam) const { return scalar_product(xi, lam); }
    Rational theta_pairing(const Weight& lam) const { return scalar_product(theta, lam); }

    int a_of(const Rational& j) const {
        for (std::size_t i = 0; i < J.size(); ++i)
            if (J[i] == j) return a_of_j[i];
        throw std::invalid_argument("j = " + j.str() + " is not in the index set");
    }
    bool in_J(const Rational& j) const {
        for (const auto& x : J)
            if (x == j) return true;
        return false;
    }
    Rational r_at(int a) const { return a > b ? Rational(0) : r_seq.at(a); }

    const std::vector<WeylElement>& special_reps() const { return special_representatives(G, L); }

    void check_level(int a) const {
        if (a < 0 || a > b) throw std::out_of_range("level a=" + std::to_string(a) + " outside 0.." + std::to_string(b));
    }
    void check_rank(const Weight& lam) const {
        if (lam.size() != N) throw std::invalid_argument("weight " + lam.str() + " has wrong rank for " + name());
    }

    friend GrassmannianContext make_context(Series s, int n, int k);

private:
    GrassmannianContext(Series s, int n_, int k_) : rs(s, n_), n(n_), k(k_) {}
    WeylElement longest_l_;
    WeylElement longest_g_;
};

inline void check_admissible(Series s, int n, int k) {
    bool ok = n >= 1 && k >= 1;
    switch (s) {
        case Series::A: ok = ok && k <= n; break;
        case Series::B: ok = ok && k <= n; break;
        case Series::C: ok = ok && k <= n; break;
        case Series::D: ok = ok && n >= 3 && k <= n - 2; break;
    }
    if (!ok)
        throw inadmissible_context(std::string("inadmissible context ") + series_char(s) + std::to_string(n) +
                                   ", k=" + std::to_string(k));
}

inline GrassmannianContext make_context(Series s, int n, int k) {
    check_admissible(s, n, k);
    GrassmannianContext c(s, n, k);
    c.b = k - 1;
    c.N = c.rs.coords();
    c.e = c.rs.e();
    c.maximal_b = s == Series::B && k == n;
    c.G = c.rs.datum();

    std::vector<Factor> lf{Factor{Series::A, 0, static_cast<std::size_t>(k)}};
    c.L_out = RootDatum(c.N, lf);
    if (c.has_inner()) {
        Factor inner{c.inner_series(), static_cast<std::size_t>(k), c.inner_size()};
        lf.push_back(inner);
        c.L_in = RootDatum(c.N, {inner});
    } else {
        c.L_in = RootDatum(c.N, {});
    }
    c.L = RootDatum(c.N, lf);

    c.xi = fundamental_weight(c.rs, k);
    c.beta = c.G.simple_roots().at(k - 1);
    c.beta_bar = detail::max_root_with_unit_coefficient(c.G, k - 1);
    c.r = scalar_product(c.G.rho(), c.beta_bar + c.beta) / scalar_product(c.xi, c.beta);
    for (int a = 0; a <= c.b; ++a) {
        RootSystem ha(s, n - a);
        c.r_seq.push_back(detail::grassmannian_index(ha, k - a));
    }

    // theta: orthogonal to omega_1..omega_{k-1}, killed by restriction to the
    // inner factor, and pairing to one with xi.
    c.theta = Weight(c.N);
    if (s == Series::A) {
        c.theta[k - 1] = 1;
        for (std::size_t i = k; i < c.N; ++i) c.theta[i] = Rational(-1, static_cast<std::int64_t>(c.N - k));
    } else {
        c.theta[k - 1] = Rational(1) / c.xi[k - 1];
    }

    // generator of (theta, P_L)
    Rational step;
    for (std::size_t i = 0; i < c.N; ++i) step = rational_gcd(step, c.theta[i]);
    if (s == Series::B || s == Series::D)
        step = rational_gcd(step, scalar_product(c.theta, Weight::constant(c.N, Rational(1, 2))));
    c.j_step = step;
    for (Rational j = 0; j < c.r; j += step) {
        c.J.push_back(j);
        int a = -1;
        for (int t = 0; t <= c.b; ++t)
            if (c.r - c.r_at(t) <= j && j < c.r - c.r_at(t + 1)) a = t;
        if (a < 0) throw std::logic_error("a(j) undefined for j=" + j.str());
        c.a_of_j.push_back(a);
    }

    c.dimX = static_cast<int>(c.G.num_positive_roots() - c.L.num_positive_roots());
    c.longest_l_ = longest_element(c.L);
    c.longest_g_ = longest_element(c.G);
    return c;
}

inline GrassmannianContext make_context(char s, int n, int k) {
    return make_context(parse_series(std::string(1, s)), n, k);
}

}  // namespace isogr
