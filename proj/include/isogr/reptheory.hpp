#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "isogr/levi.hpp"
#include "isogr/weyl.hpp"

namespace isogr {

// Highest weight -> multiplicity, keys kept sorted.
using DecompositionTable = std::map<Weight, long long>;

using Partition = std::vector<int>;

// ---------------------------------------------------------------------------
// Weight systems (Freudenthal)

struct WeightSystem {
    Weight highest;
    // dominant weights in order of increasing depth below the highest weight
    std::vector<Weight> dominant;
    std::unordered_map<Weight, long long> dominant_mult;
    // every weight with its multiplicity, filled lazily
    std::vector<std::pair<Weight, long long>> all;

    long long mult_of_dominant(const Weight& mu) const {
        auto it = dominant_mult.find(mu);
        return it == dominant_mult.end() ? 0 : it->second;
    }
};

namespace detail {

// Candidate values for one coordinate: the lattice coset of `like` between lo and hi.
inline std::vector<Rational> coset_range(const Rational& like, const Rational& lo, const Rational& hi) {
    std::vector<Rational> out;
    Rational f = like.frac();
    Rational start = Rational((lo - f).ceil()) + f;
    for (Rational x = start; x <= hi; x += 1) out.push_back(x);
    return out;
}

// Dominant weights mu of one factor with lam - mu in the positive root lattice.
inline std::vector<Weight> dominant_below(const RootDatum& d, const Weight& lam) {
    const std::size_t n = d.ambient();
    std::vector<Weight> out;
    Weight cur = lam;
    std::vector<std::pair<std::size_t, std::vector<Rational>>> slots;  // coordinate -> candidates
    for (const auto& f : d.factors()) {
        Rational lo, hi;
        if (f.series == Series::A) {
            lo = hi = lam[f.offset];
            for (std::size_t i = f.offset; i < f.offset + f.size; ++i) {
                lo = std::min(lo, lam[i]);
                hi = std::max(hi, lam[i]);
            }
        } else {
            for (std::size_t i = f.offset; i < f.offset + f.size; ++i) hi = std::max(hi, abs(lam[i]));
            lo = -hi;
        }
        for (std::size_t i = f.offset; i < f.offset + f.size; ++i) {
            auto vals = coset_range(lam[i], lo, hi);
            std::reverse(vals.begin(), vals.end());
            slots.emplace_back(i, std::move(vals));
        }
    }
    std::vector<bool> in_factor(n, false);
    std::function<void(std::size_t)> rec = [&](std::size_t s) {
        if (s == slots.size()) {
            if (d.is_dominant(cur) && d.in_positive_root_lattice(lam - cur)) out.push_back(cur);
            return;
        }
        const std::size_t i = slots[s].first;
        for (const auto& v : slots[s].second) {
            // prune non-increasing order inside a block early (D's last entry may be negative)
            if (s > 0 && slots[s - 1].first + 1 == i) {
                bool same_block = false;
                for (const auto& f : d.factors())
                    if (i > f.offset && i < f.offset + f.size) same_block = true;
                if (same_block && v > cur[i - 1]) continue;
            }
            cur[i] = v;
            rec(s + 1);
        }
        cur[i] = lam[i];
    };
    rec(0);
    return out;
}

inline Rational height(const RootDatum& d, const Weight& z) {
    auto c = d.simple_root_coefficients(z);
    Rational h;
    for (const auto& x : *c) h += x;
    return h;
}

inline std::shared_ptr<WeightSystem> build_weight_system(const RootDatum& d, const Weight& lam) {
    auto ws = std::make_shared<WeightSystem>();
    ws->highest = lam;
    auto doms = dominant_below(d, lam);
    std::vector<std::pair<Rational, Weight>> by_height;
    for (auto& m : doms) by_height.emplace_back(height(d, lam - m), m);
    std::sort(by_height.begin(), by_height.end());
    const Weight& rho = d.rho();
    const Weight lr = lam + rho;
    const Rational top = scalar_product(lr, lr);
    for (auto& [h, mu] : by_height) {
        long long m = 0;
        if (mu == lam) {
            m = 1;
        } else {
            Rational acc;
            for (const auto& a : d.positive_roots()) {
                Weight x = mu + a;
                while (true) {
                    long long mx = ws->mult_of_dominant(d.dominant(x));
                    if (mx == 0) break;
                    acc += Rational(mx) * scalar_product(x, a);
                    x += a;
                }
            }
            Weight mr = mu + rho;
            Rational denom = top - scalar_product(mr, mr);
            Rational val = Rational(2) * acc / denom;
            if (!val.is_integer()) throw std::logic_error("Freudenthal: non-integral multiplicity");
            m = val.num();
        }
        if (m > 0) {
            ws->dominant.push_back(mu);
            ws->dominant_mult.emplace(mu, m);
        }
    }
    return ws;
}

}  // namespace detail

// Memoised per thread; results are deterministic regardless of threading.
inline const WeightSystem& weight_system(const RootDatum& d, const Weight& lam) {
    thread_local std::unordered_map<std::string, std::shared_ptr<WeightSystem>> cache;
    if (!d.is_dominant(lam)) throw std::invalid_argument("weight_system: non-dominant " + lam.str());
    std::string key = d.key() + lam.str();
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto ws = detail::build_weight_system(d, lam);
    return *cache.emplace(key, std::move(ws)).first->second;
}

inline const std::vector<std::pair<Weight, long long>>& all_weights(const RootDatum& d, const Weight& lam) {
    const WeightSystem& ws = weight_system(d, lam);
    auto& mut = const_cast<WeightSystem&>(ws);
    if (mut.all.empty()) {
        for (const auto& mu : ws.dominant) {
            long long m = ws.dominant_mult.at(mu);
            for (auto& x : orbit(d, mu)) mut.all.emplace_back(std::move(x), m);
        }
    }
    return ws.all;
}

inline long long weight_multiplicity(const RootDatum& d, const Weight& lam, const Weight& eta) {
    return weight_system(d, lam).mult_of_dominant(d.dominant(eta));
}
inline long long weight_multiplicity(const RootSystem& rs, const Weight& lam, const Weight& eta) {
    return weight_multiplicity(rs.datum(), lam, eta);
}

// Klimyk's formula: V^lam (x) V^mu = sum over weights eta of V^mu of
// sign * V^{dom(lam + eta + rho) - rho}. The factor with the smaller
// dimension is expanded.
inline DecompositionTable tensor_decompose(const RootDatum& d, const Weight& lam, const Weight& mu) {
    if (!d.is_dominant(lam) || !d.is_dominant(mu)) throw std::invalid_argument("tensor_decompose: non-dominant input");
    const Weight* big = &lam;
    const Weight* small = &mu;
    if (d.weyl_dimension(lam) < d.weyl_dimension(mu)) std::swap(big, small);
    std::map<Weight, long long> acc;
    const Weight& rho = d.rho();
    for (const auto& [eta, m] : all_weights(d, *small)) {
        Weight x = *big + eta + rho;
        if (!d.is_regular(x)) continue;
        int len = d.negative_pairings(x);
        acc[d.dominant(x) - rho] += (len % 2 ? -m : m);
    }
    DecompositionTable out;
    for (auto& [w, m] : acc) {
        if (m < 0) throw std::logic_error("Klimyk: negative multiplicity");
        if (m > 0) out.emplace(w, m);
    }
    return out;
}

inline long long tensor_multiplicity(const RootDatum& d, const Weight& lam, const Weight& mu, const Weight& nu) {
    auto t = tensor_decompose(d, lam, mu);
    auto it = t.find(nu);
    return it == t.end() ? 0 : it->second;
}
inline long long tensor_multiplicity(const RootSystem& rs, const Weight& lam, const Weight& mu, const Weight& nu) {
    return tensor_multiplicity(rs.datum(), lam, mu, nu);
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson

inline int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline Partition trim(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

// Number of skew tableaux of shape nu / lam and content mu whose reverse
// reading word is a lattice word.
inline long long lr_coefficient(Partition lam, Partition mu, Partition nu) {
    if (!is_partition(lam) || !is_partition(mu) || !is_partition(nu))
        throw std::invalid_argument("lr_coefficient: malformed partition");
    lam = trim(lam);
    mu = trim(mu);
    nu = trim(nu);
    if (partition_size(nu) != partition_size(lam) + partition_size(mu)) return 0;
    if (lam.size() > nu.size()) return 0;
    lam.resize(nu.size(), 0);
    for (std::size_t i = 0; i < nu.size(); ++i)
        if (lam[i] > nu[i]) return 0;
    if (mu.empty()) return 1;

    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < nu.size(); ++r)
        for (int c = nu[r] - 1; c >= lam[r]; --c) cells.emplace_back(static_cast<int>(r), c);
    std::vector<std::vector<int>> t(nu.size());
    for (std::size_t r = 0; r < nu.size(); ++r) t[r].assign(nu[r], -1);
    std::vector<int> cnt(mu.size(), 0);
    const int labels = static_cast<int>(mu.size());
    long long total = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[idx];
        int hi = labels - 1;
        if (c + 1 < nu[r]) hi = std::min(hi, t[r][c + 1]);
        int lo = 0;
        if (r > 0 && c < nu[r - 1] && c >= lam[r - 1]) lo = t[r - 1][c] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (cnt[v] >= mu[v]) continue;
            if (v > 0 && cnt[v] + 1 > cnt[v - 1]) continue;
            ++cnt[v];
            t[r][c] = v;
            rec(idx + 1);
            t[r][c] = -1;
            --cnt[v];
        }
    };
    rec(0);
    return total;
}

// All nu with nonzero c^nu_{lam,mu} and at most max_rows rows, built by
// adding mu_i boxes labelled i as horizontal strips under the lattice rule.
inline std::map<Partition, long long> lr_decompose(const Partition& lam_in, const Partition& mu_in, std::size_t max_rows) {
    Partition lam = trim(lam_in), mu = trim(mu_in);
    if (!is_partition(lam) || !is_partition(mu)) throw std::invalid_argument("lr_decompose: malformed partition");
    std::map<Partition, long long> out;
    if (lam.size() > max_rows) return out;
    Partition shape = lam;
    shape.resize(max_rows, 0);
    // placed[r][i]: boxes labelled i in row r
    std::vector<std::vector<int>> placed(max_rows, std::vector<int>(mu.size(), 0));

    std::function<void(std::size_t)> place_label;
    std::function<void(std::size_t, std::size_t, int, const Partition&, int, int)> place_row;

    place_label = [&](std::size_t i) {
        if (i == mu.size()) {
            out[trim(shape)] += 1;
            return;
        }
        Partition old = shape;
        place_row(i, 0, mu[i], old, 0, 0);
    };
    // prefix_new: labelled-i boxes in rows < r; prefix_prev: label i-1 boxes in rows < r
    place_row = [&](std::size_t i, std::size_t r, int remaining, const Partition& old, int prefix_new, int prefix_prev) {
        if (remaining == 0) {
            place_label(i + 1);
            return;
        }
        if (r == max_rows) return;
        int cap = remaining;
        if (r > 0) cap = std::min(cap, old[r - 1] - old[r]);
        if (i > 0) cap = std::min(cap, prefix_prev - prefix_new);
        const int prev_here = i > 0 ? placed[r][i - 1] : 0;
        for (int x = cap; x >= 0; --x) {
            shape[r] = old[r] + x;
            placed[r][i] = x;
            place_row(i, r + 1, remaining - x, old, prefix_new + x, prefix_prev + prev_here);
        }
        shape[r] = old[r];
        placed[r][i] = 0;
    };
    place_label(0);
    return out;
}

// GL_m tensor product of two dominant GL weights (possibly half-integral with
// a common fractional part) via Littlewood-Richardson.
inline DecompositionTable gl_tensor_decompose(const Weight& lam, const Weight& mu) {
    const std::size_t m = lam.size();
    if (mu.size() != m) throw std::invalid_argument("gl_tensor_decompose: size mismatch");
    DecompositionTable out;
    if (m == 0) {
        out.emplace(Weight(), 1);
        return out;
    }
    auto to_partition = [](const Weight& w, Rational& shift) {
        shift = w[w.size() - 1];
        Partition p(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            Rational x = w[i] - shift;
            if (!x.is_integer() || (i > 0 && w[i] > w[i - 1]))
                throw std::invalid_argument("gl_tensor_decompose: not a dominant GL weight " + w.str());
            p[i] = static_cast<int>(x.num());
        }
        return p;
    };
    Rational sl, sm;
    Partition pl = to_partition(lam, sl), pm = to_partition(mu, sm);
    for (auto& [nu, c] : lr_decompose(pl, pm, m)) {
        Weight w(m);
        for (std::size_t i = 0; i < m; ++i) w[i] = Rational(i < nu.size() ? nu[i] : 0) + sl + sm;
        out.emplace(std::move(w), c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Levi tensor products

namespace detail {
inline DecompositionTable levi_tensor_uncached(const GrassmannianContext& ctx, const Weight& lam, const Weight& mu) {
    const std::size_t k = ctx.k;
    DecompositionTable gl = gl_tensor_decompose(lam.slice(0, k), mu.slice(0, k));
    DecompositionTable out;
    if (!ctx.has_inner()) return gl;
    RootDatum inner = ctx.inner_local();
    DecompositionTable in = tensor_decompose(inner, ctx.restrict_inner(lam), ctx.restrict_inner(mu));
    for (const auto& [g, cg] : gl)
        for (const auto& [h, ch] : in) out.emplace(g.concat(h), cg * ch);
    return out;
}
}  // namespace detail

// V_L^lam (x) V_L^mu: Littlewood-Richardson on the GL_k block times Klimyk
// on the inner factor.
inline const DecompositionTable& levi_tensor_decompose(const GrassmannianContext& ctx, const Weight& lam, const Weight& mu) {
    if (!ctx.in_weight_lattice(lam) || !ctx.in_weight_lattice(mu))
        throw std::invalid_argument("levi_tensor_decompose: weight outside the lattice: " + lam.str() + " " + mu.str());
    if (!ctx.is_l_dominant(lam) || !ctx.is_l_dominant(mu))
        throw std::invalid_argument("levi_tensor_decompose: not L-dominant: " + lam.str() + " " + mu.str());
    thread_local std::unordered_map<std::string, DecompositionTable> cache;
    std::string key = ctx.name() + "|" + lam.str() + "|" + mu.str();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, detail::levi_tensor_uncached(ctx, lam, mu)).first->second;
}

inline long long levi_dimension(const GrassmannianContext& ctx, const Weight& lam) { return ctx.L.weyl_dimension(lam); }

// ---------------------------------------------------------------------------
// Convex hull of a Weyl orbit

// y lies in Conv(W x) for the Weyl group of d (central parts must agree).
inline bool in_orbit_hull(const RootDatum& d, const Weight& x, const Weight& y) {
    return d.in_positive_cone(d.dominant(x) - d.dominant(y));
}

// mu lies in fixed - Conv(W varying).
inline bool hull_contains(const RootDatum& d, const Weight& fixed, const Weight& varying, const Weight& mu) {
    return in_orbit_hull(d, varying, fixed - mu);
}

}  // namespace isogr
