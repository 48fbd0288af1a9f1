#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "isogr/levi.hpp"
#include "isogr/reptheory.hpp"
#include "isogr/weyl.hpp"

namespace isogr {

// ---------------------------------------------------------------------------
// Cores

// Shape of the core at level a. gamma lives in ambient coordinates; delta is
// -h_a^* gamma in the coordinates a+1..n of H_a.
struct CoreSpec {
    int a = 0;
    Weight gamma;
    Weight delta;
};

inline CoreSpec make_core(const GrassmannianContext& ctx, int a, const Weight& gamma) {
    ctx.check_level(a);
    ctx.check_rank(gamma);
    CoreSpec c{a, gamma, -ctx.restrict_h(a, gamma)};
    RootDatum h = ctx.H_local(a);
    if (!h.is_dominant(c.delta) || c.delta.is_zero())
        throw std::invalid_argument("core shape " + c.delta.str() + " is not strictly dominant for H_" + std::to_string(a));
    return c;
}

// gamma_a = alpha_a = eps_a - eps_{a+1}; at a = 0 only the image -eps_1 under
// h_0^* is meaningful, so gamma_0 = -eps_1.
inline CoreSpec default_core(const GrassmannianContext& ctx, int a) {
    Weight g(ctx.N);
    if (a > 0) g[a - 1] = 1;
    g[a] = -1;
    return make_core(ctx, a, g);
}

// Membership of lam (coordinates of H_a) in the core, or its interior when strict.
inline bool core_contains(const GrassmannianContext& ctx, const CoreSpec& core, const Weight& lam, bool strict) {
    RootDatum h = ctx.H_local(core.a);
    Rational lhs = scalar_product(h.dominant(lam), core.delta);
    Rational rhs = scalar_product(h.rho(), core.delta);
    return strict ? lhs < rhs : lhs <= rhs;
}

// One W_M-orbit inside W_H gamma, described by its representatives.
struct OrbitRow {
    Weight minus;        // M-antidominant representative, H coordinates
    Weight plus;         // M-dominant representative, H coordinates
    Rational rhs;        // (rho_H, minus - gamma)
    Weight hhat;         // L_out-dominant representative of h_* plus, ambient coordinates
    Rational xi_pair;    // (h^* xi, plus)
    Weight inner_plus;   // i^* plus
    Weight inner_minus;  // i^* minus
};

struct LevelTable {
    CoreSpec core;
    std::vector<OrbitRow> rows;  // row 0 is the orbit of gamma itself
};

inline LevelTable level_table(const GrassmannianContext& ctx, const CoreSpec& core) {
    const int a = core.a;
    RootDatum h = ctx.H_local(a), m = ctx.M_local(a);
    const Weight g0 = -core.delta;
    const Weight rho_h = h.rho();
    const Weight xi_h = ctx.restrict_h(a, ctx.xi);
    std::map<Weight, Weight> groups;  // M-dominant rep -> M-antidominant rep
    for (const auto& x : orbit(h, g0)) {
        Weight plus = m.dominant(x);
        if (!groups.count(plus)) groups.emplace(plus, -m.dominant(-x));
    }
    LevelTable t{core, {}};
    for (const auto& [plus, minus] : groups) {
        OrbitRow r;
        r.plus = plus;
        r.minus = minus;
        r.rhs = scalar_product(rho_h, minus - g0);
        Weight amb = ctx.embed_h(a, plus);
        r.hhat = ctx.L_out.dominant(amb);
        r.xi_pair = scalar_product(xi_h, plus);
        r.inner_plus = ctx.restrict_inner(amb);
        r.inner_minus = ctx.restrict_inner(ctx.embed_h(a, minus));
        t.rows.push_back(std::move(r));
    }
    std::stable_sort(t.rows.begin(), t.rows.end(), [&](const OrbitRow& x, const OrbitRow& y) {
        bool x0 = x.minus == g0, y0 = y.minus == g0;
        if (x0 != y0) return x0;
        return x.rhs < y.rhs;
    });
    return t;
}

// ---------------------------------------------------------------------------
// Blocks

enum class BlockKind { big, small, explicit_form, type_a };

inline const char* to_string(BlockKind k) {
    switch (k) {
        case BlockKind::big: return "big";
        case BlockKind::small: return "small";
        case BlockKind::explicit_form: return "explicit";
        default: return "typeA";
    }
}

struct Block {
    Rational j;
    int a = 0;
    BlockKind kind = BlockKind::big;
    std::vector<Weight> outer;    // supported on the first a coordinates
    std::vector<Weight> inner;    // inner factor coordinates
    std::vector<Weight> weights;  // sorted
    std::vector<std::pair<std::string, Rational>> bounds;
    bool experimental = false;

    std::size_t size() const { return weights.size(); }
    bool empty() const { return weights.empty(); }
    bool contains(const Weight& w) const { return std::binary_search(weights.begin(), weights.end(), w); }
};

namespace detail {

// Nonincreasing sequences x_0 >= ... >= x_{len-1} in the coset `offset + Z`
// with hi >= x_0 and x_{len-1} >= lo.
inline void for_each_nonincreasing(std::size_t len, Rational lo, Rational hi, Rational offset,
                                   const std::function<void(const std::vector<Rational>&)>& f) {
    std::vector<Rational> cur(len);
    Rational top = Rational((hi - offset).floor()) + offset;
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational cap) {
        if (i == len) {
            f(cur);
            return;
        }
        for (Rational x = cap; x >= lo; x -= 1) {
            cur[i] = x;
            rec(i + 1, x);
        }
    };
    rec(0, top);
}

inline Weight assemble(const GrassmannianContext& ctx, const Weight& outer, const Rational& j, const Weight& inner) {
    Weight w = outer + j * ctx.xi;
    if (ctx.has_inner()) w += ctx.embed_inner(inner);
    return w;
}

inline void finish(const GrassmannianContext& ctx, Block& b) {
    b.weights.clear();
    for (const auto& o : b.outer)
        for (const auto& i : b.inner) b.weights.push_back(assemble(ctx, o, b.j, i));
    std::sort(b.weights.begin(), b.weights.end());
    b.weights.erase(std::unique(b.weights.begin(), b.weights.end()), b.weights.end());
}

// Outer and inner parts read back from a list of weights.
inline void split_weights(const GrassmannianContext& ctx, Block& b) {
    std::set<Weight> outer, inner;
    for (const auto& w : b.weights) {
        Weight in = ctx.has_inner() ? ctx.restrict_inner(w) : Weight();
        Weight o = w - b.j * ctx.xi;
        if (ctx.has_inner()) o -= ctx.embed_inner(in);
        outer.insert(o);
        inner.insert(in);
    }
    b.outer.assign(outer.begin(), outer.end());
    b.inner.assign(inner.begin(), inner.end());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Very special elements

struct VerySpecialReport {
    int a = 0;
    std::vector<std::pair<WeylElement, Rational>> entries;  // every v in SR_{H_a}^{M_a} with phi(v)

    std::vector<WeylElement> very_special() const {
        std::vector<WeylElement> out;
        for (const auto& [v, phi] : entries)
            if (phi.is_integer() && phi > 0) out.push_back(v);
        return out;
    }
};

// Projection to the trace-zero hyperplane; identity outside series A.
inline Weight sl_projection(const GrassmannianContext& ctx, const Weight& w) {
    if (ctx.series() != Series::A) return w;
    return w - Weight::constant(w.size(), w.sum() / Rational(static_cast<std::int64_t>(w.size())));
}

inline Rational phi_value(const GrassmannianContext& ctx, const WeylElement& v) {
    const Weight xi = sl_projection(ctx, ctx.xi);
    const Weight w1 = sl_projection(ctx, Weight::unit(ctx.N, 0));
    const Weight& rho = ctx.G.rho();
    const Rational kk(ctx.k);
    const Rational xw = scalar_product(xi, w1);
    const Rational xx = scalar_product(xi, xi);
    return scalar_product(xi, rho - v.act(rho)) / (kk * xw) * (Rational(1) - kk * xw * xw / xx);
}

inline VerySpecialReport very_special_elements(const GrassmannianContext& ctx, int a) {
    if (a < 1 || a > ctx.b) throw std::out_of_range("very_special_elements: level must be in 1..b");
    VerySpecialReport rep;
    rep.a = a;
    for (const auto& v : special_representatives(ctx.H_ambient(a), ctx.M_ambient(a)))
        rep.entries.emplace_back(v, phi_value(ctx, v));
    return rep;
}

// ---------------------------------------------------------------------------
// Core-based construction of big and small blocks

class BlockBuilder {
public:
    explicit BlockBuilder(const GrassmannianContext& ctx, std::map<int, Weight> gamma_override = {})
        : ctx_(ctx), overrides_(std::move(gamma_override)) {
        if (ctx.series() == Series::A)
            throw std::invalid_argument("core-based blocks are built for series B, C, D; use typea_blocks in series A");
    }

    const GrassmannianContext& context() const { return ctx_; }

    const LevelTable& level(int a) {
        auto it = levels_.find(a);
        if (it != levels_.end()) return it->second;
        auto ov = overrides_.find(a);
        CoreSpec core = ov == overrides_.end() ? default_core(ctx_, a) : make_core(ctx_, a, ov->second);
        return levels_.emplace(a, level_table(ctx_, core)).first->second;
    }

    // Inner part of B_j from the core conditions: rho_H +- 2 i_*(w nu) in
    // the core for all w in W_{L_in}, and j xi + i_* nu in P_L.
    const std::vector<Weight>& big_inner(const Rational& j) {
        auto it = big_inner_.find(j);
        if (it != big_inner_.end()) return it->second;
        const int a = ctx_.a_of(j);
        const LevelTable& lt = level(a);
        std::vector<Weight> out;
        const Weight rho_h = ctx_.H_local(a).rho();
        for_each_inner_candidate(j, lt, [&](const Weight& nu) {
            for (const auto& wnu : orbit(ctx_.inner_local(), nu)) {
                Weight shift = Rational(2) * ctx_.restrict_h(a, ctx_.embed_inner(wnu));
                if (!core_contains(ctx_, lt.core, rho_h + shift, false)) return;
                if (!core_contains(ctx_, lt.core, rho_h - shift, false)) return;
            }
            out.push_back(nu);
        });
        return big_inner_.emplace(j, std::move(out)).first->second;
    }

    // Inner part of B_j from the orbit-table inequalities.
    std::vector<Weight> big_inner_explicit(const Rational& j) {
        const LevelTable& lt = level(ctx_.a_of(j));
        std::vector<Weight> out;
        for_each_inner_candidate(j, lt, [&](const Weight& nu) {
            for (const auto& r : lt.rows) {
                Rational lhs = std::max(scalar_product(r.inner_plus, nu), -scalar_product(r.inner_minus, nu));
                if (Rational(2) * lhs > r.rhs) return;
            }
            out.push_back(nu);
        });
        return out;
    }

    Block big(const Rational& j) {
        check_j(j);
        Block b;
        b.j = j;
        b.a = ctx_.a_of(j);
        b.kind = BlockKind::big;
        const auto& inner = big_inner(j);
        b.inner = inner;
        if (!ctx_.has_inner()) b.inner = {Weight()};
        if (b.inner.empty()) return b;
        const LevelTable& lt = level(b.a);
        std::vector<Rational> slack;
        for (std::size_t t = 0; t < lt.rows.size(); ++t) {
            const auto& r = lt.rows[t];
            Rational dp = max_pair(r.inner_plus, b.inner), dm = -min_pair(r.inner_minus, b.inner);
            b.bounds.emplace_back("d+[" + std::to_string(t) + "]", dp);
            b.bounds.emplace_back("d-[" + std::to_string(t) + "]", dm);
            slack.push_back(r.rhs - dp - dm);
        }
        auto ok = [&](const Weight& lam) {
            for (std::size_t t = 0; t < lt.rows.size(); ++t)
                if (scalar_product(lam, lt.rows[t].hhat) > slack[t]) return false;
            return true;
        };
        auto outer = enumerate_outer(b.a, lt, slack, ok);
        b.outer = apply_very_special_filter(b.a, outer);
        detail::finish(ctx_, b);
        return b;
    }

    // Inner part of the small block B*_j, recursive in j.
    const std::vector<Weight>& small_inner(const Rational& j) {
        auto it = small_inner_.find(j);
        if (it != small_inner_.end()) return it->second;
        std::vector<Weight> out;
        for (const auto& nu : big_inner_or_trivial(j)) {
            bool keep = true;
            for (const auto& jp : earlier(j)) {
                const auto& prev = small_inner(jp);
                if (prev.empty()) continue;
                const LevelTable& lt = level(ctx_.a_of(jp));
                for (const auto& r : lt.rows) {
                    Rational bdm = -min_pair(r.inner_minus, prev);
                    if ((j - jp) * r.xi_pair + pair_inner(r.inner_plus, nu) + bdm >= r.rhs) {
                        keep = false;
                        break;
                    }
                }
                if (!keep) break;
            }
            if (keep) out.push_back(nu);
        }
        return small_inner_.emplace(j, std::move(out)).first->second;
    }

    Block small(const Rational& j) {
        check_j(j);
        Block big_b = big(j);
        Block b;
        b.j = j;
        b.a = big_b.a;
        b.kind = BlockKind::small;
        b.inner = small_inner(j);
        if (b.inner.empty()) return b;
        std::vector<Weight> keep;
        for (const auto& lam : big_b.outer) {
            bool good = true;
            for (const auto& jp : earlier(j)) {
                const auto& prev = small_inner(jp);
                if (prev.empty()) continue;
                const LevelTable& lt = level(ctx_.a_of(jp));
                for (const auto& r : lt.rows) {
                    Rational bdp = max_pair(r.inner_plus, b.inner);
                    Rational bdm = -min_pair(r.inner_minus, prev);
                    if (scalar_product(lam, r.hhat) + (j - jp) * r.xi_pair + bdp + bdm >= r.rhs) {
                        good = false;
                        break;
                    }
                }
                if (!good) break;
            }
            if (good) keep.push_back(lam);
        }
        b.outer = std::move(keep);
        for (const auto& jp : earlier(j)) {
            const auto& prev = small_inner(jp);
            if (prev.empty()) continue;
            const LevelTable& lt = level(ctx_.a_of(jp));
            for (std::size_t t = 0; t < lt.rows.size(); ++t)
                b.bounds.emplace_back("bd-[" + jp.str() + "," + std::to_string(t) + "]",
                                      -min_pair(lt.rows[t].inner_minus, prev));
        }
        detail::finish(ctx_, b);
        return b;
    }

private:
    const GrassmannianContext& ctx_;
    std::map<int, Weight> overrides_;
    std::map<int, LevelTable> levels_;
    std::map<Rational, std::vector<Weight>> big_inner_;
    std::map<Rational, std::vector<Weight>> small_inner_;

    void check_j(const Rational& j) const {
        if (!ctx_.in_J(j)) throw std::invalid_argument("j = " + j.str() + " is not in the index set of " + ctx_.name());
    }

    std::vector<Rational> earlier(const Rational& j) const {
        std::vector<Rational> out;
        for (const auto& x : ctx_.J)
            if (x < j) out.push_back(x);
        return out;
    }

    std::vector<Weight> big_inner_or_trivial(const Rational& j) {
        if (!ctx_.has_inner()) {
            // with no inner factor the lattice condition is on j xi alone
            if (ctx_.in_weight_lattice(j * ctx_.xi)) return {Weight()};
            return {};
        }
        return big_inner(j);
    }

    static Rational pair_inner(const Weight& a, const Weight& b) { return a.empty() ? Rational(0) : scalar_product(a, b); }
    static Rational max_pair(const Weight& g, const std::vector<Weight>& set) {
        Rational best = pair_inner(g, set.front());
        for (const auto& x : set) best = std::max(best, pair_inner(g, x));
        return best;
    }
    static Rational min_pair(const Weight& g, const std::vector<Weight>& set) {
        Rational best = pair_inner(g, set.front());
        for (const auto& x : set) best = std::min(best, pair_inner(g, x));
        return best;
    }

    // Inner-dominant weights in the right lattice coset, bounded through the
    // rows whose inner_plus controls the first coordinate.
    void for_each_inner_candidate(const Rational& j, const LevelTable& lt, const std::function<void(const Weight&)>& f) {
        if (!ctx_.has_inner()) return;
        std::optional<Rational> bound;
        for (const auto& r : lt.rows) {
            const Weight& p = r.inner_plus;
            if (p[0] <= 0) continue;
            bool rest_nonneg = true;
            for (std::size_t i = 1; i < p.size(); ++i) rest_nonneg = rest_nonneg && p[i] >= 0;
            if (!rest_nonneg) continue;
            Rational b = r.rhs / (Rational(2) * p[0]);
            if (!bound || b < *bound) bound = b;
        }
        if (!bound) throw std::logic_error("inner part of the block is not bounded by the core shape");
        const RootDatum inner = ctx_.inner_local();
        const std::size_t m = ctx_.inner_size();
        std::vector<Rational> offsets{Rational(0)};
        if (ctx_.series() == Series::B || ctx_.series() == Series::D) offsets.push_back(Rational(1, 2));
        for (const auto& off : offsets) {
            detail::for_each_nonincreasing(m, -*bound, *bound, off, [&](const std::vector<Rational>& xs) {
                Weight nu(xs);
                if (!inner.is_dominant(nu)) return;
                if (!ctx_.in_weight_lattice(j * ctx_.xi + ctx_.embed_inner(nu))) return;
                f(nu);
            });
        }
    }

    // lam = (lam_1 >= ... >= lam_a >= 0, 0, ..., 0) integral, filtered by ok.
    std::vector<Weight> enumerate_outer(int a, const LevelTable& lt, const std::vector<Rational>& slack,
                                        const std::function<bool(const Weight&)>& ok) {
        std::vector<Weight> out;
        if (a == 0) {
            Weight z(ctx_.N);
            if (ok(z)) out.push_back(z);
            return out;
        }
        std::optional<Rational> bound;
        for (std::size_t t = 0; t < lt.rows.size(); ++t) {
            const Weight& h = lt.rows[t].hhat;
            if (h[0] <= 0 || h[a - 1] < 0) continue;
            Rational b = slack[t] / h[0];
            if (!bound || b < *bound) bound = b;
        }
        if (!bound) throw std::logic_error("outer part of the block is not bounded by the core shape");
        if (*bound < 0) return out;
        detail::for_each_nonincreasing(a, Rational(0), *bound, Rational(0), [&](const std::vector<Rational>& xs) {
            Weight lam(ctx_.N);
            for (int i = 0; i < a; ++i) lam[i] = xs[i];
            if (ok(lam)) out.push_back(lam);
        });
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<Weight> apply_very_special_filter(int a, const std::vector<Weight>& outer) {
        if (a < 1) return outer;
        auto vs = very_special_elements(ctx_, a).very_special();
        if (vs.empty()) return outer;
        Weight alpha_sum(ctx_.N);
        alpha_sum[0] = 1;
        alpha_sum[ctx_.k - 1] -= 1;
        const Weight& rho = ctx_.G.rho();
        std::vector<Weight> keep;
        for (const auto& lam : outer) {
            bool good = true;
            for (const auto& v : vs)
                if (scalar_product(lam + v.act(rho) - rho, alpha_sum) >= phi_value(ctx_, v)) good = false;
            if (good) keep.push_back(lam);
        }
        return keep;
    }
};

inline Block big_block(const GrassmannianContext& ctx, const Rational& j) { return BlockBuilder(ctx).big(j); }

inline Block small_block(const GrassmannianContext& ctx, const Rational& j) { return BlockBuilder(ctx).small(j); }

inline std::vector<Block> small_blocks(const GrassmannianContext& ctx) {
    BlockBuilder bb(ctx);
    std::vector<Block> out;
    for (const auto& j : ctx.J) out.push_back(bb.small(j));
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form blocks

inline Block explicit_block(const GrassmannianContext& ctx, const Rational& j) {
    if (ctx.series() == Series::A) throw std::invalid_argument("explicit_block: series A has no closed form here");
    if (!ctx.in_J(j)) throw std::invalid_argument("j = " + j.str() + " is not in the index set");
    Block b;
    b.j = j;
    b.a = ctx.a_of(j);
    b.kind = BlockKind::explicit_form;
    const int n = ctx.n, k = ctx.k;
    const Rational half(1, 2);
    auto emit = [&](const std::vector<Rational>& head, const Weight& tail) {
        Weight w(ctx.N);
        for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i];
        for (std::size_t i = 0; i < tail.size(); ++i) w[k + i] = tail[i];
        b.weights.push_back(w);
    };
    // first `free` coordinates in [low, top] nonincreasing, the rest of the
    // GL block equal to `low`, inner part from `inner_list`
    auto family = [&](int free, const Rational& low, const Rational& top, int gl_len, const std::vector<Weight>& inner_list) {
        detail::for_each_nonincreasing(free, low, top, low.frac(), [&](const std::vector<Rational>& xs) {
            std::vector<Rational> head(xs);
            head.resize(gl_len, low);
            for (const auto& in : inner_list) emit(head, in);
        });
    };
    auto inner_family = [&](const Rational& cap, const Rational& offset) {
        std::vector<Weight> out;
        const std::size_t m = ctx.inner_size();
        if (m == 0) return std::vector<Weight>{Weight()};
        detail::for_each_nonincreasing(m, -cap, cap, offset, [&](const std::vector<Rational>& xs) {
            const Rational& last = xs[m - 1];
            if (ctx.series() == Series::D) {
                if (m >= 2 && last < -xs[m - 2]) return;
            } else if (last < 0) {
                return;
            }
            out.emplace_back(xs);
        });
        return out;
    };
    const Weight zero_inner(ctx.inner_size());

    if (ctx.maximal_b) {
        // j = 2t or 2t+1
        const std::int64_t jj = j.num();
        const std::int64_t t = jj / 2;
        if (jj % 2 == 0)
            family(static_cast<int>(t), Rational(t), Rational(n - 1), n, {Weight()});
        else
            family(static_cast<int>(t), Rational(t) + half, Rational(n) - half, n, {Weight()});
    } else if (ctx.series() == Series::C) {
        const std::int64_t t = j.num();
        if (t <= k - 1)
            family(static_cast<int>(t), Rational(t), Rational(2 * n - k), k, inner_family(Rational((k - t) / 2), Rational(0)));
        else
            family(k - 1, Rational(t), Rational(2 * n - k), k, {zero_inner});
    } else {
        const Rational top = Rational(2 * n - k - 2) + Rational(2) * ctx.e;
        if (j.is_integer()) {
            const std::int64_t t = j.num();
            if (t <= k - 1)
                family(static_cast<int>(t), Rational(t), top, k, inner_family(Rational(k - t, 2), Rational(0)));
            else
                family(k - 1, Rational(t), top, k, {zero_inner});
        } else {
            const std::int64_t t = j.floor();
            if (t <= k - 1)
                family(static_cast<int>(t), Rational(t) + half, top + half, k, inner_family(Rational(k - t, 2), half));
        }
    }
    std::sort(b.weights.begin(), b.weights.end());
    b.weights.erase(std::unique(b.weights.begin(), b.weights.end()), b.weights.end());
    detail::split_weights(ctx, b);
    return b;
}

// ---------------------------------------------------------------------------
// Series A curve blocks

struct Crossing {
    Rational x, y;
};

inline void validate_crossings(int k, int l, const std::vector<Crossing>& q) {
    if (q.size() < 2) throw std::invalid_argument("curve needs at least its two end points");
    if (q.front().x != k || q.front().y != l) throw std::invalid_argument("curve must start at (k,l)");
    if (q.back().x != 0 || q.back().y != 0) throw std::invalid_argument("curve must end at (0,0)");
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto& p = q[i];
        if (p.x < 0 || p.x > k || p.y < 0 || p.y > l) throw std::invalid_argument("crossing outside the rectangle");
        if (!p.x.is_integer() && !p.y.is_integer()) throw std::invalid_argument("crossing not on a grid edge");
        if (i == 0) continue;
        const auto& o = q[i - 1];
        if (p.x > o.x || p.y > o.y || (p.x == o.x && p.y == o.y))
            throw std::invalid_argument("crossings are not strictly monotone");
        if (p.x.floor() < o.x.ceil() - 1 || p.y.floor() < o.y.ceil() - 1)
            throw std::invalid_argument("consecutive crossings do not share a grid square");
    }
}

// Crossings of a curve described by its moves between unit squares, starting
// in the square at the corner (k,l): 'L' crosses a vertical edge, 'D' a
// horizontal one, 'B' passes through the lower-left corner. The word must
// end in the square at the origin.
inline std::vector<Crossing> curve_from_steps(int k, int l, const std::string& word) {
    std::vector<Crossing> q{{Rational(k), Rational(l)}};
    int p = k, r = l;
    const Rational half(1, 2);
    for (char c : word) {
        if (c == 'L' && p >= 2) {
            q.push_back({Rational(p - 1), Rational(r) - half});
            --p;
        } else if (c == 'D' && r >= 2) {
            q.push_back({Rational(p) - half, Rational(r - 1)});
            --r;
        } else if (c == 'B' && p >= 2 && r >= 2) {
            q.push_back({Rational(p - 1), Rational(r - 1)});
            --p;
            --r;
        } else {
            throw std::invalid_argument(std::string("curve step '") + c + "' leaves the rectangle or is unknown");
        }
    }
    if (p != 1 || r != 1) throw std::invalid_argument("curve word does not reach the square at the origin");
    q.push_back({Rational(0), Rational(0)});
    return q;
}

// Every step word for the k x l rectangle, in lexicographic order.
inline std::vector<std::string> all_curve_words(int k, int l) {
    std::vector<std::string> out;
    std::string cur;
    std::function<void(int, int)> rec = [&](int p, int r) {
        if (p == 1 && r == 1) {
            out.push_back(cur);
            return;
        }
        for (char c : {'B', 'D', 'L'}) {
            int np = p - (c != 'D'), nr = r - (c != 'L');
            if (np < 1 || nr < 1) continue;
            cur.push_back(c);
            rec(np, nr);
            cur.pop_back();
        }
    };
    rec(k, l);
    return out;
}

// Blocks of the conjectural collection on Gr(k, k+l) attached to a curve
// through the crossing points Q_0 = (k,l), ..., Q_m = (0,0).
inline std::vector<Block> typea_blocks(int k, int l, const std::vector<Crossing>& crossings) {
    if (k < 1 || l < 1) throw std::invalid_argument("typea_blocks: k and l must be positive");
    validate_crossings(k, l, crossings);
    const int n = k + l;
    std::vector<Block> out;
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        const auto& p = crossings[i];
        const int ai = static_cast<int>(p.x.floor()), bi = static_cast<int>(p.y.floor());
        const int ci = k - static_cast<int>(p.x.ceil()), di = l - static_cast<int>(p.y.ceil());
        const int idx = static_cast<int>(i);
        Block b;
        b.j = Rational(idx);
        b.a = ai;
        b.kind = BlockKind::type_a;
        b.experimental = true;
        b.bounds = {{"a", Rational(ai)}, {"b", Rational(bi)}, {"c", Rational(ci)}, {"d", Rational(di)}};
        detail::for_each_nonincreasing(ai, Rational(idx), Rational(di + idx), Rational(0), [&](const std::vector<Rational>& head) {
            detail::for_each_nonincreasing(bi, Rational(-ci), Rational(0), Rational(0), [&](const std::vector<Rational>& tail) {
                Weight w(n);
                for (int t = 0; t < k; ++t) w[t] = t < ai ? head[t] : Rational(idx);
                for (int t = 0; t < bi; ++t) w[n - bi + t] = tail[t];
                b.weights.push_back(w);
            });
        });
        std::sort(b.weights.begin(), b.weights.end());
        out.push_back(std::move(b));
    }
    return out;
}

// Outer parts read as Young diagrams are closed under removing corner boxes.
inline bool outer_closed_under_subdiagrams(const Block& b) {
    std::set<Weight> s(b.outer.begin(), b.outer.end());
    for (const auto& lam : b.outer)
        for (int i = 0; i < b.a; ++i) {
            if (lam[i] == 0) continue;
            if (i + 1 < b.a && lam[i + 1] == lam[i]) continue;
            Weight smaller = lam;
            smaller[i] -= 1;
            if (!s.count(smaller)) return false;
        }
    return true;
}

}  // namespace isogr
