#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "isogr/bbw.hpp"
#include "isogr/blocks.hpp"
#include "isogr/parallel.hpp"

namespace isogr {

// ---------------------------------------------------------------------------
// Reports

struct Witness {
    std::vector<Weight> weights;
    std::vector<WeylElement> elements;
    int degree = -1;
    std::string note;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::size_t units = 0;     // independent instances examined
    std::size_t failures = 0;
    std::optional<Witness> witness;  // first failure in canonical order
};

struct VerificationReport {
    std::string subject;
    std::string label;  // e.g. "dimension-certified"
    bool experimental = false;
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    }
};

namespace detail {

// Folds per-unit outcomes (in index order) into one check entry.
inline CheckResult fold(std::string name, const std::vector<std::optional<Witness>>& units) {
    CheckResult r;
    r.name = std::move(name);
    r.units = units.size();
    for (const auto& u : units) {
        if (!u) continue;
        ++r.failures;
        if (!r.witness) r.witness = u;
    }
    r.pass = r.failures == 0;
    return r;
}

inline std::string block_subject(const GrassmannianContext& ctx, const Block& b) {
    return ctx.name() + " " + to_string(b.kind) + " j=" + b.j.str();
}

// Projection onto the block: keep only components whose weight lies in it.
inline DecompositionTable project(const DecompositionTable& t, const Block& b) {
    DecompositionTable out;
    for (const auto& [w, c] : t)
        if (b.contains(w)) out.emplace(w, c);
    return out;
}

inline std::string table_str(const DecompositionTable& t) {
    std::string s;
    for (const auto& [w, c] : t) s += (s.empty() ? "" : " + ") + std::to_string(c) + "*" + w.str();
    return s.empty() ? "0" : s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Output sets

struct OutputSet {
    std::set<std::pair<Weight, WeylElement>> pairs;  // (kappa, v)
    std::set<Weight> kappas;
    std::set<WeylElement> elements;
};

// Pairs (kappa, v) with v(kappa + rho) - rho a lattice point of Conv(lam' - W_L lam).
inline OutputSet output_set_pair(const GrassmannianContext& ctx, const Weight& lam, const Weight& lam2) {
    OutputSet out;
    const RootDatum& L = ctx.L;
    const Weight& rho = ctx.G.rho();
    // per-coordinate range of (w lam)_i over W_L
    Weight lo(ctx.N), hi(ctx.N);
    for (const auto& f : L.factors()) {
        std::vector<Rational> vals;
        for (std::size_t i = f.offset; i < f.offset + f.size; ++i) {
            vals.push_back(lam[i]);
            if (f.series != Series::A) vals.push_back(-lam[i]);
        }
        auto [mn, mx] = std::minmax_element(vals.begin(), vals.end());
        for (std::size_t i = f.offset; i < f.offset + f.size; ++i) {
            lo[i] = lam2[i] - *mx;
            hi[i] = lam2[i] - *mn;
        }
    }
    std::vector<Rational> offsets{Rational(0)};
    if (ctx.series() == Series::B || ctx.series() == Series::D) offsets.push_back(Rational(1, 2));
    const auto& fs = L.factors();
    for (const auto& off : offsets) {
        Weight mu(ctx.N);
        std::function<void(std::size_t)> rec = [&](std::size_t fi) {
            if (fi == fs.size()) {
                if (!ctx.in_weight_lattice(mu) || !L.is_dominant(mu)) return;
                if (!hull_contains(L, lam2, lam, mu)) return;
                const Weight x = mu + rho;
                if (!ctx.G.is_regular(x)) return;
                auto [dom, w] = ctx.G.dominant_representative(x);
                Weight kappa = dom - rho;
                WeylElement v = w.inverse();
                out.pairs.emplace(kappa, v);
                out.kappas.insert(kappa);
                out.elements.insert(v);
                return;
            }
            const Factor& f = fs[fi];
            Rational flo = lo[f.offset], fhi = hi[f.offset];
            for (std::size_t i = f.offset; i < f.offset + f.size; ++i) {
                flo = std::min(flo, lo[i]);
                fhi = std::max(fhi, hi[i]);
            }
            detail::for_each_nonincreasing(f.size, flo, fhi, off, [&](const std::vector<Rational>& xs) {
                for (std::size_t i = 0; i < f.size; ++i) {
                    if (xs[i] < lo[f.offset + i] || xs[i] > hi[f.offset + i]) return;
                    mu[f.offset + i] = xs[i];
                }
                rec(fi + 1);
            });
        };
        rec(0);
    }
    return out;
}

inline OutputSet output_set(const GrassmannianContext& ctx, const Block& block) {
    if (block.empty()) throw std::invalid_argument("output_set: empty block");
    const auto& ws = block.weights;
    const std::size_t n = ws.size();
    auto parts = parallel_map<OutputSet>(n * n, [&](std::size_t i) { return output_set_pair(ctx, ws[i / n], ws[i % n]); });
    OutputSet out;
    for (const auto& p : parts) {
        out.pairs.insert(p.pairs.begin(), p.pairs.end());
        out.kappas.insert(p.kappas.begin(), p.kappas.end());
        out.elements.insert(p.elements.begin(), p.elements.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exceptionality criterion

// Restriction to H_a is trivial (zero, or constant in series A).
inline bool in_kernel_of_restriction(const GrassmannianContext& ctx, int a, const Weight& kappa) {
    Weight r = ctx.restrict_h(a, kappa);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (ctx.series() == Series::A ? r[i] != r[0] : r[i] != 0) return false;
    }
    return true;
}

inline VerificationReport check_invariance(const GrassmannianContext& ctx, const Block& block) {
    VerificationReport rep{detail::block_subject(ctx, block), "exact", block.experimental, {}};
    if (block.empty()) {
        rep.checks.push_back({"invariance", true, 0, 0, std::nullopt});
        return rep;
    }
    const OutputSet op = output_set(ctx, block);
    const int a = block.a;
    std::vector<std::optional<Witness>> kernel, coset, fixed;
    for (const auto& kappa : op.kappas) {
        if (in_kernel_of_restriction(ctx, a, kappa)) kernel.emplace_back();
        else kernel.push_back(Witness{{kappa}, {}, -1, "kappa has nonzero restriction to H_" + std::to_string(a)});
    }
    for (const auto& v : op.elements) {
        if (v.fixes_outside(a, ctx.N)) coset.emplace_back();
        else coset.push_back(Witness{{}, {v}, -1, "v moves one of the first " + std::to_string(a) + " coordinates"});
    }
    for (const auto& kappa : op.kappas)
        for (const auto& v : op.elements) {
            if (v.act(kappa) == kappa) fixed.emplace_back();
            else fixed.push_back(Witness{{kappa, v.act(kappa)}, {v}, -1, "v kappa != kappa"});
        }
    rep.checks.push_back(detail::fold("kappa-in-kernel", kernel));
    rep.checks.push_back(detail::fold("v-in-W_H", coset));
    rep.checks.push_back(detail::fold("v-fixes-kappa", fixed));
    return rep;
}

inline VerificationReport check_compatibility(const GrassmannianContext& ctx, const Block& block) {
    VerificationReport rep{detail::block_subject(ctx, block), "dimension-certified", block.experimental, {}};
    if (block.empty()) {
        rep.checks.push_back({"compatibility", true, 0, 0, std::nullopt});
        return rep;
    }
    const OutputSet op = output_set(ctx, block);
    const std::vector<Weight> kappas(op.kappas.begin(), op.kappas.end());
    const std::vector<WeylElement> vs(op.elements.begin(), op.elements.end());
    const auto& ws = block.weights;
    const Weight& rho = ctx.G.rho();
    const std::size_t nk = kappas.size(), nv = vs.size(), nl = ws.size();
    auto units = parallel_map<std::optional<Witness>>(nk * nv * nl, [&](std::size_t idx) -> std::optional<Witness> {
        const Weight& kappa = kappas[idx / (nv * nl)];
        const WeylElement& v = vs[(idx / nl) % nv];
        const Weight& lam = ws[idx % nl];
        const int deg = length(ctx.G, v);
        const Weight shift = v.act(rho) - rho;
        const Weight top = kappa + shift;
        if (!ctx.is_l_dominant(top) || !ctx.in_weight_lattice(top))
            return Witness{{kappa, lam}, {v}, deg, "kappa + v rho - rho is not L-dominant"};
        DecompositionTable lhs = detail::project(levi_tensor_decompose(ctx, top, lam), block);
        DecompositionTable rhs;
        for (const auto& [nu, c] : detail::project(levi_tensor_decompose(ctx, shift, lam), block))
            for (const auto& [x, d] : detail::project(levi_tensor_decompose(ctx, kappa, nu), block)) rhs[x] += c * d;
        if (lhs == rhs) return std::nullopt;
        return Witness{{kappa, lam}, {v}, deg, "lhs " + detail::table_str(lhs) + " vs rhs " + detail::table_str(rhs)};
    });
    rep.checks.push_back(detail::fold("compatibility", units));
    return rep;
}

inline VerificationReport check_block_exceptional(const GrassmannianContext& ctx, const Block& block) {
    VerificationReport rep{detail::block_subject(ctx, block), "dimension-certified", block.experimental, {}};
    const auto& ws = block.weights;
    const std::size_t n = ws.size();
    auto units = parallel_map<std::optional<Witness>>(n * n, [&](std::size_t idx) -> std::optional<Witness> {
        const Weight& lam = ws[idx / n];
        const Weight& mu = ws[idx % n];
        std::map<int, long long> lhs;
        for (const auto& nu : ws) {
            long long hom = hom_dimension(ctx, nu, mu);
            if (hom == 0) continue;
            const GradedRepSum eq = equivariant_ext(ctx, lam, nu);
            for (const auto& t : eq.terms()) lhs[t.degree] += t.mult * hom;
        }
        std::erase_if(lhs, [](const auto& p) { return p.second == 0; });
        std::map<int, long long> rhs = graded_dimension(ctx, ext_groups(ctx, lam, mu));
        if (lhs == rhs) return std::nullopt;
        for (const auto& [d, x] : rhs)
            if (lhs[d] != x) return Witness{{lam, mu}, {}, d, "lhs " + std::to_string(lhs[d]) + " vs ext " + std::to_string(x)};
        for (const auto& [d, x] : lhs)
            if (!rhs.count(d)) return Witness{{lam, mu}, {}, d, "lhs " + std::to_string(x) + " vs ext 0"};
        return Witness{{lam, mu}, {}, -1, "graded dimensions differ"};
    });
    rep.checks.push_back(detail::fold("exceptional-block", units));
    return rep;
}

// Backward Ext-vanishing between blocks given in ascending j.
inline VerificationReport check_semiorthogonality(const GrassmannianContext& ctx, const std::vector<Block>& blocks) {
    for (std::size_t i = 1; i < blocks.size(); ++i)
        if (!(blocks[i - 1].j < blocks[i].j)) throw std::invalid_argument("check_semiorthogonality: blocks not in ascending j");
    bool exp = std::any_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.experimental; });
    VerificationReport rep{ctx.name() + " semiorthogonality", "exact", exp, {}};
    std::vector<std::pair<Weight, Weight>> pairs;
    for (std::size_t j = 0; j < blocks.size(); ++j)
        for (std::size_t jp = 0; jp < j; ++jp)
            for (const auto& lam : blocks[j].weights)
                for (const auto& lam2 : blocks[jp].weights) pairs.emplace_back(lam, lam2);
    auto units = parallel_map<std::optional<Witness>>(pairs.size(), [&](std::size_t i) -> std::optional<Witness> {
        const auto& [lam, lam2] = pairs[i];
        const GradedRepSum& e = ext_groups(ctx, lam, lam2);
        if (e.empty()) return std::nullopt;
        return Witness{{lam, lam2}, {}, e.terms().front().degree, e.str()};
    });
    rep.checks.push_back(detail::fold("backward-ext-vanishing", units));
    return rep;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline long long expected_count(const GrassmannianContext& ctx) {
    if (ctx.series() == Series::A) return binomial(ctx.n + 1, ctx.k);
    if (ctx.maximal_b) return 1LL << ctx.n;
    return binomial(ctx.n, ctx.k) << ctx.k;
}

inline VerificationReport check_counts(const GrassmannianContext& ctx, const std::vector<Block>& small) {
    if (ctx.series() == Series::A) throw std::invalid_argument("check_counts: series B, C, D only");
    VerificationReport rep{ctx.name() + " counts", "exact", false, {}};
    long long total = 0;
    for (const auto& b : small) total += static_cast<long long>(b.size());
    const long long expect = expected_count(ctx);
    CheckResult c{"total-count", total == expect, 1, total == expect ? 0u : 1u, std::nullopt};
    if (!c.pass) c.witness = Witness{{}, {}, -1, "total " + std::to_string(total) + " expected " + std::to_string(expect)};
    c.name = "total=" + std::to_string(total) + ",expected=" + std::to_string(expect);
    rep.checks.push_back(c);
    return rep;
}

inline VerificationReport check_counts(const GrassmannianContext& ctx) { return check_counts(ctx, small_blocks(ctx)); }

// Structural sanity of the small blocks: closed form agrees, weights are
// L-dominant lattice points with theta-pairing j.
inline VerificationReport check_blocks(const GrassmannianContext& ctx, const std::vector<Block>& small) {
    VerificationReport rep{ctx.name() + " blocks", "exact", false, {}};
    std::vector<std::optional<Witness>> closed, shape;
    for (const auto& b : small) {
        Block ex = explicit_block(ctx, b.j);
        if (ex.weights == b.weights) closed.emplace_back();
        else closed.push_back(Witness{{}, {}, -1, "j=" + b.j.str() + ": closed form has " + std::to_string(ex.size()) +
                                                      " weights, construction " + std::to_string(b.size())});
        for (const auto& w : b.weights) {
            if (ctx.is_l_dominant(w) && ctx.in_weight_lattice(w) && ctx.theta_pairing(w) == b.j) shape.emplace_back();
            else shape.push_back(Witness{{w}, {}, -1, "j=" + b.j.str() + ": bad block member"});
        }
    }
    rep.checks.push_back(detail::fold("closed-form-agrees", closed));
    rep.checks.push_back(detail::fold("members-well-formed", shape));
    return rep;
}

// ---------------------------------------------------------------------------
// Dual classes in K_0

enum class TieBreak { descending_lex, ascending_lex };

struct DualClasses {
    std::vector<Weight> order;                   // xi-ordering of the block
    std::vector<std::vector<Rational>> coeffs;   // row lam: class of E^lam in the basis [U^mu]
    std::vector<std::vector<Rational>> gram;     // chi(E^lam, E^mu)
    bool integral = true;
    bool unitriangular = true;
};

inline std::vector<Weight> xi_order(const GrassmannianContext& ctx, std::vector<Weight> ws, TieBreak tb) {
    std::sort(ws.begin(), ws.end(), [&](const Weight& x, const Weight& y) {
        Rational px = ctx.xi_pairing(x), py = ctx.xi_pairing(y);
        if (px != py) return px < py;
        return tb == TieBreak::descending_lex ? y < x : x < y;
    });
    return ws;
}

namespace detail {

// Solves X * A = B exactly for square A; throws on a singular A.
inline std::vector<std::vector<Rational>> right_solve(const std::vector<std::vector<Rational>>& A,
                                                      const std::vector<std::vector<Rational>>& B) {
    const std::size_t n = A.size();
    // X A = B  <=>  A^T X^T = B^T
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            M[i][j] = A[j][i];
            M[i][n + j] = B[j][i];
        }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("dual_classes: Euler form is singular on this block");
        std::swap(M[p], M[c]);
        Rational inv = Rational(1) / M[c][c];
        for (auto& x : M[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c] == 0) continue;
            Rational f = M[r][c];
            for (std::size_t t = 0; t < 2 * n; ++t) M[r][t] -= f * M[c][t];
        }
    }
    std::vector<std::vector<Rational>> X(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) X[j][i] = M[i][n + j];
    return X;
}

}  // namespace detail

inline DualClasses dual_classes(const GrassmannianContext& ctx, const Block& block, TieBreak tb = TieBreak::descending_lex) {
    DualClasses d;
    d.order = xi_order(ctx, block.weights, tb);
    const std::size_t n = d.order.size();
    std::vector<std::vector<Rational>> G(n, std::vector<Rational>(n)), H = G;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            G[i][j] = euler_pairing(ctx, d.order[i], d.order[j]);
            H[i][j] = hom_dimension(ctx, d.order[i], d.order[j]);
        }
    d.coeffs = detail::right_solve(G, H);
    d.gram.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational s;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) s += d.coeffs[i][a] * G[a][b] * d.coeffs[j][b];
            d.gram[i][j] = s;
        }
    for (const auto& row : d.coeffs)
        for (const auto& x : row) d.integral = d.integral && x.is_integer();
    bool upper = true, lower = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) d.unitriangular = d.unitriangular && d.gram[i][j] == 1;
            if (i < j && d.gram[i][j] != 0) lower = false;
            if (i > j && d.gram[i][j] != 0) upper = false;
        }
    d.unitriangular = d.unitriangular && (upper || lower);
    return d;
}

// ---------------------------------------------------------------------------
// Path closure in the quiver of G-equivariant bundles

inline Weight minus_beta(const GrassmannianContext& ctx) { return -ctx.beta; }

inline std::vector<Weight> quiver_successors(const GrassmannianContext& ctx, const Weight& lam) {
    std::vector<Weight> out;
    for (const auto& [mu, c] : levi_tensor_decompose(ctx, minus_beta(ctx), lam)) out.push_back(mu);
    return out;
}

struct PathClosure {
    std::vector<std::vector<Weight>> violations;  // excursions leaving and re-entering the block
};

// Every shortest excursion (start in block, intermediate vertices outside,
// end in block), one per (start, end) pair.
inline PathClosure find_path_violations(const GrassmannianContext& ctx, const Block& block) {
    PathClosure pc;
    if (block.empty()) return pc;
    const Rational step = ctx.xi_pairing(ctx.beta);
    Rational floor_xi = ctx.xi_pairing(block.weights.front());
    for (const auto& w : block.weights) floor_xi = std::min(floor_xi, ctx.xi_pairing(w));
    auto per_start = parallel_map<std::vector<std::vector<Weight>>>(block.size(), [&](std::size_t si) {
        const Weight& start = block.weights[si];
        std::map<Weight, Weight> parent;
        std::deque<Weight> queue;
        std::set<Weight> hit;
        std::vector<std::vector<Weight>> found;
        auto path_to = [&](Weight x) {
            std::vector<Weight> p{x};
            while (x != start) {
                x = parent.at(x);
                p.push_back(x);
            }
            std::reverse(p.begin(), p.end());
            return p;
        };
        auto expand = [&](const Weight& from, bool outside) {
            if (ctx.xi_pairing(from) - step < floor_xi) return;
            for (const auto& nxt : quiver_successors(ctx, from)) {
                if (block.contains(nxt)) {
                    if (outside && hit.insert(nxt).second) {
                        auto p = path_to(from);
                        p.push_back(nxt);
                        found.push_back(std::move(p));
                    }
                    continue;
                }
                if (parent.count(nxt)) continue;
                parent.emplace(nxt, from);
                queue.push_back(nxt);
            }
        };
        expand(start, false);
        while (!queue.empty()) {
            Weight x = queue.front();
            queue.pop_front();
            expand(x, true);
        }
        return found;
    });
    for (auto& v : per_start)
        for (auto& p : v) pc.violations.push_back(std::move(p));
    return pc;
}

inline VerificationReport check_path_closure(const GrassmannianContext& ctx, const Block& block) {
    VerificationReport rep{detail::block_subject(ctx, block), "exact", block.experimental, {}};
    PathClosure pc = find_path_violations(ctx, block);
    std::vector<std::optional<Witness>> units(block.size());
    std::size_t vi = 0;
    for (std::size_t i = 0; i < block.size(); ++i)
        for (; vi < pc.violations.size() && pc.violations[vi].front() == block.weights[i]; ++vi)
            if (!units[i]) units[i] = Witness{pc.violations[vi], {}, -1, "path leaves and re-enters the block"};
    CheckResult c = detail::fold("path-closure", units);
    c.failures = pc.violations.size();
    rep.checks.push_back(c);
    return rep;
}

// ---------------------------------------------------------------------------
// GL_n identity for the projector onto weights nu - w0 sigma

namespace detail {

inline Weight gl_weight(const Partition& p, std::size_t n) {
    Weight w(n);
    for (std::size_t i = 0; i < p.size() && i < n; ++i) w[i] = p[i];
    return w;
}

// -w0 of a partition, as a GL_n weight
inline Weight gl_dual(const Partition& p, std::size_t n) {
    Weight w(n);
    for (std::size_t i = 0; i < p.size() && i < n; ++i) w[n - 1 - i] = -p[i];
    return w;
}

// nu when w = nu - w0 sigma with nu a partition of at most a parts.
inline std::optional<Partition> sigma_part(const Weight& w, std::size_t a, const Weight& dual_sigma) {
    const std::size_t n = w.size();
    for (std::size_t i = a; i < n; ++i)
        if (w[i] != dual_sigma[i]) return std::nullopt;
    Partition nu;
    for (std::size_t i = 0; i < a; ++i) {
        if (!w[i].is_integer() || w[i] < 0) return std::nullopt;
        nu.push_back(static_cast<int>(w[i].num()));
    }
    return trim(nu);
}

inline void partitions_in_box(std::size_t rows, int cap, const std::function<void(const Partition&)>& f) {
    Partition p(rows);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int top) {
        if (i == rows) {
            f(trim(p));
            return;
        }
        for (int x = 0; x <= top; ++x) {
            p[i] = x;
            rec(i + 1, x);
        }
    };
    rec(0, cap);
}

}  // namespace detail

// Decomposition of V^{(x) N} for GL_n by repeated tensoring with V, using
// characters rather than Littlewood-Richardson.
inline std::map<Partition, long long> tensor_power(std::size_t n, int N) {
    const RootDatum gl = RootDatum::simple(Series::A, n);
    DecompositionTable cur{{Weight(n), 1}};
    const Weight v = Weight::unit(n, 0);
    for (int t = 0; t < N; ++t) {
        DecompositionTable next;
        for (const auto& [w, c] : cur)
            for (const auto& [x, d] : tensor_decompose(gl, w, v)) next[x] += c * d;
        cur = std::move(next);
    }
    std::map<Partition, long long> out;
    for (const auto& [w, c] : cur) {
        Partition p;
        for (const auto& x : w) p.push_back(static_cast<int>(x.num()));
        out[trim(p)] += c;
    }
    return out;
}

struct SigmaTables {
    std::map<Partition, long long> lr, source, target;  // keyed by nu in nu - w0 sigma
};

// Multiplicities of V^{nu - w0 sigma} in the source V^{kappa - w0 tau} (x) W and
// the target V^kappa (x) Pi_sigma(V^{-w0 tau} (x) W), directly by characters,
// and the value both should take according to the tableau factorisation.
inline SigmaTables sigma_tables(std::size_t n, std::size_t a, const Partition& kappa, const Partition& sigma,
                                const Partition& tau, const std::map<Partition, long long>& W) {
    auto bad = [](const Partition& p, std::size_t rows) { return !is_partition(p) || trim(p).size() > rows; };
    if (a > n || bad(kappa, a) || bad(sigma, n - a) || bad(tau, n - a))
        throw std::invalid_argument("sigma identity: malformed partitions");
    for (const auto& [lam, c] : W)
        if (bad(lam, n)) throw std::invalid_argument("sigma identity: W has a summand that is not a partition");
    const RootDatum gl = RootDatum::simple(Series::A, n);
    const Weight dsig = detail::gl_dual(sigma, n), dtau = detail::gl_dual(tau, n), kap = detail::gl_weight(kappa, n);
    SigmaTables out;
    auto keep = [&](std::map<Partition, long long>& dst, const DecompositionTable& t, long long factor) {
        for (const auto& [w, c] : t)
            if (auto nu = detail::sigma_part(w, a, dsig)) dst[*nu] += factor * c;
    };
    for (const auto& [lamp, m] : W) {
        const Weight lam = detail::gl_weight(lamp, n);
        keep(out.source, tensor_decompose(gl, kap + dtau, lam), m);
        for (const auto& [w, c] : tensor_decompose(gl, dtau, lam))
            if (detail::sigma_part(w, a, dsig)) keep(out.target, tensor_decompose(gl, kap, w), m * c);
        // tableau route: sum over nu of N1 * N2
        const int tau1 = trim(tau).empty() ? 0 : trim(tau)[0];
        Partition tau_c(n);
        for (std::size_t i = 0; i < n; ++i) tau_c[i] = static_cast<int>((dtau[i] + tau1).num());
        int cap = lamp.empty() ? 0 : lamp[0];
        detail::partitions_in_box(a, cap, [&](const Partition& nu) {
            Weight top = detail::gl_weight(nu, n) + dsig + Weight::constant(n, tau1);
            Partition tp;
            for (const auto& x : top) {
                if (x < 0) return;
                tp.push_back(static_cast<int>(x.num()));
            }
            if (!is_partition(tp)) return;
            long long n2 = lr_coefficient(tau_c, lamp, tp);
            if (n2 == 0) return;
            for (const auto& [mu, n1] : lr_decompose(kappa, nu, a)) out.lr[trim(mu)] += m * n1 * n2;
        });
    }
    for (auto* t : {&out.lr, &out.source, &out.target}) std::erase_if(*t, [](const auto& p) { return p.second == 0; });
    return out;
}

inline std::string partition_str(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

inline VerificationReport check_sigma_identity(std::size_t n, std::size_t a, const Partition& kappa, const Partition& sigma,
                                               const Partition& tau, const std::map<Partition, long long>& W,
                                               const std::string& w_label) {
    VerificationReport rep{"GL" + std::to_string(n) + " a=" + std::to_string(a) + " kappa=" + partition_str(kappa) +
                               " sigma=" + partition_str(sigma) + " tau=" + partition_str(tau) + " W=" + w_label,
                           "exact", false, {}};
    SigmaTables t = sigma_tables(n, a, kappa, sigma, tau, W);
    auto compare = [&](const char* name, const std::map<Partition, long long>& x, const std::map<Partition, long long>& y) {
        std::set<Partition> keys;
        for (const auto& [k, c] : x) keys.insert(k);
        for (const auto& [k, c] : y) keys.insert(k);
        std::vector<std::optional<Witness>> units;
        for (const auto& k : keys) {
            long long cx = x.count(k) ? x.at(k) : 0, cy = y.count(k) ? y.at(k) : 0;
            if (cx == cy) units.emplace_back();
            else
                units.push_back(Witness{{detail::gl_weight(k, n) + detail::gl_dual(sigma, n)}, {}, -1,
                                        std::to_string(cx) + " vs " + std::to_string(cy)});
        }
        rep.checks.push_back(detail::fold(name, units));
    };
    compare("source=target", t.source, t.target);
    compare("tableaux=source", t.lr, t.source);
    return rep;
}

inline VerificationReport check_sigma_identity(std::size_t n, std::size_t a, const Partition& kappa, const Partition& sigma,
                                               const Partition& tau, int N) {
    return check_sigma_identity(n, a, kappa, sigma, tau, tensor_power(n, N), "V^" + std::to_string(N));
}

// ---------------------------------------------------------------------------
// Full pipeline

inline std::vector<VerificationReport> verify_all(const GrassmannianContext& ctx) {
    std::vector<VerificationReport> out;
    std::vector<Block> small = small_blocks(ctx);
    out.push_back(check_counts(ctx, small));
    out.push_back(check_blocks(ctx, small));
    for (auto check : {check_invariance, check_compatibility, check_block_exceptional})
        for (const auto& b : small)
            if (!b.empty()) out.push_back(check(ctx, b));
    std::vector<Block> nonempty;
    for (const auto& b : small)
        if (!b.empty()) nonempty.push_back(b);
    out.push_back(check_semiorthogonality(ctx, nonempty));
    for (const auto& b : nonempty) out.push_back(check_path_closure(ctx, b));
    return out;
}

}  // namespace isogr
