#include <gtest/gtest.h>

#include <random>

#include "isogr/verify.hpp"

using namespace isogr;

namespace {

Weight P(const std::string& s) { return Weight::parse(s); }

std::vector<Block> nonempty_small(const GrassmannianContext& c) {
    std::vector<Block> out;
    for (auto& b : small_blocks(c))
        if (!b.empty()) out.push_back(std::move(b));
    return out;
}

Block single(const std::vector<Weight>& ws, Rational j = 0) {
    Block b;
    b.j = j;
    b.weights = ws;
    std::sort(b.weights.begin(), b.weights.end());
    return b;
}

}  // namespace

TEST(OutputSet, SingletonAtOriginGivesIdentityOnly) {
    GrassmannianContext c = make_context('C', 3, 3);
    OutputSet op = output_set(c, single({P("0,0,0")}));
    ASSERT_EQ(op.pairs.size(), 1u);
    EXPECT_TRUE(op.pairs.begin()->first.is_zero());
    EXPECT_TRUE(op.pairs.begin()->second.is_identity());
}

TEST(OutputSet, ContainsIdentityPairForEveryWeight) {
    GrassmannianContext c = make_context('C', 3, 2);
    for (const auto& b : nonempty_small(c))
        for (const auto& w : b.weights) {
            OutputSet op = output_set_pair(c, w, w);
            EXPECT_TRUE(op.pairs.count({Weight(c.N), WeylElement::identity(c.N)})) << w;
        }
}

// v = s3 s4 in C4, k=3 with v rho - rho = (0,0,-3,1), a vertex of the difference hull.
TEST(OutputSet, DegreeTwoElementInSymplecticThreeEight) {
    GrassmannianContext c = make_context('C', 4, 3);
    OutputSet op = output_set_pair(c, P("4,1,1,0"), P("1,1,1,1"));
    bool found = false;
    for (const auto& [kappa, v] : op.pairs)
        if (kappa.is_zero() && length(c.G, v) == 2 && v.act(c.G.rho()) - c.G.rho() == P("0,0,-3,1")) found = true;
    EXPECT_TRUE(found);
}

TEST(Criterion, PassesOnCriterionSpaces) {
    for (auto [s, n, k] : std::vector<std::tuple<char, int, int>>{{'C', 3, 3}, {'B', 3, 3}, {'C', 3, 2}, {'B', 3, 2}}) {
        GrassmannianContext c = make_context(s, n, k);
        for (const auto& b : nonempty_small(c)) {
            EXPECT_TRUE(check_invariance(c, b).passed()) << c.name() << " j=" << b.j;
            EXPECT_TRUE(check_compatibility(c, b).passed()) << c.name() << " j=" << b.j;
            EXPECT_TRUE(check_block_exceptional(c, b).passed()) << c.name() << " j=" << b.j;
        }
    }
}

// Soundness of the criterion: invariance and compatibility imply exceptionality.
TEST(Criterion, ImplicationOverAllSmallContexts) {
    for (char s : {'B', 'C', 'D'})
        for (int n = 1; n <= 4; ++n)
            for (int k = 1; k <= n; ++k) {
                if (s == 'D' && (n < 3 || k > n - 2)) continue;
                GrassmannianContext c = make_context(s, n, k);
                for (const auto& b : nonempty_small(c)) {
                    bool premise = check_invariance(c, b).passed() && check_compatibility(c, b).passed();
                    if (!premise) continue;
                    EXPECT_TRUE(check_block_exceptional(c, b).passed()) << c.name() << " j=" << b.j;
                }
            }
}

// A block padded with a far-away weight must trip the invariance test.
TEST(Criterion, CorruptedBlockFailsWithWitness) {
    GrassmannianContext c = make_context('C', 3, 3);
    Block b = small_block(c, 1);
    b.weights.push_back(P("7,1,1"));
    std::sort(b.weights.begin(), b.weights.end());
    VerificationReport r = check_invariance(c, b);
    EXPECT_FALSE(r.passed());
    bool has_witness = false;
    for (const auto& ch : r.checks)
        if (!ch.pass) has_witness = has_witness || ch.witness.has_value();
    EXPECT_TRUE(has_witness);
}

TEST(Semiorthogonality, LagrangianThreeSix) {
    GrassmannianContext c = make_context('C', 3, 3);
    VerificationReport r = check_semiorthogonality(c, nonempty_small(c));
    ASSERT_EQ(r.checks.size(), 1u);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks[0].units, 22u);  // 3*1 + 3*(1+3) + 1*(1+3+3)
}

TEST(Semiorthogonality, SingleBlockIsVacuous) {
    GrassmannianContext c = make_context('C', 3, 3);
    VerificationReport r = check_semiorthogonality(c, {small_block(c, 1)});
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks[0].units, 0u);
}

TEST(Semiorthogonality, RejectsUnsortedBlocks) {
    GrassmannianContext c = make_context('C', 3, 3);
    auto bs = nonempty_small(c);
    std::swap(bs[0], bs[1]);
    EXPECT_THROW(check_semiorthogonality(c, bs), std::invalid_argument);
}

// Beilinson: Ext(O(s), O(t)) = 0 for t < s < t + 2n.
TEST(Semiorthogonality, ProjectiveSpaceBeilinson) {
    for (int n = 2; n <= 3; ++n) {
        GrassmannianContext c = make_context('C', n, 1);
        for (int t = -2; t <= 4; ++t)
            for (int s = t + 1; s < t + 2 * n; ++s)
                EXPECT_TRUE(ext_groups(c, Rational(s) * c.xi, Rational(t) * c.xi).empty()) << s << "," << t;
    }
}

// Reported witnesses must survive a from-scratch recomputation.
TEST(Semiorthogonality, WitnessRecheck) {
    GrassmannianContext c = make_context('C', 3, 3);
    auto bs = nonempty_small(c);
    std::reverse(bs.begin(), bs.end());
    for (std::size_t i = 0; i < bs.size(); ++i) bs[i].j = Rational(static_cast<std::int64_t>(i));
    VerificationReport r = check_semiorthogonality(c, bs);
    ASSERT_FALSE(r.passed());
    const Witness& w = *r.checks[0].witness;
    ASSERT_EQ(w.weights.size(), 2u);
    const Weight& lam = w.weights[0];
    const Weight& lam2 = w.weights[1];
    bool found = false;
    for (const auto& [nu, m] : levi_tensor_decompose(c, lam2, c.dual_l_weight(lam))) {
        const Weight x = nu + c.G.rho();
        if (c.G.is_regular(x) && c.G.negative_pairings(x) == w.degree) found = true;
    }
    EXPECT_TRUE(found);
}

TEST(Counts, ReportNamesTotals) {
    VerificationReport r = check_counts(make_context('C', 3, 2));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks[0].name, "total=12,expected=12");
    EXPECT_TRUE(check_counts(make_context('B', 3, 3)).passed());
    EXPECT_THROW(check_counts(make_context('A', 3, 2)), std::invalid_argument);
}

TEST(DualClasses, SingletonIsIdentity) {
    GrassmannianContext c = make_context('C', 3, 3);
    DualClasses d = dual_classes(c, small_block(c, 0));
    EXPECT_EQ(d.coeffs, (std::vector<std::vector<Rational>>{{1}}));
    EXPECT_TRUE(d.integral);
    EXPECT_TRUE(d.unitriangular);
}

TEST(DualClasses, LagrangianFirstBlock) {
    GrassmannianContext c = make_context('C', 3, 3);
    DualClasses d = dual_classes(c, small_block(c, 1));
    EXPECT_TRUE(d.integral);
    EXPECT_TRUE(d.unitriangular);
    using R = std::vector<Rational>;
    EXPECT_EQ(d.coeffs, (std::vector<R>{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}));
    EXPECT_EQ(d.gram, (std::vector<R>{{1, 6, 22}, {0, 1, 6}, {0, 0, 1}}));
}

TEST(DualClasses, IndependentOfTieBreak) {
    for (auto [s, n, k] : std::vector<std::tuple<char, int, int>>{{'C', 3, 2}, {'B', 3, 2}, {'C', 4, 2}}) {
        GrassmannianContext c = make_context(s, n, k);
        for (const auto& b : nonempty_small(c)) {
            DualClasses x = dual_classes(c, b, TieBreak::descending_lex);
            DualClasses y = dual_classes(c, b, TieBreak::ascending_lex);
            EXPECT_TRUE(x.integral && y.integral);
            std::map<Weight, std::map<Weight, Rational>> rx, ry;
            for (std::size_t i = 0; i < x.order.size(); ++i)
                for (std::size_t j = 0; j < x.order.size(); ++j) {
                    rx[x.order[i]][x.order[j]] = x.coeffs[i][j];
                    ry[y.order[i]][y.order[j]] = y.coeffs[i][j];
                }
            EXPECT_EQ(rx, ry) << c.name() << " j=" << b.j;
        }
    }
}

TEST(PathClosure, LagrangianBlocksPass) {
    for (int n = 2; n <= 3; ++n) {
        GrassmannianContext c = make_context('C', n, n);
        for (const auto& b : nonempty_small(c)) EXPECT_TRUE(check_path_closure(c, b).passed()) << c.name() << " j=" << b.j;
    }
}

TEST(PathClosure, SymplecticThreeEightDocumentedPath) {
    GrassmannianContext c = make_context('C', 4, 3);
    PathClosure pc = find_path_violations(c, small_block(c, 1));
    ASSERT_FALSE(pc.violations.empty());
    EXPECT_EQ(pc.violations.front(), (std::vector<Weight>{P("3,1,1,1"), P("2,1,1,2"), P("1,1,1,1")}));
    VerificationReport r = check_path_closure(c, small_block(c, 1));
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.checks[0].failures, pc.violations.size());
}

TEST(PathClosure, SingletonPasses) {
    GrassmannianContext c = make_context('C', 3, 3);
    EXPECT_TRUE(check_path_closure(c, small_block(c, 0)).passed());
}

TEST(Sigma, EqualPartitionsPass) {
    EXPECT_TRUE(check_sigma_identity(3, 1, {1}, {1, 1}, {1, 1}, 2).passed());
    EXPECT_TRUE(check_sigma_identity(4, 2, {2, 1}, {2}, {2}, 1).passed());
}

TEST(Sigma, OneBoxRemovedWithVectorRep) {
    EXPECT_TRUE(check_sigma_identity(3, 1, {2}, {1}, {1, 1}, 1).passed());
    EXPECT_TRUE(check_sigma_identity(4, 2, {1}, {1}, {2}, 1).passed());
}

TEST(Sigma, RandomGL3Instances) {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> x(0, 2);
    auto part = [&](std::size_t rows) {
        Partition p(rows);
        for (auto& v : p) v = x(rng);
        std::sort(p.rbegin(), p.rend());
        return trim(p);
    };
    for (int t = 0; t < 12; ++t) {
        std::size_t a = 1 + t % 2;
        int N = 1 + t % 3;
        Partition kappa = part(a), sigma = part(3 - a), tau = part(3 - a);
        EXPECT_TRUE(check_sigma_identity(3, a, kappa, sigma, tau, N).passed())
            << partition_str(kappa) << partition_str(sigma) << partition_str(tau) << " N=" << N;
    }
}

TEST(Sigma, TensorPowerOracle) {
    // V^{(x)3} for GL_3: S^3 + 2 S^{21} + Lambda^3
    auto t = tensor_power(3, 3);
    EXPECT_EQ(t, (std::map<Partition, long long>{{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}}));
    EXPECT_THROW(check_sigma_identity(3, 1, {1, 1}, {}, {}, 1), std::invalid_argument);
}

TEST(Pipeline, DeterministicAcrossThreadCounts) {
    GrassmannianContext c = make_context('C', 3, 2);
    auto run = [&](std::size_t threads) {
        worker_count() = threads;
        std::string s;
        for (const auto& r : verify_all(c))
            for (const auto& ch : r.checks) s += r.subject + ch.name + (ch.pass ? "1" : "0") + std::to_string(ch.failures) + ";";
        return s;
    };
    std::string one = run(1), four = run(4);
    worker_count() = 1;
    EXPECT_EQ(one, four);
}
