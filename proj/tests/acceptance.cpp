// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "isogr/verify.hpp"

using namespace isogr;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failures; keeps the first few messages.
struct Tally {
    std::size_t checked = 0, failed = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        ++failed;
        if (notes.size() < 4) notes.push_back(what);
    }
    Outcome outcome(const std::string& summary) const {
        std::string d = summary + "; " + std::to_string(checked - failed) + "/" + std::to_string(checked) + " ok";
        for (const auto& n : notes) d += "\n      " + n;
        return {failed == 0, d};
    }
};

std::vector<GrassmannianContext> contexts(const std::string& series, int max_n) {
    std::vector<GrassmannianContext> out;
    for (char s : series)
        for (int n = 1; n <= max_n; ++n)
            for (int k = 1; k <= n; ++k) {
                if (s == 'D' && (n < 3 || k > n - 2)) continue;
                out.push_back(make_context(s, n, k));
            }
    return out;
}

std::vector<Block> nonempty(std::vector<Block> bs) {
    std::erase_if(bs, [](const Block& b) { return b.empty(); });
    return bs;
}

std::string first_witness(const VerificationReport& r) {
    for (const auto& c : r.checks)
        if (!c.pass && c.witness) {
            std::ostringstream os;
            os << r.subject << " [" << c.name << "]";
            for (const auto& w : c.witness->weights) os << " " << w;
            if (c.witness->degree >= 0) os << " deg " << c.witness->degree;
            if (!c.witness->note.empty()) os << " " << c.witness->note;
            return os.str();
        }
    return r.subject;
}

Weight random_l_dominant(const GrassmannianContext& c, std::mt19937& rng, int span) {
    std::uniform_int_distribution<int> x(-span, span), coin(0, 1);
    for (;;) {
        Weight w(c.N);
        const bool half = (c.series() == Series::B || c.series() == Series::D) && coin(rng);
        for (auto& v : w.coords()) v = Rational(x(rng)) + (half ? Rational(1, 2) : Rational(0));
        w = c.L.dominant(w);
        if (c.in_weight_lattice(w)) return w;
    }
}

std::map<int, long long> graded(const GrassmannianContext& c, const Weight& a, const Weight& b) {
    return graded_dimension(c, ext_groups(c, a, b));
}

// ---------------------------------------------------------------------------

Outcome counting() {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    for (const auto& c : contexts("BCD", 5)) {
        VerificationReport r = check_counts(c);
        t.expect(r.passed(), c.name() + " " + r.checks[0].name);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.expect(secs < 60, "runtime " + std::to_string(secs) + "s exceeds 60s");
    return t.outcome("all admissible B/C/D with n<=5");
}

Outcome closed_form() {
    Tally t;
    for (const auto& c : contexts("BCD", 4)) {
        BlockBuilder bb(c);
        for (const auto& j : c.J) {
            Block s = bb.small(j), e = explicit_block(c, j);
            t.expect(s.weights == e.weights, c.name() + " j=" + j.str() + ": " + std::to_string(s.size()) + " vs " +
                                                 std::to_string(e.size()));
        }
    }
    return t.outcome("small == explicit, n<=4");
}

const std::vector<std::tuple<char, int, int, std::string>> kCriterionSpaces{
    {'C', 3, 3, "LG(3,6)"}, {'B', 3, 3, "OGr(3,7)"}, {'C', 3, 2, "SGr(2,6)"}, {'B', 3, 2, "OGr(2,7)"}};

Outcome semiorthogonality() {
    Tally t;
    std::string sizes;
    for (const auto& [s, n, k, label] : kCriterionSpaces) {
        auto start = std::chrono::steady_clock::now();
        GrassmannianContext c = make_context(s, n, k);
        auto bs = nonempty(small_blocks(c));
        std::size_t objects = 0;
        for (const auto& b : bs) objects += b.size();
        VerificationReport r = check_semiorthogonality(c, bs);
        t.expect(r.passed(), first_witness(r));
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        t.expect(secs < 300, label + " runtime " + std::to_string(secs) + "s");
        sizes += (sizes.empty() ? "" : ", ") + label + ": " + std::to_string(objects) + " objects, " +
                 std::to_string(r.checks[0].units) + " backward pairs";
    }
    return t.outcome(sizes);
}

Outcome criterion() {
    Tally t;
    for (const auto& [s, n, k, label] : kCriterionSpaces) {
        GrassmannianContext c = make_context(s, n, k);
        for (const auto& b : nonempty(small_blocks(c)))
            for (auto check : {check_invariance, check_compatibility, check_block_exceptional}) {
                VerificationReport r = check(c, b);
                t.expect(r.passed(), first_witness(r));
            }
    }
    return t.outcome("invariance, compatibility and exceptional block for the four spaces");
}

Outcome beilinson() {
    Tally t;
    for (int n = 2; n <= 3; ++n) {
        GrassmannianContext c = make_context('C', n, 1);
        auto bs = small_blocks(c);
        const int m = 2 * n - 1;
        t.expect(bs.size() == std::size_t(2 * n), c.name() + ": " + std::to_string(bs.size()) + " blocks");
        for (std::size_t i = 0; i < bs.size(); ++i)
            t.expect(bs[i].size() == 1 && bs[i].weights[0] == Rational(static_cast<std::int64_t>(i)) * c.xi,
                     c.name() + " block " + std::to_string(i) + " is not {t xi}");
        for (int a = 0; a <= m; ++a)
            for (int b = 0; b <= m; ++b) {
                const Weight wa = Rational(a) * c.xi, wb = Rational(b) * c.xi;
                std::map<int, long long> expect;
                if (b >= a) expect[0] = binomial(m + b - a, b - a);
                t.expect(graded(c, wa, wb) == expect, c.name() + " Ext(O(" + std::to_string(a) + "),O(" + std::to_string(b) + "))");
                if (a == 0) t.expect(euler_pairing(c, wa, wb) == binomial(m + b, b), c.name() + " chi(O,O(" + std::to_string(b) + "))");
            }
    }
    return t.outcome("C_n, k=1, n=2,3 give O(0..2n-1) on P^{2n-1}");
}

Outcome very_special() {
    Tally t;
    for (const auto& c : contexts("BCD", 5))
        for (int a = 1; a <= c.b; ++a) {
            auto vs = very_special_elements(c, a).very_special();
            t.expect(vs.empty(), c.name() + " a=" + std::to_string(a) + ": " + std::to_string(vs.size()) + " very special");
        }
    for (const auto& c : contexts("A", 4))
        for (int a = 1; a <= c.b; ++a) {
            auto rep = very_special_elements(c, a);
            std::set<WeylElement> got, want;
            for (const auto& v : rep.very_special()) got.insert(v);
            for (const auto& [v, phi] : rep.entries)
                if (v.perm()[c.N - 1] == c.k - 1) want.insert(v);
            std::string msg = c.name() + " a=" + std::to_string(a) + ":";
            for (const auto& [v, phi] : rep.entries)
                if (got.count(v) != want.count(v))
                    msg += " " + v.str() + " phi=" + phi.str() + (want.count(v) ? " maps n+1 to k" : " does not map n+1 to k");
            t.expect(got == want, msg);
        }
    return t.outcome("B/C/D none for n<=5; series A equals {v : v(n+1)=k} for n<=4");
}

Outcome index_chain() {
    Tally t;
    for (const auto& c : contexts("ABCD", 6))
        for (std::size_t i = 1; i < c.r_seq.size(); ++i)
            t.expect(c.r_seq[i] < c.r_seq[i - 1], c.name() + " r_" + std::to_string(i) + " = " + c.r_seq[i].str());
    for (int n = 1; n <= 6; ++n) {
        GrassmannianContext c = make_context('C', n, n);
        t.expect(c.r == n + 1, c.name() + " r = " + c.r.str());
        // H^top(K) is the trivial representation
        GradedRepSum h = cohomology(c, -Rational(n + 1) * c.xi);
        t.expect(h.size() == 1 && h.terms()[0].degree == c.dimX && h.terms()[0].weight.is_zero(),
                 c.name() + " H(U^{-(n+1)xi}) = " + h.str());
    }
    return t.outcome("r_a decreasing for n<=6; r=n+1 and K = U^{-(n+1)xi} for C_n, k=n");
}

Outcome bbw_sanity() {
    Tally t;
    std::mt19937 rng(20240611);
    for (const auto& c : contexts("ABCD", 4))
        for (int i = 0; i < 100; ++i) {
            const Weight l = random_l_dominant(c, rng, 2), m = random_l_dominant(c, rng, 2);
            if (c.G.is_dominant(l)) {
                GradedRepSum h = cohomology(c, l);
                t.expect(h.size() == 1 && h.terms()[0].degree == 0 &&
                             g_dimension(c, h.terms()[0].weight) == c.G.weyl_dimension(l),
                         c.name() + " H(" + l.str() + ") = " + h.str());
            }
            const Weight ld = c.G.dominant(l);
            if (c.is_l_dominant(ld)) {
                GradedRepSum h = cohomology(c, ld);
                t.expect(h.size() == 1 && h.terms()[0].degree == 0 && g_dimension(c, h.terms()[0].weight) == c.G.weyl_dimension(ld),
                         c.name() + " H(" + ld.str() + ") = " + h.str());
            }
            const long long sign = c.dimX % 2 ? -1 : 1;
            t.expect(euler_pairing(c, l, m) == sign * euler_pairing(c, m, l - c.r * c.xi),
                     c.name() + " Serre duality at " + l.str() + ", " + m.str());
        }
    return t.outcome("100 random L-dominant weights per context, n<=4");
}

Outcome sigma_identity() {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::map<Partition, long long>> powers;
        for (int N = 0; N <= 3; ++N) powers.push_back(tensor_power(n, N));
        for (std::size_t a = 0; a <= n; ++a) {
            std::vector<Partition> ks, ss;
            detail::partitions_in_box(a, 2, [&](const Partition& p) { ks.push_back(p); });
            detail::partitions_in_box(n - a, 2, [&](const Partition& p) { ss.push_back(p); });
            for (const auto& kappa : ks)
                for (const auto& sigma : ss)
                    for (const auto& tau : ss)
                        for (int N = 0; N <= 3; ++N) {
                            VerificationReport r =
                                check_sigma_identity(n, a, kappa, sigma, tau, powers[N], "V^" + std::to_string(N));
                            t.expect(r.passed(), first_witness(r));
                        }
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.expect(secs < 120, "runtime " + std::to_string(secs) + "s exceeds 120s");
    return t.outcome("entries<=2, n<=4, N<=3, three routes");
}

Outcome path_closure() {
    Tally t;
    for (int n = 1; n <= 4; ++n)
        for (char s : {'C', 'B'}) {
            GrassmannianContext c = make_context(s, n, n);
            for (const auto& b : nonempty(small_blocks(c))) {
                VerificationReport r = check_path_closure(c, b);
                t.expect(r.passed(), first_witness(r));
            }
        }
    GrassmannianContext c = make_context('C', 4, 3);
    PathClosure pc = find_path_violations(c, small_block(c, 1));
    const std::vector<Weight> documented{Weight::parse("3,1,1,1"), Weight::parse("2,1,1,2"), Weight::parse("1,1,1,1")};
    bool seen = std::find(pc.violations.begin(), pc.violations.end(), documented) != pc.violations.end();
    t.expect(!pc.violations.empty() && seen, "SGr(3,8) B_1: documented path not reported");
    return t.outcome("LG(n,2n), OGr(n,2n+1) closed for n<=4; SGr(3,8) B_1 fails via (3,1,1;1)->(2,1,1;2)->(1,1,1;1)");
}

Outcome type_a() {
    Tally t;
    std::string shapes;
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        GrassmannianContext c = make_context('A', k + l - 1, k);
        for (const auto& word : all_curve_words(k, l)) {
            auto bs = typea_blocks(k, l, curve_from_steps(k, l, word));
            std::size_t total = 0;
            for (const auto& b : bs) total += b.size();
            const std::string tag = "Gr(" + std::to_string(k) + "," + std::to_string(k + l) + ") curve " + word;
            t.expect(total == static_cast<std::size_t>(binomial(k + l, k)), tag + " total " + std::to_string(total));
            VerificationReport r = check_semiorthogonality(c, nonempty(bs));
            t.expect(r.experimental, tag + " not flagged experimental");
            t.expect(r.passed(), "[experimental] " + tag + ": " + first_witness(r));
        }
    }
    return t.outcome("[experimental] Gr(2,4) and Gr(2,5), every curve");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"counting", counting},
        {"closed form", closed_form},
        {"semiorthogonality", semiorthogonality},
        {"exceptionality criterion", criterion},
        {"Beilinson degeneration", beilinson},
        {"very special elements", very_special},
        {"index chain", index_chain},
        {"BBW sanity", bbw_sanity},
        {"sigma identity", sigma_identity},
        {"path closure", path_closure},
        {"type A curves", type_a},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2zu  %-26s %8.3fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                    o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed ? 1 : 0;
}
