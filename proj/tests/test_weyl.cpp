#include <gtest/gtest.h>

#include <set>

#include "isogr/levi.hpp"
#include "isogr/weyl.hpp"

using namespace isogr;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::size_t closed_order(Series s, std::size_t n) {
    switch (s) {
        case Series::A: return factorial(n + 1);
        case Series::D: return (std::size_t(1) << (n - 1)) * factorial(n);
        default: return (std::size_t(1) << n) * factorial(n);
    }
}

}  // namespace

TEST(Weyl, GroupOrderMatchesEnumerationAndClosedForm) {
    for (Series s : {Series::A, Series::B, Series::C, Series::D})
        for (int n = (s == Series::D ? 2 : 1); n <= 5; ++n) {
            RootDatum d = RootSystem(s, n).datum();
            std::set<WeylElement> seen;
            for_each_element(d, [&](const WeylElement& w) { seen.insert(w); });
            EXPECT_EQ(seen.size(), group_order(d));
            EXPECT_EQ(group_order(d), closed_order(s, n)) << series_char(s) << n;
        }
}

TEST(Weyl, LongestElementLength) {
    for (Series s : {Series::A, Series::B, Series::C, Series::D})
        for (int n = 2; n <= 5; ++n) {
            RootDatum d = RootSystem(s, n).datum();
            WeylElement w0 = longest_element(d);
            EXPECT_EQ(length(d, w0), static_cast<int>(d.num_positive_roots()));
            EXPECT_EQ(w0 * w0, WeylElement::identity(d.ambient()));
        }
}

TEST(Weyl, LengthIsInverseInvariantAndSimpleReflectionsHaveLengthOne) {
    RootDatum d = RootSystem(Series::B, 3).datum();
    for_each_element(d, [&](const WeylElement& w) { EXPECT_EQ(length(d, w), length(d, w.inverse())); });
    for (const auto& a : d.simple_roots()) EXPECT_EQ(length(d, WeylElement::reflection(a)), 1);
}

TEST(Weyl, OrbitSizes) {
    RootDatum c3 = RootSystem(Series::C, 3).datum();
    EXPECT_EQ(orbit(c3, Weight::from_ints({1, 0, 0})).size(), 6u);
    EXPECT_EQ(orbit(c3, Weight::from_ints({1, 1, 0})).size(), 12u);
    EXPECT_EQ(orbit(c3, Weight::from_ints({3, 2, 1})).size(), 48u);
    RootDatum d4 = RootSystem(Series::D, 4).datum();
    EXPECT_EQ(orbit(d4, Weight::parse("1/2,1/2,1/2,1/2")).size(), 8u);
}

// |SR| = |W_G| / |W_L|, each element sends rho_G into the L-dominant chamber,
// and the list is sorted by length.
TEST(Weyl, SpecialRepresentatives) {
    for (auto [s, n, k] : std::vector<std::tuple<char, int, int>>{{'C', 3, 2}, {'C', 3, 3}, {'B', 3, 3}, {'B', 4, 2}, {'D', 4, 2}, {'A', 3, 2}}) {
        GrassmannianContext c = make_context(s, n, k);
        const auto& sr = c.special_reps();
        EXPECT_EQ(sr.size(), group_order(c.G) / group_order(c.L)) << c.name();
        int prev = -1;
        for (const auto& w : sr) {
            EXPECT_TRUE(c.L.is_dominant(w.act(c.G.rho())));
            EXPECT_LE(prev, length(c.G, w));
            prev = length(c.G, w);
        }
        EXPECT_TRUE(sr.front().is_identity());
        EXPECT_EQ(length(c.G, sr.back()), c.dimX);
    }
}

TEST(WeylElement, ActionComposesAndInverts) {
    WeylElement a = WeylElement::from_signed_images({2, -1, 3});
    WeylElement b = WeylElement::from_signed_images({-3, 1, 2});
    Weight x = Weight::from_ints({5, 7, 11});
    EXPECT_EQ((a * b).act(x), a.act(b.act(x)));
    EXPECT_EQ(a.inverse().act(a.act(x)), x);
    EXPECT_THROW(WeylElement::from_signed_images({1, 1, 2}), std::invalid_argument);
}
