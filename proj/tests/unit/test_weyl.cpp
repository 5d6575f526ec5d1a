#include <doctest.h>

#include <set>

#include "gk/errors.hpp"
#include "gk/weyl.hpp"

using namespace gk;
using namespace gk::roots;

namespace {

RelativeRootSystem split(const char* type)
{
    return RelativeRootSystem(GroupDatum(DynkinDiagram::from_type(type), {}, 1));
}

}  // namespace

TEST_CASE("normal forms")
{
    const auto a2 = split("A2");
    CHECK(weyl_normalize(a2, {0, 0}).word.empty());
    CHECK(weyl_normalize(a2, {1, 0, 1}).word == std::vector<int>{0, 1, 0});
    CHECK(weyl_normalize(a2, {1, 1}).word.empty());
    const auto g2 = split("G2");
    CHECK(weyl_normalize(g2, {0, 0}).word.empty());
    CHECK(weyl_normalize(g2, {1, 1}).word.empty());
    CHECK_THROWS_AS(weyl_normalize(g2, {2}), InputError);
}

TEST_CASE("longest elements invert every positive root")
{
    for (const char* type : {"A1", "A3", "B3", "C3", "D4", "G2", "F4"}) {
        const auto s = split(type);
        const auto w0 = weyl_longest(s);
        CAPTURE(type);
        CHECK(w0.length() == static_cast<int>(s.positive_roots().size()));
        CHECK(inversion_set(s, w0).size() == s.positive_roots().size());
        CHECK(weyl_inverse(s, w0) == w0);
    }
    CHECK(weyl_longest(split("G2")).length() == 6);
}

TEST_CASE("Weyl group orders")
{
    // |W| = 6, 8, 12, 24, 48, 1152.
    CHECK(weyl_enumerate(split("A2")).size() == 6);
    CHECK(weyl_enumerate(split("B2")).size() == 8);
    CHECK(weyl_enumerate(split("G2")).size() == 12);
    CHECK(weyl_enumerate(split("A3")).size() == 24);
    CHECK(weyl_enumerate(split("B3")).size() == 48);
    CHECK(weyl_enumerate(split("F4")).size() == 1152);
    CHECK_THROWS_AS(weyl_enumerate(split("A5")), InputError);
}

TEST_CASE("length equals inversion count on every element")
{
    const auto s = RelativeRootSystem(GroupDatum(DynkinDiagram::from_type("A4"), standard_automorphism("A4", 2), 2));
    for (const auto& w : weyl_enumerate(s)) {
        CHECK(weyl_length(s, w.word) == w.length());
        CHECK(weyl_normalize(s, w.word) == w);
    }
}

TEST_CASE("inversion sets of simple reflections")
{
    const auto b2 = split("B2");
    for (int i = 0; i < 2; ++i) {
        const auto inv = inversion_set(b2, WeylElement{{i}});
        REQUIRE(inv.size() == 1);
        CHECK(b2.positive_roots()[inv[0]].coords == (i == 0 ? IntVec{1, 0} : IntVec{0, 1}));
    }
}

TEST_CASE("action and multiplication agree")
{
    const auto g2 = split("G2");
    const WeylElement a = weyl_normalize(g2, {0, 1});
    const WeylElement b = weyl_normalize(g2, {1, 0, 1});
    const auto ab = weyl_multiply(g2, a, b);
    for (const auto& r : g2.positive_roots())
        CHECK(weyl_apply(g2, ab, r.coords) == weyl_apply(g2, a, weyl_apply(g2, b, r.coords)));
    CHECK(is_positive({0, 2}));
    CHECK_FALSE(is_positive({1, -1}));
    CHECK_FALSE(is_positive({0, 0}));
}
