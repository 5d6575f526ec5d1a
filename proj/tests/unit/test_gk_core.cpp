#include <doctest.h>

#include <set>

#include "gk/errors.hpp"
#include "gk/gk_core.hpp"

using namespace gk;
using namespace gk::core;
using roots::LengthClass;

namespace {

RelativeRootSystem make(const char* type, int order, int res = 1)
{
    std::vector<int> perm = order > 1 ? roots::standard_automorphism(type, order) : std::vector<int>{};
    return RelativeRootSystem(roots::GroupDatum(roots::DynkinDiagram::from_type(type), perm, order, res));
}

RatioRule observed_rule(const RelativeRootSystem& s)
{
    const auto report = pole_profile(s, UnramifiedCharacter::trivial(s.rank()), LambdaRay::principal(s.rank()),
                                     [&] {
                                         std::vector<int> all;
                                         for (const auto& r : s.positive_roots()) all.push_back(r.index);
                                         return all;
                                     }());
    const auto comps = component_poles(s, report);
    REQUIRE(comps.size() == 1);
    REQUIRE(comps[0].observed());
    return *comps[0].observed();
}

}  // namespace

TEST_CASE("SL3 longest element: one factor per positive root, arguments s, s, 2s")
{
    const auto a2 = make("A2", 1);
    const auto w0 = roots::weyl_longest(a2);
    const auto report = constant_term(a2, UnramifiedCharacter::trivial(2), LambdaRay::principal(2), w0);
    REQUIRE(report.per_root.size() == 3);
    std::multiset<Rational> slopes;
    for (const auto& f : report.per_root) slopes.insert(f.pairing.a);
    CHECK(slopes == std::multiset<Rational>{1, 1, 2});

    const auto f = sl3_longest_factorization(3, 1.0);
    REQUIRE(f.value);
    // (4/3)^2 * 13/12 at q = 3, s = 1.
    CHECK(*f.value == doctest::Approx(52.0 / 27.0).epsilon(1e-12));
    CHECK_FALSE(sl3_longest_factorization(3, -1.0).value);
}

TEST_CASE("constant term of the identity is 1")
{
    const auto b2 = make("B2", 1);
    const auto report = constant_term(b2, UnramifiedCharacter::trivial(2), LambdaRay::principal(2), {});
    CHECK(report.product.is_one());
}

TEST_CASE("variable conventions")
{
    const auto su = make("A2", 2);
    const auto chi = UnramifiedCharacter::trivial(1);
    const auto ray = LambdaRay::principal(1);
    const auto pole_at = [&](VariableConvention c) {
        const auto p = pole_profile(su, chi, ray, {0}, c);
        REQUIRE(p.profile.entries.size() == 1);
        return p.profile.entries[0].location;
    };
    CHECK(pole_at(VariableConvention::global) == 4);
    CHECK(pole_at(VariableConvention::local) == 1);
    CHECK(pole_at(VariableConvention::ray) == 1);  // pairing 4s along the principal ray
    CHECK(parse_variable_convention("local") == VariableConvention::local);
    CHECK_THROWS_AS(parse_variable_convention("affine"), InputError);
}

TEST_CASE("nontrivial characters remove unconditional poles")
{
    const auto a2 = make("A2", 1);
    const UnramifiedCharacter chi({{0, Rational(1, 3)}, {0, 0}});
    const auto p = pole_profile(a2, chi, LambdaRay::principal(2), {0, 1, 2});
    // Only alpha_2 sees the trivial character.
    REQUIRE(p.profile.entries.size() == 1);
    CHECK(a2.root(p.profile.entries[0].root).coords == IntVec{0, 1});
}

TEST_CASE("pole ratios from folding")
{
    // 2A4 -> B2: short SU21 (d = 1, pole 4), long SL2 (d = 2, pole 2).
    const auto b = observed_rule(make("A4", 2));
    CHECK_FALSE(b.all_equal);
    CHECK(b.larger == LengthClass::short_root);
    CHECK(b.ratio == 2);
    CHECK(matches(corollary_ratio_table("B2"), b));

    // 2A5 -> C3: short roots have d = 2, so short/long = 2 as well.
    const auto c = observed_rule(make("A5", 2));
    CHECK(c.larger == LengthClass::short_root);
    CHECK(c.ratio == 2);
    CHECK_FALSE(matches(corollary_ratio_table("C3"), c));

    // 3D4 -> G2: short roots d = 3.
    const auto g = observed_rule(make("D4", 3));
    CHECK(g.larger == LengthClass::short_root);
    CHECK(g.ratio == 3);

    CHECK(observed_rule(make("E6", 1)).all_equal);
    CHECK(observed_rule(make("F4", 1)).all_equal);
    CHECK(matches(corollary_ratio_table("F4"), observed_rule(make("E6", 2))));
}

TEST_CASE("ratio table")
{
    CHECK(corollary_ratio_table("A7").all_equal);
    CHECK(corollary_ratio_table("E8").all_equal);
    CHECK(corollary_ratio_table("C4").larger == LengthClass::long_root);
    CHECK(corollary_ratio_table("G2").ratio == 3);
    CHECK_THROWS_AS(corollary_ratio_table("G3"), InputError);
    CHECK_THROWS_AS(corollary_ratio_table(""), InputError);
}

TEST_CASE("mixed components are flagged")
{
    const auto s = RelativeRootSystem(roots::GroupDatum(roots::DynkinDiagram::from_type("A1xA2"), {}, 1));
    const auto p = pole_profile(s, UnramifiedCharacter::trivial(3), LambdaRay::principal(3), {0, 1});
    CHECK_FALSE(p.warnings.empty());
}

TEST_CASE("multiplicativity over every length-additive pair")
{
    for (const auto& [type, order] : {std::pair{"B2", 1}, {"G2", 1}, {"A4", 2}, {"D4", 3}}) {
        const auto s = make(type, order);
        const UnramifiedCharacter chi(gk::ComplexRationalVec(s.rank(), {Rational(1, 3), Rational(1, 5)}));
        const LambdaRay ray{RationalVec(s.rank(), Rational(1)), RationalVec(s.rank(), Rational(1, 2))};
        const auto all = roots::weyl_enumerate(s);
        int tested = 0;
        for (const auto& a : all)
            for (const auto& b : all) {
                if (roots::weyl_multiply(s, a, b).length() != a.length() + b.length()) continue;
                CHECK(multiplicativity_check(s, chi, ray, a, b));
                ++tested;
            }
        CHECK(tested > 0);
    }
    const auto a2 = make("A2", 1);
    CHECK_THROWS_AS(multiplicativity_check(a2, UnramifiedCharacter::trivial(2), LambdaRay::principal(2),
                                           roots::WeylElement{{0}}, roots::WeylElement{{0}}),
                    InputError);
}
