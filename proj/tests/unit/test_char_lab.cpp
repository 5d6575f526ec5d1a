#include <doctest.h>

#include "gk/char_lab.hpp"
#include "gk/errors.hpp"

using namespace gk;
using namespace gk::chars;
using roots::DynkinDiagram;
using roots::GroupDatum;
using roots::RelativeRootSystem;

namespace {

RelativeRootSystem make(const char* type, int order, int res = 1)
{
    std::vector<int> perm = order > 1 ? roots::standard_automorphism(type, order) : std::vector<int>{};
    return RelativeRootSystem(GroupDatum(DynkinDiagram::from_type(type), perm, order, res));
}

int root_index(const RelativeRootSystem& s, const IntVec& coords)
{
    return *s.find(coords);
}

}  // namespace

TEST_CASE("pairings on the principal ray")
{
    const auto a2 = make("A2", 1);
    const auto ray = LambdaRay::principal(2);
    CHECK(pair(a2, ray, root_index(a2, {1, 0})) == AffineForm{1, 0});
    CHECK(pair(a2, ray, root_index(a2, {1, 1})) == AffineForm{2, 0});

    // SU(2,1): alpha restricts from alpha_1, whose restriction has squared length 1/2.
    const auto su21 = make("A2", 2);
    CHECK(pair(su21, LambdaRay::principal(1), 0) == AffineForm{4, 0});
    CHECK(pairing_scale(su21, 0) == 4);
    CHECK(pairing_scale(a2, 0) == 1);
}

TEST_CASE("pairing scale tracks d_alpha")
{
    for (const auto& [type, order] : {std::pair{"A4", 2}, {"A5", 2}, {"D4", 3}, {"E6", 2}, {"D5", 2}})
        for (int res = 1; res <= 3; ++res) {
            const auto s = make(type, order, res);
            for (const auto& r : s.positive_roots()) {
                const int expected = r.rank_one_type == roots::RankOneType::sl2 ? r.d_alpha : 4 * r.d_alpha;
                CHECK(pairing_scale(s, r.index) == expected);
            }
        }
}

TEST_CASE("composition with coroots")
{
    const auto a2 = make("A2", 1);
    const UnramifiedCharacter chi({{Rational(1, 2), 0}, {0, Rational(1, 3)}});
    const auto d = compose_with_coroot(a2, chi, root_index(a2, {1, 1}));
    CHECK(d.field == FieldDescriptor{1, PlaceKind::global});
    CHECK(d.exponent == ComplexRational{Rational(1, 2), Rational(1, 3)});
    CHECK(d.twist == Twist::none);

    const auto su21 = make("A2", 2);
    const auto e = compose_with_coroot(su21, UnramifiedCharacter({{0, Rational(1, 5)}}), 0);
    CHECK(e.field.degree == 2);
    CHECK(e.field.label() == "F2");
    CHECK(e.exponent == ComplexRational{0, Rational(1, 5)});

    CHECK(coroot_field(make("A4", 2, 3), root_index(make("A4", 2, 3), {1, 0})).degree == 6);
    CHECK_THROWS_AS(compose_with_coroot(a2, UnramifiedCharacter::trivial(3), 0), InputError);
}

TEST_CASE("function-field exponents are periodic")
{
    const CharacterMode ff{true, 7};
    CHECK(canonical_exponent({0, Rational(5, 4)}, ff, 1) == ComplexRational{0, Rational(1, 4)});
    CHECK(canonical_exponent({0, Rational(-1, 4)}, ff, 2) == ComplexRational{0, Rational(1, 4)});
    CHECK(canonical_exponent({1, Rational(7, 3)}, {}, 1) == ComplexRational{1, Rational(7, 3)});
    CHECK(UnramifiedCharacter({{0, 1}}, ff).is_trivial());
    CHECK_THROWS_AS(UnramifiedCharacter({{0, 0}}, CharacterMode{true, 1}), InputError);
}

TEST_CASE("restriction to the index-two subfield")
{
    const HeckeCharacterDescriptor eta{{2, PlaceKind::global}, {Rational(1, 3), Rational(1, 4)}, Twist::eta};
    const auto r = restrict_descriptor(eta);
    CHECK(r.field.degree == 1);
    CHECK(r.exponent == ComplexRational{Rational(2, 3), Rational(1, 2)});
    CHECK(r.twist == Twist::eta);
    const HeckeCharacterDescriptor half{{2, PlaceKind::global}, {0, Rational(1, 2)}, Twist::none};
    CHECK(restrict_descriptor(half, {true, 3}).exponent == ComplexRational{});
    CHECK(restrict_descriptor(half).exponent == ComplexRational{0, 1});
    CHECK_THROWS_AS(restrict_descriptor({{3, PlaceKind::global}, {}, Twist::none}), InputError);
    CHECK_THROWS_AS(restrict_descriptor({{2, PlaceKind::complex}, {}, Twist::none}), InputError);
}

TEST_CASE("labels")
{
    CHECK(FieldDescriptor{1, PlaceKind::global}.label() == "F");
    CHECK(FieldDescriptor{3, PlaceKind::global}.label() == "F3");
    CHECK(FieldDescriptor{1, PlaceKind::real}.label() == "R");
    CHECK(FieldDescriptor{2, PlaceKind::complex}.label() == "C");
    CHECK(to_string(HeckeCharacterDescriptor{}) == "1");
}

TEST_CASE("simple reflection of split coordinates")
{
    // <s_i mu, alpha_p^vee> = c_p - c_i <alpha_i, alpha_p^vee>.
    const auto a2 = make("A2", 1);
    CHECK(transport(a2, roots::WeylElement{{0}}, RationalVec{1, 1}) == RationalVec{-1, 2});
    const auto b2 = make("B2", 1);
    CHECK(transport(b2, roots::WeylElement{{1}}, RationalVec{1, 1}) == RationalVec{2, -1});
}

TEST_CASE("transport preserves pairings: <w lambda, w alpha^vee> = <lambda, alpha^vee>")
{
    const RationalVec lambda3{Rational(1, 2), Rational(-3), Rational(2, 7)};
    for (const auto& [type, order] : {std::pair{"A4", 2}, {"D4", 3}, {"A5", 2}, {"B3", 1}, {"G2", 1}, {"D5", 2}}) {
        const auto s = make(type, order);
        RationalVec lambda(lambda3.begin(), lambda3.begin() + std::min<int>(3, s.rank()));
        while (static_cast<int>(lambda.size()) < s.rank()) lambda.push_back(Rational(5, 3));
        for (const auto& w : roots::weyl_enumerate(s)) {
            const auto moved = transport(s, w, lambda);
            for (const auto& r : s.positive_roots()) {
                const auto image = roots::weyl_apply(s, w, r.coords);
                const int j = *s.find(image);
                const Rational sign = roots::is_positive(image) ? 1 : -1;
                CHECK(sign * pair(s, moved, j) == pair(s, lambda, r.index));
            }
        }
    }
}
