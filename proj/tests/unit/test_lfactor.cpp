#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gk/errors.hpp"
#include "gk/lfactor.hpp"

using namespace gk;
using namespace gk::lfactor;
using chars::PlaceKind;
using chars::Twist;
using roots::RankOneType;

namespace {

HeckeCharacterDescriptor trivial_over(int degree)
{
    return {{degree, PlaceKind::global}, {}, Twist::none};
}

Atom l_atom(int degree, AffineForm arg, Twist twist = Twist::none)
{
    Atom a;
    a.field = {degree, PlaceKind::global};
    a.arg = arg;
    a.character = {a.field, {}, twist};
    return a;
}

}  // namespace

TEST_CASE("SL2-type factor shape")
{
    const auto p = r_alpha({1, 0}, 1, RankOneType::sl2, trivial_over(1));
    CHECK(p.normalized);
    CHECK(p.terms.size() == 3);
    CHECK(render(p) == "L_F(s) / (L_F(1 + s) ε_F(s))");
    // The pairing is divided by d_alpha.
    const auto q = r_alpha({3, 0}, 3, RankOneType::sl2, trivial_over(3));
    for (const auto& t : q.terms) CHECK(t.atom.arg.a == 1);
    CHECK_THROWS_AS(r_alpha({1, 0}, 2, RankOneType::sl2, trivial_over(1)), InputError);
    CHECK_THROWS_AS(r_alpha({1, 0}, 0, RankOneType::sl2, trivial_over(1)), InputError);
}

TEST_CASE("SU21-type factor: E-part plus twisted F-part")
{
    const auto p = r_alpha({4, 0}, 1, RankOneType::su21, trivial_over(2));
    REQUIRE(p.terms.size() == 6);
    int twisted = 0;
    for (const auto& t : p.terms) {
        if (t.atom.field.degree == 2) {
            CHECK(t.atom.arg.a == 1);
            CHECK(t.atom.character.twist == Twist::none);
        } else {
            CHECK(t.atom.arg.a == 2);
            twisted += t.atom.character.twist == Twist::eta;
        }
    }
    CHECK(twisted == 3);
    // A twisted E-character makes the F-part untwisted.
    const auto q = r_alpha({4, 0}, 1, RankOneType::su21, {{2, PlaceKind::global}, {}, Twist::eta});
    for (const auto& t : q.terms)
        if (t.atom.field.degree == 1) CHECK(t.atom.character.twist == Twist::none);
}

TEST_CASE("real exponents are folded into the argument")
{
    const HeckeCharacterDescriptor chi{{1, PlaceKind::global}, {Rational(1, 2), Rational(1, 7)}, Twist::none};
    const auto p = r_alpha({1, 0}, 1, RankOneType::sl2, chi);
    for (const auto& t : p.terms) {
        CHECK(t.atom.character.exponent.re == 0);
        CHECK(t.atom.character.exponent.im == Rational(1, 7));
        CHECK((t.atom.arg.b == Rational(1, 2) || t.atom.arg.b == Rational(3, 2)));
    }
}

TEST_CASE("normalization cancels and sorts")
{
    MeromorphicProduct p;
    p.terms = {{l_atom(1, {2, 0}), 1}, {l_atom(1, {1, 0}), 1}, {l_atom(1, {2, 0}), -1}};
    const auto n = normalize(p);
    REQUIRE(n.terms.size() == 1);
    CHECK(n.terms[0].atom.arg == AffineForm{1, 0});
    const auto a = r_alpha({1, 0}, 1, RankOneType::sl2, trivial_over(1));
    const auto b = r_alpha({2, 0}, 1, RankOneType::sl2, trivial_over(1));
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(normalize(multiply(a, b)) == multiply(a, b));
}

TEST_CASE("pole ledger")
{
    const auto sl2 = r_alpha({1, 0}, 1, RankOneType::sl2, trivial_over(1));
    const auto prof = poles_positive(sl2);
    REQUIRE(prof.entries.size() == 1);
    CHECK(prof.entries[0].location == 1);
    CHECK(prof.entries[0].order == 1);

    // Pairing variable: the pole sits where pairing / d_alpha = 1.
    const auto d3 = poles_positive(r_alpha({1, 0}, 3, RankOneType::sl2, trivial_over(3)));
    REQUIRE(d3.entries.size() == 1);
    CHECK(d3.entries[0].location == 3);

    // A twist alone gives nothing unconditional, one candidate when asked.
    const HeckeCharacterDescriptor eta{{1, PlaceKind::global}, {}, Twist::eta};
    const auto twisted = r_alpha({1, 0}, 1, RankOneType::sl2, eta);
    CHECK(poles_positive(twisted).entries.empty());
    const auto cand = poles_positive(twisted, true);
    REQUIRE(cand.entries.size() == 1);
    CHECK(cand.entries[0].conditional);

    // SU21, trivial: only the E-part has a pole, at pairing 4 d_alpha.
    for (int d = 1; d <= 4; ++d) {
        const auto su = poles_positive(r_alpha({1, 0}, d, RankOneType::su21, trivial_over(2 * d)));
        REQUIRE(su.entries.size() == 1);
        CHECK(su.entries[0].location == 4 * d);
    }

    MeromorphicProduct raw;
    raw.terms = sl2.terms;
    CHECK_THROWS_AS(poles_positive(raw), InputError);
}

TEST_CASE("a shifted argument moves the pole")
{
    const HeckeCharacterDescriptor shifted{{1, PlaceKind::global}, {Rational(-1, 2), 0}, Twist::none};
    const auto prof = poles_positive(r_alpha({1, 0}, 1, RankOneType::sl2, shifted));
    // L(s - 1/2) has poles at s = 1/2 and s = 3/2; L(s + 1/2) cancels the one at 1/2.
    REQUIRE(prof.entries.size() == 1);
    CHECK(prof.entries[0].location == Rational(3, 2));
}

TEST_CASE("local Euler factors at inert and split places")
{
    const EulerPlace inert{3, Splitting::inert, false};
    CHECK(local_euler_value(l_atom(1, {1, 0}), inert, 1.0).real() == doctest::Approx(1.5));
    CHECK(local_euler_value(l_atom(1, {1, 0}, Twist::eta), inert, 1.0).real() == doctest::Approx(0.75));
    CHECK(local_euler_value(l_atom(2, {1, 0}), inert, 1.0).real() == doctest::Approx(9.0 / 8.0));
    const EulerPlace split{3, Splitting::split, false};
    CHECK(local_euler_value(l_atom(2, {1, 0}), split, 1.0).real() == doctest::Approx(2.25));
    CHECK_THROWS_AS(local_euler_value(l_atom(1, {1, 0}), inert, 0.0), PoleError);
}

TEST_CASE("local value of the SL2 factor")
{
    // (1 - q^-(1+s)) / (1 - q^-s) at q = 5, s = 2: (1 - 1/125) / (1 - 1/25).
    const auto p = r_alpha({1, 0}, 1, RankOneType::sl2, trivial_over(1));
    CHECK(local_euler_value(p, {5, Splitting::inert, false}, 2.0).real() == doctest::Approx((124.0 / 125) / (24.0 / 25)));
}

TEST_CASE("function-field imaginary shifts act through q^{-it}")
{
    // An imaginary exponent of 1/2 in units of 2 pi / log q flips the sign of q^-s.
    Atom a = l_atom(1, {1, 0});
    a.character.exponent.im = Rational(1, 2);
    const auto v = local_euler_value(a, {3, Splitting::inert, true}, 1.0);
    CHECK(v.real() == doctest::Approx(0.75));
    CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("Archimedean atoms")
{
    const double pi = std::numbers::pi;
    auto at_r = [](Atom a) {
        a.field.place = PlaceKind::real;
        a.character.field.place = PlaceKind::real;
        return a;
    };
    Atom c = l_atom(2, {1, 0});
    c.field.place = PlaceKind::complex;
    c.character.field.place = PlaceKind::complex;
    CHECK(arch_value(c, 1.0).real() == doctest::Approx(1.0 / pi));
    CHECK(arch_value(at_r(l_atom(1, {1, 0})), 1.0).real() == doctest::Approx(1.0));
    CHECK(arch_value(at_r(l_atom(1, {1, 0})), 2.0).real() == doctest::Approx(1.0 / pi));
    CHECK(arch_value(at_r(l_atom(1, {1, 0}, Twist::eta)), 1.0).real() == doctest::Approx(1.0 / pi));
    CHECK_THROWS_AS(arch_value(at_r(l_atom(1, {1, 0})), 0.0), PoleError);
    CHECK_THROWS_AS(arch_value(l_atom(1, {1, 0}), 1.0), InputError);

    const auto p = at_archimedean_place(r_alpha({1, 0}, 1, RankOneType::sl2, trivial_over(1)));
    for (const auto& t : p.terms) CHECK(t.atom.field.place == PlaceKind::real);
    CHECK_THROWS_AS(at_archimedean_place(r_alpha({1, 0}, 3, RankOneType::sl2, trivial_over(3))), InputError);
}

TEST_CASE("JSON round trip")
{
    const HeckeCharacterDescriptor chi{{2, PlaceKind::global}, {Rational(1, 3), Rational(-2, 5)}, Twist::eta};
    const auto p = r_alpha({Rational(4, 3), Rational(1, 2)}, 1, RankOneType::su21, chi);
    const auto j = to_json(p);
    CHECK(product_from_json(j) == p);
    CHECK(product_from_json(nlohmann::json::parse(j.dump())) == p);
    CHECK_THROWS_AS(product_from_json(nlohmann::json::object()), InputError);
}

TEST_CASE("dropping eps atoms keeps the L atoms and the poles")
{
    const auto p = r_alpha({4, 0}, 1, RankOneType::su21, trivial_over(2));
    const auto q = drop_epsilon(p);
    CHECK(q.terms.size() == 4);
    for (const auto& t : q.terms) CHECK(t.atom.kind == AtomKind::hecke_l);
    CHECK(poles_positive(q).entries == poles_positive(p).entries);
}
