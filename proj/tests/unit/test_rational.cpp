#include <doctest.h>

#include "gk/errors.hpp"
#include "gk/rational.hpp"

using gk::AffineForm;
using gk::Rational;

TEST_CASE("rational parsing and printing")
{
    CHECK(gk::parse_rational("3") == Rational(3));
    CHECK(gk::parse_rational("-3/6") == Rational(-1, 2));
    CHECK(gk::to_string(Rational(4, 6)) == "2/3");
    CHECK(gk::to_string(Rational(-5)) == "-5");
    CHECK_THROWS_AS(gk::parse_rational("1.5"), gk::InputError);
    CHECK_THROWS_AS(gk::parse_rational("1/0"), gk::InputError);
    CHECK_THROWS_AS(gk::parse_rational(""), gk::InputError);
}

TEST_CASE("mixed integer comparisons terminate")
{
    // Regression: boost's templated integer == rational recursed under C++20.
    const Rational half(1, 2);
    CHECK_FALSE(half == 1);
    CHECK(half != 0);
    CHECK(Rational(4, 2) == 2);
    CHECK(2 == Rational(4, 2));
    CHECK(std::int64_t{3} == Rational(3));
    CHECK(Rational(3) != std::int64_t{4});
}

TEST_CASE("affine forms")
{
    const AffineForm f{Rational(2), Rational(1, 3)};
    CHECK(gk::to_string(f) == "1/3 + 2s");
    CHECK(gk::to_string(AffineForm{-1, 2}, "t") == "2 - t");
    CHECK(gk::to_string(AffineForm{Rational(1, 2), 0}) == "s/2");
    CHECK(gk::to_string(AffineForm{1, 1}) == "1 + s");
    CHECK(gk::to_string(AffineForm{0, 0}) == "0");
    CHECK(f / Rational(2) == AffineForm{1, Rational(1, 6)});
    CHECK(Rational(3) * f + AffineForm{0, 1} == AffineForm{6, 2});
}

TEST_CASE("complex rationals order lexicographically")
{
    gk::ComplexRational a{1, 0}, b{1, Rational(1, 2)}, c{0, 5};
    CHECK(c < a);
    CHECK(a < b);
    CHECK((a + b) == gk::ComplexRational{2, Rational(1, 2)});
    CHECK(gk::ComplexRational{}.is_zero());
}
