#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gk/errors.hpp"
#include "gk/oracle_lab.hpp"

using namespace gk;
using namespace gk::oracle;

TEST_CASE("SL2 shells converge to the closed form")
{
    const OracleConfig cfg;
    // (1 - 3^-2) / (1 - 3^-1) = 4/3.
    const auto r = gk_integral_sl2({3, 1, false}, 1.0, cfg);
    CHECK(r.value.real() == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(r.converged);
    // Residue degree 2 behaves like q = 9.
    CHECK(gk_integral_sl2({3, 2, false}, 1.5, cfg).value.real() ==
          doctest::Approx(sl2_closed_form(9, 1.5).real()).epsilon(1e-12));
    CHECK_THROWS_AS(gk_integral_sl2({3, 1, false}, 0.0, cfg), DivergenceError);
    CHECK_THROWS_AS(gk_integral_sl2({1, 1, false}, 1.0, cfg), InputError);
}

TEST_CASE("shallow sums report non-convergence")
{
    OracleConfig cfg;
    cfg.depth = 3;
    const auto r = gk_integral_sl2({2, 1, false}, 1.0, cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.tail_bound > cfg.tolerance);
}

TEST_CASE("SU(2,1) inert shells")
{
    const OracleConfig cfg;
    // q = 3, s = 1: (1 - 9^-2)/(1 - 9^-1) * (1 + 3^-3)/(1 + 3^-2) = 10/9 * 14/15 = 28/27.
    const auto r = gk_integral_su21_inert({3, 1, false}, 1.0, cfg);
    CHECK(r.value.real() == doctest::Approx(28.0 / 27.0).epsilon(1e-12));
    CHECK(su21_inert_closed_form(3, 1.0).real() == doctest::Approx(28.0 / 27.0).epsilon(1e-12));
    for (std::int64_t q : {5, 7, 11})
        for (double s : {0.8, 1.5, 2.5}) {
            CAPTURE(q);
            CAPTURE(s);
            CHECK(gk_integral_su21_inert({q, 1, false}, s, cfg).value.real() ==
                  doctest::Approx(su21_inert_closed_form(q, s).real()).epsilon(1e-10));
        }
    CHECK_THROWS_AS(gk_integral_su21_inert({4, 1, false}, 1.0, cfg), InputError);
}

TEST_CASE("SL3 composed along s1 s2 s1")
{
    const OracleConfig cfg;
    const auto r = gk_integral_sl3({3, 1, false}, 1.0, cfg);
    CHECK(r.value.real() == doctest::Approx(52.0 / 27.0).epsilon(1e-12));
}

TEST_CASE("Archimedean Gamma ratios")
{
    // At s = 1 each ratio is 1 (the sphere integrals are normalized at the trivial point).
    for (ArchCase c : all_arch_cases()) CHECK(std::abs(arch_gk(c, 1.0) - 1.0) < 1e-12);
    CHECK(parse_arch_case("SU21_R") == ArchCase::su21_r);
    CHECK_THROWS_AS(parse_arch_case("SL2_C"), InputError);

    // Gamma(1) Gamma(1) / (Gamma(1/2) Gamma(3/2)) = 2/pi; Gamma(3) / Gamma(4) = 1/3.
    CHECK(std::abs(arch_gk(ArchCase::sl2_r, 2.0) - 2.0 / std::numbers::pi) < 1e-12);
    CHECK(std::abs(arch_gk(ArchCase::res_c_r, 3.0) - 1.0 / 3.0) < 1e-12);
}

TEST_CASE("normalized Archimedean ratios are constant in s")
{
    for (ArchCase c : all_arch_cases()) {
        const auto k = s_independence_check(c, {0.6, 1.1, 2.4, 5.0}, 1e-9);
        CAPTURE(to_string(c));
        CHECK(k.pass);
        CHECK(k.max_deviation < 1e-9);
    }
}

TEST_CASE("normalized local ratios are constant in s")
{
    const OracleConfig cfg;
    CHECK(s_independence_check(LocalCase::sl2, {5, 1, false}, cfg).pass);
    CHECK(s_independence_check(LocalCase::su21_inert, {5, 1, false}, cfg).pass);
}

TEST_CASE("Legendre duplication")
{
    std::vector<LegendreResidual> res;
    CHECK(legendre_check({0.3, 1.0, 2.7, 4.2}, 1e-10, &res));
    CHECK(res.size() == 4);
    for (const auto& r : res) CHECK(r.err_2s < 1e-12);
}

TEST_CASE("complex Gamma")
{
    const double pi = std::numbers::pi;
    CHECK(std::abs(numeric::gamma(0.5) - std::sqrt(pi)) < 1e-13);
    CHECK(std::abs(numeric::gamma(5.0) - 24.0) < 1e-11);
    // |Gamma(1/2 + it)|^2 = pi / cosh(pi t).
    const double t = 1.7;
    CHECK(std::norm(numeric::gamma({0.5, t})) == doctest::Approx(pi / std::cosh(pi * t)).epsilon(1e-12));
    // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
    const numeric::Complex z{0.3, -0.8};
    CHECK(std::abs(numeric::gamma(z) * numeric::gamma(1.0 - z) - pi / std::sin(pi * z)) < 1e-12);
    CHECK_THROWS_AS(numeric::gamma(-2.0), PoleError);
    CHECK_THROWS_AS(numeric::gamma(0.0), PoleError);
}
