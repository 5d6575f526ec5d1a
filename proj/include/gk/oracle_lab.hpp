#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gk/gamma.hpp"
#include "gk/lfactor.hpp"

namespace gk::oracle {

using numeric::Complex;

struct LocalPlace {
    std::int64_t q = 2;   // residue cardinality of F_v
    int f = 1;            // residue degree of the extension in play
    bool function_field = false;

    std::int64_t residue_cardinality() const;  // q^f
};

struct OracleConfig {
    int depth = 60;
    double tolerance = 1e-10;
    std::vector<double> samples{1.0, 1.5, 2.0, 3.0};
};

void validate(const LocalPlace& place);
void validate(const OracleConfig& cfg);

struct ShellResult {
    Complex value;
    double tail_bound = 0.0;
    bool converged = true;
};

// Truncated shell sum for the rank-one SL2 integral over F_v with q_K = q^f:
// 1 + (1 - 1/q_K) sum_{k=1..depth} q_K^{-k s}. Throws DivergenceError for Re s <= 0.
ShellResult gk_integral_sl2(const LocalPlace& place, Complex s, const OracleConfig& cfg);

// SU(2,1) for an inert unramified E_w/F_v (q odd): sum over valuation strata of
// {(b, c) : c + conj(c) = N(b)} of the Iwasawa height to the power -(s+1).
ShellResult gk_integral_su21_inert(const LocalPlace& place, Complex s, const OracleConfig& cfg);

// SL3 longest element: rank-one integrals composed along s1 s2 s1 at lambda = s rho.
ShellResult gk_integral_sl3(const LocalPlace& place, Complex s, const OracleConfig& cfg);

// (1 - q_K^{-(1+s)}) / (1 - q_K^{-s}).
Complex sl2_closed_form(std::int64_t q_k, Complex s);

// Local value of r_alpha(4s, 1) of SU21-type at an inert place, read off the
// L-factor algebra.
Complex su21_inert_closed_form(std::int64_t q, Complex s);

enum class ArchCase { sl2_r, res_c_r, su21_r };

std::string to_string(ArchCase c);
ArchCase parse_arch_case(std::string_view name);
const std::vector<ArchCase>& all_arch_cases();

// The three Gamma ratios of the real intertwining integral on the spherical vector.
Complex arch_gk(ArchCase c, Complex s);

// 1 / r_alpha evaluated with Archimedean L-factors.
Complex normalizing_factor_arch(ArchCase c, Complex s);

// The rank-one r_alpha products behind the three Archimedean cases.
lfactor::MeromorphicProduct arch_case_product(ArchCase c);

struct LegendreResidual {
    double s = 0;
    double err_2s = 0;      // relative error of the Gamma(2s) identity
    double err_2s_plus1 = 0;
};

bool legendre_check(const std::vector<double>& samples, double tolerance, std::vector<LegendreResidual>* residuals = nullptr);

struct Constancy {
    std::vector<Complex> constants;  // one per sample
    double max_deviation = 0.0;      // relative, against the first sample
    bool converged = true;
    bool pass = false;
};

enum class LocalCase { sl2, su21_inert };

// Normalizer reciprocal times shell value over the samples (non-Archimedean).
Constancy s_independence_check(LocalCase c, const LocalPlace& place, const OracleConfig& cfg);
// Normalizer times Gamma ratio over the samples (Archimedean).
Constancy s_independence_check(ArchCase c, const std::vector<double>& samples, double tolerance);

}  // namespace gk::oracle
