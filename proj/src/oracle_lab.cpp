#include "gk/oracle_lab.hpp"

#include <cmath>
#include <numbers>

#include "gk/char_lab.hpp"
#include "gk/errors.hpp"

namespace gk::oracle {

namespace {

using numeric::gamma;

// q^{-x} for complex x.
Complex qpow(double q, Complex x)
{
    return std::exp(-x * std::log(q));
}

void require_convergent(Complex s)
{
    if (s.real() <= 0.0) throw DivergenceError("shell sum diverges for Re(s) <= 0");
}

chars::HeckeCharacterDescriptor trivial_over(int degree)
{
    chars::HeckeCharacterDescriptor d;
    d.field = {degree, chars::PlaceKind::global};
    return d;
}

}  // namespace

std::int64_t LocalPlace::residue_cardinality() const
{
    std::int64_t out = 1;
    for (int i = 0; i < f; ++i) out *= q;
    return out;
}

void validate(const LocalPlace& place)
{
    if (place.q < 2) throw InputError("residue cardinality must be at least 2");
    if (place.f < 1) throw InputError("residue degree must be at least 1");
}

void validate(const OracleConfig& cfg)
{
    if (cfg.depth < 1) throw InputError("depth must be at least 1");
    if (!(cfg.tolerance > 0.0)) throw InputError("tolerance must be positive");
    if (cfg.samples.empty()) throw InputError("sample grid is empty");
}

Complex sl2_closed_form(std::int64_t q_k, Complex s)
{
    const double q = static_cast<double>(q_k);
    return (1.0 - qpow(q, 1.0 + s)) / (1.0 - qpow(q, s));
}

Complex su21_inert_closed_form(std::int64_t q, Complex s)
{
    const auto p = lfactor::r_alpha({4, 0}, 1, roots::RankOneType::su21, trivial_over(2));
    return lfactor::local_euler_value(p, {q, lfactor::Splitting::inert, false}, s);
}

ShellResult gk_integral_sl2(const LocalPlace& place, Complex s, const OracleConfig& cfg)
{
    validate(place);
    validate(cfg);
    require_convergent(s);
    const double qk = static_cast<double>(place.residue_cardinality());
    const Complex ratio = qpow(qk, s);
    Complex sum = 0.0, term = 1.0;
    for (int k = 1; k <= cfg.depth; ++k) {
        term *= ratio;
        sum += term;
    }
    ShellResult out;
    out.value = 1.0 + (1.0 - 1.0 / qk) * sum;
    const double r = std::pow(qk, -s.real());
    out.tail_bound = std::pow(qk, -cfg.depth * s.real()) / (1.0 - r);
    out.converged = out.tail_bound <= cfg.tolerance;
    return out;
}

ShellResult gk_integral_su21_inert(const LocalPlace& place, Complex s, const OracleConfig& cfg)
{
    validate(place);
    validate(cfg);
    require_convergent(s);
    if (place.q % 2 == 0) throw InputError("the SU(2,1) shell oracle needs odd q (c = N(b)/2 + sqrt(eps) t)");
    const double q = static_cast<double>(place.q);
    const int depth = cfg.depth;
    // Strata: m = val_E(b) in {>= 0, -1, ..., -depth}, n = val_F(t) in {>= 0, -1, ..., -2 depth}.
    // Then val_E(c) = min(2m, n) and the height is |c|_E = q^{-2 min(2m, n)} when that exceeds 1.
    std::vector<Complex> weight(2 * depth + 1, 0.0);  // integrand at k = -min(2m, n)
    for (int k = 0; k <= 2 * depth; ++k) weight[k] = qpow(q, 2.0 * k * (s + 1.0));
    Complex total = 0.0;
    for (int m = 0; m >= -depth; --m) {
        const double vm = m == 0 ? 1.0 : (1.0 - 1.0 / (q * q)) * std::pow(q, -2.0 * m);
        Complex row = 0.0;
        for (int n = 0; n >= -2 * depth; --n) {
            const double vn = n == 0 ? 1.0 : (1.0 - 1.0 / q) * std::pow(q, -static_cast<double>(n));
            const int k = std::max(0, -std::min(2 * m, n));
            row += vn * weight[k];
        }
        total += vm * row;
    }
    ShellResult out;
    out.value = total;
    // Shell k has mass at most q^{2k}; every point with k <= 2 depth is summed.
    const double r = std::pow(q, -2.0 * s.real());
    out.tail_bound = std::pow(r, 2 * depth + 1) / (1.0 - r);
    out.converged = out.tail_bound <= cfg.tolerance;
    return out;
}

ShellResult gk_integral_sl3(const LocalPlace& place, Complex s, const OracleConfig& cfg)
{
    validate(place);
    require_convergent(s);
    // lambda = s rho in coroot coordinates; s1: (c1,c2) -> (-c1, c1+c2), s2: (c1,c2) -> (c1+c2, -c2).
    Complex c1 = s, c2 = s;
    const int word[] = {0, 1, 0};  // s1 s2 s1, applied right to left
    ShellResult out;
    out.value = 1.0;
    for (int k = 2; k >= 0; --k) {
        const Complex pairing = word[k] == 0 ? c1 : c2;
        const auto step = gk_integral_sl2(place, pairing, cfg);
        out.value *= step.value;
        out.tail_bound += step.tail_bound;
        out.converged = out.converged && step.converged;
        if (word[k] == 0) {
            c2 = c1 + c2;
            c1 = -c1;
        } else {
            c1 = c1 + c2;
            c2 = -c2;
        }
    }
    return out;
}

std::string to_string(ArchCase c)
{
    switch (c) {
    case ArchCase::sl2_r: return "SL2_R";
    case ArchCase::res_c_r: return "ResC/R_SL2";
    case ArchCase::su21_r: return "SU21_R";
    }
    return "?";
}

ArchCase parse_arch_case(std::string_view name)
{
    for (ArchCase c : all_arch_cases())
        if (name == to_string(c)) return c;
    throw InputError("unknown Archimedean case '" + std::string(name) + "'");
}

const std::vector<ArchCase>& all_arch_cases()
{
    static const std::vector<ArchCase> cases{ArchCase::sl2_r, ArchCase::res_c_r, ArchCase::su21_r};
    return cases;
}

Complex arch_gk(ArchCase c, Complex s)
{
    switch (c) {
    case ArchCase::sl2_r: return gamma(1.0) / gamma(0.5) * gamma(s / 2.0) / gamma((s + 1.0) / 2.0);
    case ArchCase::res_c_r: return gamma(2.0) / gamma(1.0) * gamma(s) / gamma(s + 1.0);
    case ArchCase::su21_r:
        return gamma(3.0) / gamma(1.5) * gamma(2.0 * s) * gamma(s + 0.5) / (gamma(2.0 * s + 1.0) * gamma(s + 1.0));
    }
    throw InputError("unknown Archimedean case");
}

lfactor::MeromorphicProduct arch_case_product(ArchCase c)
{
    using roots::RankOneType;
    lfactor::MeromorphicProduct p;
    switch (c) {
    case ArchCase::sl2_r: p = lfactor::r_alpha({1, 0}, 1, RankOneType::sl2, trivial_over(1)); break;
    case ArchCase::res_c_r: p = lfactor::r_alpha({2, 0}, 2, RankOneType::sl2, trivial_over(2)); break;
    case ArchCase::su21_r: p = lfactor::r_alpha({4, 0}, 1, RankOneType::su21, trivial_over(2)); break;
    }
    return lfactor::at_archimedean_place(p);
}

Complex normalizing_factor_arch(ArchCase c, Complex s)
{
    return 1.0 / lfactor::arch_value(arch_case_product(c), s);
}

bool legendre_check(const std::vector<double>& samples, double tolerance, std::vector<LegendreResidual>* residuals)
{
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    bool ok = true;
    for (double s : samples) {
        const Complex lhs1 = gamma(2.0 * s);
        const Complex rhs1 = std::pow(2.0, 2.0 * s - 1.0) / sqrt_pi * gamma(s) * gamma(s + 0.5);
        const Complex lhs2 = gamma(2.0 * s + 1.0);
        const Complex rhs2 = std::pow(2.0, 2.0 * s) / sqrt_pi * gamma(s + 0.5) * gamma(s + 1.0);
        LegendreResidual r{s, numeric::rel_diff(lhs1, rhs1), numeric::rel_diff(lhs2, rhs2)};
        ok = ok && r.err_2s < tolerance && r.err_2s_plus1 < tolerance;
        if (residuals) residuals->push_back(r);
    }
    return ok;
}

namespace {

Constancy summarize(std::vector<Complex> constants, double tolerance, bool converged)
{
    Constancy out;
    out.constants = std::move(constants);
    out.converged = converged;
    for (const auto& c : out.constants)
        out.max_deviation = std::max(out.max_deviation, numeric::rel_diff(c, out.constants.front()));
    out.pass = converged && out.max_deviation < tolerance;
    return out;
}

}  // namespace

Constancy s_independence_check(LocalCase c, const LocalPlace& place, const OracleConfig& cfg)
{
    validate(cfg);
    std::vector<Complex> constants;
    bool converged = true;
    for (double s : cfg.samples) {
        ShellResult shell;
        Complex normalizer;
        if (c == LocalCase::sl2) {
            shell = gk_integral_sl2(place, s, cfg);
            const int f = place.f;
            const auto p = lfactor::r_alpha({f, 0}, f, roots::RankOneType::sl2, trivial_over(f));
            normalizer = 1.0 / lfactor::local_euler_value(p, {place.q, lfactor::Splitting::inert, false}, s);
        } else {
            shell = gk_integral_su21_inert(place, s, cfg);
            normalizer = 1.0 / su21_inert_closed_form(place.q, s);
        }
        converged = converged && shell.converged;
        constants.push_back(normalizer * shell.value);
    }
    return summarize(std::move(constants), cfg.tolerance, converged);
}

Constancy s_independence_check(ArchCase c, const std::vector<double>& samples, double tolerance)
{
    if (samples.empty()) throw InputError("sample grid is empty");
    std::vector<Complex> constants;
    for (double s : samples) constants.push_back(normalizing_factor_arch(c, s) * arch_gk(c, s));
    return summarize(std::move(constants), tolerance, true);
}

}  // namespace gk::oracle
