#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gk/oracle_lab.hpp"

namespace gk::verify {

// One elementary comparison, serialized as {name, inputs, observed, expected, abs_err, pass}.
struct Check {
    std::string name;
    nlohmann::json inputs = nlohmann::json::object();
    std::string observed;
    std::string expected;
    double abs_err = 0.0;
    bool pass = false;
};

nlohmann::json to_json(const Check& c);

// A named group of checks that is reported on one line.
struct Subcase {
    std::string name;
    std::vector<Check> checks;
    std::string note;

    bool pass() const;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Subcase> subcases;
    double seconds = 0.0;
    double time_limit = 0.0;  // 0 = no runtime requirement
    std::string summary;

    bool pass() const;
};

nlohmann::json to_json(const CriterionResult& r);

// Tolerances and sample grids pinned for the acceptance suite.
namespace pinned {
inline constexpr double sl2_tol = 1e-10;
inline constexpr double su21_tol = 1e-9;
inline constexpr double sl3_tol = 1e-10;
inline constexpr double arch_rel_tol = 1e-9;
inline constexpr double legendre_tol = 1e-10;
inline constexpr double sl2_seconds = 1.0;
inline constexpr double su21_seconds = 10.0;
inline constexpr int random_words = 500;
}  // namespace pinned

CriterionResult criterion_sl2_shell(const oracle::OracleConfig& cfg);
CriterionResult criterion_su21_shell(const oracle::OracleConfig& cfg);
CriterionResult criterion_sl3(const oracle::OracleConfig& cfg);
CriterionResult criterion_arch_constancy();
CriterionResult criterion_legendre();
CriterionResult criterion_proposition_tables();
CriterionResult criterion_corollary_ratios();
CriterionResult criterion_weyl(std::uint64_t seed);
CriterionResult criterion_ledger();

std::vector<CriterionResult> run_acceptance(const oracle::OracleConfig& cfg, std::uint64_t seed);

// Local oracle report for the given q values and s grid (SL2, SL3, SU21, place product).
std::vector<Check> verify_local(const std::vector<std::int64_t>& qs, const oracle::OracleConfig& cfg);
// Archimedean constancy and Legendre duplication on the given samples.
std::vector<Check> verify_arch(const std::vector<double>& samples, double tolerance);

// Randomized property checks (inversion sets, cocycle, multiplicativity,
// normalize idempotence, JSON round trip) seeded for reproducibility.
std::vector<Check> property_checks(std::uint64_t seed, int count);

// "[PASS] 3  title (details)" plus indented subcase lines.
std::string format_line(const CriterionResult& r);

}  // namespace gk::verify
