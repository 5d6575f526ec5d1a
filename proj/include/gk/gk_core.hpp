#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gk/char_lab.hpp"
#include "gk/lfactor.hpp"
#include "gk/root_engine.hpp"
#include "gk/weyl.hpp"

namespace gk::core {

using chars::LambdaRay;
using chars::UnramifiedCharacter;
using lfactor::MeromorphicProduct;
using roots::RelativeRootSystem;
using roots::WeylElement;

// Which formal variable the affine arguments of a factor are written in.
//   ray:    the s of the supplied lambda ray, pairing = <lambda(s), alpha^vee>
//   global: the pairing itself, i.e. r_alpha(s, chi o alpha^vee) as a function of s
//   local:  pairing / scale, the rank-one variable (scale d_alpha or 4 d_alpha)
enum class VariableConvention { ray, global, local };

std::string to_string(VariableConvention v);
VariableConvention parse_variable_convention(std::string_view name);

struct RootFactor {
    int root = 0;
    AffineForm pairing;  // <lambda, alpha^vee> along the ray
    int scale = 1;       // d_alpha or 4 d_alpha
    chars::HeckeCharacterDescriptor character;
    MeromorphicProduct factor;  // in the report's convention
};

struct ConstantTermReport {
    MeromorphicProduct product;
    std::vector<RootFactor> per_root;
    WeylElement w;
    UnramifiedCharacter character;
    VariableConvention convention = VariableConvention::ray;
};

ConstantTermReport constant_term(const RelativeRootSystem& system, const UnramifiedCharacter& chi, const LambdaRay& ray,
                                 const WeylElement& w, VariableConvention convention = VariableConvention::ray);

// The rank-one factor of one root in the given convention.
RootFactor root_factor(const RelativeRootSystem& system, const UnramifiedCharacter& chi, const LambdaRay& ray, int root,
                       VariableConvention convention);

struct PoleReport {
    lfactor::PoleProfile profile;
    VariableConvention convention = VariableConvention::global;
    std::vector<std::string> warnings;
};

PoleReport pole_profile(const RelativeRootSystem& system, const UnramifiedCharacter& chi, const LambdaRay& ray,
                        const std::vector<int>& roots, VariableConvention convention = VariableConvention::global,
                        bool include_conditional = false);

// Corollary rule for a relative component type.
struct RatioRule {
    bool all_equal = true;
    roots::LengthClass larger = roots::LengthClass::single;
    Rational ratio{1};  // p_larger / p_smaller
};

RatioRule corollary_ratio_table(std::string_view relative_type);
std::string to_string(const RatioRule& r);

// Unconditional pole locations of one component, split by length class.
struct ComponentPoles {
    int component = 0;
    std::string type;
    std::map<roots::LengthClass, std::set<Rational>> locations;
    bool consistent = true;  // at most one location per length class

    std::optional<RatioRule> observed() const;
};

std::vector<ComponentPoles> component_poles(const RelativeRootSystem& system, const PoleReport& report);

bool matches(const RatioRule& expected, const RatioRule& observed);

struct Sl3Factorization {
    std::vector<AffineForm> arguments;  // rank-one pairings along the longest word
    MeromorphicProduct product;
    std::optional<double> value;
    std::string note;
};

Sl3Factorization sl3_longest_factorization(std::int64_t q, double s);

// M(w1 w2, lambda) = M(w1, w2 lambda) M(w2, lambda) on the spherical vector,
// compared atom for atom. Throws InputError if lengths do not add.
bool multiplicativity_check(const RelativeRootSystem& system, const UnramifiedCharacter& chi, const LambdaRay& ray,
                            const WeylElement& w1, const WeylElement& w2);

}  // namespace gk::core
