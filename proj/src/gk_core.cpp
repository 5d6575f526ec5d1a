#include "gk/gk_core.hpp"

#include <algorithm>

#include "gk/errors.hpp"

namespace gk::core {

using roots::LengthClass;

std::string to_string(VariableConvention v)
{
    switch (v) {
    case VariableConvention::ray: return "ray";
    case VariableConvention::global: return "global";
    case VariableConvention::local: return "local";
    }
    return "?";
}

VariableConvention parse_variable_convention(std::string_view name)
{
    if (name == "ray") return VariableConvention::ray;
    if (name == "global") return VariableConvention::global;
    if (name == "local") return VariableConvention::local;
    throw InputError("unknown variable convention '" + std::string(name) + "'");
}

RootFactor root_factor(const RelativeRootSystem& system, const UnramifiedCharacter& chi, const LambdaRay& ray, int root,
                       VariableConvention convention)
{
    const auto& r = system.root(root);
    RootFactor f;
    f.root = root;
    f.pairing = chars::pair(system, ray, root);
    f.scale = chars::pairing_scale(system, root);
    f.character = chars::compose_with_coroot(system, chi, root);
    AffineForm argument;
    switch (convention) {
    case VariableConvention::ray: argument = f.pairing; break;
    case VariableConvention::global: argument = {1, 0}; break;
    case VariableConvention::local: argument = {f.scale, 0}; break;
    }
    f.factor = lfactor::r_alpha(argument, r.d_alpha, r.rank_one_type, f.character, chi.mode());
    return f;
}

ConstantTermReport constant_term(const RelativeRootSystem& system, const UnramifiedCharacter& chi, const LambdaRay& ray,
                                 const WeylElement& w, VariableConvention convention)
{
    ConstantTermReport report;
    report.w = w;
    report.character = chi;
    report.convention = convention;
    MeromorphicProduct merged;
    for (int root : roots::inversion_set(system, w)) {
        auto f = root_factor(system, chi, ray, root, convention);
        merged.terms.insert(merged.terms.end(), f.factor.terms.begin(), f.factor.terms.end());
        report.per_root.push_back(std::move(f));
    }
    report.product = lfactor::normalize(merged);
    return report;
}

PoleReport pole_profile(const RelativeRootSystem& system, const UnramifiedCharacter& chi, const LambdaRay& ray,
                        const std::vector<int>& roots, VariableConvention convention, bool include_conditional)
{
    PoleReport report;
    report.convention = convention;
    std::set<int> components;
    for (int root : roots) {
        auto f = root_factor(system, chi, ray, root, convention);
        components.insert(system.root(root).component);
        for (auto entry : lfactor::poles_positive(f.factor, include_conditional).entries) {
            entry.root = root;
            report.profile.entries.push_back(entry);
        }
    }
    if (components.size() > 1)
        report.warnings.push_back("root subset spans " + std::to_string(components.size()) +
                                  " irreducible components; whether their pole data interact is not decided here");
    if (convention == VariableConvention::ray)
        report.warnings.push_back("ray convention: pole locations include the coroot heights of the ray");
    return report;
}

RatioRule corollary_ratio_table(std::string_view type)
{
    if (type.empty()) throw InputError("empty relative type");
    const char letter = type.front();
    switch (letter) {
    case 'A':
    case 'D':
    case 'E': return {true, LengthClass::single, Rational(1)};
    case 'B': return {false, LengthClass::short_root, Rational(2)};
    case 'F':
        if (type == "F4") return {false, LengthClass::short_root, Rational(2)};
        break;
    case 'C': return {false, LengthClass::long_root, Rational(2)};
    case 'G':
        if (type == "G2") return {false, LengthClass::long_root, Rational(3)};
        break;
    default: break;
    }
    throw InputError("no ratio rule for relative type '" + std::string(type) + "'");
}

std::string to_string(const RatioRule& r)
{
    if (r.all_equal) return "all equal";
    const bool long_big = r.larger == LengthClass::long_root;
    return std::string(long_big ? "long/short" : "short/long") + " = " + gk::to_string(r.ratio);
}

std::optional<RatioRule> ComponentPoles::observed() const
{
    if (!consistent) return std::nullopt;
    std::map<LengthClass, Rational> one;
    for (const auto& [cls, locs] : locations)
        if (!locs.empty()) one.emplace(cls, *locs.begin());
    if (one.empty()) return std::nullopt;
    if (one.size() == 1) return RatioRule{true, LengthClass::single, Rational(1)};
    const Rational s = one.at(LengthClass::short_root);
    const Rational l = one.at(LengthClass::long_root);
    if (s == l) return RatioRule{true, LengthClass::single, Rational(1)};
    if (l > s) return RatioRule{false, LengthClass::long_root, l / s};
    return RatioRule{false, LengthClass::short_root, s / l};
}

std::vector<ComponentPoles> component_poles(const RelativeRootSystem& system, const PoleReport& report)
{
    std::vector<ComponentPoles> out(system.components().size());
    for (std::size_t c = 0; c < out.size(); ++c) {
        out[c].component = static_cast<int>(c);
        out[c].type = system.components()[c].type;
    }
    for (const auto& e : report.profile.entries) {
        if (e.conditional || e.root < 0) continue;
        const auto& r = system.root(e.root);
        auto& slot = out[r.component].locations[r.length_class];
        slot.insert(e.location);
        if (slot.size() > 1) out[r.component].consistent = false;
    }
    return out;
}

bool matches(const RatioRule& expected, const RatioRule& observed)
{
    if (expected.all_equal || observed.all_equal) return expected.all_equal == observed.all_equal;
    return expected.larger == observed.larger && expected.ratio == observed.ratio;
}

Sl3Factorization sl3_longest_factorization(std::int64_t q, double s)
{
    const RelativeRootSystem system(roots::GroupDatum(roots::DynkinDiagram::from_type("A2"), {}, 1, 1, "SL3"));
    const auto w = roots::weyl_longest(system);
    const auto chi = UnramifiedCharacter::trivial(system.rank());
    const auto report = constant_term(system, chi, LambdaRay::principal(system.rank()), w);
    Sl3Factorization out;
    for (const auto& f : report.per_root) out.arguments.push_back(f.pairing);
    out.product = report.product;
    if (s <= 0) {
        out.note = "numeric value needs Re(s) > 0";
        return out;
    }
    const auto v = lfactor::local_euler_value(out.product, {q, lfactor::Splitting::inert, false}, s);
    out.value = v.real();
    return out;
}

bool multiplicativity_check(const RelativeRootSystem& system, const UnramifiedCharacter& chi, const LambdaRay& ray,
                            const WeylElement& w1, const WeylElement& w2)
{
    const auto w = roots::weyl_multiply(system, w1, w2);
    const int l1 = roots::weyl_length(system, w1.word);
    const int l2 = roots::weyl_length(system, w2.word);
    if (w.length() != l1 + l2)
        throw InputError("lengths are not additive: " + std::to_string(w.length()) + " != " + std::to_string(l1) + " + " +
                         std::to_string(l2));
    const auto whole = constant_term(system, chi, ray, w);
    const auto right = constant_term(system, chi, ray, w2);
    const auto left = constant_term(system, chars::transport(system, w2, chi), chars::transport(system, w2, ray), w1);
    return whole.product == lfactor::multiply(left.product, right.product);
}

}  // namespace gk::core
