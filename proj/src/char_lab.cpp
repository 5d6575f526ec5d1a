#include "gk/char_lab.hpp"

#include <algorithm>

#include "gk/errors.hpp"

namespace gk::chars {

namespace {

using roots::RelativeRootSystem;

const IntVec& over_root(const RelativeRootSystem& system, int index)
{
    const auto& root = system.root(index);
    return system.absolute_roots()[root.orbit.front()];
}

// (lambda, beta) for lambda given by coordinates c_O; entries of any ring.
template <typename T>
T inner_with(const RelativeRootSystem& system, const std::vector<T>& c, const IntVec& beta)
{
    const auto& norms = system.datum().diagram().simple_norms();
    T acc{};
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] == 0) continue;
        const Rational k = Rational(beta[i]) * norms[i] / 2;
        acc = acc + k * c[system.orbit_of_node(static_cast<int>(i))];
    }
    return acc;
}

Rational self_inner(const RelativeRootSystem& system, const IntVec& beta)
{
    const auto& d = system.datum().diagram();
    Rational acc = 0;
    for (std::size_t i = 0; i < beta.size(); ++i)
        for (std::size_t j = 0; j < beta.size(); ++j)
            if (beta[i] != 0 && beta[j] != 0)
                acc += Rational(beta[i] * beta[j]) * d.inner(static_cast<int>(i), static_cast<int>(j));
    return acc;
}

void check_rank(const RelativeRootSystem& system, std::size_t n, const char* what)
{
    if (static_cast<int>(n) != system.rank())
        throw InputError(std::string(what) + " has " + std::to_string(n) + " coordinates, expected " +
                         std::to_string(system.rank()));
}

Rational reduce_mod(const Rational& x, const Rational& period)
{
    Rational k = x / period;
    // floor of a rational
    std::int64_t f = k.numerator() / k.denominator();
    if (k.numerator() < 0 && k.numerator() % k.denominator() != 0) --f;
    return x - Rational(f) * period;
}

// s_O applied to coordinates c (real or complex).
template <typename T>
std::vector<T> reflect_coords(const RelativeRootSystem& system, int o, const std::vector<T>& c)
{
    const auto& diag = system.datum().diagram();
    const auto& orbit = system.orbits()[o];
    const int i0 = orbit.front();
    const Rational t_scale = diag.simple_norms()[i0] / system.gram()[o][o];
    const T t = t_scale * c[o];
    std::vector<T> out = c;
    for (int p = 0; p < system.rank(); ++p) {
        const int node = system.orbits()[p].front();
        Rational avg = 0;
        for (int i : orbit) avg += diag.cartan(i, node);
        avg /= static_cast<std::int64_t>(orbit.size());
        out[p] = out[p] - avg * t;
    }
    return out;
}

}  // namespace

std::string to_string(PlaceKind k)
{
    switch (k) {
    case PlaceKind::global: return "global";
    case PlaceKind::real: return "real";
    case PlaceKind::complex: return "complex";
    }
    return "?";
}

PlaceKind parse_place_kind(std::string_view name)
{
    if (name == "global") return PlaceKind::global;
    if (name == "real") return PlaceKind::real;
    if (name == "complex") return PlaceKind::complex;
    throw InputError("unknown place kind '" + std::string(name) + "'");
}

std::string FieldDescriptor::label() const
{
    if (place == PlaceKind::real) return "R";
    if (place == PlaceKind::complex) return "C";
    return degree == 1 ? "F" : "F" + std::to_string(degree);
}

std::string to_string(Twist t)
{
    return t == Twist::none ? "none" : "eta";
}

std::string to_string(const HeckeCharacterDescriptor& d)
{
    if (d.trivial()) return "1";
    std::string out;
    if (!d.exponent.is_zero()) out = "|.|^(" + to_string(d.exponent) + ")";
    if (d.twist == Twist::eta) out += out.empty() ? "eta" : " eta";
    return out;
}

ComplexRational canonical_exponent(const ComplexRational& z, const CharacterMode& mode, int degree)
{
    if (!mode.function_field) return z;
    return {z.re, reduce_mod(z.im, Rational(1, degree))};
}

UnramifiedCharacter::UnramifiedCharacter(ComplexRationalVec exponent, CharacterMode mode)
    : exponent_(std::move(exponent)), mode_(mode)
{
    if (mode_.function_field && mode_.q < 2) throw InputError("function-field mode needs q >= 2");
    for (auto& z : exponent_) z = canonical_exponent(z, mode_, 1);
}

UnramifiedCharacter UnramifiedCharacter::trivial(int rank, CharacterMode mode)
{
    return UnramifiedCharacter(ComplexRationalVec(rank), mode);
}

bool UnramifiedCharacter::unitary() const
{
    return std::all_of(exponent_.begin(), exponent_.end(), [](const ComplexRational& z) { return z.re == 0; });
}

bool UnramifiedCharacter::is_trivial() const
{
    return std::all_of(exponent_.begin(), exponent_.end(), [](const ComplexRational& z) { return z.is_zero(); });
}

LambdaRay LambdaRay::principal(int rank)
{
    return {RationalVec(rank, Rational(1)), RationalVec(rank, Rational(0))};
}

Rational pair(const RelativeRootSystem& system, const RationalVec& lambda, int index)
{
    check_rank(system, lambda.size(), "lambda");
    const auto& root = system.root(index);
    const Rational ip = inner_with(system, lambda, over_root(system, index));
    return Rational(system.datum().res_degree()) * 2 * ip / root.norm2;
}

AffineForm pair(const RelativeRootSystem& system, const LambdaRay& ray, int index)
{
    RationalVec offset = ray.offset.empty() ? RationalVec(ray.direction.size(), Rational(0)) : ray.offset;
    return {pair(system, ray.direction, index), pair(system, offset, index)};
}

int pairing_scale(const RelativeRootSystem& system, int index)
{
    const auto& root = system.root(index);
    const Rational scale = Rational(system.datum().res_degree()) * self_inner(system, over_root(system, index)) / root.norm2;
    const int expected = root.rank_one_type == roots::RankOneType::sl2 ? root.d_alpha : 4 * root.d_alpha;
    if (scale != expected)
        throw InvariantError("coroot scale " + gk::to_string(scale) + " disagrees with d_alpha for root " +
                             std::to_string(index));
    return expected;
}

FieldDescriptor coroot_field(const RelativeRootSystem& system, int index)
{
    const auto& root = system.root(index);
    return {root.rank_one_type == roots::RankOneType::sl2 ? root.d_alpha : 2 * root.d_alpha, PlaceKind::global};
}

HeckeCharacterDescriptor compose_with_coroot(const RelativeRootSystem& system, const UnramifiedCharacter& chi, int index)
{
    check_rank(system, chi.exponent().size(), "character exponent");
    pairing_scale(system, index);
    const IntVec& beta = over_root(system, index);
    const ComplexRational ip = inner_with(system, chi.exponent(), beta);
    const ComplexRational e = Rational(2) / self_inner(system, beta) * ip;
    HeckeCharacterDescriptor out;
    out.field = coroot_field(system, index);
    out.exponent = canonical_exponent(e, chi.mode(), out.field.degree);
    return out;
}

HeckeCharacterDescriptor restrict_descriptor(const HeckeCharacterDescriptor& eta, const CharacterMode& mode)
{
    if (eta.field.place != PlaceKind::global)
        throw InputError("restriction is defined for global descriptors only");
    if (eta.field.degree % 2 != 0)
        throw InputError("restriction needs a quadratic extension; field degree " + std::to_string(eta.field.degree) +
                         " is odd");
    HeckeCharacterDescriptor out;
    out.field = {eta.field.degree / 2, PlaceKind::global};
    out.exponent = canonical_exponent(Rational(2) * eta.exponent, mode, out.field.degree);
    out.twist = eta.twist;
    return out;
}

RationalVec transport(const RelativeRootSystem& system, const roots::WeylElement& w, const RationalVec& lambda)
{
    check_rank(system, lambda.size(), "lambda");
    RationalVec c = lambda;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        if (*it < 0 || *it >= system.rank()) throw InputError("reflection index out of range");
        c = reflect_coords(system, *it, c);
    }
    return c;
}

LambdaRay transport(const RelativeRootSystem& system, const roots::WeylElement& w, const LambdaRay& ray)
{
    RationalVec offset = ray.offset.empty() ? RationalVec(ray.direction.size(), Rational(0)) : ray.offset;
    return {transport(system, w, ray.direction), transport(system, w, offset)};
}

UnramifiedCharacter transport(const RelativeRootSystem& system, const roots::WeylElement& w, const UnramifiedCharacter& chi)
{
    check_rank(system, chi.exponent().size(), "character exponent");
    ComplexRationalVec c = chi.exponent();
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        if (*it < 0 || *it >= system.rank()) throw InputError("reflection index out of range");
        c = reflect_coords(system, *it, c);
    }
    return UnramifiedCharacter(std::move(c), chi.mode());
}

}  // namespace gk::chars
