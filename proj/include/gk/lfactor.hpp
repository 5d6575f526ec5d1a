#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "gk/char_lab.hpp"
#include "gk/gamma.hpp"
#include "gk/rational.hpp"
#include "gk/root_engine.hpp"

namespace gk::lfactor {

using chars::FieldDescriptor;
using chars::HeckeCharacterDescriptor;
using numeric::Complex;

enum class AtomKind { hecke_l, epsilon };

std::string to_string(AtomKind k);

// Completed L(arg, character) or eps(arg, character) over `field`. The real
// part of the character exponent is always folded into the argument, so
// `character` carries only an imaginary exponent and the quadratic twist.
struct Atom {
    AtomKind kind = AtomKind::hecke_l;
    FieldDescriptor field;
    AffineForm arg;
    HeckeCharacterDescriptor character;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend std::strong_ordering operator<=>(const Atom& x, const Atom& y)
    {
        if (auto c = x.kind <=> y.kind; c != 0) return c;
        if (auto c = x.field <=> y.field; c != 0) return c;
        if (auto c = x.character <=> y.character; c != 0) return c;
        return x.arg <=> y.arg;
    }
};

struct Term {
    Atom atom;
    int exponent = 1;  // > 0 numerator, < 0 denominator

    friend bool operator==(const Term&, const Term&) = default;
};

struct MeromorphicProduct {
    std::vector<Term> terms;
    bool normalized = false;

    bool is_one() const { return terms.empty(); }
    friend bool operator==(const MeromorphicProduct& a, const MeromorphicProduct& b) { return a.terms == b.terms; }
};

MeromorphicProduct normalize(const MeromorphicProduct& p);
MeromorphicProduct multiply(const MeromorphicProduct& a, const MeromorphicProduct& b);

// r_alpha(pairing, eta) of the rank-one Levi of the given type and degree.
MeromorphicProduct r_alpha(const AffineForm& pairing, int d_alpha, roots::RankOneType type,
                           const HeckeCharacterDescriptor& eta, const chars::CharacterMode& mode = {});

// Removes eps atoms: for everywhere unramified data the global eps factor is 1.
MeromorphicProduct drop_epsilon(const MeromorphicProduct& p);

// Arguments at which the ledger places poles of the atom: {0, 1} for a
// trivial-character L atom, nothing otherwise (eps atoms are units).
std::vector<Rational> ledger_pole_arguments(const Atom& atom);

struct PoleEntry {
    int root = -1;  // relative root index, set by callers that know it
    Rational location;
    int order = 0;
    bool conditional = false;

    friend bool operator==(const PoleEntry&, const PoleEntry&) = default;
};

struct PoleProfile {
    std::vector<PoleEntry> entries;
};

// Poles on s > 0 in the variable of the atoms' affine arguments. Requires a
// normalized product. Conditional candidates (first-order numerator atoms with
// a nontrivial unitary character, at argument 1) only when asked.
PoleProfile poles_positive(const MeromorphicProduct& p, bool include_conditional = false);

enum class Splitting { inert, split };

// A finite place of F, either inert or completely split in the cyclic
// splitting field. The residue degree of a degree-k field at an inert place is k.
struct EulerPlace {
    std::int64_t q = 2;
    Splitting splitting = Splitting::inert;
    bool function_field = false;  // imaginary exponents in units of 2 pi / log q
};

Complex local_euler_value(const Atom& atom, const EulerPlace& place, Complex s);
Complex local_euler_value(const MeromorphicProduct& p, const EulerPlace& place, Complex s);

// Re-home global atoms at an Archimedean place: degree 1 -> R, degree 2 -> C.
MeromorphicProduct at_archimedean_place(const MeromorphicProduct& p);

// L_C(z) = 2 (2 pi)^-z Gamma(z), L_R(z, sgn) = pi^-(z+1)/2 Gamma((z+1)/2),
// L_R(z) = pi^-z/2 Gamma(z/2); eps atoms are 1. Throws PoleError on Gamma poles.
Complex arch_value(const Atom& atom, Complex s);
Complex arch_value(const MeromorphicProduct& p, Complex s);

nlohmann::json to_json(const Atom& atom);
nlohmann::json to_json(const MeromorphicProduct& p);
nlohmann::json to_json(const PoleProfile& p);
MeromorphicProduct product_from_json(const nlohmann::json& j);

// Text rendering in the customary notation, e.g. "L_F(s) / (eps_F(s) L_F(1 + s))".
std::string render(const Atom& atom, std::string_view var = "s");
std::string render(const MeromorphicProduct& p, std::string_view var = "s");

}  // namespace gk::lfactor
