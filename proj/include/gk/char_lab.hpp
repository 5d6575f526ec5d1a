#pragma once

#include <cstdint>
#include <string>

#include "gk/rational.hpp"
#include "gk/root_engine.hpp"
#include "gk/weyl.hpp"

namespace gk::chars {

enum class PlaceKind { global, real, complex };

std::string to_string(PlaceKind k);
PlaceKind parse_place_kind(std::string_view name);

// A finite extension inside the cyclic everywhere-unramified splitting field.
// Such a field has exactly one subfield of each degree, so the degree over F
// identifies it; the label is derived from it.
struct FieldDescriptor {
    int degree = 1;
    PlaceKind place = PlaceKind::global;

    std::string label() const;
    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
    friend auto operator<=>(const FieldDescriptor&, const FieldDescriptor&) = default;
};

enum class Twist { none, eta };  // eta: the unramified quadratic character of E/F

std::string to_string(Twist t);

struct CharacterMode {
    bool function_field = false;
    std::int64_t q = 0;  // residue cardinality of the constant field

    friend bool operator==(const CharacterMode&, const CharacterMode&) = default;
};

// Unramified Hecke character |.|_K^exponent, optionally times eta.
// In function-field mode the imaginary part is kept in units of 2*pi/log q.
struct HeckeCharacterDescriptor {
    FieldDescriptor field;
    ComplexRational exponent;
    Twist twist = Twist::none;

    bool trivial() const { return exponent.is_zero() && twist == Twist::none; }

    friend bool operator==(const HeckeCharacterDescriptor& a, const HeckeCharacterDescriptor& b)
    {
        return a.field == b.field && a.exponent == b.exponent && a.twist == b.twist;
    }
    friend std::strong_ordering operator<=>(const HeckeCharacterDescriptor& a, const HeckeCharacterDescriptor& b)
    {
        if (auto c = a.field <=> b.field; c != 0) return c;
        if (auto c = a.exponent <=> b.exponent; c != 0) return c;
        return a.twist <=> b.twist;
    }
};

std::string to_string(const HeckeCharacterDescriptor& d);

// Canonical representative of an exponent for a field of the given degree
// (imaginary part reduced modulo 1/degree in function-field mode).
ComplexRational canonical_exponent(const ComplexRational& z, const CharacterMode& mode, int degree);

// chi = |.|^mu with mu on the restricted character space, coordinates
// c_O = <mu, alpha_i^vee> for any absolute node i in the orbit O.
class UnramifiedCharacter {
public:
    UnramifiedCharacter() = default;
    UnramifiedCharacter(ComplexRationalVec exponent, CharacterMode mode = {});

    static UnramifiedCharacter trivial(int rank, CharacterMode mode = {});

    const ComplexRationalVec& exponent() const { return exponent_; }
    const CharacterMode& mode() const { return mode_; }
    int rank() const { return static_cast<int>(exponent_.size()); }
    bool unitary() const;
    bool is_trivial() const;

    friend bool operator==(const UnramifiedCharacter&, const UnramifiedCharacter&) = default;

private:
    ComplexRationalVec exponent_;
    CharacterMode mode_;
};

// lambda(s) = s * direction + offset, real coordinates as for characters.
struct LambdaRay {
    RationalVec direction;
    RationalVec offset;

    static LambdaRay principal(int rank);  // direction rho, every coordinate 1
};

// <lambda, alpha^vee> for the coroot of the rank-one Levi of root `index`.
Rational pair(const roots::RelativeRootSystem& system, const RationalVec& lambda, int index);
AffineForm pair(const roots::RelativeRootSystem& system, const LambdaRay& ray, int index);

// pair(lambda, alpha) / <lambda, beta^vee> for an absolute root beta over alpha:
// d_alpha for SL2-type roots, 4 d_alpha for SU21-type roots.
int pairing_scale(const roots::RelativeRootSystem& system, int index);

// Field over which chi o alpha^vee lives: F_alpha, or E_alpha for SU21-type roots.
FieldDescriptor coroot_field(const roots::RelativeRootSystem& system, int index);

HeckeCharacterDescriptor compose_with_coroot(const roots::RelativeRootSystem& system,
                                             const UnramifiedCharacter& chi, int index);

// Restriction from E to its index-two subfield: the exponent doubles, and
// eta_{E'/E} restricts to eta_{E/F} inside the cyclic tower.
HeckeCharacterDescriptor restrict_descriptor(const HeckeCharacterDescriptor& eta, const CharacterMode& mode = {});

// Weyl transport of lambda coordinates, rays and characters.
RationalVec transport(const roots::RelativeRootSystem& system, const roots::WeylElement& w, const RationalVec& lambda);
LambdaRay transport(const roots::RelativeRootSystem& system, const roots::WeylElement& w, const LambdaRay& ray);
UnramifiedCharacter transport(const roots::RelativeRootSystem& system, const roots::WeylElement& w,
                              const UnramifiedCharacter& chi);

}  // namespace gk::chars
