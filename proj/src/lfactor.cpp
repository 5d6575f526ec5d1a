#include "gk/lfactor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "gk/errors.hpp"

namespace gk::lfactor {

namespace {

using chars::PlaceKind;
using chars::Twist;
using nlohmann::json;

Atom make_atom(AtomKind kind, FieldDescriptor field, AffineForm arg, Rational im, Twist twist)
{
    HeckeCharacterDescriptor ch;
    ch.field = field;
    ch.exponent = {Rational(0), im};
    ch.twist = twist;
    return {kind, field, arg, ch};
}

// L(arg)/(eps(arg) L(1 + arg)).
void push_ratio(MeromorphicProduct& p, FieldDescriptor field, AffineForm arg, Rational im, Twist twist)
{
    p.terms.push_back({make_atom(AtomKind::hecke_l, field, arg, im, twist), 1});
    p.terms.push_back({make_atom(AtomKind::epsilon, field, arg, im, twist), -1});
    p.terms.push_back({make_atom(AtomKind::hecke_l, field, arg + AffineForm{0, 1}, im, twist), -1});
}

// w = arg(s) + i t as a complex number, t rescaled in function-field mode.
Complex full_argument(const Atom& atom, Complex s, bool function_field, std::int64_t q)
{
    const Complex z = to_double(atom.arg.a) * s + to_double(atom.arg.b);
    double t = to_double(atom.character.exponent.im);
    if (function_field) t *= 2.0 * std::numbers::pi / std::log(static_cast<double>(q));
    return z + Complex(0.0, t);
}

json rational_json(const Rational& r)
{
    return gk::to_string(r);
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("expected a rational as integer or \"p/q\" string");
}

std::string field_subscript(const FieldDescriptor& f)
{
    return f.label();
}

}  // namespace

std::string to_string(AtomKind k)
{
    return k == AtomKind::hecke_l ? "L" : "eps";
}

MeromorphicProduct normalize(const MeromorphicProduct& p)
{
    std::vector<Term> sorted = p.terms;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Term& x, const Term& y) { return x.atom < y.atom; });
    MeromorphicProduct out;
    for (const auto& t : sorted) {
        if (!out.terms.empty() && out.terms.back().atom == t.atom) out.terms.back().exponent += t.exponent;
        else out.terms.push_back(t);
    }
    std::erase_if(out.terms, [](const Term& t) { return t.exponent == 0; });
    out.normalized = true;
    return out;
}

MeromorphicProduct multiply(const MeromorphicProduct& a, const MeromorphicProduct& b)
{
    MeromorphicProduct out;
    out.terms = a.terms;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return normalize(out);
}

MeromorphicProduct r_alpha(const AffineForm& pairing, int d_alpha, roots::RankOneType type,
                           const HeckeCharacterDescriptor& eta, const chars::CharacterMode& mode)
{
    if (d_alpha < 1) throw InputError("d_alpha must be positive");
    const int expected = type == roots::RankOneType::sl2 ? d_alpha : 2 * d_alpha;
    if (eta.field.degree != expected || eta.field.place != PlaceKind::global)
        throw InputError("character lives over a field of degree " + std::to_string(eta.field.degree) +
                         ", expected a global field of degree " + std::to_string(expected));
    MeromorphicProduct p;
    const Rational d(d_alpha);
    if (type == roots::RankOneType::sl2) {
        push_ratio(p, eta.field, pairing / d + AffineForm{0, eta.exponent.re}, eta.exponent.im, eta.twist);
        return normalize(p);
    }
    push_ratio(p, eta.field, pairing / (4 * d) + AffineForm{0, eta.exponent.re}, eta.exponent.im, eta.twist);
    HeckeCharacterDescriptor down = chars::restrict_descriptor(eta, mode);
    down.twist = down.twist == Twist::eta ? Twist::none : Twist::eta;
    push_ratio(p, down.field, pairing / (2 * d) + AffineForm{0, down.exponent.re}, down.exponent.im, down.twist);
    return normalize(p);
}

MeromorphicProduct drop_epsilon(const MeromorphicProduct& p)
{
    MeromorphicProduct out = p;
    std::erase_if(out.terms, [](const Term& t) { return t.atom.kind == AtomKind::epsilon; });
    return normalize(out);
}

std::vector<Rational> ledger_pole_arguments(const Atom& atom)
{
    // Completed Hecke L of the trivial character: simple poles at 0 and 1.
    // Nontrivial unitary unramified characters: entire. Eps: entire, no zeros.
    if (atom.kind == AtomKind::hecke_l && atom.character.trivial()) return {Rational(0), Rational(1)};
    return {};
}

PoleProfile poles_positive(const MeromorphicProduct& p, bool include_conditional)
{
    if (!p.normalized) throw InputError("pole analysis needs a normalized product");
    std::map<Rational, int> net;
    std::map<Rational, int> candidates;
    for (const auto& t : p.terms) {
        const auto& arg = t.atom.arg;
        if (arg.a == 0) continue;
        for (const Rational& z : ledger_pole_arguments(t.atom)) {
            const Rational loc = (z - arg.b) / arg.a;
            if (loc > 0) net[loc] += t.exponent;
        }
        if (include_conditional && t.atom.kind == AtomKind::hecke_l && !t.atom.character.trivial() && t.exponent > 0) {
            const Rational loc = (Rational(1) - arg.b) / arg.a;
            if (loc > 0) candidates[loc] += t.exponent;
        }
    }
    PoleProfile out;
    for (const auto& [loc, order] : net)
        if (order > 0) out.entries.push_back({-1, loc, order, false});
    for (const auto& [loc, order] : candidates) out.entries.push_back({-1, loc, order, true});
    std::stable_sort(out.entries.begin(), out.entries.end(),
                     [](const PoleEntry& a, const PoleEntry& b) { return a.location < b.location; });
    return out;
}

Complex local_euler_value(const Atom& atom, const EulerPlace& place, Complex s)
{
    if (atom.field.place != PlaceKind::global)
        throw InputError("Archimedean atom passed to the non-Archimedean evaluator");
    if (place.q < 2) throw InputError("residue cardinality must be at least 2");
    if (atom.kind == AtomKind::epsilon) return 1.0;
    const Complex w = full_argument(atom, s, place.function_field, place.q);
    const double logq = std::log(static_cast<double>(place.q));
    const int k = atom.field.degree;
    Complex factor;
    if (place.splitting == Splitting::inert) {
        const double c = atom.character.twist == Twist::eta ? -1.0 : 1.0;
        const Complex denom = 1.0 - c * std::exp(-w * (k * logq));
        if (std::abs(denom) == 0.0) throw PoleError("local factor has a pole at this point");
        factor = 1.0 / denom;
    } else {
        const Complex denom = 1.0 - std::exp(-w * logq);
        if (std::abs(denom) == 0.0) throw PoleError("local factor has a pole at this point");
        factor = std::pow(1.0 / denom, k);
    }
    return factor;
}

Complex local_euler_value(const MeromorphicProduct& p, const EulerPlace& place, Complex s)
{
    Complex acc = 1.0;
    for (const auto& t : p.terms) acc *= std::pow(local_euler_value(t.atom, place, s), t.exponent);
    return acc;
}

MeromorphicProduct at_archimedean_place(const MeromorphicProduct& p)
{
    MeromorphicProduct out = p;
    for (auto& t : out.terms) {
        PlaceKind kind;
        if (t.atom.field.degree == 1) kind = PlaceKind::real;
        else if (t.atom.field.degree == 2) kind = PlaceKind::complex;
        else throw InputError("no Archimedean completion of a degree " + std::to_string(t.atom.field.degree) + " field");
        t.atom.field.place = kind;
        t.atom.character.field.place = kind;
    }
    return normalize(out);
}

Complex arch_value(const Atom& atom, Complex s)
{
    if (atom.field.place == PlaceKind::global) throw InputError("global atom passed to the Archimedean evaluator");
    if (atom.kind == AtomKind::epsilon) return 1.0;
    const double pi = std::numbers::pi;
    const Complex z = full_argument(atom, s, false, 0);
    if (atom.field.place == PlaceKind::complex) {
        if (atom.character.twist == Twist::eta) throw InputError("C has no quadratic character");
        return 2.0 * std::pow(2.0 * pi, -z) * numeric::gamma(z);
    }
    if (atom.character.twist == Twist::eta) return std::pow(pi, -(z + 1.0) / 2.0) * numeric::gamma((z + 1.0) / 2.0);
    return std::pow(pi, -z / 2.0) * numeric::gamma(z / 2.0);
}

Complex arch_value(const MeromorphicProduct& p, Complex s)
{
    Complex acc = 1.0;
    for (const auto& t : p.terms) acc *= std::pow(arch_value(t.atom, s), t.exponent);
    return acc;
}

json to_json(const Atom& atom)
{
    return {
        {"kind", to_string(atom.kind)},
        {"field", {{"label", atom.field.label()}, {"degree", atom.field.degree}, {"place_kind", chars::to_string(atom.field.place)}}},
        {"a", rational_json(atom.arg.a)},
        {"b", rational_json(atom.arg.b)},
        {"character",
         {{"exponent", {rational_json(atom.character.exponent.re), rational_json(atom.character.exponent.im)}},
          {"twist", chars::to_string(atom.character.twist)}}},
    };
}

json to_json(const MeromorphicProduct& p)
{
    json arr = json::array();
    for (const auto& t : p.terms) {
        json j = to_json(t.atom);
        j["exponent"] = t.exponent;
        arr.push_back(std::move(j));
    }
    return arr;
}

json to_json(const PoleProfile& p)
{
    json arr = json::array();
    for (const auto& e : p.entries) {
        json j = {{"location", rational_json(e.location)}, {"order", e.order}, {"conditional", e.conditional}};
        if (e.root >= 0) j["root"] = e.root + 1;
        arr.push_back(std::move(j));
    }
    return arr;
}

MeromorphicProduct product_from_json(const json& j)
{
    if (!j.is_array()) throw InputError("product must be a JSON array");
    MeromorphicProduct p;
    try {
        for (const auto& item : j) {
            Atom atom;
            const std::string kind = item.at("kind").get<std::string>();
            if (kind == "L") atom.kind = AtomKind::hecke_l;
            else if (kind == "eps") atom.kind = AtomKind::epsilon;
            else throw InputError("unknown atom kind '" + kind + "'");
            const auto& field = item.at("field");
            atom.field.degree = field.at("degree").get<int>();
            atom.field.place = chars::parse_place_kind(field.at("place_kind").get<std::string>());
            if (atom.field.degree < 1) throw InputError("field degree must be positive");
            atom.arg = {rational_from_json(item.at("a")), rational_from_json(item.at("b"))};
            const auto& ch = item.at("character");
            const auto& ex = ch.at("exponent");
            if (!ex.is_array() || ex.size() != 2) throw InputError("character exponent must be a [re, im] pair");
            atom.character.field = atom.field;
            atom.character.exponent = {rational_from_json(ex[0]), rational_from_json(ex[1])};
            const std::string twist = ch.at("twist").get<std::string>();
            if (twist == "none") atom.character.twist = Twist::none;
            else if (twist == "eta") atom.character.twist = Twist::eta;
            else throw InputError("unknown twist '" + twist + "'");
            p.terms.push_back({atom, item.at("exponent").get<int>()});
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed product: ") + e.what());
    }
    return normalize(p);
}

std::string render(const Atom& atom, std::string_view var)
{
    std::string out = atom.kind == AtomKind::hecke_l ? "L_" : "ε_";
    out += field_subscript(atom.field);
    out += "(" + to_string(atom.arg, var);
    const auto& ch = atom.character;
    if (ch.exponent.im != 0) out += ", |.|^(" + to_string(ComplexRational{0, ch.exponent.im}) + ")";
    if (ch.twist == Twist::eta) out += ", η";
    out += ")";
    return out;
}

std::string render(const MeromorphicProduct& p, std::string_view var)
{
    std::string num, den;
    int den_count = 0;
    for (const auto& t : p.terms) {
        std::string piece = render(t.atom, var);
        const int e = std::abs(t.exponent);
        if (e != 1) piece += "^" + std::to_string(e);
        std::string& target = t.exponent > 0 ? num : den;
        if (!target.empty()) target += " ";
        target += piece;
        if (t.exponent < 0) ++den_count;
    }
    if (num.empty() && den.empty()) return "1";
    if (num.empty()) num = "1";
    if (den.empty()) return num;
    return num + " / " + (den_count > 1 ? "(" + den + ")" : den);
}

}  // namespace gk::lfactor
