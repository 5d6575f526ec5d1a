#include "gk/group_spec.hpp"

#include <fstream>
#include <numeric>
#include <set>

#include "gk/errors.hpp"

namespace gk::spec {

namespace {

using nlohmann::json;

const std::set<std::string> kKeys = {"diagram",        "automorphism_order", "automorphism", "res_degree",
                                     "label",          "chi_exponent",       "lambda_direction",
                                     "lambda_offset",  "mode",               "weyl_word",    "pole_roots"};

Rational rational_of(const json& j, const std::string& where)
{
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError(where + ": expected an integer or a \"p/q\" string");
}

ComplexRational complex_of(const json& j, const std::string& where)
{
    if (j.is_array()) {
        if (j.size() != 2) throw InputError(where + ": expected a [re, im] pair");
        return {rational_of(j[0], where), rational_of(j[1], where)};
    }
    return {rational_of(j, where), Rational(0)};
}

ComplexRationalVec complex_vector(const json& j, int rank, const std::string& key)
{
    if (!j.is_array()) throw InputError(key + " must be an array");
    if (static_cast<int>(j.size()) != rank)
        throw InputError(key + " has " + std::to_string(j.size()) + " entries; the relative rank is " + std::to_string(rank));
    ComplexRationalVec out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(complex_of(j[i], key + "[" + std::to_string(i) + "]"));
    return out;
}

RationalVec real_vector(const json& j, int rank, const std::string& key)
{
    RationalVec out;
    for (const auto& z : complex_vector(j, rank, key)) {
        if (z.im != 0) throw InputError(key + " must be real; imaginary parts belong in chi_exponent");
        out.push_back(z.re);
    }
    return out;
}

std::vector<int> index_list(const json& j, int bound, const std::string& key)
{
    if (!j.is_array()) throw InputError(key + " must be an array of 1-based indices");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InputError(key + " entries must be integers");
        const int i = v.get<int>();
        if (i < 1 || i > bound) throw InputError(key + " entry " + std::to_string(i) + " outside 1.." + std::to_string(bound));
        out.push_back(i - 1);
    }
    return out;
}

roots::DynkinDiagram parse_diagram(const json& j)
{
    if (j.is_string()) return roots::DynkinDiagram::from_type(j.get<std::string>());
    if (!j.is_object()) throw InputError("diagram must be a type string or {nodes, edges}");
    const int nodes = j.at("nodes").get<int>();
    std::vector<roots::DiagramEdge> edges;
    for (const auto& e : j.value("edges", json::array())) {
        if (!e.is_array() || (e.size() != 2 && e.size() != 3)) throw InputError("edges must be [i, j] or [i, j, m]");
        edges.push_back({e[0].get<int>() - 1, e[1].get<int>() - 1, e.size() == 3 ? e[2].get<int>() : 1});
    }
    return roots::DynkinDiagram::from_edges(nodes, edges);
}

}  // namespace

roots::GroupDatum parse_datum(const json& j)
{
    if (!j.is_object()) throw InputError("group spec must be a JSON object");
    if (!j.contains("diagram")) throw InputError("group spec needs a \"diagram\"");
    auto diagram = parse_diagram(j.at("diagram"));
    const int order = j.value("automorphism_order", 1);
    std::vector<int> perm;
    if (j.contains("automorphism")) {
        perm = index_list(j.at("automorphism"), diagram.rank(), "automorphism");
    } else if (order > 1) {
        if (!j.at("diagram").is_string()) throw InputError("explicit diagrams need an explicit automorphism");
        perm = roots::standard_automorphism(j.at("diagram").get<std::string>(), order);
    }
    const int res = j.value("res_degree", 1);
    std::string label = j.value("label", std::string{});
    return roots::GroupDatum(std::move(diagram), std::move(perm), order, res, std::move(label));
}

GroupSpec parse_group_spec(const json& j)
{
    try {
        if (!j.is_object()) throw InputError("group spec must be a JSON object");
        for (const auto& [key, value] : j.items())
            if (!kKeys.count(key)) throw InputError("unknown key \"" + key + "\" in group spec");
        roots::RelativeRootSystem system(parse_datum(j));
        const int rank = system.rank();

        chars::CharacterMode mode;
        if (j.contains("mode")) {
            const auto& m = j.at("mode");
            if (m.is_string() && m.get<std::string>() == "number") {
            } else if (m.is_object() && m.contains("function")) {
                mode.function_field = true;
                mode.q = m.at("function").get<std::int64_t>();
            } else {
                throw InputError("mode must be \"number\" or {\"function\": q}");
            }
        }
        chars::UnramifiedCharacter chi =
            j.contains("chi_exponent") ? chars::UnramifiedCharacter(complex_vector(j.at("chi_exponent"), rank, "chi_exponent"), mode)
                                       : chars::UnramifiedCharacter::trivial(rank, mode);

        chars::LambdaRay ray = chars::LambdaRay::principal(rank);
        if (j.contains("lambda_direction")) ray.direction = real_vector(j.at("lambda_direction"), rank, "lambda_direction");
        if (j.contains("lambda_offset")) ray.offset = real_vector(j.at("lambda_offset"), rank, "lambda_offset");

        roots::WeylElement w;
        const json word = j.value("weyl_word", json("longest"));
        if (word.is_string()) {
            if (word.get<std::string>() != "longest") throw InputError("weyl_word must be a list or \"longest\"");
            w = roots::weyl_longest(system);
        } else {
            w = roots::weyl_normalize(system, index_list(word, rank, "weyl_word"));
        }

        std::vector<int> pole_roots(system.positive_roots().size());
        std::iota(pole_roots.begin(), pole_roots.end(), 0);
        if (j.contains("pole_roots"))
            pole_roots = index_list(j.at("pole_roots"), static_cast<int>(system.positive_roots().size()), "pole_roots");

        return GroupSpec{std::move(system), std::move(chi), std::move(ray), std::move(w), std::move(pole_roots)};
    } catch (const json::exception& e) {
        throw InputError(std::string("group spec: ") + e.what());
    }
}

GroupSpec load_group_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return parse_group_spec(j);
}

}  // namespace gk::spec
