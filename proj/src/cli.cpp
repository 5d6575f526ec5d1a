#include "gk/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gk/errors.hpp"
#include "gk/gk_core.hpp"
#include "gk/group_spec.hpp"
#include "gk/verification.hpp"

namespace gk::cli {

namespace {

using nlohmann::json;
using roots::RelativeRootSystem;

struct Options {
    std::string input;
    std::string format = "text";
    int depth = 60;
    std::optional<double> tol;  // per-command default when unset
    std::vector<std::int64_t> qs;
    std::string s_grid;
    std::string variable;
    std::string family;
    int n = 0;
    int res_degree = 1;
    int count = 200;
    bool conditional = false;
    bool eps_one = false;
};

// The classification lists every length class the family can have; only the
// classes present in the folded system are compared.
bool tables_agree(const std::map<roots::LengthClass, int>& table, const std::map<roots::LengthClass, int>& derived)
{
    for (const auto& [cls, d] : derived) {
        const auto it = table.find(cls);
        if (it == table.end() || it->second != d) return false;
    }
    return true;
}

std::string coords_string(const IntVec& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

std::string word_string(const roots::WeylElement& w)
{
    if (w.word.empty()) return "1";
    std::string out;
    for (int i : w.word) out += (out.empty() ? "s" : " s") + std::to_string(i + 1);
    return out;
}

json word_json(const roots::WeylElement& w)
{
    json arr = json::array();
    for (int i : w.word) arr.push_back(i + 1);
    return arr;
}

std::vector<double> parse_grid(const std::string& text)
{
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        if (item.find('/') != std::string::npos) {
            out.push_back(to_double(parse_rational(item)));
            continue;
        }
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw InputError("bad s value '" + item + "'");
        } catch (const std::logic_error&) {
            throw InputError("bad s value '" + item + "'");
        }
    }
    if (out.empty()) throw InputError("empty --s-grid");
    return out;
}

oracle::OracleConfig oracle_config(const Options& o)
{
    oracle::OracleConfig cfg;
    cfg.depth = o.depth;
    if (o.tol) cfg.tolerance = *o.tol;
    if (!o.s_grid.empty()) cfg.samples = parse_grid(o.s_grid);
    oracle::validate(cfg);
    return cfg;
}

spec::GroupSpec require_spec(const Options& o)
{
    if (o.input.empty()) throw InputError("--input is required for this command");
    return spec::load_group_spec(o.input);
}

std::string group_name(const RelativeRootSystem& system)
{
    const auto& label = system.datum().label();
    return (label.empty() ? system.datum().diagram().name() : label);
}

json roots_json(const RelativeRootSystem& system)
{
    json arr = json::array();
    for (const auto& r : system.positive_roots()) {
        arr.push_back({{"index", r.index + 1},
                       {"coords", r.coords},
                       {"length_class", roots::to_string(r.length_class)},
                       {"d_alpha", r.d_alpha},
                       {"rank_one_type", roots::to_string(r.rank_one_type)},
                       {"orbit_size", r.orbit.size()}});
    }
    return arr;
}

json table_json(const std::map<roots::LengthClass, int>& t)
{
    json j = json::object();
    for (const auto& [cls, d] : t) j[roots::to_string(cls)] = d;
    return j;
}

std::string table_text(const std::map<roots::LengthClass, int>& t)
{
    std::string out = "{";
    bool first = true;
    for (const auto& [cls, d] : t) {
        out += (first ? "" : ", ") + roots::to_string(cls) + ": " + std::to_string(d);
        first = false;
    }
    return out + "}";
}

int cmd_classify(const Options& o, std::ostream& out)
{
    const auto sp = require_spec(o);
    const auto& system = sp.system;
    const auto derived = roots::derived_table(system);
    const auto fam = roots::identify_family(system.datum());
    std::optional<std::map<roots::LengthClass, int>> table;
    if (fam && roots::family_rank_admissible(fam->first, fam->second))
        table = roots::proposition_table(fam->first, fam->second, system.datum().res_degree());

    if (o.format == "json") {
        json j = {{"group", group_name(system)},
                  {"relative_type", system.type_string()},
                  {"relative_rank", system.rank()},
                  {"relative_cartan", system.cartan()},
                  {"divisible_roots", system.had_divisible_roots()},
                  {"positive_roots", roots_json(system)},
                  {"d_alpha", table_json(derived)}};
        json orbits = json::array();
        for (const auto& orb : system.orbits()) {
            json o1 = json::array();
            for (int v : orb) o1.push_back(v + 1);
            orbits.push_back(o1);
        }
        j["simple_orbits"] = orbits;
        if (table) {
            j["family"] = roots::to_string(fam->first);
            j["family_n"] = fam->second;
            j["classification_table"] = table_json(*table);
            j["tables_agree"] = tables_agree(*table, derived);
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "group: " << group_name(system) << "\n";
    out << "relative type: " << system.type_string() << " (rank " << system.rank() << ")"
        << (system.had_divisible_roots() ? ", divisible roots dropped" : "") << "\n";
    out << "relative simple roots (absolute node orbits):";
    for (std::size_t i = 0; i < system.orbits().size(); ++i) {
        out << "  " << i + 1 << ":{";
        for (std::size_t k = 0; k < system.orbits()[i].size(); ++k) out << (k ? "," : "") << system.orbits()[i][k] + 1;
        out << "}";
    }
    out << "\npositive reduced roots:\n";
    for (const auto& r : system.positive_roots())
        out << "  [" << r.index + 1 << "] " << coords_string(r.coords) << "  " << roots::to_string(r.length_class)
            << "  d_alpha=" << r.d_alpha << "  " << roots::to_string(r.rank_one_type) << "\n";
    out << "d_alpha by length class (folded): " << table_text(derived) << "\n";
    if (table) {
        out << "classification table (" << roots::to_string(fam->first) << ", n=" << fam->second
            << "): " << table_text(*table) << (tables_agree(*table, derived) ? "" : "  [differs from folded]") << "\n";
    }
    return 0;
}

json factor_json(const RelativeRootSystem& system, const core::RootFactor& f)
{
    const auto& r = system.root(f.root);
    return {{"root", f.root + 1},
            {"coords", r.coords},
            {"d_alpha", r.d_alpha},
            {"rank_one_type", roots::to_string(r.rank_one_type)},
            {"pairing", {{"a", to_string(f.pairing.a)}, {"b", to_string(f.pairing.b)}}},
            {"local_variable", to_string(f.pairing / Rational(f.scale))},
            {"scale", f.scale},
            {"character", {{"exponent", to_string(f.character.exponent)}, {"twist", chars::to_string(f.character.twist)}}},
            {"factor", lfactor::to_json(f.factor)}};
}

json poles_json(const RelativeRootSystem& system, const core::PoleReport& report)
{
    json ratios = json::array();
    for (const auto& comp : core::component_poles(system, report)) {
        json c = {{"component", comp.component + 1}, {"type", comp.type}};
        const auto obs = comp.observed();
        c["observed"] = obs ? core::to_string(*obs) : "inconsistent or empty";
        try {
            c["rule"] = core::to_string(core::corollary_ratio_table(comp.type));
        } catch (const InputError&) {
            c["rule"] = "none";
        }
        ratios.push_back(c);
    }
    return {{"poles", lfactor::to_json(report.profile)}, {"ratios", ratios}, {"warnings", report.warnings}};
}

int cmd_constant_term(const Options& o, std::ostream& out)
{
    const auto sp = require_spec(o);
    const auto& system = sp.system;
    const auto conv = o.variable.empty() ? core::VariableConvention::ray : core::parse_variable_convention(o.variable);
    auto report = core::constant_term(system, sp.chi, sp.ray, sp.w, conv);
    if (o.eps_one) {
        report.product = lfactor::drop_epsilon(report.product);
        for (auto& f : report.per_root) f.factor = lfactor::drop_epsilon(f.factor);
    }
    const auto poles = core::pole_profile(system, sp.chi, sp.ray, roots::inversion_set(system, sp.w), core::VariableConvention::global, o.conditional);
    if (o.format == "json") {
        json per_root = json::array();
        for (const auto& f : report.per_root) per_root.push_back(factor_json(system, f));
        json j = {{"group", group_name(system)},
                  {"w", word_json(sp.w)},
                  {"variable_convention", core::to_string(conv)},
                  {"eps_one", o.eps_one},
                  {"product", lfactor::to_json(report.product)},
                  {"per_root", per_root}};
        const json pj = poles_json(system, poles);
        j["poles"] = pj["poles"];
        j["ratios"] = pj["ratios"];
        j["pole_variable"] = "global";
        out << j.dump(2) << "\n";
        return 0;
    }
    const std::string var = "s";
    out << "group: " << group_name(system) << " (relative " << system.type_string() << ")\n";
    out << "w = " << word_string(sp.w) << " (length " << sp.w.length() << ")\n";
    out << "variable: " << core::to_string(conv) << "\n";
    for (const auto& f : report.per_root) {
        const auto& r = system.root(f.root);
        out << "  [" << f.root + 1 << "] " << coords_string(r.coords) << "  " << roots::to_string(r.rank_one_type)
            << " d_alpha=" << r.d_alpha << "  <lambda,alpha^vee> = " << to_string(f.pairing, var)
            << "  chi o alpha^vee = " << chars::to_string(f.character) << "\n";
        out << "      " << lfactor::render(f.factor, var) << "\n";
    }
    out << "product: " << lfactor::render(report.product, var) << "\n";
    return 0;
}

int cmd_poles(const Options& o, std::ostream& out)
{
    const auto sp = require_spec(o);
    const auto& system = sp.system;
    const auto conv = o.variable.empty() ? core::VariableConvention::global : core::parse_variable_convention(o.variable);
    const auto report = core::pole_profile(system, sp.chi, sp.ray, sp.pole_roots, conv, o.conditional);
    if (o.format == "json") {
        json j = poles_json(system, report);
        j["group"] = group_name(system);
        j["variable_convention"] = core::to_string(conv);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "group: " << group_name(system) << " (relative " << system.type_string() << "), variable: "
        << core::to_string(conv) << "\n";
    for (const auto& e : report.profile.entries) {
        const auto& r = system.root(e.root);
        out << "  root [" << e.root + 1 << "] " << coords_string(r.coords) << " " << roots::to_string(r.length_class)
            << ": pole at " << to_string(e.location) << ", order " << e.order << (e.conditional ? " (conditional)" : "")
            << "\n";
    }
    for (const auto& comp : core::component_poles(system, report)) {
        const auto obs = comp.observed();
        out << "  component " << comp.component + 1 << " (" << comp.type << "): "
            << (obs ? core::to_string(*obs) : comp.locations.empty() ? "no unconditional poles" : "no consistent pole data");
        try {
            out << "; rule " << core::to_string(core::corollary_ratio_table(comp.type));
        } catch (const InputError&) {
        }
        out << "\n";
    }
    for (const auto& w : report.warnings) out << "  warning: " << w << "\n";
    return 0;
}

int cmd_tables(const Options& o, std::ostream& out)
{
    std::vector<std::pair<roots::Family, int>> rows;
    if (!o.family.empty()) {
        const auto f = roots::parse_family(o.family);
        if (o.n > 0) rows.push_back({f, o.n});
        else
            for (int n = 1; n <= 6; ++n)
                if (roots::family_rank_admissible(f, n)) rows.push_back({f, n});
    } else {
        using roots::Family;
        for (Family f : {Family::split, Family::su_n_n1, Family::su_n_n, Family::spin_minus, Family::triality_d4, Family::outer_e6})
            for (int n = 1; n <= 6; ++n)
                if (roots::family_rank_admissible(f, n)) rows.push_back({f, n});
    }
    json arr = json::array();
    bool text = o.format != "json";
    for (const auto& [f, n] : rows) {
        const auto table = roots::proposition_table(f, n, o.res_degree);
        const RelativeRootSystem system(roots::family_datum(f, n, o.res_degree));
        const auto derived = roots::derived_table(system);
        if (text) {
            out << roots::to_string(f) << " n=" << n << " d'=" << o.res_degree << "  relative " << system.type_string()
                << "  table " << table_text(table) << "  folded " << table_text(derived)
                << (tables_agree(table, derived) ? "" : "  [differs]") << "\n";
        } else {
            arr.push_back({{"family", roots::to_string(f)},
                           {"n", n},
                           {"res_degree", o.res_degree},
                           {"relative_type", system.type_string()},
                           {"table", table_json(table)},
                           {"folded", table_json(derived)},
                           {"agree", tables_agree(table, derived)}});
        }
    }
    if (!text) out << arr.dump(2) << "\n";
    return 0;
}

int report_checks(const std::vector<verify::Check>& checks, const Options& o, std::ostream& out)
{
    bool ok = std::all_of(checks.begin(), checks.end(), [](const verify::Check& c) { return c.pass; });
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back(verify::to_json(c));
        out << json{{"checks", arr}, {"pass", ok}}.dump(2) << "\n";
    } else {
        for (const auto& c : checks)
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " " << c.inputs.dump() << "  observed " << c.observed
                << "  expected " << c.expected << "  abs_err " << c.abs_err << "\n";
        out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

std::uint64_t env_seed()
{
    const char* s = std::getenv("GK_SEED");
    if (!s || !*s) return 20240601ULL;
    try {
        return std::stoull(s);
    } catch (const std::logic_error&) {
        throw InputError(std::string("GK_SEED must be an unsigned integer, got '") + s + "'");
    }
}

int cmd_verify_local(const Options& o, std::ostream& out)
{
    auto cfg = oracle_config(o);
    std::vector<std::int64_t> qs = o.qs.empty() ? std::vector<std::int64_t>{2, 3, 5} : o.qs;
    for (auto q : qs)
        if (q < 2) throw InputError("--q values must be at least 2");
    if (o.format != "json")
        for (auto q : qs)
            if (q % 2 == 0) out << "note: SU(2,1) shell oracle skipped for even q=" << q << "\n";
    return report_checks(verify::verify_local(qs, cfg), o, out);
}

int cmd_verify_arch(const Options& o, std::ostream& out)
{
    const auto samples = o.s_grid.empty() ? std::vector<double>{0.7, 1.3, 2.1, 2.9, 3.6} : parse_grid(o.s_grid);
    return report_checks(verify::verify_arch(samples, o.tol.value_or(verify::pinned::arch_rel_tol)), o, out);
}

int cmd_verify_all(const Options& o, std::ostream& out)
{
    auto cfg = oracle_config(o);
    const auto results = verify::run_acceptance(cfg, env_seed());
    bool ok = true;
    for (const auto& r : results) ok = ok && r.pass();
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(verify::to_json(r));
        out << json{{"criteria", arr}, {"pass", ok}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) out << verify::format_line(r);
        out << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_property(const Options& o, std::ostream& out)
{
    if (o.count < 1) throw InputError("--count must be positive");
    const auto seed = env_seed();
    if (o.format != "json") out << "seed " << seed << "\n";
    return report_checks(verify::property_checks(seed, o.count), o, out);
}

void emit_error(const Options& o, std::ostream& out, std::ostream& err, const std::string& kind, const std::string& what)
{
    if (o.format == "json") out << json{{"error", kind}, {"message", what}}.dump(2) << "\n";
    err << "gkcalc: " << kind << ": " << what << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Gindikin-Karpelevich constant terms for unramified quasi-split groups", "gkcalc"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--input", o.input, "group-spec JSON file");
    app.add_option("--output-format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--depth", o.depth, "valuation shells summed by the local oracles");
    app.add_option("--tol", o.tol, "tolerance for oracle comparisons");
    app.add_option("--q", o.qs, "residue cardinalities (repeatable)");
    app.add_option("--s,--s-grid", o.s_grid, "comma-separated s samples, e.g. 1,3/2,2");
    app.add_option("--variable", o.variable, "ray, global or local")->check(CLI::IsMember({"ray", "global", "local"}));
    app.add_flag("--conditional", o.conditional, "also list conditional pole candidates");
    app.add_flag("--eps-one", o.eps_one, "drop global eps atoms (their product is 1 for unramified data)");
    app.fallthrough();

    auto* classify = app.add_subcommand("classify", "relative root system, d_alpha and rank-one types");
    auto* constant = app.add_subcommand("constant-term", "the L-factor product on the spherical vector");
    auto* poles = app.add_subcommand("poles", "positive poles and ratios per component");
    auto* tables = app.add_subcommand("tables", "classification tables against the folded computation");
    tables->add_option("--family", o.family, "split, SU(n,n+1), SU(n,n), Spin2n-, 3D4, 2E6");
    tables->add_option("--n", o.n, "family index n");
    tables->add_option("--res-degree", o.res_degree, "restriction-of-scalars degree d'");
    auto* vlocal = app.add_subcommand("verify-local", "p-adic shell-sum oracles against closed forms");
    auto* varch = app.add_subcommand("verify-arch", "Archimedean constancy and Legendre duplication");
    auto* vall = app.add_subcommand("verify-all", "every acceptance criterion");
    auto* prop = app.add_subcommand("property", "randomized property checks seeded by GK_SEED");
    prop->add_option("--count", o.count, "number of random samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "gkcalc: usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(o, out);
        if (constant->parsed()) return cmd_constant_term(o, out);
        if (poles->parsed()) return cmd_poles(o, out);
        if (tables->parsed()) return cmd_tables(o, out);
        if (vlocal->parsed()) return cmd_verify_local(o, out);
        if (varch->parsed()) return cmd_verify_arch(o, out);
        if (vall->parsed()) return cmd_verify_all(o, out);
        if (prop->parsed()) return cmd_property(o, out);
    } catch (const InputError& e) {
        emit_error(o, out, err, "input error", e.what());
        return 2;
    } catch (const PoleError& e) {
        emit_error(o, out, err, "pole", e.what());
        return 2;
    } catch (const DivergenceError& e) {
        emit_error(o, out, err, "divergence", e.what());
        return 2;
    } catch (const InvariantError& e) {
        emit_error(o, out, err, "invariant breach", e.what());
        return 3;
    }
    return 2;
}

}  // namespace gk::cli
