#include "gk/verification.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "gk/errors.hpp"
#include "gk/gk_core.hpp"
#include "gk/root_engine.hpp"
#include "gk/weyl.hpp"

namespace gk::verify {

namespace {

using nlohmann::json;
using numeric::Complex;
using roots::Family;
using roots::GroupDatum;
using roots::RelativeRootSystem;

std::string fmt(double x)
{
    std::ostringstream out;
    out << std::setprecision(17) << x;
    return out.str();
}

std::string fmt_short(double x)
{
    std::ostringstream out;
    out << std::setprecision(3) << x;
    return out.str();
}

Check numeric_check(std::string name, json inputs, double observed, double expected, double tol)
{
    Check c;
    c.name = std::move(name);
    c.inputs = std::move(inputs);
    c.observed = fmt(observed);
    c.expected = fmt(expected);
    c.abs_err = std::abs(observed - expected);
    c.pass = std::isfinite(observed) && c.abs_err < tol;
    return c;
}

Check bool_check(std::string name, json inputs, std::string observed, std::string expected, bool pass)
{
    Check c;
    c.name = std::move(name);
    c.inputs = std::move(inputs);
    c.observed = std::move(observed);
    c.expected = std::move(expected);
    c.pass = pass;
    return c;
}

template <typename F>
double timed(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_abs_err(const CriterionResult& r)
{
    double m = 0.0;
    for (const auto& sc : r.subcases)
        for (const auto& c : sc.checks) m = std::max(m, c.abs_err);
    return m;
}

std::size_t check_count(const CriterionResult& r)
{
    std::size_t n = 0;
    for (const auto& sc : r.subcases) n += sc.checks.size();
    return n;
}

std::string render_table(const std::map<roots::LengthClass, int>& t)
{
    std::string out;
    for (const auto& [cls, d] : t) {
        if (!out.empty()) out += " ";
        out += roots::to_string(cls) + ":" + std::to_string(d);
    }
    return out;
}

GroupDatum split_datum(const std::string& type, int res = 1)
{
    return GroupDatum(roots::DynkinDiagram::from_type(type), {}, 1, res, type + "-split");
}

GroupDatum folded(const std::string& type, int order, int res = 1)
{
    return GroupDatum(roots::DynkinDiagram::from_type(type), roots::standard_automorphism(type, order), order, res,
                      std::to_string(order) + type);
}

// inv(w1 w2) = inv(w2) disjoint-union w2^{-1} inv(w1).
bool cocycle_holds(const RelativeRootSystem& system, const roots::WeylElement& w1, const roots::WeylElement& w2)
{
    const auto w = roots::weyl_multiply(system, w1, w2);
    const auto lhs = roots::inversion_set(system, w);
    std::set<int> rhs;
    for (int r : roots::inversion_set(system, w2)) rhs.insert(r);
    const auto w2inv = roots::weyl_inverse(system, w2);
    const auto inv1 = roots::inversion_set(system, w1);
    for (int r : inv1) {
        const IntVec image = roots::weyl_apply(system, w2inv, system.root(r).coords);
        if (!roots::is_positive(image)) return false;
        const auto idx = system.find(image);
        if (!idx || !rhs.insert(*idx).second) return false;  // not a root, or not disjoint
    }
    return std::set<int>(lhs.begin(), lhs.end()) == rhs && lhs.size() == rhs.size();
}

chars::UnramifiedCharacter sample_character(int rank, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> re(-3, 3), im(0, 2);
    ComplexRationalVec e;
    for (int i = 0; i < rank; ++i) e.push_back({Rational(re(rng), 2), Rational(im(rng), 3)});
    return chars::UnramifiedCharacter(std::move(e));
}

chars::LambdaRay sample_ray(int rank, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dir(1, 3), off(-2, 2);
    chars::LambdaRay ray;
    for (int i = 0; i < rank; ++i) {
        ray.direction.push_back(Rational(dir(rng)));
        ray.offset.push_back(Rational(off(rng), 3));
    }
    return ray;
}

std::vector<GroupDatum> small_rank_systems()
{
    return {split_datum("A1"), split_datum("A2"), split_datum("B2"), split_datum("G2"),
            folded("A2", 2),   folded("A3", 2),   folded("A4", 2),   folded("D4", 3)};
}

std::vector<GroupDatum> rank_four_systems()
{
    return {split_datum("A3"), split_datum("B3"), split_datum("C3"), split_datum("A4"), split_datum("B4"),
            split_datum("C4"), split_datum("D4"), split_datum("F4"), folded("A6", 2),   folded("A5", 2),
            folded("D5", 2),   folded("E6", 2),   folded("A7", 2),   folded("A8", 2)};
}

struct RandomTally {
    int words = 0;
    int inversion_ok = 0;
    int cocycle_ok = 0;
    int multiplicative_ok = 0;
    std::string first_failure;
};

RandomTally random_word_checks(std::uint64_t seed, int count)
{
    std::vector<RelativeRootSystem> systems;
    for (auto& d : rank_four_systems()) systems.emplace_back(d);
    std::mt19937_64 rng(seed);
    RandomTally t;
    for (int k = 0; k < count; ++k) {
        const auto& system = systems[std::uniform_int_distribution<std::size_t>(0, systems.size() - 1)(rng)];
        std::uniform_int_distribution<int> letter(0, system.rank() - 1);
        std::vector<int> word(std::uniform_int_distribution<int>(0, 24)(rng));
        for (int& x : word) x = letter(rng);
        const auto w = roots::weyl_normalize(system, word);
        ++t.words;
        const bool inv_ok = static_cast<int>(roots::inversion_set(system, w).size()) == w.length();
        const int cut = std::uniform_int_distribution<int>(0, w.length())(rng);
        const roots::WeylElement w1{{w.word.begin(), w.word.begin() + cut}};
        const roots::WeylElement w2{{w.word.begin() + cut, w.word.end()}};
        const bool coc_ok = cocycle_holds(system, w1, w2);
        const auto chi = sample_character(system.rank(), rng);
        const auto ray = sample_ray(system.rank(), rng);
        const bool mult_ok = core::multiplicativity_check(system, chi, ray, w1, w2);
        t.inversion_ok += inv_ok;
        t.cocycle_ok += coc_ok;
        t.multiplicative_ok += mult_ok;
        if (t.first_failure.empty() && !(inv_ok && coc_ok && mult_ok))
            t.first_failure = system.datum().label() + " word length " + std::to_string(w.length());
    }
    return t;
}

lfactor::HeckeCharacterDescriptor trivial_over(int degree)
{
    lfactor::HeckeCharacterDescriptor d;
    d.field = {degree, chars::PlaceKind::global};
    return d;
}

}  // namespace

json to_json(const Check& c)
{
    return {{"name", c.name},       {"inputs", c.inputs},   {"observed", c.observed},
            {"expected", c.expected}, {"abs_err", c.abs_err}, {"pass", c.pass}};
}

bool Subcase::pass() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool CriterionResult::pass() const
{
    if (subcases.empty()) return false;
    if (time_limit > 0.0 && seconds >= time_limit) return false;
    return std::all_of(subcases.begin(), subcases.end(), [](const Subcase& s) { return s.pass(); });
}

json to_json(const CriterionResult& r)
{
    json subs = json::array();
    for (const auto& sc : r.subcases) {
        json checks = json::array();
        for (const auto& c : sc.checks) checks.push_back(to_json(c));
        subs.push_back({{"name", sc.name}, {"pass", sc.pass()}, {"note", sc.note}, {"checks", checks}});
    }
    return {{"criterion", r.id}, {"title", r.title},     {"pass", r.pass()},
            {"seconds", r.seconds}, {"summary", r.summary}, {"subcases", subs}};
}

CriterionResult criterion_sl2_shell(const oracle::OracleConfig& cfg)
{
    CriterionResult r{1, "SL2 shell integral equals (1-q^-(1+s))/(1-q^-s)", {}, 0.0, pinned::sl2_seconds, {}};
    Subcase sc{"q in {2,3,5}, s in {1,3/2,2,3}", {}, {}};
    r.seconds = timed([&] {
        for (std::int64_t q : {2, 3, 5})
            for (double s : {1.0, 1.5, 2.0, 3.0}) {
                const auto shell = oracle::gk_integral_sl2({q, 1, false}, s, cfg);
                auto c = numeric_check("sl2 shell", {{"q", q}, {"s", s}, {"depth", cfg.depth}}, shell.value.real(),
                                       oracle::sl2_closed_form(q, s).real(), pinned::sl2_tol);
                c.pass = c.pass && shell.converged;
                sc.checks.push_back(c);
            }
    });
    r.subcases.push_back(std::move(sc));
    r.summary = std::to_string(check_count(r)) + " checks, max abs err " + fmt_short(max_abs_err(r));
    return r;
}

CriterionResult criterion_su21_shell(const oracle::OracleConfig& cfg)
{
    CriterionResult r{2, "SU(2,1) inert shell integral equals the two-factor Euler product", {}, 0.0, pinned::su21_seconds, {}};
    Subcase sc{"q in {3,5}, s in {1,2}", {}, {}};
    r.seconds = timed([&] {
        for (std::int64_t q : {3, 5})
            for (double s : {1.0, 2.0}) {
                const auto shell = oracle::gk_integral_su21_inert({q, 2, false}, s, cfg);
                auto c = numeric_check("su21 shell", {{"q", q}, {"s", s}, {"depth", cfg.depth}}, shell.value.real(),
                                       oracle::su21_inert_closed_form(q, s).real(), pinned::su21_tol);
                c.pass = c.pass && shell.converged;
                sc.checks.push_back(c);
            }
        sc.checks.push_back(numeric_check("closed form at q=3, s=1", {{"q", 3}, {"s", 1}},
                                          oracle::su21_inert_closed_form(3, 1.0).real(), 28.0 / 27.0, pinned::su21_tol));
    });
    r.subcases.push_back(std::move(sc));
    r.summary = std::to_string(check_count(r)) + " checks, max abs err " + fmt_short(max_abs_err(r));
    return r;
}

CriterionResult criterion_sl3(const oracle::OracleConfig& cfg)
{
    CriterionResult r{3, "SL3 longest element: composed rank-one integrals equal the (s, s, 2s) product", {}, 0.0, 0.0, {}};
    Subcase sc{"q=3 s=1 and q=2 s=2", {}, {}};
    r.seconds = timed([&] {
        const auto fact = core::sl3_longest_factorization(3, 1.0);
        const std::vector<AffineForm> expected_args{{1, 0}, {1, 0}, {2, 0}};
        std::string args;
        for (const auto& a : fact.arguments) args += (args.empty() ? "" : ", ") + to_string(a);
        sc.checks.push_back(bool_check("symbolic arguments", json::object(), args, "s, s, 2s", fact.arguments == expected_args));
        const double composed = oracle::gk_integral_sl3({3, 1, false}, 1.0, cfg).value.real();
        sc.checks.push_back(numeric_check("composed shell vs factorization", {{"q", 3}, {"s", 1}}, composed,
                                          fact.value.value_or(NAN), pinned::sl3_tol));
        sc.checks.push_back(numeric_check("factorization vs 52/27", {{"q", 3}, {"s", 1}}, fact.value.value_or(NAN),
                                          52.0 / 27.0, pinned::sl3_tol));
        const auto fact2 = core::sl3_longest_factorization(2, 2.0);
        const double composed2 = oracle::gk_integral_sl3({2, 1, false}, 2.0, cfg).value.real();
        sc.checks.push_back(numeric_check("composed shell vs factorization", {{"q", 2}, {"s", 2}}, composed2,
                                          fact2.value.value_or(NAN), pinned::sl3_tol));
        sc.checks.push_back(numeric_check("factorization vs (49/36)(31/30)", {{"q", 2}, {"s", 2}},
                                          fact2.value.value_or(NAN), 49.0 / 36.0 * 31.0 / 30.0, pinned::sl3_tol));
    });
    r.subcases.push_back(std::move(sc));
    r.summary = std::to_string(check_count(r)) + " checks, max abs err " + fmt_short(max_abs_err(r));
    return r;
}

CriterionResult criterion_arch_constancy()
{
    CriterionResult r{4, "Archimedean normalizer x Gamma ratio is independent of s", {}, 0.0, 0.0, {}};
    const std::vector<double> samples{0.7, 1.3, 2.1, 2.9, 3.6};
    r.seconds = timed([&] {
        for (auto c : oracle::all_arch_cases()) {
            const auto k = oracle::s_independence_check(c, samples, pinned::arch_rel_tol);
            Subcase sc{oracle::to_string(c), {}, "constant " + fmt_short(k.constants.front().real())};
            auto check = numeric_check("max relative deviation", {{"case", oracle::to_string(c)}, {"samples", samples}},
                                       k.max_deviation, 0.0, pinned::arch_rel_tol);
            sc.checks.push_back(check);
            r.subcases.push_back(std::move(sc));
        }
    });
    r.summary = std::to_string(check_count(r)) + " cases over 5 samples, max relative deviation " + fmt_short(max_abs_err(r));
    return r;
}

CriterionResult criterion_legendre()
{
    CriterionResult r{5, "Legendre duplication for Gamma(2s) and Gamma(2s+1)", {}, 0.0, 0.0, {}};
    const std::vector<double> samples{0.3, 0.5, 0.8, 1.0, 1.25, 1.5, 2.0, 2.75, 3.5, 5.0};
    Subcase sc{"10 samples", {}, {}};
    r.seconds = timed([&] {
        std::vector<oracle::LegendreResidual> res;
        oracle::legendre_check(samples, pinned::legendre_tol, &res);
        for (const auto& x : res) {
            sc.checks.push_back(numeric_check("Gamma(2s) identity, relative", {{"s", x.s}}, x.err_2s, 0.0, pinned::legendre_tol));
            sc.checks.push_back(
                numeric_check("Gamma(2s+1) identity, relative", {{"s", x.s}}, x.err_2s_plus1, 0.0, pinned::legendre_tol));
        }
    });
    r.subcases.push_back(std::move(sc));
    r.summary = std::to_string(check_count(r)) + " checks, max relative err " + fmt_short(max_abs_err(r));
    return r;
}

CriterionResult criterion_proposition_tables()
{
    CriterionResult r{6, "Folded d_alpha equals the classification table (five non-split families)", {}, 0.0, 0.0, {}};
    const Family families[] = {Family::su_n_n1, Family::su_n_n, Family::spin_minus, Family::triality_d4, Family::outer_e6};
    r.seconds = timed([&] {
        for (Family f : families) {
            Subcase sc{roots::to_string(f), {}, {}};
            for (int n = 1; n <= 6; ++n) {
                if (!roots::family_rank_admissible(f, n)) continue;
                for (int d = 1; d <= 3; ++d) {
                    const RelativeRootSystem system(roots::family_datum(f, n, d));
                    const auto derived = roots::derived_table(system);
                    const auto table = roots::proposition_table(f, n, d);
                    sc.checks.push_back(bool_check("d_alpha by length class",
                                                   {{"family", roots::to_string(f)}, {"n", n}, {"res_degree", d},
                                                    {"relative_type", system.type_string()}},
                                                   render_table(derived), render_table(table), derived == table));
                }
            }
            int bad = 0;
            for (const auto& c : sc.checks) bad += !c.pass;
            if (bad) {
                const auto& c = *std::find_if(sc.checks.begin(), sc.checks.end(), [](const Check& x) { return !x.pass; });
                sc.note = std::to_string(bad) + "/" + std::to_string(sc.checks.size()) + " mismatched; folded " +
                          c.observed + " vs table " + c.expected + " at " + c.inputs.dump();
            } else {
                sc.note = std::to_string(sc.checks.size()) + " (n, d') cases";
            }
            r.subcases.push_back(std::move(sc));
        }
    });
    r.summary = std::to_string(check_count(r)) + " (family, n, d') cases";
    return r;
}

CriterionResult criterion_corollary_ratios()
{
    CriterionResult r{7, "Pole ratios on trivial chi match the component rule", {}, 0.0, 0.0, {}};
    struct Case {
        std::string name;
        std::vector<GroupDatum> data;
        bool split;
    };
    auto fam = [](Family f, std::initializer_list<int> ns) {
        std::vector<GroupDatum> out;
        for (int n : ns)
            for (int d : {1, 2}) out.push_back(roots::family_datum(f, n, d));
        return out;
    };
    std::vector<Case> cases{
        {"B_n via Spin2n- (B3..B6)", fam(Family::spin_minus, {4, 5, 6, 7}), false},
        {"B_n via SU(n,n+1) (B2..B6)", fam(Family::su_n_n1, {2, 3, 4, 5, 6}), false},
        {"C_n via SU(n,n) (C3..C6)", fam(Family::su_n_n, {3, 4, 5, 6}), false},
        {"F4 via 2E6", fam(Family::outer_e6, {6}), false},
        {"G2 via 3D4", fam(Family::triality_d4, {4}), false},
        {"simply laced (split A, D, E)",
         {split_datum("A2"), split_datum("A5"), split_datum("D4"), split_datum("D6"), split_datum("E6"), split_datum("E7"),
          split_datum("E8"), split_datum("A3", 3)},
         true},
        {"split non-simply-laced (B3, C4, F4, G2): all equal",
         {split_datum("B3"), split_datum("C4"), split_datum("F4"), split_datum("G2", 2)},
         true},
    };
    r.seconds = timed([&] {
        for (const auto& cs : cases) {
            Subcase sc{cs.name, {}, {}};
            for (const auto& datum : cs.data) {
                const RelativeRootSystem system(datum);
                std::vector<int> all(system.positive_roots().size());
                std::iota(all.begin(), all.end(), 0);
                const auto report = core::pole_profile(system, chars::UnramifiedCharacter::trivial(system.rank()),
                                                       chars::LambdaRay::principal(system.rank()), all);
                const bool one_each = report.profile.entries.size() == all.size();
                const auto comps = core::component_poles(system, report);
                const auto observed = comps.front().observed();
                const core::RatioRule expected =
                    cs.split ? core::RatioRule{} : core::corollary_ratio_table(system.components().front().type);
                const bool ok = one_each && comps.size() == 1 && observed && core::matches(expected, *observed);
                sc.checks.push_back(bool_check("pole ratio",
                                               {{"group", datum.label()}, {"relative_type", system.type_string()},
                                                {"res_degree", datum.res_degree()}},
                                               observed ? core::to_string(*observed) : "inconsistent",
                                               core::to_string(expected), ok));
            }
            const auto bad = std::find_if(sc.checks.begin(), sc.checks.end(), [](const Check& x) { return !x.pass; });
            sc.note = bad == sc.checks.end() ? sc.checks.front().observed
                                             : "observed " + bad->observed + ", rule " + bad->expected;
            r.subcases.push_back(std::move(sc));
        }
    });
    r.summary = std::to_string(check_count(r)) + " groups";
    return r;
}

CriterionResult criterion_weyl(std::uint64_t seed)
{
    CriterionResult r{8, "Inversion sets, cocycle decomposition and multiplicativity", {}, 0.0, 0.0, {}};
    r.seconds = timed([&] {
        Subcase exhaustive{"exhaustive, relative rank <= 2", {}, {}};
        std::mt19937_64 rng(seed);
        for (const auto& datum : small_rank_systems()) {
            const RelativeRootSystem system(datum);
            const auto elements = roots::weyl_enumerate(system);
            int inv_ok = 0, pairs = 0, coc_ok = 0, mult_ok = 0;
            const auto chi = sample_character(system.rank(), rng);
            const auto ray = sample_ray(system.rank(), rng);
            for (const auto& w : elements) {
                inv_ok += static_cast<int>(roots::inversion_set(system, w).size()) == w.length();
                for (const auto& v : elements) {
                    if (roots::weyl_multiply(system, w, v).length() != w.length() + v.length()) continue;
                    ++pairs;
                    coc_ok += cocycle_holds(system, w, v);
                    mult_ok += core::multiplicativity_check(system, chi, ray, w, v);
                }
            }
            const json in = {{"group", datum.label()}, {"relative_type", system.type_string()}, {"order", elements.size()}};
            const auto n = static_cast<int>(elements.size());
            exhaustive.checks.push_back(bool_check("|inv(w)| = l(w)", in, std::to_string(inv_ok), std::to_string(n), inv_ok == n));
            exhaustive.checks.push_back(bool_check("cocycle", in, std::to_string(coc_ok), std::to_string(pairs), coc_ok == pairs));
            exhaustive.checks.push_back(
                bool_check("multiplicativity", in, std::to_string(mult_ok), std::to_string(pairs), mult_ok == pairs));
            const auto longest = roots::weyl_longest(system);
            exhaustive.checks.push_back(bool_check("longest inverts every positive root", in,
                                                   std::to_string(roots::inversion_set(system, longest).size()),
                                                   std::to_string(system.positive_roots().size()),
                                                   roots::inversion_set(system, longest).size() == system.positive_roots().size()));
        }
        exhaustive.note = std::to_string(exhaustive.checks.size()) + " checks";
        r.subcases.push_back(std::move(exhaustive));

        Subcase random{"random words, relative rank <= 4", {}, {}};
        const auto t = random_word_checks(seed, pinned::random_words);
        const json in = {{"seed", seed}, {"words", t.words}};
        random.checks.push_back(bool_check("|inv(w)| = l(w)", in, std::to_string(t.inversion_ok), std::to_string(t.words),
                                           t.inversion_ok == t.words));
        random.checks.push_back(
            bool_check("cocycle", in, std::to_string(t.cocycle_ok), std::to_string(t.words), t.cocycle_ok == t.words));
        random.checks.push_back(bool_check("multiplicativity", in, std::to_string(t.multiplicative_ok),
                                           std::to_string(t.words), t.multiplicative_ok == t.words));
        random.note = std::to_string(t.words) + " words, seed " + std::to_string(seed) +
                      (t.first_failure.empty() ? "" : ", first failure " + t.first_failure);
        r.subcases.push_back(std::move(random));
    });
    r.summary = std::to_string(check_count(r)) + " aggregate checks";
    return r;
}

CriterionResult criterion_ledger()
{
    CriterionResult r{9, "Trivial-character r_alpha has exactly one positive simple pole", {}, 0.0, 0.0, {}};
    r.seconds = timed([&] {
        for (auto type : {roots::RankOneType::sl2, roots::RankOneType::su21}) {
            Subcase sc{roots::to_string(type), {}, {}};
            for (int d = 1; d <= 4; ++d) {
                const int scale = type == roots::RankOneType::sl2 ? d : 4 * d;
                const int degree = type == roots::RankOneType::sl2 ? d : 2 * d;
                // In the pairing variable the pole sits at pairing = scale; in the
                // rank-one variable (pairing = scale * s) it sits at s = 1.
                for (auto [arg, where] : {std::pair{AffineForm{1, 0}, Rational(scale)}, std::pair{AffineForm{scale, 0}, Rational(1)}}) {
                    const auto p = lfactor::r_alpha(arg, d, type, trivial_over(degree));
                    const auto prof = lfactor::poles_positive(p, false);
                    const bool ok = prof.entries.size() == 1 && prof.entries[0].location == where &&
                                    prof.entries[0].order == 1 && !prof.entries[0].conditional;
                    std::string seen;
                    for (const auto& e : prof.entries)
                        seen += (seen.empty() ? "" : "; ") + to_string(e.location) + " order " + std::to_string(e.order) +
                                (e.conditional ? " (conditional)" : "");
                    sc.checks.push_back(bool_check("poles", {{"d_alpha", d}, {"pairing", to_string(arg)}},
                                                   seen.empty() ? "none" : seen, to_string(where) + " order 1", ok));
                }
            }
            sc.note = std::to_string(sc.checks.size()) + " (d_alpha, variable) cases";
            r.subcases.push_back(std::move(sc));
        }
    });
    r.summary = std::to_string(check_count(r)) + " cases";
    return r;
}

std::vector<CriterionResult> run_acceptance(const oracle::OracleConfig& cfg, std::uint64_t seed)
{
    std::vector<CriterionResult> out;
    out.push_back(criterion_sl2_shell(cfg));
    out.push_back(criterion_su21_shell(cfg));
    out.push_back(criterion_sl3(cfg));
    out.push_back(criterion_arch_constancy());
    out.push_back(criterion_legendre());
    out.push_back(criterion_proposition_tables());
    out.push_back(criterion_corollary_ratios());
    out.push_back(criterion_weyl(seed));
    out.push_back(criterion_ledger());
    return out;
}

std::vector<Check> verify_local(const std::vector<std::int64_t>& qs, const oracle::OracleConfig& cfg)
{
    oracle::validate(cfg);
    std::vector<Check> out;
    auto shell_check = [&](std::string name, json in, const oracle::ShellResult& shell, double expected) {
        auto c = numeric_check(std::move(name), std::move(in), shell.value.real(), expected, cfg.tolerance);
        if (!shell.converged) {
            c.pass = false;
            c.observed += " (non-converged, tail bound " + fmt_short(shell.tail_bound) + ")";
        }
        out.push_back(c);
    };
    Complex place_product = 1.0;
    for (std::int64_t q : qs) {
        for (double s : cfg.samples) {
            const json in = {{"q", q}, {"s", s}, {"depth", cfg.depth}};
            shell_check("sl2 shell vs closed form", in, oracle::gk_integral_sl2({q, 1, false}, s, cfg),
                        oracle::sl2_closed_form(q, s).real());
            const auto fact = core::sl3_longest_factorization(q, s);
            shell_check("sl3 composed shell vs factorization", in, oracle::gk_integral_sl3({q, 1, false}, s, cfg),
                        fact.value.value_or(NAN));
            if (q % 2 == 1)
                shell_check("su21 inert shell vs Euler product", in, oracle::gk_integral_su21_inert({q, 2, false}, s, cfg),
                            oracle::su21_inert_closed_form(q, s).real());
        }
        const auto sl2 = oracle::s_independence_check(oracle::LocalCase::sl2, {q, 1, false}, cfg);
        out.push_back(numeric_check("sl2 normalized value is s-independent", {{"q", q}, {"samples", cfg.samples}},
                                    sl2.max_deviation, 0.0, cfg.tolerance));
        out.back().pass = out.back().pass && sl2.converged;
        place_product *= sl2.constants.front();
        if (q % 2 == 1) {
            const auto su = oracle::s_independence_check(oracle::LocalCase::su21_inert, {q, 2, false}, cfg);
            out.push_back(numeric_check("su21 normalized value is s-independent", {{"q", q}, {"samples", cfg.samples}},
                                        su.max_deviation, 0.0, cfg.tolerance));
            out.back().pass = out.back().pass && su.converged;
            place_product *= su.constants.front();
        }
    }
    out.push_back(numeric_check("product of local constants over the places", {{"q", qs}},
                                place_product.real(), 1.0, cfg.tolerance));
    return out;
}

std::vector<Check> verify_arch(const std::vector<double>& samples, double tolerance)
{
    std::vector<Check> out;
    for (auto c : oracle::all_arch_cases()) {
        const auto k = oracle::s_independence_check(c, samples, tolerance);
        auto check = numeric_check("normalizer x Gamma ratio is constant", {{"case", oracle::to_string(c)}, {"samples", samples}},
                                   k.max_deviation, 0.0, tolerance);
        check.expected = "constant (observed " + fmt(k.constants.front().real()) + ")";
        out.push_back(check);
    }
    std::vector<oracle::LegendreResidual> res;
    oracle::legendre_check(samples, tolerance, &res);
    for (const auto& x : res) {
        out.push_back(numeric_check("Legendre Gamma(2s), relative", {{"s", x.s}}, x.err_2s, 0.0, tolerance));
        out.push_back(numeric_check("Legendre Gamma(2s+1), relative", {{"s", x.s}}, x.err_2s_plus1, 0.0, tolerance));
    }
    return out;
}

std::vector<Check> property_checks(std::uint64_t seed, int count)
{
    std::vector<Check> out;
    const auto t = random_word_checks(seed, count);
    const json in = {{"seed", seed}, {"words", t.words}};
    out.push_back(bool_check("|inv(w)| = l(w)", in, std::to_string(t.inversion_ok), std::to_string(t.words),
                             t.inversion_ok == t.words));
    out.push_back(bool_check("cocycle", in, std::to_string(t.cocycle_ok), std::to_string(t.words), t.cocycle_ok == t.words));
    out.push_back(bool_check("multiplicativity", in, std::to_string(t.multiplicative_ok), std::to_string(t.words),
                             t.multiplicative_ok == t.words));

    std::vector<RelativeRootSystem> systems;
    for (auto& d : rank_four_systems()) systems.emplace_back(d);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    int idem = 0, round = 0;
    for (int k = 0; k < count; ++k) {
        const auto& system = systems[std::uniform_int_distribution<std::size_t>(0, systems.size() - 1)(rng)];
        std::uniform_int_distribution<int> letter(0, system.rank() - 1);
        std::vector<int> word(std::uniform_int_distribution<int>(0, 12)(rng));
        for (int& x : word) x = letter(rng);
        const auto w = roots::weyl_normalize(system, word);
        const auto report = core::constant_term(system, sample_character(system.rank(), rng), sample_ray(system.rank(), rng), w);
        idem += lfactor::normalize(report.product) == report.product;
        round += lfactor::product_from_json(nlohmann::json::parse(lfactor::to_json(report.product).dump())) == report.product;
    }
    out.push_back(bool_check("normalize is idempotent", {{"seed", seed}, {"samples", count}}, std::to_string(idem),
                             std::to_string(count), idem == count));
    out.push_back(bool_check("JSON round trip", {{"seed", seed}, {"samples", count}}, std::to_string(round),
                             std::to_string(count), round == count));
    return out;
}

std::string format_line(const CriterionResult& r)
{
    std::ostringstream out;
    out << (r.pass() ? "[PASS] " : "[FAIL] ") << r.id << "  " << r.title << "  (" << r.summary << ", "
        << std::fixed << std::setprecision(3) << r.seconds << " s";
    if (r.time_limit > 0.0) out << " of " << std::setprecision(0) << r.time_limit << " s allowed";
    out << ")\n";
    if (r.subcases.size() > 1 || !r.pass())
        for (const auto& sc : r.subcases)
            out << "        " << (sc.pass() ? "[pass] " : "[fail] ") << sc.name << (sc.note.empty() ? "" : ": " + sc.note)
                << "\n";
    return out.str();
}

}  // namespace gk::verify
