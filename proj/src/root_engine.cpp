#include "gk/root_engine.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "gk/errors.hpp"

namespace gk::roots {

namespace {

constexpr int kMaxNodes = 12;

std::vector<IntVec> zero_matrix(int n)
{
    return std::vector<IntVec>(n, IntVec(n, 0));
}

void link(std::vector<IntVec>& c, int longer, int shorter, int mult)
{
    c[longer][shorter] = -mult;
    c[shorter][longer] = -1;
}

// Cartan matrix of one connected Bourbaki type, 0-based nodes.
std::vector<IntVec> connected_cartan(char letter, int n)
{
    auto bad = [&] {
        return InputError(std::string("unsupported Cartan type ") + letter + std::to_string(n));
    };
    if (n < 1) throw bad();
    auto c = zero_matrix(n);
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) link(c, i, i + 1, 1);
    };
    switch (letter) {
    case 'A':
        chain(n);
        break;
    case 'B':
        if (n < 2) throw bad();
        chain(n - 1);
        link(c, n - 2, n - 1, 2);
        break;
    case 'C':
        if (n < 2) throw bad();
        chain(n - 1);
        link(c, n - 1, n - 2, 2);
        break;
    case 'D':
        if (n < 3) throw bad();
        chain(n - 1);
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
        link(c, n - 3, n - 1, 1);
        break;
    case 'E':
        if (n < 6 || n > 8) throw bad();
        // 1-3-4-5-6-..., 2 attached to 4 (Bourbaki)
        link(c, 0, 2, 1);
        link(c, 1, 3, 1);
        for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1, 1);
        break;
    case 'F':
        if (n != 4) throw bad();
        link(c, 0, 1, 1);
        link(c, 1, 2, 2);
        link(c, 2, 3, 1);
        break;
    case 'G':
        if (n != 2) throw bad();
        link(c, 1, 0, 3);
        break;
    default:
        throw bad();
    }
    return c;
}

std::vector<std::vector<int>> connected_parts(const std::vector<IntVec>& c)
{
    const int n = static_cast<int>(c.size());
    std::vector<int> seen(n, 0);
    std::vector<std::vector<int>> parts;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> part;
        std::queue<int> todo;
        todo.push(s);
        seen[s] = 1;
        while (!todo.empty()) {
            int i = todo.front();
            todo.pop();
            part.push_back(i);
            for (int j = 0; j < n; ++j)
                if (!seen[j] && c[i][j] != 0) {
                    seen[j] = 1;
                    todo.push(j);
                }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

// Leading principal minors of a symmetric rational matrix all positive.
bool positive_definite(std::vector<RationalVec> m)
{
    const std::size_t n = m.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return true;
}

int apply_perm_power(const std::vector<int>& perm, int node, int power)
{
    for (int k = 0; k < power; ++k) node = perm[node];
    return node;
}

IntVec permute_root(const std::vector<int>& perm, const IntVec& v)
{
    IntVec out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
    return out;
}

Rational bilinear(const DynkinDiagram& d, const IntVec& x, const IntVec& y)
{
    Rational acc = 0;
    for (int i = 0; i < d.rank(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < d.rank(); ++j)
            if (y[j] != 0) acc += Rational(x[i] * y[j]) * d.inner(i, j);
    }
    return acc;
}

}  // namespace

DynkinDiagram::DynkinDiagram(std::vector<IntVec> cartan, std::string name)
    : cartan_(std::move(cartan)), name_(std::move(name))
{
    const int n = static_cast<int>(cartan_.size());
    if (n == 0) throw InputError("empty Dynkin diagram");
    if (n > kMaxNodes) throw InputError("diagrams are limited to 12 nodes");
    for (const auto& row : cartan_)
        if (static_cast<int>(row.size()) != n) throw InputError("Cartan matrix is not square");
    for (int i = 0; i < n; ++i) {
        if (cartan_[i][i] != 2) throw InputError("Cartan matrix diagonal must be 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan_[i][j] > 0) throw InputError("positive off-diagonal Cartan entry");
            if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
                throw InputError("Cartan matrix zero pattern is not symmetric");
            if (cartan_[i][j] * cartan_[j][i] > 3) throw InputError("edge multiplicity above 3");
        }
    }

    // Propagate squared lengths across each component, then scale so the
    // longest simple root of the component has squared length 2.
    norms_.assign(n, Rational(0));
    for (const auto& part : connected_parts(cartan_)) {
        norms_[part.front()] = 1;
        std::queue<int> todo;
        todo.push(part.front());
        std::vector<int> done(n, 0);
        done[part.front()] = 1;
        while (!todo.empty()) {
            int i = todo.front();
            todo.pop();
            for (int j : part) {
                if (cartan_[i][j] == 0 || i == j) continue;
                // cartan(i,j) |a_j|^2 = cartan(j,i) |a_i|^2
                const Rational nj = norms_[i] * Rational(cartan_[j][i], cartan_[i][j]);
                if (done[j]) {
                    if (norms_[j] != nj) throw InputError("Cartan matrix is not symmetrizable");
                    continue;
                }
                norms_[j] = nj;
                done[j] = 1;
                todo.push(j);
            }
        }
        Rational top = 0;
        for (int i : part) top = std::max(top, norms_[i]);
        for (int i : part) norms_[i] = norms_[i] * 2 / top;
    }
    gram_.assign(n, RationalVec(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram_[i][j] = Rational(cartan_[i][j]) * norms_[j] / 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (gram_[i][j] != gram_[j][i]) throw InputError("Cartan matrix is not symmetrizable");
    if (!positive_definite(gram_)) throw InputError("diagram is not of finite type (form not positive definite)");
}

DynkinDiagram DynkinDiagram::from_type(std::string_view type)
{
    std::vector<std::vector<IntVec>> blocks;
    std::string text(type);
    std::stringstream parts(text);
    std::string piece;
    while (std::getline(parts, piece, 'x')) {
        if (piece.size() < 2) throw InputError("bad Cartan type '" + text + "'");
        const char letter = piece[0];
        int n = 0;
        for (std::size_t k = 1; k < piece.size(); ++k) {
            if (piece[k] < '0' || piece[k] > '9') throw InputError("bad Cartan type '" + text + "'");
            n = n * 10 + (piece[k] - '0');
        }
        blocks.push_back(connected_cartan(letter, n));
    }
    if (blocks.empty()) throw InputError("bad Cartan type '" + text + "'");
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    if (total > kMaxNodes) throw InputError("diagrams are limited to 12 nodes");
    auto c = zero_matrix(total);
    int offset = 0;
    for (const auto& b : blocks) {
        const int m = static_cast<int>(b.size());
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) c[offset + i][offset + j] = b[i][j];
        offset += m;
    }
    return DynkinDiagram(std::move(c), text);
}

DynkinDiagram DynkinDiagram::from_edges(int nodes, const std::vector<DiagramEdge>& edges)
{
    if (nodes < 1 || nodes > kMaxNodes) throw InputError("node count must be in 1..12");
    auto c = zero_matrix(nodes);
    for (int i = 0; i < nodes; ++i) c[i][i] = 2;
    for (const auto& e : edges) {
        if (e.from < 0 || e.from >= nodes || e.to < 0 || e.to >= nodes || e.from == e.to)
            throw InputError("edge endpoint out of range");
        if (e.multiplicity < 1 || e.multiplicity > 3) throw InputError("edge multiplicity must be 1, 2 or 3");
        if (c[e.from][e.to] != 0) throw InputError("duplicate edge");
        link(c, e.from, e.to, e.multiplicity);
    }
    return DynkinDiagram(std::move(c), "custom");
}

DynkinDiagram DynkinDiagram::from_cartan(std::vector<IntVec> cartan, std::string name)
{
    return DynkinDiagram(std::move(cartan), std::move(name));
}

GroupDatum::GroupDatum(DynkinDiagram diagram, std::vector<int> automorphism, int automorphism_order,
                       int res_degree, std::string label)
    : diagram_(std::move(diagram)),
      automorphism_(std::move(automorphism)),
      order_(automorphism_order),
      res_degree_(res_degree),
      label_(std::move(label))
{
    const int n = diagram_.rank();
    if (automorphism_.empty()) {
        automorphism_.resize(n);
        std::iota(automorphism_.begin(), automorphism_.end(), 0);
    }
    if (static_cast<int>(automorphism_.size()) != n)
        throw InputError("automorphism length does not match the diagram");
    if (order_ < 1 || order_ > 3) throw InputError("automorphism order must be 1, 2 or 3");
    if (res_degree_ < 1) throw InputError("res_degree must be a positive integer");
    std::vector<int> hit(n, 0);
    for (int v : automorphism_) {
        if (v < 0 || v >= n || hit[v]) throw InputError("automorphism is not a permutation of the nodes");
        hit[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (diagram_.cartan(automorphism_[i], automorphism_[j]) != diagram_.cartan(i, j))
                throw InputError("permutation does not preserve the diagram");
    for (int i = 0; i < n; ++i)
        if (apply_perm_power(automorphism_, i, order_) != i)
            throw InputError("automorphism order does not divide the declared order");
}

namespace {

int type_rank(std::string_view type)
{
    int n = 0;
    const auto digits = type.substr(1);
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || end != digits.data() + digits.size() || n < 1)
        throw InputError("bad Cartan type '" + std::string(type) + "'");
    return n;
}

}  // namespace

std::vector<int> standard_automorphism(std::string_view type, int order)
{
    if (type.size() < 2) throw InputError("bad Cartan type");
    const char letter = type[0];
    const int n = type_rank(type);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    if (order == 1) return perm;
    if (order == 2 && letter == 'A') {
        for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
        return perm;
    }
    if (order == 2 && letter == 'D') {
        std::swap(perm[n - 1], perm[n - 2]);
        return perm;
    }
    if (order == 2 && letter == 'E' && n == 6) {
        perm = {5, 1, 4, 3, 2, 0};
        return perm;
    }
    if (order == 3 && letter == 'D' && n == 4) {
        perm = {2, 1, 3, 0};
        return perm;
    }
    throw InputError("no standard automorphism of order " + std::to_string(order) + " for " + std::string(type));
}

Family parse_family(std::string_view name)
{
    if (name == "split") return Family::split;
    if (name == "SU(n,n+1)" || name == "su_n_n1") return Family::su_n_n1;
    if (name == "SU(n,n)" || name == "su_n_n") return Family::su_n_n;
    if (name == "Spin2n-" || name == "spin_minus") return Family::spin_minus;
    if (name == "3D4") return Family::triality_d4;
    if (name == "2E6") return Family::outer_e6;
    throw InputError("unknown family '" + std::string(name) + "'");
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::split: return "split";
    case Family::su_n_n1: return "SU(n,n+1)";
    case Family::su_n_n: return "SU(n,n)";
    case Family::spin_minus: return "Spin2n-";
    case Family::triality_d4: return "3D4";
    case Family::outer_e6: return "2E6";
    }
    return "?";
}

bool family_rank_admissible(Family family, int n)
{
    switch (family) {
    case Family::split: return n >= 1 && n <= kMaxNodes;
    case Family::su_n_n1: return n >= 1 && 2 * n <= kMaxNodes;
    case Family::su_n_n: return n >= 2 && 2 * n - 1 <= kMaxNodes;
    case Family::spin_minus: return n >= 3 && n <= kMaxNodes;  // D_n, relative rank n-1
    case Family::triality_d4: return n == 4;
    case Family::outer_e6: return n == 6;
    }
    return false;
}

GroupDatum family_datum(Family family, int n, int res_degree)
{
    if (!family_rank_admissible(family, n))
        throw InputError("rank " + std::to_string(n) + " not admissible for " + to_string(family));
    const std::string suffix = res_degree == 1 ? "" : " over degree " + std::to_string(res_degree);
    switch (family) {
    case Family::split: {
        const std::string t = "A" + std::to_string(n);
        return GroupDatum(DynkinDiagram::from_type(t), {}, 1, res_degree, t + "-split" + suffix);
    }
    case Family::su_n_n1: {
        const std::string t = "A" + std::to_string(2 * n);
        return GroupDatum(DynkinDiagram::from_type(t), standard_automorphism(t, 2), 2, res_degree, "2" + t + suffix);
    }
    case Family::su_n_n: {
        const std::string t = "A" + std::to_string(2 * n - 1);
        return GroupDatum(DynkinDiagram::from_type(t), standard_automorphism(t, 2), 2, res_degree, "2" + t + suffix);
    }
    case Family::spin_minus: {
        const std::string t = "D" + std::to_string(n);
        return GroupDatum(DynkinDiagram::from_type(t), standard_automorphism(t, 2), 2, res_degree, "2" + t + suffix);
    }
    case Family::triality_d4:
        return GroupDatum(DynkinDiagram::from_type("D4"), standard_automorphism("D4", 3), 3, res_degree, "3D4" + suffix);
    case Family::outer_e6:
        return GroupDatum(DynkinDiagram::from_type("E6"), standard_automorphism("E6", 2), 2, res_degree, "2E6" + suffix);
    }
    throw InputError("unknown family");
}

std::optional<std::pair<Family, int>> identify_family(const GroupDatum& datum)
{
    const auto& c = datum.diagram().cartan_matrix();
    std::vector<bool> seen(c.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[i][j] != 0 && !seen[j]) seen[j] = true, stack.push_back(static_cast<int>(j));
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return std::nullopt;
    const std::string t = classify_connected(c);
    const char letter = t[0];
    const int n = type_rank(t);
    const int order = datum.automorphism_order();
    const auto& perm = datum.automorphism();
    const bool trivial = std::is_sorted(perm.begin(), perm.end());
    if (order == 1 || trivial) return std::pair{Family::split, datum.diagram().rank()};
    if (letter == 'A' && order == 2) return n % 2 == 0 ? std::pair{Family::su_n_n1, n / 2} : std::pair{Family::su_n_n, (n + 1) / 2};
    if (letter == 'D' && order == 2) return std::pair{Family::spin_minus, n};
    if (letter == 'D' && n == 4 && order == 3) return std::pair{Family::triality_d4, 4};
    if (letter == 'E' && n == 6 && order == 2) return std::pair{Family::outer_e6, 6};
    return std::nullopt;
}

std::string to_string(LengthClass c)
{
    switch (c) {
    case LengthClass::single: return "single";
    case LengthClass::short_root: return "short";
    case LengthClass::long_root: return "long";
    }
    return "?";
}

std::string to_string(RankOneType t)
{
    return t == RankOneType::sl2 ? "SL2" : "SU21";
}

std::vector<IntVec> absolute_positive_roots(const DynkinDiagram& d)
{
    const int n = d.rank();
    std::vector<IntVec> roots;
    std::map<IntVec, int> index;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        index.emplace(e, static_cast<int>(roots.size()));
        roots.push_back(e);
    }
    // Roots are appended in order of height; string lengths come from the
    // already known lower part of each alpha_i-string.
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const IntVec beta = roots[k];
        for (int i = 0; i < n; ++i) {
            int pairing = 0;
            for (int j = 0; j < n; ++j) pairing += beta[j] * d.cartan(j, i);
            int p = 0;
            IntVec down = beta;
            while (true) {
                down[i] -= 1;
                if (!index.count(down)) break;
                ++p;
            }
            const int q = p - pairing;
            if (q <= 0) continue;
            IntVec up = beta;
            up[i] += 1;
            if (!index.count(up)) {
                index.emplace(up, static_cast<int>(roots.size()));
                roots.push_back(up);
            }
        }
    }
    return roots;
}

std::string classify_connected(const std::vector<IntVec>& c)
{
    const int n = static_cast<int>(c.size());
    if (n == 1) return "A1";
    std::vector<int> degree(n, 0);
    int max_mult = 1;
    int di = -1, dj = -1;  // endpoints of a multiple edge, di longer
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || c[i][j] == 0) continue;
            ++degree[i];
            const int m = c[i][j] * c[j][i];
            if (m > max_mult || (m == max_mult && m > 1 && c[i][j] < -1)) {
                max_mult = m;
                if (c[i][j] < -1) {
                    di = i;
                    dj = j;
                }
            }
        }
    const std::string rank = std::to_string(n);
    if (max_mult == 3) return "G2";
    if (max_mult == 2) {
        if (n == 2) return "B2";
        if (n == 4 && degree[di] == 2 && degree[dj] == 2) return "F4";
        // The multiple edge closes the chain; B_n ends on a short root.
        if (degree[dj] == 1) return "B" + rank;
        if (degree[di] == 1) return "C" + rank;
        throw InvariantError("unrecognized doubly laced diagram");
    }
    const int branch = static_cast<int>(std::find_if(degree.begin(), degree.end(), [](int v) { return v >= 3; }) - degree.begin());
    if (branch == n) return "A" + rank;
    std::vector<int> arms;
    for (int j = 0; j < n; ++j) {
        if (c[branch][j] == 0 || j == branch) continue;
        int len = 1, prev = branch, cur = j;
        while (true) {
            int next = -1;
            for (int k = 0; k < n; ++k)
                if (k != cur && k != prev && c[cur][k] != 0) next = k;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return "D" + rank;
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2) return "E" + rank;
    throw InvariantError("unrecognized simply laced diagram");
}

RelativeRootSystem::RelativeRootSystem(GroupDatum datum) : datum_(std::move(datum))
{
    const auto& diag = datum_.diagram();
    const int n = diag.rank();
    const auto& perm = datum_.automorphism();
    const int order = datum_.automorphism_order();

    node_orbit_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (node_orbit_[i] >= 0) continue;
        std::vector<int> orbit;
        int j = i;
        do {
            orbit.push_back(j);
            j = perm[j];
        } while (j != i);
        std::sort(orbit.begin(), orbit.end());
        for (int v : orbit) node_orbit_[v] = static_cast<int>(orbits_.size());
        orbits_.push_back(std::move(orbit));
    }
    const int r = rank();

    // (proj x, proj y) = average over the cyclic group of (x, g y).
    auto projected = [&](const IntVec& x, const IntVec& y) {
        Rational acc = 0;
        IntVec g = y;
        for (int k = 0; k < order; ++k) {
            acc += bilinear(diag, x, g);
            g = permute_root(perm, g);
        }
        return acc / order;
    };
    auto unit = [&](int i) {
        IntVec e(n, 0);
        e[i] = 1;
        return e;
    };

    gram_.assign(r, RationalVec(r, Rational(0)));
    for (int o = 0; o < r; ++o)
        for (int p = 0; p < r; ++p) gram_[o][p] = projected(unit(orbits_[o].front()), unit(orbits_[p].front()));
    cartan_.assign(r, IntVec(r, 0));
    for (int o = 0; o < r; ++o)
        for (int p = 0; p < r; ++p) {
            const Rational v = 2 * gram_[o][p] / gram_[p][p];
            if (v.denominator() != 1) throw InvariantError("relative Cartan entry is not integral");
            cartan_[o][p] = static_cast<int>(v.numerator());
        }

    absolute_ = absolute_positive_roots(diag);
    std::map<IntVec, std::vector<int>> restricted;
    for (std::size_t k = 0; k < absolute_.size(); ++k) {
        IntVec rv(r, 0);
        for (int i = 0; i < n; ++i) rv[node_orbit_[i]] += absolute_[k][i];
        restricted[rv].push_back(static_cast<int>(k));
    }

    struct Candidate {
        IntVec coords;
        std::vector<int> orbit;
        bool divisible_double;
        std::vector<int> double_orbit;
    };
    std::vector<Candidate> reduced;
    for (const auto& [rv, pre] : restricted) {
        bool even = std::all_of(rv.begin(), rv.end(), [](int v) { return v % 2 == 0; });
        if (even) {
            IntVec half(rv.size());
            for (std::size_t k = 0; k < rv.size(); ++k) half[k] = rv[k] / 2;
            if (restricted.count(half)) {
                non_reduced_ = true;
                continue;
            }
        }
        IntVec twice(rv.size());
        for (std::size_t k = 0; k < rv.size(); ++k) twice[k] = 2 * rv[k];
        auto it = restricted.find(twice);
        reduced.push_back({rv, pre, it != restricted.end(), it != restricted.end() ? it->second : std::vector<int>{}});
    }
    std::sort(reduced.begin(), reduced.end(), [](const Candidate& a, const Candidate& b) {
        const int ha = std::accumulate(a.coords.begin(), a.coords.end(), 0);
        const int hb = std::accumulate(b.coords.begin(), b.coords.end(), 0);
        if (ha != hb) return ha < hb;
        return a.coords > b.coords;  // simple roots in node order at height 1
    });

    // Galois orbit of an absolute root under the automorphism.
    auto galois_orbit = [&](int k) {
        std::set<int> seen;
        IntVec g = absolute_[k];
        for (int t = 0; t < order; ++t) {
            auto pos = std::find(absolute_.begin(), absolute_.end(), g);
            seen.insert(static_cast<int>(pos - absolute_.begin()));
            g = permute_root(perm, g);
        }
        return seen;
    };

    for (auto& cand : reduced) {
        RelativeRoot root;
        root.index = static_cast<int>(roots_.size());
        root.coords = cand.coords;
        root.orbit = cand.orbit;
        root.positive = true;
        const IntVec& beta = absolute_[cand.orbit.front()];
        root.norm2 = projected(beta, beta);
        const auto orbit_set = galois_orbit(cand.orbit.front());
        if (orbit_set != std::set<int>(cand.orbit.begin(), cand.orbit.end()))
            throw InvariantError("fibre of the restriction map is not a single Galois orbit");
        if (cand.divisible_double) {
            root.rank_one_type = RankOneType::su21;
            root.d_alpha = datum_.res_degree() * static_cast<int>(cand.double_orbit.size());
        } else {
            root.rank_one_type = RankOneType::sl2;
            root.d_alpha = datum_.res_degree() * static_cast<int>(cand.orbit.size());
        }
        lookup_.emplace(root.coords, root.index);
        roots_.push_back(std::move(root));
    }

    auto parts = connected_parts(cartan_);
    for (std::size_t c = 0; c < parts.size(); ++c) {
        Component comp;
        comp.nodes = parts[c];
        std::vector<IntVec> sub(comp.nodes.size(), IntVec(comp.nodes.size()));
        for (std::size_t i = 0; i < comp.nodes.size(); ++i)
            for (std::size_t j = 0; j < comp.nodes.size(); ++j) sub[i][j] = cartan_[comp.nodes[i]][comp.nodes[j]];
        comp.type = classify_connected(sub);
        components_.push_back(std::move(comp));
    }
    for (auto& root : roots_) {
        int node = static_cast<int>(std::find_if(root.coords.begin(), root.coords.end(), [](int v) { return v != 0; }) - root.coords.begin());
        for (std::size_t c = 0; c < components_.size(); ++c)
            if (std::binary_search(components_[c].nodes.begin(), components_[c].nodes.end(), node))
                root.component = static_cast<int>(c);
        components_[root.component].roots.push_back(root.index);
    }
    for (auto& comp : components_) {
        std::set<Rational> norms;
        for (int idx : comp.roots) norms.insert(roots_[idx].norm2);
        if (norms.size() > 2) throw InvariantError("more than two root lengths in a component");
        comp.two_lengths = norms.size() == 2;
        for (int idx : comp.roots) {
            auto& root = roots_[idx];
            if (!comp.two_lengths) root.length_class = LengthClass::single;
            else root.length_class = root.norm2 == *norms.begin() ? LengthClass::short_root : LengthClass::long_root;
        }
    }
}

const RelativeRoot& RelativeRootSystem::root(int index) const
{
    if (index < 0 || index >= static_cast<int>(roots_.size()))
        throw InputError("relative root index " + std::to_string(index) + " out of range");
    return roots_[index];
}

std::optional<int> RelativeRootSystem::find(const IntVec& coords) const
{
    if (static_cast<int>(coords.size()) != rank()) return std::nullopt;
    if (auto it = lookup_.find(coords); it != lookup_.end()) return it->second;
    IntVec neg(coords.size());
    for (std::size_t k = 0; k < coords.size(); ++k) neg[k] = -coords[k];
    if (auto it = lookup_.find(neg); it != lookup_.end()) return it->second;
    return std::nullopt;
}

IntVec RelativeRootSystem::reflect(int i, const IntVec& coords) const
{
    if (i < 0 || i >= rank()) throw InputError("simple reflection index out of range");
    int pairing = 0;
    for (int p = 0; p < rank(); ++p) pairing += coords[p] * cartan_[p][i];
    IntVec out = coords;
    out[i] -= pairing;
    return out;
}

std::string RelativeRootSystem::type_string() const
{
    std::string out;
    for (const auto& c : components_) {
        if (!out.empty()) out += "x";
        out += c.type;
    }
    return out;
}

RelativeRootSystem restrict_roots(const GroupDatum& datum)
{
    return RelativeRootSystem(datum);
}

namespace {

const RelativeRoot& lookup_root(const RelativeRootSystem& system, const IntVec& coords)
{
    auto idx = system.find(coords);
    if (!idx) throw InputError("vector is not a reduced relative root of this system");
    return system.root(*idx);
}

}  // namespace

RankOneType rank_one_type(const RelativeRootSystem& system, const IntVec& root_coords)
{
    return lookup_root(system, root_coords).rank_one_type;
}

int d_alpha(const RelativeRootSystem& system, const IntVec& root_coords)
{
    return lookup_root(system, root_coords).d_alpha;
}

std::map<LengthClass, int> proposition_table(Family family, int n, int res_degree)
{
    if (!family_rank_admissible(family, n))
        throw InputError("rank " + std::to_string(n) + " not admissible for " + to_string(family));
    if (res_degree < 1) throw InputError("res_degree must be positive");
    const int d = res_degree;
    using L = LengthClass;
    switch (family) {
    case Family::split: return {{L::single, d}, {L::short_root, d}, {L::long_root, d}};
    case Family::su_n_n1:
        if (n == 1) return {{L::single, d}};
        return {{L::long_root, 2 * d}, {L::short_root, d}};
    case Family::su_n_n: return {{L::short_root, 2 * d}, {L::long_root, d}};
    case Family::spin_minus: return {{L::short_root, 2 * d}, {L::long_root, d}};
    case Family::triality_d4: return {{L::long_root, 3 * d}, {L::short_root, d}};
    case Family::outer_e6: return {{L::short_root, 2 * d}, {L::long_root, d}};
    }
    throw InputError("unknown family");
}

std::map<LengthClass, int> derived_table(const RelativeRootSystem& system)
{
    std::map<LengthClass, int> out;
    for (const auto& root : system.positive_roots()) {
        auto [it, fresh] = out.emplace(root.length_class, root.d_alpha);
        if (!fresh && it->second != root.d_alpha)
            throw InvariantError("d_alpha is not constant on a length class");
    }
    return out;
}

}  // namespace gk::roots
