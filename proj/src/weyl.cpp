#include "gk/weyl.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "gk/errors.hpp"

namespace gk::roots {

namespace {

IntMatrix identity(int r)
{
    IntMatrix m(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i) m[i][i] = 1;
    return m;
}

void check_word(const RelativeRootSystem& system, const std::vector<int>& word)
{
    for (int i : word)
        if (i < 0 || i >= system.rank())
            throw InputError("reflection index " + std::to_string(i + 1) + " outside 1.." + std::to_string(system.rank()));
}

// s_i as a matrix on root coordinates.
IntMatrix reflection(const RelativeRootSystem& system, int i)
{
    const int r = system.rank();
    IntMatrix m = identity(r);
    for (int p = 0; p < r; ++p) m[i][p] -= system.cartan()[p][i];
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t r = a.size();
    IntMatrix c(r, IntVec(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

IntVec column(const IntMatrix& m, int j)
{
    IntVec v(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) v[i] = m[i][j];
    return v;
}

IntVec act(const IntMatrix& m, const IntVec& v)
{
    IntVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

}  // namespace

bool is_positive(const IntVec& coords)
{
    return std::all_of(coords.begin(), coords.end(), [](int v) { return v >= 0; }) &&
           std::any_of(coords.begin(), coords.end(), [](int v) { return v > 0; });
}

IntMatrix weyl_matrix(const RelativeRootSystem& system, const std::vector<int>& word)
{
    check_word(system, word);
    IntMatrix m = identity(system.rank());
    for (int i : word) m = multiply(m, reflection(system, i));
    return m;
}

IntVec weyl_apply(const RelativeRootSystem& system, const WeylElement& w, const IntVec& coords)
{
    if (static_cast<int>(coords.size()) != system.rank()) throw InputError("coordinate vector has wrong length");
    return act(weyl_matrix(system, w.word), coords);
}

WeylElement weyl_normalize(const RelativeRootSystem& system, const std::vector<int>& word)
{
    check_word(system, word);
    const int r = system.rank();
    // Track w^{-1}; column i of it is w^{-1}(alpha_i).
    std::vector<int> reversed(word.rbegin(), word.rend());
    IntMatrix inv = weyl_matrix(system, reversed);
    const IntMatrix id = identity(r);
    WeylElement out;
    while (inv != id) {
        int descent = -1;
        for (int i = 0; i < r && descent < 0; ++i)
            if (!is_positive(column(inv, i))) descent = i;
        if (descent < 0) throw InvariantError("non-identity Weyl element without a descent");
        out.word.push_back(descent);
        inv = multiply(inv, reflection(system, descent));  // (s_i w)^{-1} = w^{-1} s_i
    }
    return out;
}

WeylElement weyl_longest(const RelativeRootSystem& system)
{
    const int r = system.rank();
    std::vector<int> word;
    IntMatrix m = identity(r);
    while (true) {
        int ext = -1;
        for (int i = 0; i < r && ext < 0; ++i)
            if (is_positive(column(m, i))) ext = i;
        if (ext < 0) break;
        word.push_back(ext);
        m = multiply(m, reflection(system, ext));
    }
    return weyl_normalize(system, word);
}

WeylElement weyl_multiply(const RelativeRootSystem& system, const WeylElement& a, const WeylElement& b)
{
    std::vector<int> word = a.word;
    word.insert(word.end(), b.word.begin(), b.word.end());
    return weyl_normalize(system, word);
}

WeylElement weyl_inverse(const RelativeRootSystem& system, const WeylElement& w)
{
    return weyl_normalize(system, std::vector<int>(w.word.rbegin(), w.word.rend()));
}

std::vector<int> inversion_set(const RelativeRootSystem& system, const WeylElement& w)
{
    const IntMatrix m = weyl_matrix(system, w.word);
    std::vector<int> out;
    for (const auto& root : system.positive_roots())
        if (!is_positive(act(m, root.coords))) out.push_back(root.index);
    return out;
}

int weyl_length(const RelativeRootSystem& system, const std::vector<int>& word)
{
    return static_cast<int>(inversion_set(system, WeylElement{word}).size());
}

std::vector<WeylElement> weyl_enumerate(const RelativeRootSystem& system)
{
    if (system.rank() > 4) throw InputError("Weyl group enumeration is limited to relative rank <= 4");
    std::map<IntMatrix, std::vector<int>> seen;
    std::queue<std::vector<int>> todo;
    seen.emplace(identity(system.rank()), std::vector<int>{});
    todo.push({});
    while (!todo.empty()) {
        auto word = todo.front();
        todo.pop();
        for (int i = 0; i < system.rank(); ++i) {
            auto next = word;
            next.push_back(i);
            auto m = weyl_matrix(system, next);
            if (seen.emplace(m, next).second) todo.push(next);
        }
    }
    std::vector<WeylElement> out;
    out.reserve(seen.size());
    for (const auto& [m, word] : seen) out.push_back(weyl_normalize(system, word));
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.word < b.word;
    });
    return out;
}

}  // namespace gk::roots
