#pragma once

#include <vector>

#include "gk/root_engine.hpp"

namespace gk::roots {

// Word in the relative simple reflections, 0-based; w = s_{word[0]} ... s_{word[k-1]},
// acting on roots right to left.
struct WeylElement {
    std::vector<int> word;

    int length() const { return static_cast<int>(word.size()); }
    friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

using IntMatrix = std::vector<IntVec>;

// Matrix of w acting on relative root coordinates (columns are images of simple roots).
IntMatrix weyl_matrix(const RelativeRootSystem& system, const std::vector<int>& word);

IntVec weyl_apply(const RelativeRootSystem& system, const WeylElement& w, const IntVec& coords);

// Lexicographically least reduced word of the element, by repeatedly
// peeling off the smallest left descent.
WeylElement weyl_normalize(const RelativeRootSystem& system, const std::vector<int>& word);

WeylElement weyl_longest(const RelativeRootSystem& system);
WeylElement weyl_multiply(const RelativeRootSystem& system, const WeylElement& a, const WeylElement& b);
WeylElement weyl_inverse(const RelativeRootSystem& system, const WeylElement& w);

// Number of positive reduced roots sent to negative roots.
int weyl_length(const RelativeRootSystem& system, const std::vector<int>& word);

// Indices (into positive_roots()) of the positive reduced roots alpha with w(alpha) < 0.
std::vector<int> inversion_set(const RelativeRootSystem& system, const WeylElement& w);

// Every element in normal form; only for relative rank <= 4.
std::vector<WeylElement> weyl_enumerate(const RelativeRootSystem& system);

bool is_positive(const IntVec& coords);

}  // namespace gk::roots
