#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "bottchern/weight.hpp"

namespace bc {

// Basis word e^{(a,b)} phi^I ^ phibar^J with I, J strictly increasing index
// sets in {1..n}.  Index sets are stored as bit masks (bit k-1 <-> index k);
// the sign of sorting a wedge into this canonical order is tracked by the
// callers, never inside the monomial itself.
struct Monomial {
    Weight weight{};
    std::uint32_t holo = 0;
    std::uint32_t anti = 0;

    int p() const { return __builtin_popcount(holo); }
    int q() const { return __builtin_popcount(anti); }
    int degree() const { return p() + q(); }

    static Monomial one() { return {}; }
    static Monomial make(std::initializer_list<int> holo_idx, std::initializer_list<int> anti_idx,
                         Weight w = {});

    std::vector<int> holo_indices() const;
    std::vector<int> anti_indices() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Deterministic global order: by bidegree, then weight, then index tuples
// lexicographically.  Sector bases and all reports inherit this order.
bool operator<(const Monomial& x, const Monomial& y);

// Sign (-1)^k of merging two disjoint ascending index sets into one ascending
// set; 0 if they intersect.
int merge_sign(std::uint32_t x, std::uint32_t y);

std::vector<int> mask_to_indices(std::uint32_t mask);

}  // namespace bc
