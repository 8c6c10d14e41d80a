#include "bottchern/monomial.hpp"

#include <stdexcept>

namespace bc {

Monomial Monomial::make(std::initializer_list<int> holo_idx, std::initializer_list<int> anti_idx,
                        Weight w) {
    Monomial m;
    m.weight = w;
    for (int i : holo_idx) {
        if (i < 1 || i > 32) throw std::out_of_range("Monomial index out of range");
        m.holo |= 1u << (i - 1);
    }
    for (int j : anti_idx) {
        if (j < 1 || j > 32) throw std::out_of_range("Monomial index out of range");
        m.anti |= 1u << (j - 1);
    }
    return m;
}

std::vector<int> mask_to_indices(std::uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        int k = __builtin_ctz(mask);
        out.push_back(k + 1);
        mask &= mask - 1;
    }
    return out;
}

std::vector<int> Monomial::holo_indices() const { return mask_to_indices(holo); }
std::vector<int> Monomial::anti_indices() const { return mask_to_indices(anti); }

namespace {

// Lexicographic order on ascending index tuples of equal length.
bool tuple_lex_less(std::uint32_t x, std::uint32_t y) {
    while (x && y) {
        int ix = __builtin_ctz(x);
        int iy = __builtin_ctz(y);
        if (ix != iy) return ix < iy;
        x &= x - 1;
        y &= y - 1;
    }
    return false;  // equal (same popcount by precondition)
}

}  // namespace

bool operator<(const Monomial& x, const Monomial& y) {
    if (x.p() != y.p()) return x.p() < y.p();
    if (x.q() != y.q()) return x.q() < y.q();
    if (x.weight != y.weight) return x.weight < y.weight;
    if (x.holo != y.holo) return tuple_lex_less(x.holo, y.holo);
    if (x.anti != y.anti) return tuple_lex_less(x.anti, y.anti);
    return false;
}

int merge_sign(std::uint32_t x, std::uint32_t y) {
    if (x & y) return 0;
    // Count inversions: pairs (a in x, b in y) with a > b.
    int inv = 0;
    std::uint32_t yy = y;
    while (yy) {
        int b = __builtin_ctz(yy);
        inv += __builtin_popcount(x & ~((2u << b) - 1));
        yy &= yy - 1;
    }
    return (inv & 1) ? -1 : 1;
}

}  // namespace bc
