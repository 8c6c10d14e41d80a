#pragma once

#include <compare>
#include <string>

namespace bc {

// Exponent pair of the character e^{a z1 + b z1bar} attached to a monomial.
// Weights add under wedge, conjugation swaps the two exponents, and the
// differentials never change them.
struct Weight {
    int a = 0;
    int b = 0;

    bool is_zero() const { return a == 0 && b == 0; }
    Weight flipped() const { return {b, a}; }

    Weight& operator+=(const Weight& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    friend Weight operator+(Weight x, const Weight& y) { return x += y; }
    friend Weight operator-(const Weight& x, const Weight& y) { return {x.a - y.a, x.b - y.b}; }
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

inline std::string to_string(const Weight& w) {
    return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
}

// Inclusive rectangle of admissible weights.  Every model declares one; the
// all-zero window is the unweighted case.
struct WeightWindow {
    int a_min = 0, a_max = 0;
    int b_min = 0, b_max = 0;

    bool contains(const Weight& w) const {
        return w.a >= a_min && w.a <= a_max && w.b >= b_min && w.b <= b_max;
    }
    bool trivial() const { return a_min == 0 && a_max == 0 && b_min == 0 && b_max == 0; }
    friend bool operator==(const WeightWindow&, const WeightWindow&) = default;
};

}  // namespace bc
