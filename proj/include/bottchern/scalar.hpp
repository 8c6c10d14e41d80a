#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>

namespace bc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

// Exact scalar a + b*i with rational a, b.  This is the coefficient field of
// the whole engine; no floating point appears anywhere downstream.
struct GaussQ {
    Rat re{};
    Rat im{};

    GaussQ() = default;
    GaussQ(int v) : re(Int(v)) {}  // NOLINT: implicit by design
    GaussQ(Rat r) : re(std::move(r)) {}
    GaussQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussQ i() { return {Rat(0), Rat(1)}; }
    static GaussQ of(long num, long den = 1) { return {Rat(Int(num), Int(den))}; }

    bool is_zero() const { return re == Rat(0) && im == Rat(0); }
    bool is_real() const { return im == Rat(0); }

    GaussQ conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }

    GaussQ operator-() const { return {-re, -im}; }

    GaussQ& operator+=(const GaussQ& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussQ& operator-=(const GaussQ& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussQ& operator*=(const GaussQ& o) {
        Rat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    GaussQ& operator/=(const GaussQ& o) {
        Rat n = o.norm2();
        if (n == Rat(0)) throw std::domain_error("GaussQ: division by zero");
        Rat r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }

    friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
    friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
    friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
    friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
    friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }
};

std::string to_string(const Rat& r);

// Canonical rendering in the coefficient grammar:
//   <rat> | <rat>i | <rat>+<rat>i | <rat>-<rat>i      with <rat> = [-]digits[/digits]
std::string to_string(const GaussQ& z);

}  // namespace bc
