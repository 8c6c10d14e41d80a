#include "bottchern/linalg.hpp"

#include <algorithm>

namespace bc {

Vec mat_apply(const Mat& m, const Vec& x) {
    Vec out(m.rows, GaussQ(0));
    for (int r = 0; r < m.rows; ++r) {
        GaussQ acc(0);
        for (int c = 0; c < m.cols; ++c) {
            const GaussQ& v = m.at(r, c);
            if (!v.is_zero() && !x[c].is_zero()) acc += v * x[c];
        }
        out[r] = acc;
    }
    return out;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
        GaussQ inv = GaussQ(1) / m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            GaussQ f = m.at(r, col);
            if (f.is_zero()) continue;
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

namespace {

struct GaussZ {
    Int re, im;
    bool is_zero() const { return re == 0 && im == 0; }
    GaussZ operator*(const GaussZ& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    GaussZ operator-(const GaussZ& o) const { return {re - o.re, im - o.im}; }
    // Exact quotient; Bareiss guarantees divisibility.
    GaussZ divide_exact(const GaussZ& o) const {
        Int n = o.re * o.re + o.im * o.im;
        Int r = re * o.re + im * o.im;
        Int i = im * o.re - re * o.im;
        return {r / n, i / n};
    }
};

}  // namespace

int rank_oracle(const Mat& m) {
    // Clear denominators row by row.
    std::vector<std::vector<GaussZ>> z(m.rows, std::vector<GaussZ>(m.cols));
    for (int r = 0; r < m.rows; ++r) {
        Int lcm = 1;
        for (int c = 0; c < m.cols; ++c) {
            const GaussQ& v = m.at(r, c);
            lcm = boost::multiprecision::lcm(lcm, v.re.denominator());
            lcm = boost::multiprecision::lcm(lcm, v.im.denominator());
        }
        for (int c = 0; c < m.cols; ++c) {
            const GaussQ& v = m.at(r, c);
            z[r][c] = {v.re.numerator() * (lcm / v.re.denominator()),
                       v.im.numerator() * (lcm / v.im.denominator())};
        }
    }
    std::vector<bool> used(m.rows, false);
    GaussZ prev{1, 0};
    int rk = 0;
    for (int col = m.cols - 1; col >= 0; --col) {
        int piv = -1;
        for (int r = m.rows - 1; r >= 0; --r)
            if (!used[r] && !z[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        used[piv] = true;
        ++rk;
        for (int r = 0; r < m.rows; ++r) {
            if (used[r]) continue;
            for (int c = 0; c < m.cols; ++c) {
                if (c == col) continue;
                GaussZ t = (z[piv][col] * z[r][c] - z[r][col] * z[piv][c]).divide_exact(prev);
                z[r][c] = t;
            }
            z[r][col] = {0, 0};
        }
        prev = z[piv][col];
    }
    return rk;
}

std::vector<Vec> kernel_basis(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols, GaussQ(0));
        v[free] = GaussQ(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at((int)i, free);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve_particular(const Mat& m, const Vec& rhs) {
    Mat aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = rhs[r];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    Vec x(m.cols, GaussQ(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at((int)i, m.cols);
    return x;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
    Mat m((int)vectors.size(), ambient);
    for (int r = 0; r < (int)vectors.size(); ++r) m.set_row(r, vectors[r]);
    std::vector<int> pivots = rref(m);
    Subspace s(ambient);
    s.rows_ = Mat((int)pivots.size(), ambient);
    for (int r = 0; r < (int)pivots.size(); ++r) s.rows_.set_row(r, m.row(r));
    s.pivots_ = std::move(pivots);
    return s;
}

Vec Subspace::reduce(Vec v) const {
    for (int r = 0; r < rows_.rows; ++r) {
        GaussQ f = v[pivots_[r]];
        if (f.is_zero()) continue;
        for (int c = 0; c < ambient_; ++c) v[c] -= f * rows_.at(r, c);
    }
    return v;
}

bool Subspace::contains(const Vec& v) const {
    Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const GaussQ& x) { return x.is_zero(); });
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    Vec coords(rows_.rows, GaussQ(0));
    Vec r = v;
    for (int i = 0; i < rows_.rows; ++i) {
        GaussQ f = r[pivots_[i]];
        coords[i] = f;
        if (f.is_zero()) continue;
        for (int c = 0; c < ambient_; ++c) r[c] -= f * rows_.at(i, c);
    }
    for (const GaussQ& x : r)
        if (!x.is_zero()) return std::nullopt;
    return coords;
}

Subspace operator+(const Subspace& x, const Subspace& y) {
    std::vector<Vec> rows;
    for (int r = 0; r < x.rows_.rows; ++r) rows.push_back(x.rows_.row(r));
    for (int r = 0; r < y.rows_.rows; ++r) rows.push_back(y.rows_.row(r));
    return Subspace::span(x.ambient_, rows);
}

}  // namespace bc
