#pragma once

#include <optional>
#include <vector>

#include "bottchern/scalar.hpp"

namespace bc {

using Vec = std::vector<GaussQ>;

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<GaussQ> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    GaussQ& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const GaussQ& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    Vec row(int r) const { return Vec(a.begin() + static_cast<std::size_t>(r) * cols,
                                      a.begin() + static_cast<std::size_t>(r + 1) * cols); }
    void set_row(int r, const Vec& v) {
        std::copy(v.begin(), v.end(), a.begin() + static_cast<std::size_t>(r) * cols);
    }
    friend bool operator==(const Mat&, const Mat&) = default;
};

Vec mat_apply(const Mat& m, const Vec& x);

// In-place reduced row echelon form; returns the pivot column of each
// resulting non-zero row, in order.  Pivots are chosen scanning columns left
// to right, rows top to bottom.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Structurally independent rank oracle: rows are cleared to Gaussian-integer
// entries, then a fraction-free Bareiss elimination runs with pivots chosen
// scanning columns right to left and rows bottom to top.
int rank_oracle(const Mat& m);

// Canonical kernel basis from the RREF: one vector per free column, in
// ascending free-column order, with a 1 in the free slot.
std::vector<Vec> kernel_basis(const Mat& m);

// Echelon particular solution of m x = rhs with every free variable set to
// zero; nullopt when the system is inconsistent.
std::optional<Vec> solve_particular(const Mat& m, const Vec& rhs);

// A linear subspace in canonical form: two subspaces are equal iff their
// reduced matrices are identical.
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient), rows_(0, ambient) {}
    static Subspace span(int ambient, const std::vector<Vec>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return rows_.rows; }
    const Mat& reduced_rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    // Residue of v after eliminating all pivot coordinates.
    Vec reduce(Vec v) const;
    // Coordinates of v in the row basis; nullopt if v is outside the span.
    std::optional<Vec> coordinates(const Vec& v) const;

    friend Subspace operator+(const Subspace& x, const Subspace& y);
    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.ambient_ == y.ambient_ && x.rows_ == y.rows_;
    }

  private:
    int ambient_ = 0;
    Mat rows_{0, 0};
    std::vector<int> pivots_;
};

}  // namespace bc
