#include "bottchern/metric.hpp"

namespace bc {

bool HermitianMetric::is_identity() const {
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (gram[i][j] != (i == j ? GaussQ(1) : GaussQ(0))) return false;
    return true;
}

bool HermitianMetric::is_hermitian() const {
    int n = dim();
    for (int i = 0; i < n; ++i) {
        if ((int)gram[i].size() != n) return false;
        for (int j = 0; j < n; ++j)
            if (gram[i][j] != gram[j][i].conj()) return false;
    }
    return true;
}

namespace {

// Exact determinant of the leading k x k block.  Plain Gaussian elimination
// over GaussQ suffices at these sizes.
GaussQ leading_minor(const std::vector<std::vector<GaussQ>>& g, int k) {
    std::vector<std::vector<GaussQ>> a(k, std::vector<GaussQ>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = g[i][j];
    GaussQ det(1);
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int r = c; r < k; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return GaussQ(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < k; ++r) {
            if (a[r][c].is_zero()) continue;
            GaussQ f = a[r][c] / a[c][c];
            for (int j = c; j < k; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

}  // namespace

bool HermitianMetric::is_positive_definite() const {
    if (!is_hermitian()) return false;
    for (int k = 1; k <= dim(); ++k) {
        GaussQ d = leading_minor(gram, k);
        if (!d.is_real() || d.re <= Rat(0)) return false;
    }
    return true;
}

GaussQ HermitianMetric::determinant() const { return leading_minor(gram, dim()); }

}  // namespace bc
