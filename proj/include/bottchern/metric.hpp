#pragma once

#include <vector>

#include "bottchern/scalar.hpp"

namespace bc {

// Hermitian inner products of the declared (1,0)-coframe: gram[j][k] is
// <phi^{j+1}, phi^{k+1}>, linear in the first slot.  The default identity
// gram declares the coframe unitary, which is the convention of every
// built-in model.  Monomials of distinct weights are orthogonal by fiat; the
// characters they carry integrate against each other trivially on the
// underlying compact quotient.
struct HermitianMetric {
    std::vector<std::vector<GaussQ>> gram;

    static HermitianMetric identity(int n) {
        HermitianMetric m;
        m.gram.assign(n, std::vector<GaussQ>(n, GaussQ(0)));
        for (int i = 0; i < n; ++i) m.gram[i][i] = GaussQ(1);
        return m;
    }

    int dim() const { return static_cast<int>(gram.size()); }
    bool is_identity() const;
    bool is_hermitian() const;
    // Exact positivity of all leading principal minors.
    bool is_positive_definite() const;
    // Determinant of the full gram matrix (real and positive when valid).
    GaussQ determinant() const;

    friend bool operator==(const HermitianMetric&, const HermitianMetric&) = default;
};

}  // namespace bc
