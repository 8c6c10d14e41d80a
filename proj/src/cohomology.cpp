#include "bottchern/cohomology.hpp"

#include <algorithm>

namespace bc {

Vec class_of(const CohomologyGroup& g, const Form& f) {
    std::map<Monomial, int> idx;
    for (int i = 0; i < (int)g.ambient.size(); ++i) idx.emplace(g.ambient[i], i);
    Vec v(g.ambient.size(), GaussQ(0));
    for (const auto& [m, c] : f.terms()) {
        auto it = idx.find(m);
        if (it == idx.end()) throw SectorMismatch("form lies outside the group's sector");
        v[it->second] = c;
    }
    for (const Mat& cond : g.cocycle_conditions) {
        Vec img = mat_apply(cond, v);
        if (!std::all_of(img.begin(), img.end(), [](const GaussQ& x) { return x.is_zero(); }))
            throw NotACocycle("form fails the cocycle condition for " + to_string(g.theory));
    }
    Vec residue = g.boundaries.reduce(v);
    auto coords = g.quotient.coordinates(residue);
    if (!coords) throw NotACocycle("cocycle reduction left the computed quotient basis");
    return *coords;
}

long delta_k(Bicomplex& bx, int k) {
    int n = bx.dim();
    long total = 0;
    for (Weight w : bx.model().hodge_weights()) {
        for (int p = std::max(0, k - n); p <= std::min(n, k); ++p) {
            int q = k - p;
            total += bx.group(Theory::bott_chern, p, q, w).dim();
            total += bx.group(Theory::bott_chern, n - q, n - p, w).dim();
        }
        if (k >= 0 && k <= 2 * n) total -= 2L * bx.de_rham_group(k, w).dim();
    }
    return total;
}

bool ddbar_lemma(Bicomplex& bx) {
    for (int k = 0; k <= 2 * bx.dim(); ++k)
        if (delta_k(bx, k) != 0) return false;
    return true;
}

}  // namespace bc
