#pragma once

#include "bottchern/bicomplex.hpp"

namespace bc {

// Metric-side operations.  These are thin entry points over the session's
// memoized machinery; see Bicomplex for the conventions.  The Hodge star is
// C-linear, normalized by  f ^ star(conj g) = <f,g> vol  on unitary-character
// sectors, and the adjoints are the compact-manifold identities
// del* = -star delbar star and delbar* = -star del star.

inline GaussQ inner_product(Bicomplex& bx, const Form& f, const Form& g) {
    return bx.inner_product(f, g);
}

inline Form hodge_star(Bicomplex& bx, const Form& f) { return bx.star(f); }

inline Form adjoint_del(Bicomplex& bx, const Form& f) { return bx.adjoint_del(f); }

inline Form adjoint_delbar(Bicomplex& bx, const Form& f) { return bx.adjoint_delbar(f); }

inline Form laplacian(Bicomplex& bx, const Form& f, Theory t) { return bx.laplacian(f, t); }

inline const HarmonicSpace& harmonic_space(Bicomplex& bx, Theory t, int p, int q, Weight w = {}) {
    return bx.harmonic(t, p, q, w);
}

inline const Form& volume_form(Bicomplex& bx) { return bx.volume_form(); }

}  // namespace bc
