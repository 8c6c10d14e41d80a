#pragma once

#include "bottchern/bicomplex.hpp"

namespace bc {

// Exact coordinates of [f] in the group's representative basis; the zero
// vector iff f is a coboundary for the theory.  Throws NotACocycle when f
// fails the theory's cocycle condition and SectorMismatch when f does not
// live in the group's sector.
Vec class_of(const CohomologyGroup& g, const Form& f);

// Non-Kaehler degree: sum over p+q=k of h_BC^{p,q} + h_BC^{n-q,n-p}, minus
// twice the k-th Betti number.  For weighted models all three ingredients are
// taken over the unitary-character weights, where duality is exact.
long delta_k(Bicomplex& bx, int k);

// True iff delta_k vanishes for every 0 <= k <= 2n.
bool ddbar_lemma(Bicomplex& bx);

}  // namespace bc
