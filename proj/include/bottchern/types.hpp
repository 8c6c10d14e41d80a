#pragma once

#include <string>
#include <vector>

#include "bottchern/form.hpp"
#include "bottchern/linalg.hpp"

namespace bc {

enum class Theory { de_rham, dolbeault, partial, bott_chern, aeppli };

std::string to_string(Theory t);
bool is_laplacian_theory(Theory t);  // dolbeault, bott_chern, aeppli

// One cohomology space at one sector, with enough data to reduce arbitrary
// cocycles to exact coordinates in the representative basis.
struct CohomologyGroup {
    Theory theory = Theory::bott_chern;
    int p = -1, q = -1;  // bigraded theories
    int k = -1;          // de Rham total degree
    Weight weight{};

    std::vector<Monomial> ambient;         // ordered sector basis
    std::vector<Mat> cocycle_conditions;   // a cocycle is annihilated by all of these
    Subspace cocycles;
    Subspace boundaries;                   // contained in cocycles
    Subspace quotient;                     // canonical residues; one row per representative
    std::vector<Form> representatives;

    int dim() const { return quotient.dim(); }
};

struct HarmonicSpace {
    Theory theory = Theory::bott_chern;
    int p = 0, q = 0;
    Weight weight{};
    std::vector<Form> basis;
    Subspace span;  // coordinates w.r.t. the sector basis

    int dim() const { return span.dim(); }
};

}  // namespace bc
