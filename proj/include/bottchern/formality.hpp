#pragma once

#include <optional>

#include "bottchern/cohomology.hpp"

namespace bc {

struct FormalityVerdict {
    Theory theory = Theory::bott_chern;
    bool formal = false;
    // Present iff formal is false: a pair of harmonic forms whose wedge is
    // not annihilated by the theory's Laplacian.
    std::optional<std::pair<Form, Form>> witness;
};

// True iff the wedge of any two Laplacian-kernel basis elements, over all
// sectors and unitary-character weights in the window, stays in the kernel.
// Witnesses are reported in deterministic (sector, basis) order.
FormalityVerdict is_geometrically_formal(Bicomplex& bx, Theory theory);

struct MasseyInput {
    Form a12, a23, a34;
};

struct MasseyResult {
    MasseyInput input;
    Form alpha13, alpha24;  // echelon solutions of del delbar x = signed product
    Form rho;               // the product representative
    int target_p = -1, target_q = -1;
    Weight target_weight{};
    int aeppli_dim = 0;     // dim of the target Aeppli group
    Vec rho_class;          // coordinates of [rho] in that group
    Subspace indeterminacy; // inside the Aeppli coordinate space
    bool vanishes = true;

    int quotient_dim() const { return aeppli_dim - indeterminacy.dim(); }
};

// Triple product of three Bott-Chern classes with vanishing pairwise
// products, valued in Aeppli cohomology modulo the indeterminacy subspace.
// Throws NotACocycle if an input is not a Bott-Chern cocycle and
// ProductNotExact if a hypothesis product is non-zero (the product is then
// undefined, not zero).
MasseyResult massey_abc(Bicomplex& bx, const MasseyInput& input);

// Algebra morphism between two models, given by the images of the
// holomorphic generators (each a (1,0)-form or zero) and extended
// multiplicatively; conjugate generators map to conjugate images.
struct BicomplexMorphism {
    const Model* source = nullptr;
    const Model* target = nullptr;
    std::vector<Form> generator_images;
};

// Throws NotAMorphism unless the assignment commutes with both differentials
// and is weight-compatible.
void validate_morphism(const BicomplexMorphism& f);

Form apply_morphism(const BicomplexMorphism& f, const Form& x);

struct NaturalityCheck {
    MasseyResult upstream;
    MasseyResult downstream;
    bool natural = false;  // pushed class agrees modulo downstream indeterminacy
};

NaturalityCheck massey_naturality(Bicomplex& source, Bicomplex& target,
                                  const BicomplexMorphism& f, const MasseyInput& input);

struct ObstructionFinding {
    Form a12, a23, a34;
    MasseyResult result;
};

struct ObstructionReport {
    std::size_t classes_scanned = 0;
    std::size_t pairs_vanishing = 0;
    std::size_t triples_evaluated = 0;
    std::size_t window_limited = 0;  // skipped because a product left the window
    std::vector<ObstructionFinding> nonvanishing;
    FormalityVerdict metric_verdict;

    bool obstructed() const { return !nonvanishing.empty(); }
};

// Scans triples of Bott-Chern harmonic basis classes with vanishing pairwise
// products and evaluates each Massey product.  A non-vanishing product rules
// out geometric Bott-Chern formality of every metric; the declared metric's
// own verdict is reported alongside.  Throws BudgetExceeded past the triple
// cap.  The scan is window-relative: triples whose products leave the weight
// window are counted, not evaluated.
ObstructionReport obstruction_report(Bicomplex& bx, std::size_t budget = 250000);

}  // namespace bc
