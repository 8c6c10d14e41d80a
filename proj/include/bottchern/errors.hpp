#pragma once

#include <stdexcept>
#include <string>

namespace bc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A wedge product left the model's declared weight window.  The window must
// be enlarged before the computation can be trusted.
struct WeightOverflow : Error {
    using Error::Error;
};

// Two forms that were required to live in the same (p,q)-sector do not.
struct SectorMismatch : Error {
    using Error::Error;
};

// An operation that needs a pure bidegree received a mixed-degree form.
struct InhomogeneousForm : Error {
    using Error::Error;
};

// A form failed the cocycle condition of the cohomology theory at hand.
struct NotACocycle : Error {
    using Error::Error;
};

// A Massey product was requested although one of the hypothesis products is
// non-zero in Bott-Chern cohomology; the product is undefined, not zero.
struct ProductNotExact : Error {
    using Error::Error;
};

// A generator assignment does not commute with the differentials or is not
// weight-compatible, so it does not define a bicomplex morphism.
struct NotAMorphism : Error {
    using Error::Error;
};

struct UnknownModel : Error {
    using Error::Error;
};

struct InvalidTheoryDegree : Error {
    using Error::Error;
};

// The obstruction scan hit its configured cap on Massey triples.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(int line_, int column_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

}  // namespace bc
