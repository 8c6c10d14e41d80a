#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bottchern/monomial.hpp"
#include "bottchern/scalar.hpp"

namespace bc {

// Finite linear combination of monomials with GaussQ coefficients.  Always
// canonical: zero coefficients are absent, so equality is plain map equality.
// A form may mix bidegrees (needed for de Rham classes); operations that
// require a pure bidegree check for it explicitly.
class Form {
  public:
    Form() = default;
    explicit Form(const Monomial& m, GaussQ c = GaussQ(1)) { add_term(m, c); }

    static Form zero() { return {}; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, GaussQ>& terms() const { return terms_; }

    void add_term(const Monomial& m, const GaussQ& c);
    GaussQ coefficient(const Monomial& m) const;

    bool is_homogeneous() const;
    // Bidegree of a homogeneous non-zero form; nullopt for 0 or mixed degrees.
    std::optional<std::pair<int, int>> bidegree() const;
    std::optional<int> total_degree() const;
    // Single weight shared by all terms, if any.
    std::optional<Weight> pure_weight() const;
    std::vector<std::pair<Weight, Form>> by_weight() const;
    Form component(int p, int q) const;

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const GaussQ& c);

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const GaussQ& c, Form f) { return f *= c; }
    friend bool operator==(const Form&, const Form&) = default;

  private:
    std::map<Monomial, GaussQ> terms_;
};

// Graded-commutative exterior product.  Window checks live on the model; this
// is the raw algebra operation.
Form wedge(const Form& f, const Form& g);

// Complex conjugation: swaps the two index sets (with the reordering sign),
// conjugates coefficients, flips weights (a,b) -> (b,a).
Form conjugate(const Form& f);

}  // namespace bc
