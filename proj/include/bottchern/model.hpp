#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bottchern/errors.hpp"
#include "bottchern/form.hpp"
#include "bottchern/metric.hpp"

namespace bc {

struct ValidationIssue {
    std::string kind;       // "integrability", "d-squared", ...
    std::string where;      // offending generator or component
    Form residual;          // the non-vanishing obstruction, when applicable
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

// A bi-differential bigraded algebra presented by structure equations on n
// holomorphic coframe generators, together with a weight window and a
// Hermitian metric.  Immutable after construction; all operations are pure.
class Model {
  public:
    Model(std::string name, int n, std::vector<Form> d_generators, WeightWindow window,
          HermitianMetric metric);

    // Unweighted model with the unitary metric.
    static Model simple(std::string name, int n, std::vector<Form> d_generators);

    const std::string& name() const { return name_; }
    int dim() const { return n_; }
    const WeightWindow& window() const { return window_; }
    const HermitianMetric& metric() const { return metric_; }
    const Form& d_generator(int k) const { return d_gen_[k - 1]; }

    // d is declared on holomorphic generators only; its action on the
    // conjugates is forced by conjugation symmetry.
    const Form& del_of_holo(int k) const { return del_holo_[k - 1]; }
    const Form& delbar_of_holo(int k) const { return delbar_holo_[k - 1]; }
    const Form& del_of_anti(int k) const { return del_anti_[k - 1]; }
    const Form& delbar_of_anti(int k) const { return delbar_anti_[k - 1]; }

    // Leibniz extensions.  The character e^{(a,b)} contributes a*(phi^1 ^ .)
    // to del and b*(phibar^1 ^ .) to delbar.
    Form del(const Form& f) const;
    Form delbar(const Form& f) const;
    Form d(const Form& f) const { return del(f) + delbar(f); }

    // Window-checked exterior product.
    Form wedge(const Form& f, const Form& g) const;
    void check_window(const Form& f, const char* what) const;

    // Deterministic enumeration of all C(n,p)*C(n,q) sector monomials.
    std::vector<Monomial> basis(int p, int q, Weight w = {}) const;

    ValidationReport validate() const;

    // Weights whose characters are unitary on the compact quotient (a+b=0
    // inside the window).  This is the domain on which the metric side of the
    // engine -- harmonic spaces, adjoints, dualities -- is exact.
    std::vector<Weight> hodge_weights() const;
    std::vector<Weight> window_weights() const;

    friend bool operator==(const Model& x, const Model& y) {
        return x.n_ == y.n_ && x.d_gen_ == y.d_gen_ && x.window_ == y.window_ &&
               x.metric_ == y.metric_;
    }

  private:
    Form derive(const Form& f, bool bar) const;

    std::string name_;
    int n_;
    std::vector<Form> d_gen_;
    WeightWindow window_;
    HermitianMetric metric_;
    std::vector<Form> del_holo_, delbar_holo_, del_anti_, delbar_anti_;
};

}  // namespace bc
