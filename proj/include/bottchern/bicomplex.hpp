#pragma once

#include <map>
#include <memory>

#include "bottchern/model.hpp"
#include "bottchern/types.hpp"

namespace bc {

// Computation session bound to one model.  Sector bases, operator matrices,
// cohomology groups, the Hodge star and Laplacian kernels are all memoized
// here; the underlying model stays immutable, so a session never invalidates.
class Bicomplex {
  public:
    explicit Bicomplex(const Model& model) : model_(model) {}
    Bicomplex(const Bicomplex&) = delete;
    Bicomplex& operator=(const Bicomplex&) = delete;

    const Model& model() const { return model_; }
    int dim() const { return model_.dim(); }

    const std::vector<Monomial>& basis(int p, int q, Weight w);
    Vec to_coords(const Form& f, int p, int q, Weight w);
    Form from_coords(const Vec& v, int p, int q, Weight w);

    // Matrices of the differentials between sector bases.  A target sector
    // outside [0,n]^2 yields a matrix with zero rows.
    const Mat& del_matrix(int p, int q, Weight w);        // -> (p+1, q)
    const Mat& delbar_matrix(int p, int q, Weight w);     // -> (p, q+1)
    const Mat& deldelbar_matrix(int p, int q, Weight w);  // -> (p+1, q+1)

    const CohomologyGroup& group(Theory t, int p, int q, Weight w = {});
    const CohomologyGroup& de_rham_group(int k, Weight w = {});

    // Dimension summed over the weights the theory is reported on: the full
    // window for cohomology.
    int dim_over_window(Theory t, int p, int q);
    int betti_over_window(int k);

    // --- metric side ---

    // Volume form: the unit-norm positive generator of the top sector.
    const Form& volume_form();
    GaussQ inner_product(const Form& f, const Form& g);
    Form star(const Form& f);
    Form adjoint_del(const Form& f);
    Form adjoint_delbar(const Form& f);
    Form laplacian(const Form& f, Theory t);
    const HarmonicSpace& harmonic(Theory t, int p, int q, Weight w = {});

    int harmonic_dim_over_hodge_weights(Theory t, int p, int q);

  private:
    struct SectorKey {
        int p, q;
        Weight w;
        auto operator<=>(const SectorKey&) const = default;
    };
    struct GroupKey {
        Theory t;
        int p, q, k;
        Weight w;
        auto operator<=>(const GroupKey&) const = default;
    };

    const Mat& operator_matrix(std::map<SectorKey, Mat>& cache, int p, int q, Weight w,
                               Form (Model::*op)(const Form&) const, int dp, int dq);
    CohomologyGroup build_group(Theory t, int p, int q, Weight w);
    CohomologyGroup build_de_rham(int k, Weight w);
    void finish_group(CohomologyGroup& g, const std::vector<Vec>& cocycle_vectors,
                      const std::vector<Vec>& boundary_vectors);
    const Mat& star_matrix(int p, int q);  // zero-weight star, (p,q) -> (n-q, n-p)
    GaussQ gram_minor(std::uint32_t rows_mask, std::uint32_t cols_mask) const;
    GaussQ monomial_inner(const Monomial& x, const Monomial& y) const;

    const Model& model_;
    std::map<SectorKey, std::vector<Monomial>> bases_;
    std::map<SectorKey, std::map<Monomial, int>> index_;
    std::map<SectorKey, Mat> del_, delbar_, deldelbar_;
    std::map<GroupKey, CohomologyGroup> groups_;
    std::map<std::pair<int, int>, Mat> stars_;
    std::map<GroupKey, HarmonicSpace> harmonics_;
    std::unique_ptr<Form> vol_;
};

}  // namespace bc
