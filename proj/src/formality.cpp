#include "bottchern/formality.hpp"

#include <algorithm>
#include <tuple>

namespace bc {

namespace {

struct HarmonicClass {
    Form form;
    int p, q;
    Weight w;
};

std::vector<HarmonicClass> harmonic_classes(Bicomplex& bx, Theory theory) {
    std::vector<HarmonicClass> out;
    int n = bx.dim();
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            for (Weight w : bx.model().hodge_weights()) {
                const HarmonicSpace& h = bx.harmonic(theory, p, q, w);
                for (const Form& f : h.basis) out.push_back({f, p, q, w});
            }
    return out;
}

}  // namespace

FormalityVerdict is_geometrically_formal(Bicomplex& bx, Theory theory) {
    if (!is_laplacian_theory(theory))
        throw InvalidTheoryDegree("formality is defined for the Laplacian theories only");
    std::vector<HarmonicClass> classes = harmonic_classes(bx, theory);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i; j < classes.size(); ++j) {
            Form prod = bx.model().wedge(classes[i].form, classes[j].form);
            if (prod.is_zero()) continue;
            if (!bx.laplacian(prod, theory).is_zero())
                return {theory, false, std::pair{classes[i].form, classes[j].form}};
        }
    }
    return {theory, true, std::nullopt};
}

namespace {

struct GradedClass {
    Form form;
    int p = 0, q = 0;
    Weight w{};
};

GradedClass graded(const Form& f, const char* role) {
    auto bd = f.bidegree();
    auto w = f.pure_weight();
    if (!bd || !w)
        throw InhomogeneousForm(std::string(role) + " must be non-zero with a pure bidegree and weight");
    return {f, bd->first, bd->second, *w};
}

void require_bc_cocycle(Bicomplex& bx, const Form& f, const char* role) {
    if (!bx.model().del(f).is_zero() || !bx.model().delbar(f).is_zero())
        throw NotACocycle(std::string(role) + " is not a Bott-Chern cocycle");
}

// Zero class check for a product form living at (p,q,w); degrees beyond the
// window of [0,n]^2 hold nothing.
bool is_zero_bc_class(Bicomplex& bx, const Form& f, int p, int q, Weight w) {
    if (f.is_zero()) return true;
    int n = bx.dim();
    if (p > n || q > n) return true;  // unreachable: such a product is identically zero
    Vec cls = class_of(bx.group(Theory::bott_chern, p, q, w), f);
    return std::all_of(cls.begin(), cls.end(), [](const GaussQ& x) { return x.is_zero(); });
}

// Echelon solution of del delbar x = rhs in the sector below (p,q,w).
Form solve_potential(Bicomplex& bx, const Form& rhs, int p, int q, Weight w) {
    int n = bx.dim();
    if (p - 1 < 0 || q - 1 < 0 || p - 1 > n || q - 1 > n) {
        if (!rhs.is_zero()) throw ProductNotExact("no potential sector below bidegree");
        return {};
    }
    const Mat& dd = bx.deldelbar_matrix(p - 1, q - 1, w);
    Vec b = rhs.is_zero() ? Vec(dd.rows, GaussQ(0)) : bx.to_coords(rhs, p, q, w);
    auto x = solve_particular(dd, b);
    if (!x) throw ProductNotExact("product is not del-delbar-exact");
    return bx.from_coords(*x, p - 1, q - 1, w);
}

GaussQ degree_sign(int total) { return GaussQ((total & 1) ? -1 : 1); }

}  // namespace

MasseyResult massey_abc(Bicomplex& bx, const MasseyInput& input) {
    GradedClass a12 = graded(input.a12, "a12");
    GradedClass a23 = graded(input.a23, "a23");
    GradedClass a34 = graded(input.a34, "a34");
    require_bc_cocycle(bx, a12.form, "a12");
    require_bc_cocycle(bx, a23.form, "a23");
    require_bc_cocycle(bx, a34.form, "a34");

    const Model& M = bx.model();
    Form left = M.wedge(a12.form, a23.form);
    Form right = M.wedge(a23.form, a34.form);
    if (!is_zero_bc_class(bx, left, a12.p + a23.p, a12.q + a23.q, a12.w + a23.w))
        throw ProductNotExact("a12 . a23 is non-zero in Bott-Chern cohomology");
    if (!is_zero_bc_class(bx, right, a23.p + a34.p, a23.q + a34.q, a23.w + a34.w))
        throw ProductNotExact("a23 . a34 is non-zero in Bott-Chern cohomology");

    MasseyResult res;
    res.input = input;
    GaussQ s12 = degree_sign(a12.p + a12.q);
    GaussQ s23 = degree_sign(a23.p + a23.q);
    res.alpha13 = solve_potential(bx, s12 * left, a12.p + a23.p, a12.q + a23.q, a12.w + a23.w);
    res.alpha24 = solve_potential(bx, s23 * right, a23.p + a34.p, a23.q + a34.q, a23.w + a34.w);
    res.rho = s12 * M.wedge(a12.form, res.alpha24) - s23 * M.wedge(res.alpha13, a34.form);

    int P = a12.p + a23.p + a34.p - 1;
    int Q = a12.q + a23.q + a34.q - 1;
    Weight W = a12.w + a23.w + a34.w;
    res.target_p = P;
    res.target_q = Q;
    res.target_weight = W;

    int n = bx.dim();
    if (P < 0 || Q < 0 || P > n || Q > n) {
        // Target space is zero; the product vanishes by definition.
        if (!res.rho.is_zero()) throw NotACocycle("representative escaped the target sector");
        res.vanishes = true;
        res.indeterminacy = Subspace(0);
        return res;
    }

    if (!M.del(M.delbar(res.rho)).is_zero())
        throw NotACocycle("internal error: Massey representative is not del-delbar-closed");

    const CohomologyGroup& A = bx.group(Theory::aeppli, P, Q, W);
    res.aeppli_dim = A.dim();
    res.rho_class = class_of(A, res.rho);

    // Indeterminacy: a12 . H_A at the complementary degree, plus H_A . a34.
    std::vector<Vec> span;
    auto add_products = [&](const Form& fixed, bool fixed_left, int hp, int hq, Weight hw) {
        if (hp < 0 || hq < 0 || hp > n || hq > n) return;
        if (!M.window().contains(hw)) return;
        const CohomologyGroup& H = bx.group(Theory::aeppli, hp, hq, hw);
        for (const Form& rep : H.representatives) {
            Form prod = fixed_left ? M.wedge(fixed, rep) : M.wedge(rep, fixed);
            if (prod.is_zero()) {
                span.push_back(Vec(A.dim(), GaussQ(0)));
                continue;
            }
            span.push_back(class_of(A, prod));
        }
    };
    add_products(a12.form, true, a23.p + a34.p - 1, a23.q + a34.q - 1, W - a12.w);
    add_products(a34.form, false, a12.p + a23.p - 1, a12.q + a23.q - 1, W - a34.w);
    res.indeterminacy = Subspace::span(A.dim(), span);
    res.vanishes = res.indeterminacy.contains(res.rho_class);
    return res;
}

void validate_morphism(const BicomplexMorphism& f) {
    if (!f.source || !f.target) throw NotAMorphism("morphism endpoints missing");
    const Model& S = *f.source;
    const Model& T = *f.target;
    if ((int)f.generator_images.size() != S.dim())
        throw NotAMorphism("one image per source generator required");
    for (const Form& img : f.generator_images) {
        if (img.is_zero()) continue;
        auto bd = img.bidegree();
        if (!bd || *bd != std::pair{1, 0})
            throw NotAMorphism("generator images must be (1,0)-forms");
        T.check_window(img, "morphism image");
    }
    if (!S.window().trivial()) {
        // Characters must transport identically, which pins the first
        // generator and requires the target window to hold every weight.
        if (f.generator_images.empty() ||
            f.generator_images[0] != Form(Monomial::make({1}, {})))
            throw NotAMorphism("weighted sources require phi1 -> phi1");
        for (Weight w : S.window_weights())
            if (!T.window().contains(w)) throw NotAMorphism("target window too small");
    }
    for (int k = 1; k <= S.dim(); ++k) {
        Form lhs = apply_morphism(f, S.d_generator(k));
        Form rhs = T.d(f.generator_images[k - 1]);
        if (lhs != rhs)
            throw NotAMorphism("images do not commute with d on generator phi" + std::to_string(k));
    }
}

Form apply_morphism(const BicomplexMorphism& f, const Form& x) {
    const auto& images = f.generator_images;
    Form out;
    for (const auto& [m, c] : x.terms()) {
        Form term(Monomial::make({}, {}, m.weight), c);
        for (int i : m.holo_indices()) term = wedge(term, images[i - 1]);
        if (term.is_zero()) continue;
        for (int j : m.anti_indices()) term = wedge(term, conjugate(images[j - 1]));
        if (term.is_zero()) continue;
        out += term;
    }
    return out;
}

NaturalityCheck massey_naturality(Bicomplex& source, Bicomplex& target,
                                  const BicomplexMorphism& f, const MasseyInput& input) {
    validate_morphism(f);
    NaturalityCheck check;
    check.upstream = massey_abc(source, input);

    GradedClass a12 = graded(input.a12, "a12");
    GradedClass a23 = graded(input.a23, "a23");
    GradedClass a34 = graded(input.a34, "a34");
    Form b12 = apply_morphism(f, input.a12);
    Form b23 = apply_morphism(f, input.a23);
    Form b34 = apply_morphism(f, input.a34);

    int P = a12.p + a23.p + a34.p - 1;
    int Q = a12.q + a23.q + a34.q - 1;
    Weight W = a12.w + a23.w + a34.w;
    int n = target.dim();

    Form pushed = apply_morphism(f, check.upstream.rho);

    if (P < 0 || Q < 0 || P > n || Q > n) {
        // The downstream target space is zero.
        check.downstream.vanishes = true;
        check.downstream.target_p = P;
        check.downstream.target_q = Q;
        check.downstream.target_weight = W;
        check.natural = pushed.is_zero();
        return check;
    }

    const CohomologyGroup& A = target.group(Theory::aeppli, P, Q, W);
    Vec pushed_class = pushed.is_zero() ? Vec(A.dim(), GaussQ(0)) : class_of(A, pushed);

    if (b12.is_zero() || b23.is_zero() || b34.is_zero()) {
        // A zero image collapses the downstream product to the zero class,
        // but its indeterminacy can still absorb part of the pushed class.
        check.downstream.vanishes = true;
        check.downstream.target_p = P;
        check.downstream.target_q = Q;
        check.downstream.target_weight = W;
        check.downstream.aeppli_dim = A.dim();
        check.downstream.rho_class = Vec(A.dim(), GaussQ(0));
        std::vector<Vec> span;
        auto add_products = [&](const Form& fixed, bool fixed_left, int hp, int hq, Weight hw) {
            if (fixed.is_zero()) return;
            if (hp < 0 || hq < 0 || hp > n || hq > n) return;
            if (!target.model().window().contains(hw)) return;
            const CohomologyGroup& H = target.group(Theory::aeppli, hp, hq, hw);
            for (const Form& rep : H.representatives) {
                Form prod = fixed_left ? target.model().wedge(fixed, rep)
                                       : target.model().wedge(rep, fixed);
                span.push_back(prod.is_zero() ? Vec(A.dim(), GaussQ(0)) : class_of(A, prod));
            }
        };
        add_products(b12, true, a23.p + a34.p - 1, a23.q + a34.q - 1, W - a12.w);
        add_products(b34, false, a12.p + a23.p - 1, a12.q + a23.q - 1, W - a34.w);
        check.downstream.indeterminacy = Subspace::span(A.dim(), span);
        check.natural = check.downstream.indeterminacy.contains(pushed_class);
        return check;
    }

    check.downstream = massey_abc(target, MasseyInput{b12, b23, b34});
    Vec diff = pushed_class;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= check.downstream.rho_class[i];
    check.natural = check.downstream.indeterminacy.contains(diff);
    return check;
}

ObstructionReport obstruction_report(Bicomplex& bx, std::size_t budget) {
    ObstructionReport report;
    std::vector<HarmonicClass> classes = harmonic_classes(bx, Theory::bott_chern);
    report.classes_scanned = classes.size();
    const Model& M = bx.model();
    std::size_t n_cls = classes.size();

    enum class Pair { vanishes, nonzero, overflow };
    std::vector<std::vector<Pair>> table(n_cls, std::vector<Pair>(n_cls, Pair::nonzero));
    for (std::size_t i = 0; i < n_cls; ++i)
        for (std::size_t j = 0; j < n_cls; ++j) {
            Form prod = wedge(classes[i].form, classes[j].form);
            bool inside = true;
            for (const auto& [m, c] : prod.terms())
                if (!M.window().contains(m.weight)) inside = false;
            if (!inside) {
                table[i][j] = Pair::overflow;
                ++report.window_limited;
                continue;
            }
            bool zero = is_zero_bc_class(bx, prod, classes[i].p + classes[j].p,
                                         classes[i].q + classes[j].q, classes[i].w + classes[j].w);
            if (zero) {
                table[i][j] = Pair::vanishes;
                ++report.pairs_vanishing;
            }
        }

    for (std::size_t i = 0; i < n_cls; ++i)
        for (std::size_t j = 0; j < n_cls; ++j) {
            if (table[i][j] != Pair::vanishes) continue;
            for (std::size_t k = 0; k < n_cls; ++k) {
                if (table[j][k] != Pair::vanishes) continue;
                if (++report.triples_evaluated > budget)
                    throw BudgetExceeded("obstruction scan exceeded the triple budget of " +
                                         std::to_string(budget));
                try {
                    MasseyResult r = massey_abc(
                        bx, MasseyInput{classes[i].form, classes[j].form, classes[k].form});
                    if (!r.vanishes)
                        report.nonvanishing.push_back(
                            {classes[i].form, classes[j].form, classes[k].form, std::move(r)});
                } catch (const WeightOverflow&) {
                    ++report.window_limited;
                }
            }
        }

    report.metric_verdict = is_geometrically_formal(bx, Theory::bott_chern);
    if (report.metric_verdict.formal && report.obstructed())
        throw Error("internal inconsistency: formal metric with a non-vanishing triple product");
    return report;
}

}  // namespace bc
