// Acceptance suite: one numbered criterion per run (or "all").  Each criterion
// prints one PASS/FAIL line; the exit code is the number of failures.

#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "bottchern/cohomology.hpp"
#include "bottchern/formality.hpp"
#include "bottchern/hodge.hpp"
#include "bottchern/catalog.hpp"
#include "bottchern/textio.hpp"

using namespace bc;

namespace {

Form mono(std::initializer_list<int> holo, std::initializer_list<int> anti, Weight w = {},
          GaussQ c = GaussQ(1)) {
    return Form(Monomial::make(holo, anti, w), c);
}

const GaussQ I = GaussQ::i();

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << "    failed: " << what << "\n";
        }
    }
};

// 1. The featured Iwasawa triple product and the obstruction verdict.
void criterion_1(Checker& c) {
    Bicomplex bx(catalog::builtin("iwasawa").model);
    MasseyInput input{mono({1, 2}, {}), mono({}, {1, 2}), mono({}, {1})};
    MasseyResult r = massey_abc(bx, input);
    c.require(!r.vanishes, "triple product reports NON-VANISHING");
    c.require(r.alpha13 == -mono({3}, {3}), "alpha13 = -phi3^phi3~");
    c.require(r.alpha24.is_zero(), "alpha24 = 0");
    // The representative equals the canonical generator phi3^phibar1^phibar3
    // up to the sign of sorting its factors; modulo the indeterminacy the
    // signed class is reproduced exactly.
    const CohomologyGroup& A = bx.group(Theory::aeppli, 1, 2);
    Vec gen = class_of(A, mono({3}, {1, 3}));
    bool plus = true, minus = true;
    {
        Vec d1 = r.rho_class, d2 = r.rho_class;
        for (std::size_t i = 0; i < gen.size(); ++i) {
            d1[i] -= gen[i];
            d2[i] += gen[i];
        }
        plus = r.indeterminacy.contains(d1);
        minus = r.indeterminacy.contains(d2);
    }
    c.require(plus || minus,
              "representative equals phi3^phi1~^phi3~ modulo indeterminacy, up to the "
              "factor-sorting sign");
    c.require(r.rho == -mono({3}, {1, 3}), "representative form is the sorted generator");
    c.require(r.quotient_dim() == 4, "quotient of H_A^{1,2} by the indeterminacy has dim 4");

    ObstructionReport report = obstruction_report(bx);
    c.require(report.obstructed(), "obstruction scan finds a non-vanishing product");
    c.require(!report.metric_verdict.formal,
              "metric verdict: not geometrically-Bott-Chern-formal");
}

// 2. Calabi-Eckmann dimension tables on S3 x S3.
void criterion_2(Checker& c) {
    Bicomplex bx(catalog::builtin("s3xs3_calabi_eckmann").model);
    std::map<std::pair<int, int>, int> dolb = {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{2, 1}, 1},
                                               {{1, 2}, 1}, {{2, 2}, 1}, {{3, 2}, 1}, {{3, 3}, 1}};
    std::map<std::pair<int, int>, int> bott = {{{0, 0}, 1}, {{1, 1}, 2}, {{2, 1}, 1}, {{1, 2}, 1},
                                               {{2, 2}, 1}, {{3, 2}, 1}, {{2, 3}, 1}, {{3, 3}, 1}};
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            auto key = std::pair{p, q};
            int hd = dolb.count(key) ? dolb[key] : 0;
            int hb = bott.count(key) ? bott[key] : 0;
            std::ostringstream at;
            at << "(" << p << "," << q << ")";
            c.require(bx.group(Theory::dolbeault, p, q).dim() == hd,
                      "dolbeault dimension at " + at.str());
            c.require(bx.group(Theory::bott_chern, p, q).dim() == hb,
                      "bott-chern dimension at " + at.str());
        }
    std::vector<int> betti = {1, 0, 0, 2, 0, 0, 1};
    for (int k = 0; k <= 6; ++k)
        c.require(bx.de_rham_group(k).dim() == betti[k], "betti number b_" + std::to_string(k));
}

// 3. Formality verdicts on S3 x S3.
void criterion_3(Checker& c) {
    Bicomplex bx(catalog::builtin("s3xs3_calabi_eckmann").model);
    FormalityVerdict bc_v = is_geometrically_formal(bx, Theory::bott_chern);
    c.require(bc_v.formal, "bott-chern theory: FORMAL");
    FormalityVerdict dol = is_geometrically_formal(bx, Theory::dolbeault);
    c.require(!dol.formal, "dolbeault theory: NOT FORMAL");
    if (dol.witness) {
        auto [left, right] = *dol.witness;
        c.require(left == right, "witness is a square");
        Form omega = I * mono({1}, {1}) + mono({2}, {2});
        Subspace line =
            Subspace::span(9, {bx.to_coords(left, 1, 1, {}), bx.to_coords(omega, 1, 1, {})});
        c.require(line.dim() == 1, "witness factor spans the i phi1^phi1~ + phi2^phi2~ line");
        c.require(!bx.laplacian(bx.model().wedge(left, right), Theory::dolbeault).is_zero(),
                  "witness square is not harmonic");
    } else {
        c.require(false, "witness present");
    }
}

// 4. Nakamura cases: featured harmonic pairs and formality verdicts.
void criterion_4(Checker& c) {
    for (bool case_a : {true, false}) {
        std::string name = case_a ? "nakamura_a" : "nakamura_b";
        Bicomplex bx(catalog::builtin(name).model);
        Form x = mono({1, 2}, {});  // e^{-z1} dz12 in the unitary coframe
        Form y = case_a ? mono({3}, {1}, {-1, 1})  // e^{z1bar} dz31bar
                        : mono({}, {1, 2});        // e^{-z1bar} dz1bar2bar
        c.require(bx.laplacian(x, Theory::bott_chern).is_zero(), name + ": first factor harmonic");
        c.require(bx.laplacian(y, Theory::bott_chern).is_zero(),
                  name + ": second factor harmonic");
        Form product = bx.model().wedge(x, y);
        c.require(!product.is_zero(), name + ": product non-trivial");
        c.require(!bx.laplacian(product, Theory::bott_chern).is_zero(),
                  name + ": product is not harmonic");
        c.require(!is_geometrically_formal(bx, Theory::bott_chern).formal,
                  name + ": NOT geometrically-Bott-Chern-formal");
        c.require(is_geometrically_formal(bx, Theory::dolbeault).formal,
                  name + ": geometrically-Dolbeault-formal on the windowed complex");
    }
}

// 5. dim ker Laplacian = dim cohomology, everywhere.
void criterion_5(Checker& c) {
    for (const std::string& name : catalog::names()) {
        const Model& m = catalog::builtin(name).model;
        Bicomplex bx(m);
        for (Theory t : {Theory::dolbeault, Theory::bott_chern, Theory::aeppli})
            for (int p = 0; p <= m.dim(); ++p)
                for (int q = 0; q <= m.dim(); ++q)
                    for (Weight w : m.hodge_weights()) {
                        std::ostringstream at;
                        at << name << " " << to_string(t) << " (" << p << "," << q << ") "
                           << to_string(w);
                        c.require(bx.harmonic(t, p, q, w).dim() == bx.group(t, p, q, w).dim(),
                                  at.str());
                    }
    }
}

// 6. Star duality between the Bott-Chern and Aeppli kernels.
void criterion_6(Checker& c) {
    for (const std::string& name : catalog::names()) {
        const Model& m = catalog::builtin(name).model;
        Bicomplex bx(m);
        int n = m.dim();
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                for (Weight w : m.hodge_weights()) {
                    std::ostringstream at;
                    at << name << " (" << p << "," << q << ") " << to_string(w);
                    const HarmonicSpace& hbc = bx.harmonic(Theory::bott_chern, p, q, w);
                    const HarmonicSpace& ha = bx.harmonic(Theory::aeppli, n - q, n - p, w);
                    c.require(bx.group(Theory::bott_chern, p, q, w).dim() ==
                                  bx.group(Theory::aeppli, n - q, n - p, w).dim(),
                              "cohomology duality at " + at.str());
                    std::vector<Vec> images;
                    bool all_harmonic = true;
                    for (const Form& f : hbc.basis) {
                        Form sf = bx.star(f);
                        if (!bx.laplacian(sf, Theory::aeppli).is_zero()) all_harmonic = false;
                        images.push_back(bx.to_coords(sf, n - q, n - p, w));
                    }
                    c.require(all_harmonic, "star lands in the aeppli kernel at " + at.str());
                    Subspace span = Subspace::span((int)bx.basis(n - q, n - p, w).size(), images);
                    c.require(span.dim() == hbc.dim() && span == ha.span,
                              "star is a bijection of kernels at " + at.str());
                }
    }
}

// 7. Non-Kaehler degrees.
void criterion_7(Checker& c) {
    for (const std::string& name : catalog::names()) {
        Bicomplex bx(catalog::builtin(name).model);
        for (int k = 0; k <= 2 * bx.dim(); ++k)
            c.require(delta_k(bx, k) >= 0, name + ": delta_" + std::to_string(k) + " >= 0");
    }
    for (int n = 1; n <= 3; ++n) {
        Bicomplex bx(catalog::builtin("torus_" + std::to_string(n)).model);
        for (int k = 0; k <= 2 * n; ++k)
            c.require(delta_k(bx, k) == 0,
                      "torus_" + std::to_string(n) + ": delta_" + std::to_string(k) + " = 0");
        c.require(ddbar_lemma(bx), "torus satisfies the del-delbar lemma");
    }
    {
        Bicomplex bx(catalog::builtin("iwasawa").model);
        bool positive = false;
        for (int k = 0; k <= 6; ++k) positive = positive || delta_k(bx, k) > 0;
        c.require(positive, "iwasawa has a positive degree");
        c.require(!ddbar_lemma(bx), "iwasawa fails the del-delbar lemma");
    }
    {
        Bicomplex bx(catalog::builtin("s3xs3_calabi_eckmann").model);
        long d2 = delta_k(bx, 2);
        // As stated this criterion pins delta_2 = 4.  The value that follows
        // from the published Bott-Chern table under the defining formula
        // sum_{p+q=2} (h_BC^{p,q} + h_BC^{3-q,3-p}) - 2 b_2 is
        // (0+2+0) + (0+1+0) - 0 = 3, and the exact computation agrees with
        // the table, so this check cannot pass together with the tables.
        std::ostringstream msg;
        msg << "s3xs3 delta_2 = 4 (computed exactly: " << d2
            << "; the published Bott-Chern table forces 3)";
        c.require(d2 == 4, msg.str());
    }
}

// 8. Algebraic property suites.
void criterion_8(Checker& c) {
    for (const std::string& name : catalog::names()) {
        const Model& m = catalog::builtin(name).model;
        Bicomplex bx(m);
        int n = m.dim();

        std::vector<Monomial> monomials;
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                for (Weight w : m.window_weights())
                    for (const Monomial& mo : m.basis(p, q, w)) monomials.push_back(mo);

        bool d_ok = true, conj_ok = true;
        for (const Monomial& mo : monomials) {
            Form f{mo};
            if (!m.del(m.del(f)).is_zero() || !m.delbar(m.delbar(f)).is_zero() ||
                !(m.del(m.delbar(f)) + m.delbar(m.del(f))).is_zero())
                d_ok = false;
            if (conjugate(m.del(f)) != m.delbar(conjugate(f))) conj_ok = false;
        }
        c.require(d_ok, name + ": d-squared identities");
        c.require(conj_ok, name + ": conjugation intertwines del and delbar");

        bool leib_ok = true, comm_ok = true, assoc_ok = true;
        for (std::size_t i = 0; i < monomials.size(); i += 7)
            for (std::size_t j = 1; j < monomials.size(); j += 11) {
                Form f{monomials[i]}, g{monomials[j]};
                int df = monomials[i].degree(), dg = monomials[j].degree();
                GaussQ sgn((df * dg) % 2 ? -1 : 1);
                if (wedge(f, g) != sgn * wedge(g, f)) comm_ok = false;
                GaussQ leib(df % 2 ? -1 : 1);
                if (m.del(wedge(f, g)) != wedge(m.del(f), g) + leib * wedge(f, m.del(g)))
                    leib_ok = false;
                Form h{monomials[(i + j) % monomials.size()]};
                if (wedge(wedge(f, g), h) != wedge(f, wedge(g, h))) assoc_ok = false;
            }
        c.require(leib_ok, name + ": leibniz rule");
        c.require(comm_ok, name + ": graded commutativity");
        c.require(assoc_ok, name + ": associativity");

        bool star_ok = true, adj_ok = true;
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                for (Weight w : m.hodge_weights()) {
                    for (const Monomial& mo : m.basis(p, q, w)) {
                        Form f{mo};
                        GaussQ sgn(((p + q) % 2) ? -1 : 1);
                        if (bx.star(bx.star(f)) != sgn * f) star_ok = false;
                    }
                    if (p + 1 <= n)
                        for (const Monomial& x : m.basis(p, q, w))
                            for (const Monomial& y : m.basis(p + 1, q, w))
                                if (bx.inner_product(m.del(Form(x)), Form(y)) !=
                                    bx.inner_product(Form(x), bx.adjoint_del(Form(y))))
                                    adj_ok = false;
                }
        c.require(star_ok, name + ": star squares to the parity sign");
        c.require(adj_ok, name + ": adjointness of del");
    }

    // Massey well-definedness under potential perturbation.
    {
        Bicomplex bx(catalog::builtin("iwasawa").model);
        const Model& m = bx.model();
        MasseyInput input{mono({1, 2}, {}), mono({}, {1, 2}), mono({}, {1})};
        MasseyResult base = massey_abc(bx, input);
        const CohomologyGroup& A = bx.group(Theory::aeppli, 1, 2);
        bool stable = true;
        for (const Form& shift : {mono({1}, {1}), mono({2}, {2}), mono({1}, {2})}) {
            Form rho =
                m.wedge(input.a12, base.alpha24) - m.wedge(base.alpha13 + shift, input.a34);
            Vec cls = class_of(A, rho);
            Vec diff = cls;
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= base.rho_class[i];
            if (!base.indeterminacy.contains(diff)) stable = false;
            if (base.indeterminacy.contains(cls)) stable = false;  // verdict must not flip
        }
        c.require(stable, "massey class is stable under potential perturbation");
    }

    // Naturality for validated morphisms.
    {
        const Model& iw = catalog::builtin("iwasawa").model;
        const Model& t2 = catalog::builtin("torus_2").model;
        Model point = Model::simple("point", 0, {});
        Bicomplex up(iw), down(iw), src(t2), pt(point);
        MasseyInput featured{mono({1, 2}, {}), mono({}, {1, 2}), mono({}, {1})};
        BicomplexMorphism id{&iw, &iw, {mono({1}, {}), mono({2}, {}), mono({3}, {})}};
        c.require(massey_naturality(up, down, id, featured).natural, "identity naturality");
        BicomplexMorphism zero{&iw, &point, {Form{}, Form{}, Form{}}};
        c.require(massey_naturality(up, pt, zero, featured).natural, "projection naturality");
        BicomplexMorphism inc{&t2, &iw, {mono({1}, {}), mono({2}, {})}};
        MasseyInput upstream{mono({1}, {}), mono({1, 2}, {}), mono({2}, {})};
        c.require(massey_naturality(src, up, inc, upstream).natural, "inclusion naturality");
    }

    // Theorem consistency: a formal metric admits only vanishing products.
    for (const char* name : {"torus_2", "s3xs3_calabi_eckmann"}) {
        Bicomplex bx(catalog::builtin(name).model);
        ObstructionReport r = obstruction_report(bx, 1000000);
        c.require(r.metric_verdict.formal && !r.obstructed(),
                  std::string(name) + ": formal metric, all products vanish");
    }
}

// 9. Oracle equivalence: dimensions via the independent elimination path.
void criterion_9(Checker& c) {
    auto join_columns = [](const Mat& a, const Mat& b) {
        Mat m(a.rows, a.cols + b.cols);
        for (int r = 0; r < a.rows; ++r) {
            for (int col = 0; col < a.cols; ++col) m.at(r, col) = a.at(r, col);
            for (int col = 0; col < b.cols; ++col) m.at(r, a.cols + col) = b.at(r, col);
        }
        return m;
    };
    auto stack_rows = [](const Mat& a, const Mat& b) {
        Mat m(a.rows + b.rows, a.cols);
        for (int r = 0; r < a.rows; ++r)
            for (int col = 0; col < a.cols; ++col) m.at(r, col) = a.at(r, col);
        for (int r = 0; r < b.rows; ++r)
            for (int col = 0; col < b.cols; ++col) m.at(a.rows + r, col) = b.at(r, col);
        return m;
    };

    for (const std::string& name : catalog::names()) {
        const Model& m = catalog::builtin(name).model;
        Bicomplex bx(m);
        int n = m.dim();
        bool all_ok = true;
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                for (Weight w : m.window_weights()) {
                    int N = (int)bx.basis(p, q, w).size();
                    const Mat& del = bx.del_matrix(p, q, w);
                    const Mat& delbar = bx.delbar_matrix(p, q, w);
                    const Mat& ddbar = bx.deldelbar_matrix(p, q, w);

                    int bc = (N - rank_oracle(stack_rows(del, delbar))) -
                             (p >= 1 && q >= 1
                                  ? rank_oracle(bx.deldelbar_matrix(p - 1, q - 1, w))
                                  : 0);
                    int boundary_rank = 0;
                    if (p >= 1 && q >= 1)
                        boundary_rank = rank_oracle(join_columns(bx.del_matrix(p - 1, q, w),
                                                                 bx.delbar_matrix(p, q - 1, w)));
                    else if (p >= 1)
                        boundary_rank = rank_oracle(bx.del_matrix(p - 1, q, w));
                    else if (q >= 1)
                        boundary_rank = rank_oracle(bx.delbar_matrix(p, q - 1, w));
                    int aeppli = (N - rank_oracle(ddbar)) - boundary_rank;
                    int dolb = (N - rank_oracle(delbar)) -
                               (q >= 1 ? rank_oracle(bx.delbar_matrix(p, q - 1, w)) : 0);
                    int partial = (N - rank_oracle(del)) -
                                  (p >= 1 ? rank_oracle(bx.del_matrix(p - 1, q, w)) : 0);

                    if (bc != bx.group(Theory::bott_chern, p, q, w).dim()) all_ok = false;
                    if (aeppli != bx.group(Theory::aeppli, p, q, w).dim()) all_ok = false;
                    if (dolb != bx.group(Theory::dolbeault, p, q, w).dim()) all_ok = false;
                    if (partial != bx.group(Theory::partial, p, q, w).dim()) all_ok = false;
                }
        c.require(all_ok, name + ": all bigraded dimensions match the oracle");
    }
}

const std::map<int, std::pair<const char*, std::function<void(Checker&)>>>& criteria() {
    static const std::map<int, std::pair<const char*, std::function<void(Checker&)>>> table = {
        {1, {"iwasawa triple product and obstruction verdict", criterion_1}},
        {2, {"calabi-eckmann dimension tables", criterion_2}},
        {3, {"calabi-eckmann formality verdicts", criterion_3}},
        {4, {"nakamura harmonic pairs and formality verdicts", criterion_4}},
        {5, {"harmonic-space dimensions equal cohomology dimensions", criterion_5}},
        {6, {"star duality between bott-chern and aeppli kernels", criterion_6}},
        {7, {"non-kaehler degrees", criterion_7}},
        {8, {"algebraic property suites", criterion_8}},
        {9, {"oracle equivalence of all dimensions", criterion_9}},
    };
    return table;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    if (argc <= 1 || std::string(argv[1]) == "all") {
        for (const auto& [k, v] : criteria()) selected.push_back(k);
    } else {
        selected.push_back(std::atoi(argv[1]));
    }
    int failures = 0;
    for (int k : selected) {
        auto it = criteria().find(k);
        if (it == criteria().end()) {
            std::cerr << "unknown criterion " << k << "\n";
            return 64;
        }
        Checker c;
        try {
            it->second.second(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << "    exception: " << e.what() << "\n";
        }
        std::cout << "criterion " << k << ": " << (c.ok ? "PASS" : "FAIL") << " - "
                  << it->second.first << "\n"
                  << c.detail.str();
        if (!c.ok) ++failures;
    }
    return failures;
}
