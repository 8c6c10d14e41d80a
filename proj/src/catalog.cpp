#include "bottchern/catalog.hpp"

#include <algorithm>
#include <map>

namespace bc::catalog {

namespace {

Form mono(std::initializer_list<int> holo, std::initializer_list<int> anti, Weight w = {},
          GaussQ c = GaussQ(1)) {
    return Form(Monomial::make(holo, anti, w), c);
}

const GaussQ I = GaussQ::i();

Model make_torus(int n) {
    return Model::simple("torus_" + std::to_string(n), n, std::vector<Form>(n));
}

Model make_iwasawa() {
    std::vector<Form> d(3);
    d[2] = GaussQ(-1) * mono({1, 2}, {});
    return Model::simple("iwasawa", 3, std::move(d));
}

Model make_s3xs3() {
    std::vector<Form> d(3);
    d[0] = I * mono({1, 3}, {}) + I * mono({1}, {3});
    d[1] = mono({2, 3}, {}) - mono({2}, {3});
    d[2] = GaussQ(-1) * I * mono({1}, {1}) + mono({2}, {2});
    return Model::simple("s3xs3_calabi_eckmann", 3, std::move(d));
}

// Presented on the unitary coframe {dz1, e^{-z1} dz2, e^{z1} dz3}; the
// characters of the compact quotient enter through form weights.
Model make_nakamura(const std::string& name) {
    std::vector<Form> d(3);
    d[1] = GaussQ(-1) * mono({1, 2}, {});
    d[2] = mono({1, 3}, {});
    WeightWindow window{-2, 2, -2, 2};
    return Model(name, 3, std::move(d), window, HermitianMetric::identity(3));
}

std::vector<ExpectedDim> s3xs3_dims() {
    std::vector<ExpectedDim> out;
    auto put = [&](Theory t, int p, int q, int dim) {
        out.push_back({t, p, q, dim, Provenance::published});
    };
    // Hodge-number triangle of the Calabi-Eckmann structure.
    std::map<std::pair<int, int>, int> dolb = {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{2, 1}, 1},
                                               {{1, 2}, 1}, {{2, 2}, 1}, {{3, 2}, 1}, {{3, 3}, 1}};
    // Bott-Chern triangle of the same structure.
    std::map<std::pair<int, int>, int> bott = {{{0, 0}, 1}, {{1, 1}, 2}, {{2, 1}, 1}, {{1, 2}, 1},
                                               {{2, 2}, 1}, {{3, 2}, 1}, {{2, 3}, 1}, {{3, 3}, 1}};
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            auto it = dolb.find({p, q});
            put(Theory::dolbeault, p, q, it == dolb.end() ? 0 : it->second);
            it = bott.find({p, q});
            put(Theory::bott_chern, p, q, it == bott.end() ? 0 : it->second);
        }
    return out;
}

std::vector<ExpectedDim> iwasawa_dims() {
    // Classical tables for the Iwasawa manifold, re-derivable by elementary
    // rank counts on the invariant complex.
    std::vector<ExpectedDim> out;
    auto rows = [&](Theory t, std::initializer_list<std::pair<std::pair<int, int>, int>> entries) {
        for (auto& [pq, dim] : entries)
            out.push_back({t, pq.first, pq.second, dim, Provenance::derived});
    };
    rows(Theory::bott_chern,
         {{{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 2}, {{2, 0}, 3}, {{1, 1}, 4}, {{0, 2}, 3},
          {{3, 0}, 1}, {{2, 1}, 6}, {{1, 2}, 6}, {{0, 3}, 1}, {{3, 1}, 2}, {{2, 2}, 8},
          {{1, 3}, 2}, {{3, 2}, 3}, {{2, 3}, 3}, {{3, 3}, 1}});
    rows(Theory::dolbeault,
         {{{0, 0}, 1}, {{1, 0}, 3}, {{0, 1}, 2}, {{2, 0}, 3}, {{1, 1}, 6}, {{0, 2}, 2},
          {{3, 0}, 1}, {{2, 1}, 6}, {{1, 2}, 6}, {{0, 3}, 1}, {{3, 1}, 2}, {{2, 2}, 6},
          {{1, 3}, 3}, {{3, 2}, 2}, {{2, 3}, 3}, {{3, 3}, 1}});
    return out;
}

std::vector<HarmonicFact> s3xs3_facts() {
    std::vector<HarmonicFact> out;
    auto bch = [&](Form f) {
        out.push_back({Theory::bott_chern, std::move(f), true, Provenance::published});
    };
    bch(mono({}, {}));
    bch(mono({1}, {1}));
    bch(mono({2}, {2}));
    bch(mono({2, 3}, {2}) + I * mono({1, 3}, {1}));
    bch(mono({2}, {2, 3}) - I * mono({1}, {1, 3}));
    bch(mono({1, 2}, {1, 2}));
    bch(mono({1, 2, 3}, {1, 2}));
    bch(mono({1, 2}, {1, 2, 3}));
    bch(mono({1, 2, 3}, {1, 2, 3}));
    auto dol = [&](Form f) {
        out.push_back({Theory::dolbeault, std::move(f), true, Provenance::published});
    };
    dol(mono({}, {}));
    dol(mono({}, {3}));
    dol(I * mono({1}, {1}) + mono({2}, {2}));
    dol(mono({2, 3}, {2}) + I * mono({1, 3}, {1}));
    dol(I * mono({1}, {1, 3}) + mono({2}, {2, 3}));
    dol(mono({2, 3}, {2, 3}) + I * mono({1, 3}, {1, 3}));
    dol(mono({1, 2, 3}, {1, 2}));
    dol(mono({1, 2, 3}, {1, 2, 3}));
    // The square of the (1,1) generator is not Dolbeault-harmonic.
    Form omega11 = I * mono({1}, {1}) + mono({2}, {2});
    out.push_back({Theory::dolbeault, wedge(omega11, omega11), false, Provenance::published});
    return out;
}

std::vector<HarmonicFact> nakamura_facts(bool case_a) {
    std::vector<HarmonicFact> out;
    auto put = [&](Theory t, Form f, bool harmonic) {
        out.push_back({t, std::move(f), harmonic, Provenance::published});
    };
    // Dolbeault kernel generators coming from the lattice-compatible
    // sub-bicomplex; in the unitary coframe presentation they read:
    put(Theory::dolbeault, mono({1}, {}), true);
    put(Theory::dolbeault, mono({2}, {}), true);
    put(Theory::dolbeault, mono({3}, {}), true);
    put(Theory::dolbeault, mono({}, {1}), true);
    if (case_a) {
        put(Theory::dolbeault, mono({}, {2}, {-1, 1}), true);
        put(Theory::dolbeault, mono({}, {3}, {1, -1}), true);
        // e^{-z1} dz12 and e^{z1bar} dz31bar are Bott-Chern harmonic, their
        // product e^{-2 i Im z1} dz1231bar is not.
        put(Theory::bott_chern, mono({1, 2}, {}), true);
        put(Theory::bott_chern, mono({3}, {1}, {-1, 1}), true);
        put(Theory::bott_chern, mono({1, 2, 3}, {1}, {-1, 1}), false);
    } else {
        put(Theory::dolbeault, mono({}, {2, 3}), true);
        // e^{-z1} dz12 and e^{-z1bar} dz1bar2bar are Bott-Chern harmonic,
        // their product e^{-2 Re z1} dz121bar2bar is not.
        put(Theory::bott_chern, mono({1, 2}, {}), true);
        put(Theory::bott_chern, mono({}, {1, 2}), true);
        put(Theory::bott_chern, mono({1, 2}, {1, 2}), false);
    }
    return out;
}

std::map<std::string, CatalogEntry> build_catalog() {
    std::map<std::string, CatalogEntry> cat;
    for (int n = 1; n <= 3; ++n) {
        CatalogEntry e{make_torus(n), "", {}, {}, true, true, {}};
        e.notes = "Complex torus of dimension " + std::to_string(n) +
                  ": zero differential, every invariant form is harmonic.";
        std::vector<int> betti;
        for (int k = 0; k <= 2 * n; ++k) {
            long b = 1, top = 2 * n;
            for (int i = 0; i < k; ++i) b = b * (top - i) / (i + 1);
            betti.push_back((int)b);
        }
        e.betti = std::move(betti);
        cat.emplace(e.model.name(), std::move(e));
    }
    {
        CatalogEntry e{make_iwasawa(),
                       "Iwasawa manifold: quotient of the complex Heisenberg group. Carries a "
                       "non-vanishing triple Aeppli-Bott-Chern-Massey product.",
                       iwasawa_dims(),
                       {1, 4, 8, 10, 8, 4, 1},
                       false,
                       std::nullopt,
                       {}};
        e.harmonic_facts.push_back(
            {Theory::aeppli, mono({3}, {1, 3}), true, Provenance::published});
        cat.emplace("iwasawa", std::move(e));
    }
    {
        CatalogEntry e{make_s3xs3(),
                       "Calabi-Eckmann complex structure on S3 x S3 with the diagonal metric: "
                       "geometrically Bott-Chern formal but not geometrically Dolbeault formal.",
                       s3xs3_dims(),
                       {1, 0, 0, 2, 0, 0, 1},
                       true,
                       false,
                       s3xs3_facts()};
        cat.emplace("s3xs3_calabi_eckmann", std::move(e));
    }
    for (bool case_a : {true, false}) {
        std::string name = case_a ? "nakamura_a" : "nakamura_b";
        CatalogEntry e{make_nakamura(name),
                       std::string("Holomorphically parallelizable Nakamura solvmanifold, lattice "
                                   "case ") +
                           (case_a ? "(a)" : "(b)") +
                           ". Generators are the unitary coframe {dz1, e^{-z1} dz2, e^{z1} dz3}; "
                           "weights carry the characters of the compact quotient. All verdicts "
                           "are relative to the declared weight window.",
                       {},
                       {},
                       false,
                       true,
                       nakamura_facts(case_a)};
        cat.emplace(name, std::move(e));
    }
    return cat;
}

const std::map<std::string, CatalogEntry>& the_catalog() {
    static const std::map<std::string, CatalogEntry> cat = build_catalog();
    return cat;
}

}  // namespace

const std::vector<std::string>& names() {
    static const std::vector<std::string> n = [] {
        std::vector<std::string> out;
        for (const auto& [name, e] : the_catalog()) out.push_back(name);
        return out;
    }();
    return n;
}

const CatalogEntry& builtin(const std::string& name) {
    const auto& cat = the_catalog();
    auto it = cat.find(name);
    if (it == cat.end()) throw UnknownModel("unknown model '" + name + "'");
    return it->second;
}

namespace {

// All non-zero products of subsets of the generators (with 1), deduplicated
// up to scalar.  The tables below are wedge-closed by construction.
std::vector<Form> wedge_closure(const std::vector<Form>& gens) {
    std::vector<Form> out{mono({}, {})};
    std::size_t m = gens.size();
    for (std::size_t mask = 1; mask < (1u << m); ++mask) {
        Form prod = mono({}, {});
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) prod = wedge(prod, gens[i]);
        if (prod.is_zero()) continue;
        GaussQ lead = prod.terms().begin()->second;
        Form normalized = (GaussQ(1) / lead) * prod;
        if (std::none_of(out.begin(), out.end(),
                         [&](const Form& f) { return f == normalized; }))
            out.push_back(std::move(normalized));
    }
    std::sort(out.begin(), out.end(), [](const Form& x, const Form& y) {
        auto bx = x.bidegree(), by = y.bidegree();
        if (bx != by) return bx < by;
        return x.terms().begin()->first < y.terms().begin()->first;
    });
    return out;
}

std::vector<SurfaceTable> build_surfaces() {
    std::vector<SurfaceTable> out;
    auto closure = wedge_closure;

    out.push_back({"inoue_sm", "Inoue surface of type S_M",
                   closure({mono({}, {2}), mono({1, 2}, {1})}),
                   closure({mono({2}, {2}), mono({1, 2}, {1}), mono({1}, {1, 2}),
                            mono({1, 2}, {1, 2})}),
                   "Left-invariant metric; both kernels are wedge-closed."});

    // The Dolbeault kernel of the primary Kodaira surface is not an algebra:
    // phi1 and phibar1 are harmonic while phi1 ^ phibar1 is not, so the
    // basis is listed in full instead of through generators.
    std::vector<Form> pk_dolb = {mono({}, {}),     mono({1}, {}),     mono({}, {1}),
                                 mono({}, {2}),    mono({1, 2}, {}),  mono({1}, {2}),
                                 mono({2}, {1}),   mono({}, {1, 2}),  mono({1, 2}, {1}),
                                 mono({1, 2}, {2}), mono({2}, {1, 2}), mono({1, 2}, {1, 2})};
    out.push_back({"primary_kodaira", "Primary Kodaira surface", pk_dolb,
                   closure({mono({1}, {}), mono({}, {1}), mono({1, 2}, {}), mono({1}, {2}),
                            mono({2}, {1}), mono({}, {1, 2}), mono({1, 2}, {2}),
                            mono({2}, {1, 2})}),
                   "The Dolbeault kernel is not wedge-closed; the Bott-Chern kernel is."});

    out.push_back({"secondary_kodaira", "Secondary Kodaira surface",
                   closure({mono({}, {2}), mono({1, 2}, {1})}),
                   closure({mono({1}, {1}), mono({1, 2}, {1}), mono({1}, {1, 2}),
                            mono({1, 2}, {1, 2})}),
                   ""});

    out.push_back({"inoue_spm", "Inoue surface of type S+-",
                   closure({mono({}, {2}), mono({1, 2}, {1})}),
                   closure({mono({2}, {2}), mono({1, 2}, {1}), mono({1}, {1, 2}),
                            mono({1, 2}, {1, 2})}),
                   ""});

    out.push_back({"hopf", "Hopf surface with the Calabi-Eckmann structure",
                   closure({mono({}, {2}), mono({1, 2}, {1}), mono({1, 2}, {1, 2})}),
                   closure({mono({1}, {1}), mono({1, 2}, {1}), mono({1}, {1, 2}),
                            mono({1, 2}, {1, 2})}),
                   "Both kernels are wedge-closed."});
    return out;
}

}  // namespace

const std::vector<SurfaceTable>& surface_regression_tables() {
    static const std::vector<SurfaceTable> tables = build_surfaces();
    return tables;
}

const SurfaceTable& surface_table(const std::string& name) {
    for (const auto& t : surface_regression_tables())
        if (t.name == name) return t;
    throw UnknownModel("unknown surface table '" + name + "'");
}

SurfaceCheck check_surface(Bicomplex& bx, const SurfaceTable& table) {
    SurfaceCheck check;
    check.table = table.name;
    if (bx.dim() != 2) throw InvalidTheoryDegree("surface tables apply to 2-dimensional models");
    auto run = [&](Theory t, const std::vector<Form>& kernel) {
        for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q) {
                std::vector<Vec> expected_vecs;
                for (const Form& f : kernel) {
                    auto bd = f.bidegree();
                    if (bd && *bd == std::pair{p, q}) expected_vecs.push_back(bx.to_coords(f, p, q, {}));
                }
                Subspace expected = Subspace::span((int)bx.basis(p, q, {}).size(), expected_vecs);
                const HarmonicSpace& h = bx.harmonic(t, p, q, {});
                bool equal = expected == h.span;
                if (!equal || expected.dim() != h.dim())
                    check.mismatches.push_back(
                        {t, p, q, expected.dim(), h.dim(), equal});
            }
    };
    run(Theory::dolbeault, table.dolbeault_kernel);
    run(Theory::bott_chern, table.bott_chern_kernel);
    check.ok = check.mismatches.empty();
    return check;
}

}  // namespace bc::catalog
