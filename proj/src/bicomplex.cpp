#include "bottchern/bicomplex.hpp"

namespace bc {

std::string to_string(Theory t) {
    switch (t) {
        case Theory::de_rham: return "derham";
        case Theory::dolbeault: return "dolbeault";
        case Theory::partial: return "partial";
        case Theory::bott_chern: return "bc";
        case Theory::aeppli: return "aeppli";
    }
    return "?";
}

bool is_laplacian_theory(Theory t) {
    return t == Theory::dolbeault || t == Theory::bott_chern || t == Theory::aeppli;
}

const std::vector<Monomial>& Bicomplex::basis(int p, int q, Weight w) {
    SectorKey key{p, q, w};
    auto it = bases_.find(key);
    if (it == bases_.end()) {
        it = bases_.emplace(key, model_.basis(p, q, w)).first;
        std::map<Monomial, int> idx;
        for (int i = 0; i < (int)it->second.size(); ++i) idx.emplace(it->second[i], i);
        index_.emplace(key, std::move(idx));
    }
    return it->second;
}

Vec Bicomplex::to_coords(const Form& f, int p, int q, Weight w) {
    const auto& b = basis(p, q, w);
    const auto& idx = index_.at(SectorKey{p, q, w});
    Vec v(b.size(), GaussQ(0));
    for (const auto& [m, c] : f.terms()) {
        auto it = idx.find(m);
        if (it == idx.end())
            throw SectorMismatch("form has a term outside sector (" + std::to_string(p) + "," +
                                 std::to_string(q) + ")" + to_string(w));
        v[it->second] = c;
    }
    return v;
}

Form Bicomplex::from_coords(const Vec& v, int p, int q, Weight w) {
    const auto& b = basis(p, q, w);
    Form f;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!v[i].is_zero()) f.add_term(b[i], v[i]);
    return f;
}

const Mat& Bicomplex::operator_matrix(std::map<SectorKey, Mat>& cache, int p, int q, Weight w,
                                      Form (Model::*op)(const Form&) const, int dp, int dq) {
    SectorKey key{p, q, w};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const auto& src = basis(p, q, w);
    int tp = p + dp, tq = q + dq;
    int n = model_.dim();
    if (tp < 0 || tq < 0 || tp > n || tq > n) {
        return cache.emplace(key, Mat(0, (int)src.size())).first->second;
    }
    const auto& dst = basis(tp, tq, w);
    Mat m((int)dst.size(), (int)src.size());
    for (int j = 0; j < (int)src.size(); ++j) {
        Form img = (model_.*op)(Form(src[j]));
        Vec col = to_coords(img, tp, tq, w);
        for (int i = 0; i < (int)dst.size(); ++i) m.at(i, j) = col[i];
    }
    return cache.emplace(key, std::move(m)).first->second;
}

namespace {
Form model_deldelbar(const Model& m, const Form& f) { return m.del(m.delbar(f)); }
}

const Mat& Bicomplex::del_matrix(int p, int q, Weight w) {
    return operator_matrix(del_, p, q, w, &Model::del, 1, 0);
}
const Mat& Bicomplex::delbar_matrix(int p, int q, Weight w) {
    return operator_matrix(delbar_, p, q, w, &Model::delbar, 0, 1);
}
const Mat& Bicomplex::deldelbar_matrix(int p, int q, Weight w) {
    SectorKey key{p, q, w};
    auto it = deldelbar_.find(key);
    if (it != deldelbar_.end()) return it->second;
    const auto& src = basis(p, q, w);
    int n = model_.dim();
    if (p + 1 > n || q + 1 > n)
        return deldelbar_.emplace(key, Mat(0, (int)src.size())).first->second;
    const auto& dst = basis(p + 1, q + 1, w);
    Mat m((int)dst.size(), (int)src.size());
    for (int j = 0; j < (int)src.size(); ++j) {
        Vec col = to_coords(model_deldelbar(model_, Form(src[j])), p + 1, q + 1, w);
        for (int i = 0; i < (int)dst.size(); ++i) m.at(i, j) = col[i];
    }
    return deldelbar_.emplace(key, std::move(m)).first->second;
}

void Bicomplex::finish_group(CohomologyGroup& g, const std::vector<Vec>& cocycle_vectors,
                             const std::vector<Vec>& boundary_vectors) {
    int ambient = (int)g.ambient.size();
    g.cocycles = Subspace::span(ambient, cocycle_vectors);
    g.boundaries = Subspace::span(ambient, boundary_vectors);
    std::vector<Vec> residues;
    for (const Vec& z : cocycle_vectors) residues.push_back(g.boundaries.reduce(z));
    g.quotient = Subspace::span(ambient, residues);
    for (int r = 0; r < g.quotient.dim(); ++r) {
        Form rep;
        for (int c = 0; c < ambient; ++c) {
            const GaussQ& v = g.quotient.reduced_rows().at(r, c);
            if (!v.is_zero()) rep.add_term(g.ambient[c], v);
        }
        g.representatives.push_back(std::move(rep));
    }
}

CohomologyGroup Bicomplex::build_group(Theory t, int p, int q, Weight w) {
    int n = model_.dim();
    if (p < 0 || q < 0 || p > n || q > n)
        throw InvalidTheoryDegree("cohomology: bidegree (" + std::to_string(p) + "," +
                                  std::to_string(q) + ") out of range");
    CohomologyGroup g;
    g.theory = t;
    g.p = p;
    g.q = q;
    g.weight = w;
    g.ambient = basis(p, q, w);
    int ambient = (int)g.ambient.size();

    auto stack = [](const Mat& a, const Mat& b) {
        Mat m(a.rows + b.rows, a.cols);
        for (int r = 0; r < a.rows; ++r)
            for (int c = 0; c < a.cols; ++c) m.at(r, c) = a.at(r, c);
        for (int r = 0; r < b.rows; ++r)
            for (int c = 0; c < b.cols; ++c) m.at(a.rows + r, c) = b.at(r, c);
        return m;
    };

    std::vector<Vec> cocycles;
    std::vector<Vec> boundaries;
    auto add_image = [&](const Mat& mat, int sp, int sq) {
        if (sp < 0 || sq < 0) return;
        for (int j = 0; j < mat.cols; ++j) {
            Vec v(ambient, GaussQ(0));
            for (int i = 0; i < mat.rows; ++i) v[i] = mat.at(i, j);
            boundaries.push_back(std::move(v));
        }
    };

    switch (t) {
        case Theory::bott_chern: {
            Mat z = stack(del_matrix(p, q, w), delbar_matrix(p, q, w));
            cocycles = kernel_basis(z);
            g.cocycle_conditions = {del_matrix(p, q, w), delbar_matrix(p, q, w)};
            if (p >= 1 && q >= 1) add_image(deldelbar_matrix(p - 1, q - 1, w), p - 1, q - 1);
            break;
        }
        case Theory::aeppli: {
            cocycles = kernel_basis(deldelbar_matrix(p, q, w));
            g.cocycle_conditions = {deldelbar_matrix(p, q, w)};
            if (p >= 1) add_image(del_matrix(p - 1, q, w), p - 1, q);
            if (q >= 1) add_image(delbar_matrix(p, q - 1, w), p, q - 1);
            break;
        }
        case Theory::dolbeault: {
            cocycles = kernel_basis(delbar_matrix(p, q, w));
            g.cocycle_conditions = {delbar_matrix(p, q, w)};
            if (q >= 1) add_image(delbar_matrix(p, q - 1, w), p, q - 1);
            break;
        }
        case Theory::partial: {
            cocycles = kernel_basis(del_matrix(p, q, w));
            g.cocycle_conditions = {del_matrix(p, q, w)};
            if (p >= 1) add_image(del_matrix(p - 1, q, w), p - 1, q);
            break;
        }
        case Theory::de_rham:
            throw InvalidTheoryDegree("de Rham cohomology takes a total degree, not a bidegree");
    }
    finish_group(g, cocycles, boundaries);
    return g;
}

CohomologyGroup Bicomplex::build_de_rham(int k, Weight w) {
    int n = model_.dim();
    if (k < 0 || k > 2 * n)
        throw InvalidTheoryDegree("de Rham degree " + std::to_string(k) + " out of range");
    CohomologyGroup g;
    g.theory = Theory::de_rham;
    g.k = k;
    g.weight = w;

    // Ambient basis: all (p,q) sectors of total degree k, in order.
    auto degree_basis = [&](int deg) {
        std::vector<Monomial> out;
        for (int p = std::max(0, deg - n); p <= std::min(n, deg); ++p) {
            int q = deg - p;
            const auto& b = basis(p, q, w);
            out.insert(out.end(), b.begin(), b.end());
        }
        return out;
    };
    g.ambient = degree_basis(k);
    int ambient = (int)g.ambient.size();
    std::map<Monomial, int> idx;
    for (int i = 0; i < ambient; ++i) idx.emplace(g.ambient[i], i);

    auto d_matrix = [&](const std::vector<Monomial>& src, const std::vector<Monomial>& dst) {
        std::map<Monomial, int> didx;
        for (int i = 0; i < (int)dst.size(); ++i) didx.emplace(dst[i], i);
        Mat m((int)dst.size(), (int)src.size());
        for (int j = 0; j < (int)src.size(); ++j) {
            Form img = model_.d(Form(src[j]));
            for (const auto& [mono, c] : img.terms()) m.at(didx.at(mono), j) = c;
        }
        return m;
    };

    Mat dk = (k == 2 * n) ? Mat(0, ambient) : d_matrix(g.ambient, degree_basis(k + 1));
    std::vector<Vec> cocycles = kernel_basis(dk);
    g.cocycle_conditions = {dk};
    std::vector<Vec> boundaries;
    if (k >= 1) {
        std::vector<Monomial> below = degree_basis(k - 1);
        Mat dprev = d_matrix(below, g.ambient);
        for (int j = 0; j < dprev.cols; ++j) {
            Vec v(ambient, GaussQ(0));
            for (int i = 0; i < ambient; ++i) v[i] = dprev.at(i, j);
            boundaries.push_back(std::move(v));
        }
    }
    finish_group(g, cocycles, boundaries);
    return g;
}

const CohomologyGroup& Bicomplex::group(Theory t, int p, int q, Weight w) {
    GroupKey key{t, p, q, -1, w};
    auto it = groups_.find(key);
    if (it == groups_.end()) it = groups_.emplace(key, build_group(t, p, q, w)).first;
    return it->second;
}

const CohomologyGroup& Bicomplex::de_rham_group(int k, Weight w) {
    GroupKey key{Theory::de_rham, -1, -1, k, w};
    auto it = groups_.find(key);
    if (it == groups_.end()) it = groups_.emplace(key, build_de_rham(k, w)).first;
    return it->second;
}

int Bicomplex::dim_over_window(Theory t, int p, int q) {
    int total = 0;
    for (Weight w : model_.window_weights()) total += group(t, p, q, w).dim();
    return total;
}

int Bicomplex::betti_over_window(int k) {
    int total = 0;
    for (Weight w : model_.window_weights()) total += de_rham_group(k, w).dim();
    return total;
}

int Bicomplex::harmonic_dim_over_hodge_weights(Theory t, int p, int q) {
    int total = 0;
    for (Weight w : model_.hodge_weights()) total += harmonic(t, p, q, w).dim();
    return total;
}

// --- metric side ---

GaussQ Bicomplex::gram_minor(std::uint32_t rows_mask, std::uint32_t cols_mask) const {
    const auto& g = model_.metric().gram;
    auto rows = mask_to_indices(rows_mask);
    auto cols = mask_to_indices(cols_mask);
    int k = (int)rows.size();
    if ((int)cols.size() != k) return GaussQ(0);
    if (k == 0) return GaussQ(1);
    // Laplace expansion is fine: k <= n <= 16, and in practice k <= 3.
    std::vector<std::vector<GaussQ>> a(k, std::vector<GaussQ>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = g[rows[i] - 1][cols[j] - 1];
    // Gaussian elimination determinant.
    GaussQ det(1);
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int r = c; r < k; ++r)
            if (!a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return GaussQ(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < k; ++r) {
            if (a[r][c].is_zero()) continue;
            GaussQ f = a[r][c] / a[c][c];
            for (int j = c; j < k; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

GaussQ Bicomplex::monomial_inner(const Monomial& x, const Monomial& y) const {
    // Distinct weights are orthogonal: their characters pair trivially on the
    // underlying compact quotient.
    if (x.weight != y.weight) return GaussQ(0);
    if (x.p() != y.p() || x.q() != y.q()) return GaussQ(0);
    return gram_minor(x.holo, y.holo) * gram_minor(x.anti, y.anti).conj();
}

GaussQ Bicomplex::inner_product(const Form& f, const Form& g) {
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw InhomogeneousForm("inner product needs pure bidegrees");
    auto bf = f.bidegree(), bg = g.bidegree();
    if (bf && bg && *bf != *bg)
        throw SectorMismatch("inner product of forms in different sectors");
    GaussQ acc(0);
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms()) {
            GaussQ pairing = monomial_inner(mf, mg);
            if (!pairing.is_zero()) acc += cf * cg.conj() * pairing;
        }
    return acc;
}

const Form& Bicomplex::volume_form() {
    if (!vol_) {
        int n = model_.dim();
        Monomial top;
        top.holo = n == 0 ? 0u : ((1u << n) - 1);
        top.anti = top.holo;
        // i^{n^2} makes the form positive; 1/det(gram) normalizes its length.
        int phase = (n * n) % 4;
        GaussQ c(1);
        for (int i = 0; i < phase; ++i) c *= GaussQ::i();
        c /= model_.metric().determinant();
        vol_ = std::make_unique<Form>(top, c);
    }
    return *vol_;
}

const Mat& Bicomplex::star_matrix(int p, int q) {
    auto key = std::pair{p, q};
    auto it = stars_.find(key);
    if (it != stars_.end()) return it->second;

    int n = model_.dim();
    const auto& src = basis(p, q, Weight{});
    const auto& pair_basis = basis(q, p, Weight{});
    const auto& dst = basis(n - q, n - p, Weight{});
    const auto& didx = index_.at(SectorKey{n - q, n - p, Weight{}});

    const Form& vol = volume_form();
    GaussQ vol_coeff = vol.terms().begin()->second;
    std::uint32_t full = n == 0 ? 0u : ((1u << n) - 1);

    // star(h) is pinned down by  f ^ star(h) = <f, conj(h)> vol  for f in the
    // (q,p) sector: the wedge pairing against complementary monomials is
    // perfect and diagonal.
    Mat m((int)dst.size(), (int)src.size());
    for (int j = 0; j < (int)src.size(); ++j) {
        Form conj_h = conjugate(Form(src[j]));
        for (const auto& f : pair_basis) {
            GaussQ pairing(0);
            for (const auto& [cm, cc] : conj_h.terms()) pairing += cc.conj() * monomial_inner(f, cm);
            if (pairing.is_zero()) continue;
            Monomial comp;
            comp.holo = full & ~f.holo;
            comp.anti = full & ~f.anti;
            int s = merge_sign(f.holo, comp.holo) * merge_sign(f.anti, comp.anti);
            if ((comp.p() * f.q()) & 1) s = -s;
            // f ^ comp = s * top, so the comp-coefficient of star(h) solves
            // s * x = <f, conj h> * vol_coeff.
            GaussQ x = pairing * vol_coeff / GaussQ(s);
            m.at(didx.at(comp), j) += x;
        }
    }
    return stars_.emplace(key, std::move(m)).first->second;
}

Form Bicomplex::star(const Form& f) {
    if (f.is_zero()) return {};
    auto bd = f.bidegree();
    if (!bd) throw InhomogeneousForm("hodge star needs a pure bidegree");
    auto [p, q] = *bd;
    int n = model_.dim();
    const Mat& sm = star_matrix(p, q);
    const auto& zsrc = basis(p, q, Weight{});
    const auto& sidx = index_.at(SectorKey{p, q, Weight{}});
    Form out;
    // The character passes through the star untouched.
    for (const auto& [w, part] : f.by_weight()) {
        Vec v(zsrc.size(), GaussQ(0));
        for (const auto& [mono, c] : part.terms()) {
            Monomial zm = mono;
            zm.weight = Weight{};
            v[sidx.at(zm)] = c;
        }
        Vec sv = mat_apply(sm, v);
        const auto& dst = basis(n - q, n - p, Weight{});
        for (std::size_t i = 0; i < dst.size(); ++i) {
            if (sv[i].is_zero()) continue;
            Monomial om = dst[i];
            om.weight = w;
            out.add_term(om, sv[i]);
        }
    }
    return out;
}

Form Bicomplex::adjoint_del(const Form& f) {
    if (f.is_zero()) return {};
    return -star(model_.delbar(star(f)));
}

Form Bicomplex::adjoint_delbar(const Form& f) {
    if (f.is_zero()) return {};
    return -star(model_.del(star(f)));
}

Form Bicomplex::laplacian(const Form& f, Theory t) {
    if (!is_laplacian_theory(t))
        throw InvalidTheoryDegree("no Laplacian for theory " + to_string(t));
    if (!f.is_homogeneous()) throw InhomogeneousForm("laplacian needs a pure bidegree");
    if (f.is_zero()) return {};

    const Model& M = model_;
    auto del = [&](const Form& x) { return M.del(x); };
    auto delbar = [&](const Form& x) { return M.delbar(x); };
    auto del_s = [&](const Form& x) { return adjoint_del(x); };
    auto delbar_s = [&](const Form& x) { return adjoint_delbar(x); };

    if (t == Theory::dolbeault) return delbar(delbar_s(f)) + delbar_s(delbar(f));

    if (t == Theory::bott_chern) {
        // P = del delbar, Q = delbar* del
        Form out = del(delbar(delbar_s(del_s(f))));
        out += delbar_s(del_s(del(delbar(f))));
        out += delbar_s(del(del_s(delbar(f))));
        out += del_s(delbar(delbar_s(del(f))));
        out += delbar_s(delbar(f));
        out += del_s(del(f));
        return out;
    }

    // Aeppli: P = del delbar, R = delbar del*
    Form out = del(del_s(f));
    out += delbar(delbar_s(f));
    out += delbar_s(del_s(del(delbar(f))));
    out += del(delbar(delbar_s(del_s(f))));
    out += del(delbar_s(delbar(del_s(f))));
    out += delbar(del_s(del(delbar_s(f))));
    return out;
}

const HarmonicSpace& Bicomplex::harmonic(Theory t, int p, int q, Weight w) {
    GroupKey key{t, p, q, -1, w};
    auto it = harmonics_.find(key);
    if (it != harmonics_.end()) return it->second;

    const auto& b = basis(p, q, w);
    Mat m((int)b.size(), (int)b.size());
    for (int j = 0; j < (int)b.size(); ++j) {
        Form img = laplacian(Form(b[j]), t);
        Vec col = to_coords(img, p, q, w);
        for (int i = 0; i < (int)b.size(); ++i) m.at(i, j) = col[i];
    }
    HarmonicSpace h;
    h.theory = t;
    h.p = p;
    h.q = q;
    h.weight = w;
    std::vector<Vec> ker = kernel_basis(m);
    h.span = Subspace::span((int)b.size(), ker);
    for (int r = 0; r < h.span.dim(); ++r) {
        Form rep;
        for (int c = 0; c < (int)b.size(); ++c) {
            const GaussQ& v = h.span.reduced_rows().at(r, c);
            if (!v.is_zero()) rep.add_term(b[c], v);
        }
        h.basis.push_back(std::move(rep));
    }
    return harmonics_.emplace(key, std::move(h)).first->second;
}

}  // namespace bc
