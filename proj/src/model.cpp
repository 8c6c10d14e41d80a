#include "bottchern/model.hpp"

#include <stdexcept>

namespace bc {

Model::Model(std::string name, int n, std::vector<Form> d_generators, WeightWindow window,
             HermitianMetric metric)
    : name_(std::move(name)),
      n_(n),
      d_gen_(std::move(d_generators)),
      window_(window),
      metric_(std::move(metric)) {
    if (n_ < 0 || n_ > 16) throw std::invalid_argument("Model: dimension out of range");
    if ((int)d_gen_.size() != n_) throw std::invalid_argument("Model: need one differential per generator");
    if (metric_.dim() != n_) throw std::invalid_argument("Model: gram dimension mismatch");
    del_holo_.resize(n_);
    delbar_holo_.resize(n_);
    del_anti_.resize(n_);
    delbar_anti_.resize(n_);
    for (int k = 0; k < n_; ++k) {
        del_holo_[k] = d_gen_[k].component(2, 0);
        delbar_holo_[k] = d_gen_[k].component(1, 1);
        del_anti_[k] = conjugate(delbar_holo_[k]);
        delbar_anti_[k] = conjugate(del_holo_[k]);
    }
}

Model Model::simple(std::string name, int n, std::vector<Form> d_generators) {
    return Model(std::move(name), n, std::move(d_generators), WeightWindow{},
                 HermitianMetric::identity(n));
}

// Derivation of degree one applied monomial-wise: the character term first,
// then each coframe factor in canonical position order.
Form Model::derive(const Form& f, bool bar) const {
    Form out;
    for (const auto& term : f.terms()) {
        const Monomial& m = term.first;
        const GaussQ& c = term.second;
        int char_mult = bar ? m.weight.b : m.weight.a;
        if (char_mult != 0) {
            Monomial one_form = Monomial::make({}, {}, {});
            if (bar)
                one_form.anti = 1u;
            else
                one_form.holo = 1u;
            out += (c * GaussQ(char_mult)) * bc::wedge(Form(one_form), Form(m));
        }
        auto holo_idx = m.holo_indices();
        auto anti_idx = m.anti_indices();
        int pos = 0;
        auto apply_factor = [&](int gen, bool is_anti) {
            const Form& dgen = is_anti ? (bar ? delbar_of_anti(gen) : del_of_anti(gen))
                                       : (bar ? delbar_of_holo(gen) : del_of_holo(gen));
            if (!dgen.is_zero()) {
                Monomial prefix = m, suffix = m;
                std::uint32_t bit = 1u << (gen - 1);
                if (is_anti) {
                    suffix.anti &= ~(bit | (bit - 1));
                    prefix.anti &= bit - 1;
                    suffix.holo = 0;
                    prefix.weight = m.weight;
                    suffix.weight = {};
                } else {
                    suffix.holo &= ~(bit | (bit - 1));
                    prefix.holo &= bit - 1;
                    prefix.anti = 0;
                    suffix.anti = m.anti;
                    prefix.weight = m.weight;
                    suffix.weight = {};
                }
                GaussQ sign = GaussQ((pos & 1) ? -1 : 1);
                out += (c * sign) * bc::wedge(Form(prefix), bc::wedge(dgen, Form(suffix)));
            }
            ++pos;
        };
        for (int gen : holo_idx) apply_factor(gen, false);
        for (int gen : anti_idx) apply_factor(gen, true);
    }
    return out;
}

Form Model::del(const Form& f) const { return derive(f, false); }
Form Model::delbar(const Form& f) const { return derive(f, true); }

void Model::check_window(const Form& f, const char* what) const {
    for (const auto& [m, c] : f.terms())
        if (!window_.contains(m.weight))
            throw WeightOverflow(std::string(what) + ": weight " + to_string(m.weight) +
                                 " outside the window of model '" + name_ + "'");
}

Form Model::wedge(const Form& f, const Form& g) const {
    Form out = bc::wedge(f, g);
    check_window(out, "wedge");
    return out;
}

std::vector<Monomial> Model::basis(int p, int q, Weight w) const {
    if (p < 0 || q < 0 || p > n_ || q > n_)
        throw InvalidTheoryDegree("basis: bidegree (" + std::to_string(p) + "," +
                                  std::to_string(q) + ") out of range");
    std::vector<std::uint32_t> holo_sets, anti_sets;
    auto enumerate = [&](int k, std::vector<std::uint32_t>& out_sets) {
        // Ascending-tuple lexicographic enumeration of k-subsets of {1..n}.
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i + 1;
        if (k == 0) {
            out_sets.push_back(0);
            return;
        }
        if (k > n_) return;
        for (;;) {
            std::uint32_t mask = 0;
            for (int i : idx) mask |= 1u << (i - 1);
            out_sets.push_back(mask);
            int t = k - 1;
            while (t >= 0 && idx[t] == n_ - (k - 1 - t)) --t;
            if (t < 0) break;
            ++idx[t];
            for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
        }
    };
    enumerate(p, holo_sets);
    enumerate(q, anti_sets);
    std::vector<Monomial> out;
    out.reserve(holo_sets.size() * anti_sets.size());
    for (auto h : holo_sets)
        for (auto a : anti_sets) {
            Monomial m;
            m.weight = w;
            m.holo = h;
            m.anti = a;
            out.push_back(m);
        }
    return out;
}

ValidationReport Model::validate() const {
    ValidationReport report;
    auto flag = [&](std::string kind, std::string where, Form residual, std::string detail) {
        report.issues.push_back({std::move(kind), std::move(where), std::move(residual),
                                 std::move(detail)});
    };

    if (!window_.contains(Weight{}))
        flag("window", "window", {}, "the weight window must contain (0,0)");

    if (!metric_.is_hermitian())
        flag("metric", "gram", {}, "gram matrix is not Hermitian");
    else if (!metric_.is_positive_definite())
        flag("metric", "gram", {}, "gram matrix is not positive definite");

    for (int k = 1; k <= n_; ++k) {
        const Form& dk = d_gen_[k - 1];
        std::string gen = "phi" + std::to_string(k);
        for (const auto& [m, c] : dk.terms()) {
            if (m.degree() != 2) {
                flag("degree", gen, dk, "structure equation is not of total degree 2");
                break;
            }
        }
        for (const auto& [m, c] : dk.terms()) {
            if (!m.weight.is_zero()) {
                flag("weighted-structure", gen, dk,
                     "structure terms must carry weight (0,0); weights live on forms, not equations");
                break;
            }
        }
        Form bad = dk.component(0, 2);
        if (!bad.is_zero())
            flag("integrability", gen, bad, "the (0,2) component of the differential must vanish");
    }
    if (!report.ok()) return report;  // d^2 is meaningless on malformed input

    if (!window_.trivial() && !d_gen_.empty() && !d_gen_[0].is_zero())
        flag("character-compatibility", "phi1", d_gen_[0],
             "a non-trivial weight window forces d(phi1) = 0");

    for (int k = 1; k <= n_; ++k) {
        Form dd = d(d_gen_[k - 1]);
        if (!dd.is_zero())
            flag("d-squared", "phi" + std::to_string(k), dd, "d(d(generator)) does not vanish");
    }
    return report;
}

std::vector<Weight> Model::window_weights() const {
    std::vector<Weight> out;
    for (int a = window_.a_min; a <= window_.a_max; ++a)
        for (int b = window_.b_min; b <= window_.b_max; ++b) out.push_back({a, b});
    return out;
}

std::vector<Weight> Model::hodge_weights() const {
    std::vector<Weight> out;
    for (Weight w : window_weights())
        if (w.a + w.b == 0) out.push_back(w);
    return out;
}

}  // namespace bc
