#include "bottchern/form.hpp"

namespace bc {

void Form::add_term(const Monomial& m, const GaussQ& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

GaussQ Form::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussQ() : it->second;
}

bool Form::is_homogeneous() const { return is_zero() || bidegree().has_value(); }

std::optional<std::pair<int, int>> Form::bidegree() const {
    if (terms_.empty()) return std::nullopt;
    auto [p, q] = std::pair{terms_.begin()->first.p(), terms_.begin()->first.q()};
    for (const auto& [m, c] : terms_)
        if (m.p() != p || m.q() != q) return std::nullopt;
    return std::pair{p, q};
}

std::optional<int> Form::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int k = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != k) return std::nullopt;
    return k;
}

std::optional<Weight> Form::pure_weight() const {
    if (terms_.empty()) return Weight{};
    Weight w = terms_.begin()->first.weight;
    for (const auto& [m, c] : terms_)
        if (m.weight != w) return std::nullopt;
    return w;
}

std::vector<std::pair<Weight, Form>> Form::by_weight() const {
    std::map<Weight, Form> parts;
    for (const auto& [m, c] : terms_) parts[m.weight].add_term(m, c);
    return {parts.begin(), parts.end()};
}

Form Form::component(int p, int q) const {
    Form out;
    for (const auto& [m, c] : terms_)
        if (m.p() == p && m.q() == q) out.add_term(m, c);
    return out;
}

Form Form::operator-() const {
    Form out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Form& Form::operator+=(const Form& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Form& Form::operator*=(const GaussQ& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Form wedge(const Form& f, const Form& g) {
    Form out;
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            int sh = merge_sign(mf.holo, mg.holo);
            if (sh == 0) continue;
            int sa = merge_sign(mf.anti, mg.anti);
            if (sa == 0) continue;
            // Move the holomorphic block of g across the antiholomorphic
            // block of f.
            int cross = (mg.p() * mf.q()) & 1 ? -1 : 1;
            Monomial m;
            m.weight = mf.weight + mg.weight;
            m.holo = mf.holo | mg.holo;
            m.anti = mf.anti | mg.anti;
            out.add_term(m, cf * cg * GaussQ(sh * sa * cross));
        }
    }
    return out;
}

Form conjugate(const Form& f) {
    Form out;
    for (const auto& [m, c] : f.terms()) {
        Monomial cm;
        cm.weight = m.weight.flipped();
        cm.holo = m.anti;
        cm.anti = m.holo;
        int sign = (m.p() * m.q()) & 1 ? -1 : 1;
        out.add_term(cm, c.conj() * GaussQ(sign));
    }
    return out;
}

}  // namespace bc
