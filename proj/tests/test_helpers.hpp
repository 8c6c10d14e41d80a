#pragma once

#include <random>

#include "bottchern/catalog.hpp"

namespace bctest {

using namespace bc;

inline Form mono(std::initializer_list<int> holo, std::initializer_list<int> anti, Weight w = {},
                 GaussQ c = GaussQ(1)) {
    return Form(Monomial::make(holo, anti, w), c);
}

inline const GaussQ I = GaussQ::i();

inline const Model& model(const std::string& name) { return catalog::builtin(name).model; }

// All sector monomials of a model over its full window, in order.
inline std::vector<Monomial> all_basis_monomials(const Model& m) {
    std::vector<Monomial> out;
    for (int p = 0; p <= m.dim(); ++p)
        for (int q = 0; q <= m.dim(); ++q)
            for (Weight w : m.window_weights())
                for (const Monomial& mono : m.basis(p, q, w)) out.push_back(mono);
    return out;
}

// Deterministic sampling for property checks on larger monomial sets.
inline std::vector<std::size_t> sample_indices(std::size_t size, std::size_t count,
                                               unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < count; ++i) idx.push_back(rng() % size);
    return idx;
}

}  // namespace bctest
