#include <doctest.h>

#include <random>

#include "bottchern/linalg.hpp"

using namespace bc;

namespace {

Mat random_matrix(int rows, int cols, unsigned seed, int rank_target) {
    // Product of random integer matrices of inner dimension rank_target.
    std::mt19937 rng(seed);
    auto entry = [&]() {
        int re = (int)(rng() % 7) - 3;
        int im = (int)(rng() % 5) - 2;
        return GaussQ(Rat(Int(re), Int(rng() % 2 + 1)), Rat(Int(im)));
    };
    Mat a(rows, rank_target), b(rank_target, cols);
    for (auto& v : a.a) v = entry();
    for (auto& v : b.a) v = entry();
    Mat out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            GaussQ acc(0);
            for (int k = 0; k < rank_target; ++k) acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

}  // namespace

TEST_CASE("rref rank matches the independent bareiss path on random matrices") {
    for (unsigned seed = 1; seed <= 25; ++seed) {
        int rows = 3 + seed % 5, cols = 2 + seed % 6, target = 1 + seed % 3;
        Mat m = random_matrix(rows, cols, seed, target);
        CAPTURE(seed);
        CHECK(rank(m) == rank_oracle(m));
        CHECK(rank(m) <= target);
    }
}

TEST_CASE("kernel vectors are annihilated and span the right dimension") {
    for (unsigned seed = 1; seed <= 10; ++seed) {
        Mat m = random_matrix(4, 6, seed, 2);
        auto ker = kernel_basis(m);
        CHECK((int)ker.size() == 6 - rank(m));
        for (const Vec& v : ker) {
            Vec img = mat_apply(m, v);
            for (const GaussQ& x : img) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("particular solutions hit the target and fail cleanly") {
    Mat m(2, 3);
    m.at(0, 0) = GaussQ(1);
    m.at(0, 1) = GaussQ(2);
    m.at(1, 2) = GaussQ::i();
    Vec rhs = {GaussQ(3), GaussQ(1)};
    auto x = solve_particular(m, rhs);
    REQUIRE(x.has_value());
    Vec img = mat_apply(m, *x);
    CHECK(img[0] == GaussQ(3));
    CHECK(img[1] == GaussQ(1));
    // Echelon solution: free variables are zero.
    CHECK((*x)[1] == GaussQ(0));

    Mat z(2, 2);
    z.at(0, 0) = GaussQ(1);
    z.at(1, 0) = GaussQ(1);
    CHECK_FALSE(solve_particular(z, {GaussQ(1), GaussQ(2)}).has_value());
}

TEST_CASE("subspaces are canonical") {
    Vec v1 = {GaussQ(1), GaussQ(2), GaussQ(0)};
    Vec v2 = {GaussQ(0), GaussQ(1), GaussQ(1)};
    Vec v3 = {GaussQ(1), GaussQ(3), GaussQ(1)};  // v1 + v2
    Subspace s1 = Subspace::span(3, {v1, v2});
    Subspace s2 = Subspace::span(3, {v3, v2, v1});
    CHECK(s1 == s2);
    CHECK(s1.dim() == 2);
    CHECK(s1.contains(v3));
    CHECK_FALSE(s1.contains({GaussQ(0), GaussQ(0), GaussQ(1)}));
    auto c = s1.coordinates(v3);
    REQUIRE(c.has_value());
    // Reconstruct from the reduced rows.
    Vec rec(3, GaussQ(0));
    for (int i = 0; i < s1.dim(); ++i)
        for (int j = 0; j < 3; ++j) rec[j] += (*c)[i] * s1.reduced_rows().at(i, j);
    CHECK(rec == v3);

    Subspace sum = s1 + Subspace::span(3, {Vec{GaussQ(0), GaussQ(0), GaussQ(1)}});
    CHECK(sum.dim() == 3);
}
