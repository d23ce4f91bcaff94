#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qblock/matrix.hpp"

using namespace qblock;

namespace {

Mat random_mat(std::mt19937_64& rng, int r, int c, int e) {
    Mat m(r, c, e);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, static_cast<unsigned>(rng() % (1u << e)));
    return m;
}

Mat from_rows(std::vector<std::vector<unsigned>> rows, int e = 1) {
    Mat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()), e);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("rref fixed examples") {
    Mat id = Mat::identity(3, 1);
    auto rr = rref(id);
    CHECK(rr.mat == id);
    CHECK(rr.rank == 3);

    Mat z(2, 5, 1);
    auto rz = rref(z);
    CHECK(rz.rank == 0);
    CHECK(rz.mat == z);

    Mat m = from_rows({{1, 1}, {1, 1}});
    auto rm = rref(m);
    CHECK(rm.rank == 1);
    CHECK(rm.mat == from_rows({{1, 1}, {0, 0}}));
}

TEST_CASE("kernel fixed examples") {
    CHECK(kernel(Mat::identity(4, 1)).dim() == 0);
    Subspace full = kernel(Mat(3, 4, 1));
    CHECK(full.dim() == 4);
    Subspace k = kernel(from_rows({{1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k.basis == from_rows({{1, 1}}));
}

TEST_CASE("solve fixed examples") {
    Mat b = from_rows({{1}, {0}, {1}});
    auto x = solve(Mat::identity(3, 1), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    CHECK(!solve(Mat(2, 2, 1), from_rows({{1}, {0}})).has_value());

    // [[1,1],[0,1]] x = (0,1)^T  ->  x = (1,1)^T by back-substitution
    auto y = solve(from_rows({{1, 1}, {0, 1}}), from_rows({{0}, {1}}));
    REQUIRE(y.has_value());
    CHECK(*y == from_rows({{1}, {1}}));

    CHECK_THROWS_AS(solve(Mat(2, 2, 1), Mat(3, 1, 1)), DimensionMismatch);
}

TEST_CASE("subspace operations in GF(2)^3") {
    Mat e12 = from_rows({{1, 0, 0}, {0, 1, 0}});
    Mat e23 = from_rows({{0, 1, 0}, {0, 0, 1}});
    Subspace a = Subspace::span(e12), b = Subspace::span(e23);
    Subspace cap = a.intersect(b);
    CHECK(cap.dim() == 1);
    CHECK(cap.basis == from_rows({{0, 1, 0}}));
    CHECK(a.sum(a) == a);
    Subspace full = Subspace::full(3, 1);
    CHECK(full.intersect(b) == b);
    CHECK(a.contains(cap));
    CHECK(!a.contains(b));

    // enumerate all 8 vectors as an oracle for the intersection
    for (unsigned v = 0; v < 8; ++v) {
        Mat vec(1, 3, 1);
        for (int j = 0; j < 3; ++j) vec.set(0, j, (v >> j) & 1);
        bool in_a = a.contains_vector(vec), in_b = b.contains_vector(vec);
        CHECK(cap.contains_vector(vec) == (in_a && in_b));
    }
}

TEST_CASE("rank-nullity on random matrices over GF(2) and GF(4)") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 1000; ++iter) {
        int e = (iter % 2) ? 2 : 1;
        int r = 1 + static_cast<int>(rng() % 40);
        int c = 1 + static_cast<int>(rng() % 40);
        Mat m = random_mat(rng, r, c, e);
        auto rr = rref(m);
        Subspace k = kernel(m);
        CHECK(rr.rank + k.dim() == c);
        // every kernel basis vector is annihilated
        Mat prod = m * k.basis.transpose();
        CHECK(prod.is_zero());
    }
}

TEST_CASE("rref is canonical under random row operations") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 200; ++iter) {
        int e = (iter % 2) ? 2 : 1;
        Mat m = random_mat(rng, 6, 8, e);
        Mat m2 = m;
        for (int k = 0; k < 20; ++k) {
            int i = static_cast<int>(rng() % 6), j = static_cast<int>(rng() % 6);
            if (i == j) continue;
            unsigned coef = 1 + static_cast<unsigned>(rng() % ((1u << e) - 1));
            for (int col = 0; col < 8; ++col)
                m2.set(i, col, m2.at(i, col) + m2.at(j, col) * Gf(e, coef));
        }
        auto a = rref(m), b = rref(m2);
        CHECK(a.mat == b.mat);
        CHECK(a.pivots == b.pivots);
        auto g = rref(m2, Backend::Generic);
        CHECK(g.mat == b.mat);
    }
}

TEST_CASE("packed backend agrees with generic backend entry for entry") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 1000; ++iter) {
        int r = 1 + static_cast<int>(rng() % 30);
        int c = 1 + static_cast<int>(rng() % 90);
        Mat m = random_mat(rng, r, c, 1);
        auto p = rref(m, Backend::Packed);
        auto g = rref(m, Backend::Generic);
        CHECK(p.mat == g.mat);
        CHECK(p.pivots == g.pivots);
        CHECK(kernel(m, Backend::Packed) == kernel(m, Backend::Generic));
    }
}

TEST_CASE("packed multiply agrees with generic multiply") {
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 300; ++iter) {
        int m = 1 + static_cast<int>(rng() % 20);
        int k = 1 + static_cast<int>(rng() % 70);
        int n = 1 + static_cast<int>(rng() % 70);
        Mat a = random_mat(rng, m, k, 1), b = random_mat(rng, k, n, 1);
        Mat fast = a * b;  // packed path
        Mat slow(m, n, 1);
        for (int i = 0; i < m; ++i)
            for (int t = 0; t < k; ++t)
                if (a.raw(i, t))
                    for (int j = 0; j < n; ++j)
                        if (b.raw(t, j)) slow.set(i, j, slow.raw(i, j) ^ 1u);
        CHECK(fast == slow);
    }
}

TEST_CASE("modular law for dimensions of sum and intersection") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 300; ++iter) {
        int e = (iter % 2) ? 2 : 1;
        int n = 2 + static_cast<int>(rng() % 12);
        Subspace a = Subspace::span(random_mat(rng, 1 + static_cast<int>(rng() % n), n, e));
        Subspace b = Subspace::span(random_mat(rng, 1 + static_cast<int>(rng() % n), n, e));
        CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("scalar and simd kernel variants agree bit for bit") {
    using namespace qblock::gf2;
    if (!avx2_available()) {
        MESSAGE("avx2 not available; simd equivalence skipped");
        return;
    }
    std::mt19937_64 rng(43);
    const Kernels& sc = kernels(Simd::Scalar);
    const Kernels& vx = kernels(Simd::Avx2);
    for (int iter = 0; iter < 500; ++iter) {
        size_t n = 1 + rng() % 24;
        size_t rows = 1 + rng() % 40;
        std::vector<std::uint64_t> buf1(rows * n), pivot(n);
        for (auto& w : buf1) w = rng();
        for (auto& w : pivot) w = rng();
        std::vector<std::uint64_t> buf2 = buf1;
        std::vector<std::uint8_t> sel(rows);
        for (auto& s : sel) s = rng() & 1;

        sc.rows_xor_select(buf1.data(), n, rows, sel.data(), pivot.data(), n);
        vx.rows_xor_select(buf2.data(), n, rows, sel.data(), pivot.data(), n);
        CHECK(buf1 == buf2);

        std::vector<std::uint64_t> acc1(n), acc2;
        for (auto& w : acc1) w = rng();
        acc2 = acc1;
        std::uint64_t mask = rng() % (1ull << std::min<size_t>(rows, 63));
        sc.accumulate_rows(acc1.data(), buf1.data(), n, mask, n);
        vx.accumulate_rows(acc2.data(), buf1.data(), n, mask, n);
        CHECK(acc1 == acc2);

        sc.row_xor(acc1.data(), pivot.data(), n);
        vx.row_xor(acc2.data(), pivot.data(), n);
        CHECK(acc1 == acc2);
    }
}

TEST_CASE("whole-matrix results identical under forced simd backends") {
    using namespace qblock::gf2;
    if (!avx2_available()) return;
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 100; ++iter) {
        Mat m = random_mat(rng, 1 + static_cast<int>(rng() % 25), 1 + static_cast<int>(rng() % 200), 1);
        force_simd(Simd::Scalar);
        auto a = rref(m, Backend::Packed);
        force_simd(Simd::Avx2);
        auto b = rref(m, Backend::Packed);
        force_simd(Simd::Auto);
        CHECK(a.mat == b.mat);
    }
}

TEST_CASE("nilpotency detection") {
    Mat n(3, 3, 1);
    n.set(1, 0, 1u);
    n.set(2, 1, 1u);
    CHECK(n.is_nilpotent());
    CHECK(!Mat::identity(3, 1).is_nilpotent());
    CHECK(n.pow(3).is_zero());
    CHECK(!n.pow(2).is_zero());
}
