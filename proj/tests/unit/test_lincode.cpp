#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace tecc;

namespace {

Matrix random_full_rank(const Field& F, int k, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, F.q() - 1);
    for (;;) {
        Matrix m(F, 0, n);
        for (int r = 0; r < k; ++r) {
            std::vector<Elem> row(n);
            for (auto& e : row) e = static_cast<Elem>(pick(rng));
            m.append_row(row);
        }
        if (rank(m) == k) return m;
    }
}

}  // namespace

TEST_SUITE("lincode") {
    TEST_CASE("Singleton bound and dual involution on random codes") {
        std::mt19937 rng(12345);
        for (int q : {2, 3, 5, 7}) {
            auto F = Field::make(q);
            for (int trial = 0; trial < 20; ++trial) {
                const int n = 4 + trial % 5, k = 1 + trial % (n - 1);
                const Matrix G = random_full_rank(*F, k, n, rng);
                const int d = min_distance(G);
                CHECK(d >= 1);
                CHECK(d <= n - k + 1);
                const Matrix Gd = dual(G);
                CHECK(Gd.rows() == n - k);
                CHECK((G * Gd.transposed()).is_zero());
                CHECK(same_row_space(dual(Gd), G));
            }
        }
    }

    TEST_CASE("Schur square dimension is a monomial invariant") {
        std::mt19937 rng(7);
        auto F = Field::make(7);
        for (int trial = 0; trial < 15; ++trial) {
            const int n = 10, k = 2 + trial % 4;
            const Matrix G = random_full_rank(*F, k, n, rng);
            const int s = schur_square_dim(G);
            CHECK(s <= std::min(n, k * (k + 1) / 2));
            std::vector<Elem> scale(n);
            for (auto& e : scale) e = static_cast<Elem>(1 + rng() % 6);
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = (i * 3 + trial) % n;
            CHECK(schur_square_dim(G.scale_columns(scale).select_columns(perm)) == s);
            // row operations
            const Matrix T = random_full_rank(*F, k, k, rng);
            CHECK(schur_square_dim(T * G) == s);
        }
    }

    TEST_CASE("Reed-Solomon codes have Schur square 2k-1") {
        auto F = Field::make(13);
        for (int k = 2; k <= 5; ++k) {
            Matrix G(*F, 0, 12);
            for (int i = 0; i < k; ++i) {
                std::vector<Elem> row;
                for (Elem x = 1; x <= 12; ++x) row.push_back(F->pow(x, i));
                G.append_row(row);
            }
            CHECK(schur_square_dim(G) == 2 * k - 1);
            CHECK(min_distance(G) == 12 - k + 1);
            CHECK(classify(G).cls == CodeClass::MDS);
            CHECK(rs_nonequiv_check(G) == RsVerdict::Inconclusive);
        }
    }

    TEST_CASE("self-duality predicates") {
        auto F = Field::make(2);
        // extended Hamming [8,4,4]
        const Matrix G = testing::from_text(*F, {"1 0 0 0 0 1 1 1", "0 1 0 0 1 0 1 1", "0 0 1 0 1 1 0 1", "0 0 0 1 1 1 1 0"});
        CHECK(is_self_dual(G));
        CHECK(is_self_orthogonal(G));
        CHECK(min_distance(G) == 4);
        CHECK_FALSE(is_self_dual(G.select_columns({0, 1, 2, 3, 4, 5})));
    }

    TEST_CASE("distance budget is enforced") {
        auto F = Field::make(13);
        std::mt19937 rng(1);
        const Matrix G = random_full_rank(*F, 6, 12, rng);
        CHECK_THROWS_AS(min_distance(G, 10), Error);
    }
}
