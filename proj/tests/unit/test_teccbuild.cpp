#include <doctest.h>

#include "support.hpp"

using namespace tecc;

TEST_SUITE("teccbuild") {
    TEST_CASE("parity-check routes agree with the nullspace") {
        for (int q : {5, 7, 4, 8, 9})
            for (const auto& ch : testing::sweep_curves(q))
                for (int n = 6; n <= std::min(ch.max_n, 10); n += 2)
                    for (int k = 3; k <= n - 3; ++k) {
                        const EvalSet D = select_eval_set(ch.curve, n);
                        for (int ell = 0; ell <= max_single_ell(k); ++ell) {
                            const auto h = CodeHandle::make(ch.curve, D, k, TwistSpec::single(ell, 1));
                            CAPTURE(ch.curve.describe());
                            CAPTURE(n);
                            CAPTURE(k);
                            CAPTURE(ell);
                            const Matrix N = parity_check_nullspace(h);
                            CHECK((h.generator() * N.transposed()).is_zero());
                            try {
                                CHECK(same_row_space(parity_check_recursive(h).H, N));
                            } catch (const Error& e) {
                                CHECK(e.code() == Errc::DegenerateRecursion);
                            }
                            if (is_extreme_ell(k, ell)) CHECK(same_row_space(parity_check_closed_form(h).H, N));
                        }
                    }
    }

    TEST_CASE("twisted code sits between L((k-1)O) and L((k+1)O)") {
        auto F = Field::make(7);
        const Curve c = Curve::type1(F, {3, 0, 0, 1});
        const EvalSet D = select_eval_set(c, 12);
        for (int k = 3; k <= 8; ++k)
            for (int ell = 0; ell <= max_single_ell(k); ++ell)
                for (Elem eta = 1; eta < 7; ++eta) {
                    const Matrix G = CodeHandle::make(c, D, k, TwistSpec::single(ell, eta)).generator();
                    CHECK(rank(G) == k);
                    CHECK(row_space_contains(ecc_generator(c, D, k + 1), G));
                    // all of L(kO) except the removed monomial survives
                    CHECK(rank(G.stacked(ecc_generator(c, D, k))) == k + 1);
                }
    }

    TEST_CASE("self-dual certificate matches row-space equality") {
        for (int q : {4, 5, 8, 9, 13})
            for (const auto& ch : testing::sweep_curves(q)) {
                const int n = std::min(ch.max_n, 10);
                const EvalSet D = select_eval_set(ch.curve, n);
                const int k = n / 2;
                const int ell = max_single_ell(k);
                for (const auto& v : candidate_multipliers(ch.curve, D))
                    for (Elem eta = 1; eta < static_cast<Elem>(q); ++eta) {
                        const auto h = CodeHandle::make(ch.curve, D, k, TwistSpec::single(ell, eta), v);
                        const auto cert = self_dual_check(h);
                        CHECK(cert.verdict == is_self_dual(h.generator()));
                        CHECK(cert.span_verdict == is_self_dual(h.generator()));
                    }
            }
    }

    TEST_CASE("distance classification agrees with exhaustive search") {
        for (int q : {4, 5, 7})
            for (const auto& ch : testing::sweep_curves(q)) {
                const int n = std::min(ch.max_n, 8);
                const EvalSet D = select_eval_set(ch.curve, n);
                for (int k = 3; k <= n - 3; ++k)
                    for (int ell = 0; ell <= max_single_ell(k); ++ell)
                        for (Elem eta = 1; eta < static_cast<Elem>(q); ++eta) {
                            const auto h = CodeHandle::make(ch.curve, D, k, TwistSpec::single(ell, eta));
                            const auto dc = min_distance_class(h);
                            CHECK(dc.d == min_distance(h.generator()));
                            CHECK(dc.d >= n - k - 1);
                            CHECK(dc.d <= n - k + 1);
                        }
            }
    }

    TEST_CASE("vanishing function vanishes on its points") {
        auto F = Field::make(5);
        const Curve c = Curve::type1(F, {1, 1, 0, 1});
        const EvalSet D = select_eval_set(c, 8);
        const auto ss = subset_sum_count(c, 4, Point::infinity(), D);
        for (const auto& w : ss.witnesses) {
            std::vector<Point> pts;
            for (int i : w) pts.push_back(D[i]);
            const auto f = vanishing_function(c, pts);
            REQUIRE(f.has_value());
            CHECK(f->pole_order() == 4);
            for (const auto& p : pts) CHECK(f->eval(c, p) == 0);
        }
    }

    TEST_CASE("Schur audit on a length-12 curve") {
        auto F = Field::make(7);
        const Curve c = Curve::type1(F, {3, 0, 0, 1});
        const EvalSet D = select_eval_set(c, 12);
        CHECK(schur_square_dim(ecc_generator(c, D, 4)) == 8);
        for (int ell = 0; ell <= 2; ++ell) {
            const auto rep = schur_audit(CodeHandle::make(c, D, 4, TwistSpec::single(ell, 3)));
            CHECK(rep.primal_in_range);
            CHECK(rep.dim >= 9);
            CHECK((rep.dim == 9) == is_extreme_ell(4, ell));
            CHECK(rep.rs == RsVerdict::NonRS);
        }
    }
}
