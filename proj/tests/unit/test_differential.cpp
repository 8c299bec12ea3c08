#include <doctest.h>

#include "support.hpp"

using namespace tecc;

TEST_SUITE("differential") {
    TEST_CASE("residues are the inverse derivatives of the x-vanishing polynomial") {
        for (int q : testing::sweep_fields())
            for (const auto& ch : testing::sweep_curves(q)) {
                const Curve& c = ch.curve;
                const Field& F = c.field();
                const EvalSet D = select_eval_set(c, std::min(ch.max_n, 10));
                const auto r = residues(c, D);
                for (std::size_t i = 0; i < D.size(); ++i) {
                    Elem tp = 1;
                    for (Elem x : r.xs)
                        if (x != D[i].x) tp = F.mul(tp, F.sub(D[i].x, x));
                    CHECK(F.mul(r.gamma[i], tp) == 1);
                }
            }
    }

    TEST_CASE("dual functional vanishes on L(kO) times L((n-k)O)") {
        for (int q : testing::sweep_fields())
            for (const auto& ch : testing::sweep_curves(q)) {
                const Curve& c = ch.curve;
                const int n = std::min(ch.max_n, 10);
                const EvalSet D = select_eval_set(c, n);
                const auto r = residues(c, D);
                for (int k = 1; k < n; ++k) {
                    const auto L = basis_LkO(c, k);
                    const auto M = basis_LkO(c, n - k);
                    CHECK(static_cast<int>(basis_dual_space(c, n, k).size()) == n - k);
                    for (const auto& f : L.funcs)
                        for (const auto& g : M.funcs) CHECK(dual_functional(c, D, r, mul(c, f, g)) == 0);
                }
            }
    }

    TEST_CASE("untwisted parity check is orthogonal to the generator") {
        for (int q : {5, 7, 4, 8})
            for (const auto& ch : testing::sweep_curves(q)) {
                const int n = std::min(ch.max_n, 10);
                const EvalSet D = select_eval_set(ch.curve, n);
                for (int k = 1; k < n; ++k) {
                    const Matrix G = ecc_generator(ch.curve, D, k);
                    const Matrix H = ecc_parity_check(ch.curve, D, k);
                    CHECK((G * H.transposed()).is_zero());
                    CHECK(rank(H) == n - k);
                }
            }
    }

    TEST_CASE("canonical divisor per form") {
        auto F5 = Field::make(5);
        CHECK(canonical_info(Curve::type1(F5, {1, 1, 0, 1})).dx_divisor == "(y)");
        auto F4 = Field::make(2, 2);
        CHECK(canonical_info(Curve::type2(F4, {0, 0, 0, 1})).dx_divisor == "0");
        CHECK(canonical_info(Curve::type3(F4, 1, 1)).dx_divisor == "(ax+b)");
    }
}
