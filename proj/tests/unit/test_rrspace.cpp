#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace tecc;

TEST_SUITE("rrspace") {
    TEST_CASE("basis of L(kO) has distinct pole orders") {
        for (int q : {5, 4, 8})
            for (const auto& ch : testing::sweep_curves(q))
                for (int k = 1; k <= 9; ++k) {
                    const auto B = basis_LkO(ch.curve, k);
                    CHECK(static_cast<int>(B.size()) == k);
                    std::set<int> poles;
                    for (const auto& f : B.funcs) poles.insert(f.pole_order());
                    CHECK(poles.size() == B.size());
                    CHECK(*poles.rbegin() == (k == 1 ? 0 : k));
                    CHECK(poles.count(1) == 0);
                }
    }

    TEST_CASE("pole orders add under multiplication") {
        for (int q : {7, 4})
            for (const auto& ch : testing::sweep_curves(q)) {
                const auto B = basis_LkO(ch.curve, 7);
                for (const auto& f : B.funcs)
                    for (const auto& g : B.funcs) CHECK(mul(ch.curve, f, g).pole_order() == f.pole_order() + g.pole_order());
            }
    }

    TEST_CASE("products evaluate pointwise") {
        auto F = Field::make(2, 2);
        const Curve c = Curve::type3(F, 1, 1);
        const auto B = basis_LkO(c, 5);
        const auto pts = c.points();
        for (const auto& f : B.funcs)
            for (const auto& g : B.funcs) {
                const auto fg = mul(c, f, g);
                for (const auto& p : pts)
                    if (!p.inf) CHECK(fg.eval(c, p) == F->mul(f.eval(c, p), g.eval(c, p)));
            }
    }

    TEST_CASE("single twist replaces one basis function") {
        auto F = Field::make(5);
        const Curve c = Curve::type1(F, {1, 1, 0, 1});
        for (int k : {3, 4, 5, 6}) {
            CHECK(max_single_ell(k) == (k % 2 ? (k - 3) / 2 : k / 2));
            for (int ell = 0; ell <= max_single_ell(k); ++ell) {
                const auto B = defining_set_single(c, k, ell, 2);
                CHECK(static_cast<int>(B.size()) == k);
                int top = 0;
                for (const auto& f : B.funcs) top = std::max(top, f.pole_order());
                CHECK(top == k + 1);
            }
        }
        CHECK_THROWS_AS(defining_set_single(c, 4, 5, 1), Error);
        CHECK_THROWS_AS(defining_set_single(c, 4, 1, 0), Error);
    }
}
