#include <doctest.h>

#include <set>

#include "tecc/error.hpp"
#include "tecc/gf.hpp"

using namespace tecc;

TEST_SUITE("gf") {
    TEST_CASE("field axioms and Frobenius on every small field") {
        for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}, {5, 1}, {2, 4}, {7, 1}}) {
            auto F = Field::make(p, m);
            CAPTURE(F->q());
            const auto E = F->elements();
            REQUIRE(E.size() == static_cast<std::size_t>(F->q()));
            for (Elem a : E) {
                CHECK(F->pow(a, F->q()) == a);
                CHECK(F->add(a, F->neg(a)) == 0);
                if (a) CHECK(F->mul(a, F->inv(a)) == 1);
                for (Elem b : E) {
                    // (a+b)^p = a^p + b^p
                    CHECK(F->pow(F->add(a, b), p) == F->add(F->pow(a, p), F->pow(b, p)));
                    CHECK(F->mul(a, b) == F->mul(b, a));
                    for (Elem c : E) CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                }
            }
        }
    }

    TEST_CASE("primitive element generates the multiplicative group") {
        auto F = Field::make(2, 4);
        std::set<Elem> seen;
        Elem g = F->primitive(), x = 1;
        for (int i = 0; i < F->q() - 1; ++i, x = F->mul(x, g)) seen.insert(x);
        CHECK(seen.size() == 15);
    }

    TEST_CASE("square roots") {
        for (int q : {5, 7, 9, 8, 16}) {
            auto F = q == 9 ? Field::make(3, 2) : q == 8 ? Field::make(2, 3) : q == 16 ? Field::make(2, 4) : Field::make(q);
            int squares = 0;
            for (Elem a : F->elements()) {
                const auto r = F->sqrt(a);
                CHECK(r.has_value() == F->is_square(a));
                if (r) {
                    CHECK(F->mul(*r, *r) == a);
                    ++squares;
                }
            }
            // every element is a square in characteristic 2, (q+1)/2 of them otherwise
            CHECK(squares == (F->p() == 2 ? F->q() : (F->q() + 1) / 2));
        }
    }

    TEST_CASE("formatting and parsing round trip") {
        auto F = Field::make(2, 4);
        for (Elem a : F->elements()) {
            CHECK(F->parse(F->format(a, ElemStyle::Poly)) == a);
            CHECK(F->parse(F->format(a)) == a);
        }
        CHECK(F->format(F->parse("w^2+w"), ElemStyle::Poly) == "w^2+w");
        auto P = Field::make(5);
        CHECK(P->from_int(-1) == 4);
        CHECK(P->format(P->parse("-2")) == "3");
    }

    TEST_CASE("default modulus is irreducible and explicit reducible one is rejected") {
        CHECK(is_irreducible_mod_p(default_poly(2, 4), 2));
        CHECK(is_irreducible_mod_p(default_poly(3, 2), 3));
        CHECK_THROWS_AS(Field::make(2, 2, std::vector<int>{1, 0, 1}), Error);
        CHECK_THROWS_AS(Field::make(6), Error);
    }

    TEST_CASE("polynomial division") {
        auto F = Field::make(7);
        PolyFq a(*F, {1, 2, 3, 4}), b(*F, {5, 1});
        const auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        CHECK(poly_gcd(a * b, b).monic() == b.monic());
    }
}
