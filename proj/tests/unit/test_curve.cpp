#include <doctest.h>

#include <cmath>
#include <map>

#include "support.hpp"

using namespace tecc;

TEST_SUITE("curve") {
    TEST_CASE("Hasse bound, group axioms and associativity on small curves") {
        for (int q : testing::sweep_fields())
            for (const auto& ch : testing::sweep_curves(q)) {
                const Curve& c = ch.curve;
                CAPTURE(c.describe());
                const auto pts = c.points();
                CHECK(std::abs(static_cast<double>(pts.size()) - q - 1) <= 2 * std::sqrt(double(q)));
                for (const auto& p : pts) {
                    CHECK(c.on_curve(p));
                    CHECK(c.add(p, c.neg(p)) == Point::infinity());
                    CHECK(c.add(p, Point::infinity()) == p);
                    CHECK(c.mul(static_cast<long long>(pts.size()), p) == Point::infinity());
                }
                if (pts.size() > 50) continue;
                for (const auto& a : pts)
                    for (const auto& b : pts) {
                        CHECK(c.add(a, b) == c.add(b, a));
                        for (const auto& d : pts) CHECK(c.add(c.add(a, b), d) == c.add(a, c.add(b, d)));
                    }
            }
    }

    TEST_CASE("discrete log coordinates are a homomorphism") {
        auto F = Field::make(2, 2);
        const Curve c = Curve::type2(F, {0, 0, 0, 1});
        const auto gs = group_structure(c);
        CHECK(gs.n1 * gs.n2 == c.order());
        for (const auto& a : gs.points)
            for (const auto& b : gs.points) {
                const auto [i1, j1] = gs.dlog_of(a);
                const auto [i2, j2] = gs.dlog_of(b);
                CHECK(gs.from_dlog((i1 + i2) % gs.n1, (j1 + j2) % gs.n2) == c.add(a, b));
            }
    }

    TEST_CASE("subset-sum count agrees with a dlog-based counter") {
        auto F = Field::make(7);
        const Curve c = Curve::type1(F, {3, 0, 0, 1});
        const auto gs = group_structure(c);
        const EvalSet D = select_eval_set(c, 12);
        for (int k = 1; k <= 6; ++k) {
            std::map<std::pair<long long, long long>, unsigned long long> count;
            const int n = static_cast<int>(D.size());
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) != k) continue;
                long long i = 0, j = 0;
                for (int t = 0; t < n; ++t)
                    if (mask >> t & 1) {
                        const auto [a, b] = gs.dlog_of(D[t]);
                        i += a, j += b;
                    }
                ++count[{i % gs.n1, j % gs.n2}];
            }
            for (const auto& target : gs.points) {
                const auto ss = subset_sum_count(c, k, target, D);
                CHECK(ss.count == count[gs.dlog_of(target)]);
            }
        }
    }

    TEST_CASE("evaluation sets") {
        auto F = Field::make(5);
        const Curve c = Curve::type1(F, {1, 1, 0, 1});
        const EvalSet D = select_eval_set(c, 8);
        CHECK(D.size() == 8);
        CHECK(D.split_complete());
        CHECK_THROWS_AS(select_eval_set(c, 40), Error);
        CHECK(c.parse_point(c.format_point(D[3])) == D[3]);
    }

    TEST_CASE("singular curves are rejected") {
        auto F = Field::make(5);
        CHECK_THROWS_AS(Curve::type1(F, {0, 0, 0, 1}), Error);
        auto G = Field::make(2, 2);
        CHECK_THROWS_AS(Curve::type3(G, 0, 1), Error);
    }
}
