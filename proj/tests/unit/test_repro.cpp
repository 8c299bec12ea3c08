#include <doctest.h>

#include "repro.hpp"
#include "tecc/io.hpp"

using namespace tecc;

TEST_SUITE("repro") {
    TEST_CASE("every target matches its embedded golden and is stable") {
        for (const auto& t : repro::targets()) {
            CAPTURE(t);
            const auto first = repro::render(repro::run(t).sections);
            REQUIRE(repro::golden(t).has_value());
            const auto diff = repro::compare(repro::run(t), *repro::golden(t));
            CHECK(diff.match);
            CHECK(repro::render(repro::run(t).sections) == first);
        }
        CHECK_THROWS_AS(repro::run("no-such-target"), Error);
    }

    TEST_CASE("descriptor round trip") {
        auto F = Field::make(2, 2);
        const Curve c = Curve::type3(F, 1, 1);
        const EvalSet D = select_eval_set(c, 6);
        const auto h = CodeHandle::make(c, D, 3, TwistSpec::single(0, F->parse("w")));
        const auto back = handle_from_json(handle_to_json(h));
        CHECK(back.generator() == h.generator());
        CHECK(back.k() == 3);
        CHECK(curve_to_json(curve_from_json(curve_to_json(c))) == curve_to_json(c));
    }
}
