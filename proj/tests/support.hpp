#pragma once

#include <string>
#include <vector>

#include "tecc/teccbuild.hpp"

namespace tecc::testing {

struct CurveChoice {
    int q = 0;
    Curve curve;
    int max_n = 0;  // twice the number of split x-values
};

// First curve in coefficient order with the most split x-values (stopping early at `want`),
// for each admissible form over GF(q).
std::vector<CurveChoice> sweep_curves(int q, int want_split = 6);

// Deterministic small-field list used by the property and sweep tests.
std::vector<int> sweep_fields();

Matrix from_ints(const Field& F, const std::vector<std::vector<int>>& rows);
Matrix from_text(const Field& F, const std::vector<std::string>& rows);

}  // namespace tecc::testing
