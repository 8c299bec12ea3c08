#pragma once

#include <string>
#include <vector>

#include "tecc/curve.hpp"
#include "tecc/rrspace.hpp"

namespace tecc {

// Residues of dx/t at the points of D, t the product of (x - alpha) over D's distinct x-values.
struct ResidueVector {
    std::vector<Elem> gamma;  // aligned with D
    std::vector<Elem> xs;     // the x-values forming t
    CurveKind kind = CurveKind::Type1;
};

ResidueVector residues(const Curve& c, const EvalSet& D);

struct CanonicalInfo {
    CurveKind kind = CurveKind::Type1;
    std::string dx_divisor;    // "(y)", "0" or "(ax+b)"
    std::string dual_divisor;  // divisor whose space, scaled by the residues, gives the dual code
    Denom denom = Denom::One;  // formal denominator carried by the dual basis
};

CanonicalInfo canonical_info(const Curve& c);

// Residue-weighted functional sum_i gamma_i * phi(P_i) / delta(P_i), where delta is the
// divisor function of dx (Y, 1 or a x + b). Vanishes on functions with pole order <= n
// when D is split-complete.
Elem dual_functional(const Curve& c, const EvalSet& D, const ResidueVector& r, const CurveFunc& phi);
// gamma_i / delta(P_i)
std::vector<Elem> dual_weights(const Curve& c, const EvalSet& D, const ResidueVector& r);

}  // namespace tecc
