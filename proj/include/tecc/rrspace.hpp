#pragma once

#include <climits>
#include <string>
#include <vector>

#include "tecc/curve.hpp"
#include "tecc/matrix.hpp"

namespace tecc {

// Formal denominator of a function: 1, the model coordinate Y, or a*x+b.
enum class Denom { One, Y, H };

// (u(x) + v(x) Y) / den, with Y the model coordinate (Y = (a x + b) y for Type3).
// Products are reduced with Y^2 = F(x) - h(x) Y, so the form stays canonical.
class CurveFunc {
public:
    static constexpr int kZeroPole = INT_MIN;

    CurveFunc() = default;
    CurveFunc(PolyFq u, PolyFq v, Denom den = Denom::One) : u_(std::move(u)), v_(std::move(v)), den_(den) {}
    static CurveFunc zero(const Field& f) { return {PolyFq(f), PolyFq(f)}; }
    static CurveFunc x_pow(const Field& f, int i, Elem c = 1) { return {PolyFq::monomial(f, i, c), PolyFq(f)}; }
    // c * x^j * Y
    static CurveFunc xY_pow(const Field& f, int j, Elem c = 1) { return {PolyFq(f), PolyFq::monomial(f, j, c)}; }

    const PolyFq& u() const { return u_; }
    const PolyFq& v() const { return v_; }
    Denom den() const { return den_; }
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    Elem coeff_x(int i) const { return u_.coeff(i); }
    Elem coeff_xY(int j) const { return v_.coeff(j); }

    CurveFunc operator+(const CurveFunc& o) const;
    CurveFunc operator-(const CurveFunc& o) const;
    CurveFunc scaled(Elem s) const { return {u_.scaled(s), v_.scaled(s), den_}; }
    CurveFunc with_den(Denom d) const { return {u_, v_, d}; }
    bool operator==(const CurveFunc& o) const { return den_ == o.den_ && u_ == o.u_ && v_ == o.v_; }

    // Pole order at O; kZeroPole for the zero function. Denominators subtract 3 (Y) or 2 (a x + b).
    int pole_order() const;
    Elem eval(const Curve& c, const Point& p) const;
    std::string str(const Curve& c, ElemStyle s = ElemStyle::Poly) const;

private:
    PolyFq u_, v_;
    Denom den_ = Denom::One;
};

CurveFunc mul(const Curve& c, const CurveFunc& a, const CurveFunc& b);

struct FuncBasis {
    std::vector<CurveFunc> funcs;
    std::string tag;
    std::size_t size() const { return funcs.size(); }
    const CurveFunc& operator[](std::size_t i) const { return funcs[i]; }
};

// Twists: empty vectors mean the plain space L(kO). A single twist is t = (1), h = (ell).
struct TwistSpec {
    std::vector<int> t, h;
    std::vector<Elem> eta;

    static TwistSpec none() { return {}; }
    static TwistSpec single(int ell, Elem eta) { return {{1}, {ell}, {eta}}; }
    bool empty() const { return t.empty(); }
    bool is_single() const { return t.size() == 1 && t[0] == 1; }
    int ell() const { return h.at(0); }
    Elem eta0() const { return eta.at(0); }
};

// Largest hook index for a single twist: (k-3)/2 for odd k, k/2 for even k.
int max_single_ell(int k);
bool is_extreme_ell(int k, int ell);

// {x^i : 2i <= k} then {x^j Y : 2j+3 <= k}.
FuncBasis basis_LkO(const Curve& c, int k);
// L((n-k)O) divided by the differential's divisor function (Y for Type1, 1 for Type2, a x + b for Type3).
FuncBasis basis_dual_space(const Curve& c, int n, int k);
FuncBasis defining_set_single(const Curve& c, int k, int ell, Elem eta);
// n < 0 skips the t <= n-k-1 bound. Non-fatal findings are appended to warnings.
FuncBasis defining_set_general(const Curve& c, int k, const TwistSpec& tw, int n = -1,
                               std::vector<std::string>* warnings = nullptr);
FuncBasis defining_set(const Curve& c, int k, const TwistSpec& tw, int n = -1,
                       std::vector<std::string>* warnings = nullptr);

Matrix evaluate(const Curve& c, const FuncBasis& fb, const EvalSet& D);
std::vector<Elem> evaluate(const Curve& c, const CurveFunc& f, const EvalSet& D);

}  // namespace tecc
