#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tecc/gf.hpp"

namespace tecc {

enum class CurveKind { Type1, Type2, Type3 };

const char* kind_name(CurveKind k);

// A rational point. For the third curve form the place above the root of
// a*x+b is rational but y has a pole there; it is flagged with `pole`.
struct Point {
    bool inf = true;
    bool pole = false;
    Elem x = 0;
    Elem y = 0;

    static Point infinity() { return {}; }
    static Point affine(Elem x, Elem y) { return {false, false, x, y}; }
    static Point at_pole(Elem x) { return {false, true, x, 0}; }

    bool operator==(const Point& o) const {
        if (inf || o.inf) return inf == o.inf;
        return x == o.x && pole == o.pole && (pole || y == o.y);
    }
    bool operator!=(const Point& o) const { return !(*this == o); }
    // Affine points by (x, y) with the pole point after finite ones; O last.
    bool operator<(const Point& o) const {
        if (inf != o.inf) return !inf;
        if (inf) return false;
        if (x != o.x) return x < o.x;
        if (pole != o.pole) return !pole;
        return y < o.y;
    }
};

// One of three defining equations:
//   Type1 (odd p):  y^2 = f(x), f cubic and square-free
//   Type2 (p = 2):  y^2 + y = f(x), f cubic
//   Type3 (p = 2):  y^2 + y = x + 1/(a*x + b), a != 0
// Arithmetic runs on the model Y^2 + h(x) Y = F(x) where Y = y for the first
// two forms and Y = (a*x + b) y for the third.
class Curve {
public:
    static Curve type1(FieldPtr f, const std::array<Elem, 4>& cubic);
    static Curve type2(FieldPtr f, const std::array<Elem, 4>& cubic);
    static Curve type3(FieldPtr f, Elem a, Elem b);

    CurveKind kind() const { return kind_; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    // The cubic of the first two forms.
    const PolyFq& f() const { return f_; }
    Elem a() const { return a_; }
    Elem b() const { return b_; }

    const PolyFq& model_h() const { return h_; }
    const PolyFq& model_F() const { return F_; }
    // Value of the factor that turns y into the model coordinate Y (1 unless Type3).
    Elem y_cofactor(Elem x) const;

    bool is_ramified(Elem x) const;
    bool on_curve(const Point& p) const;
    // Model coordinate Y of an affine point.
    Elem model_y(const Point& p) const;
    Point from_model(Elem x, Elem Y) const;
    // Model Y-roots above x, sorted by encoding.
    std::vector<Elem> model_roots(Elem x) const;
    // Points above x (affine, including the pole point), sorted.
    std::vector<Point> points_above(Elem x) const;

    Point neg(const Point& p) const;
    Point add(const Point& p, const Point& q) const;
    Point mul(long long n, const Point& p) const;

    // Affine points ascending, then O.
    std::vector<Point> points() const;
    long long order() const { return static_cast<long long>(points().size()); }

    std::string describe(ElemStyle s = ElemStyle::Poly) const;
    std::string format_point(const Point& p, ElemStyle s = ElemStyle::Coeffs) const;
    Point parse_point(const std::string& text) const;

private:
    Curve() = default;
    void init_model();
    void require_on_curve(const Point& p) const;

    CurveKind kind_ = CurveKind::Type1;
    FieldPtr field_;
    PolyFq f_;
    Elem a_ = 0, b_ = 0;
    PolyFq h_, F_;
    // For characteristic 2: a root z of z^2 + z = c, indexed by c, or -1.
    std::vector<int> as_root_;
};

struct GroupStructure {
    long long n1 = 1, n2 = 1;
    Point g1, g2;
    std::vector<Point> points;                 // sorted as Curve::points()
    std::vector<std::pair<long long, long long>> dlog;  // aligned with points

    std::size_t index_of(const Point& p) const;
    std::pair<long long, long long> dlog_of(const Point& p) const { return dlog[index_of(p)]; }
    Point from_dlog(long long i, long long j) const;
};

// Invariant factors n1 | n2 with generators. Optional generators are validated
// and used as (g1, g2) so that externally fixed dlog conventions reproduce.
GroupStructure group_structure(const Curve& c, std::optional<std::pair<Point, Point>> generators = std::nullopt,
                               long long cap = 1 << 16);

enum class XOrder { FieldOrder, NonzeroFirst };

class EvalSet {
public:
    // Validates an explicit ordered point list.
    static EvalSet from_points(const Curve& c, std::vector<Point> pts);

    const std::vector<Point>& points() const { return pts_; }
    const std::vector<Elem>& xs() const { return xs_; }
    std::size_t size() const { return pts_.size(); }
    const Point& operator[](std::size_t i) const { return pts_[i]; }
    bool split_complete() const { return split_complete_; }
    bool even_support() const { return pts_.size() % 2 == 0; }

private:
    std::vector<Point> pts_;
    std::vector<Elem> xs_;
    bool split_complete_ = false;
};

// Both points above each of the first want_n/2 split x-values in the requested order.
EvalSet select_eval_set(const Curve& c, int want_n, XOrder order = XOrder::FieldOrder);
// All x-values above which the curve has two rational affine points, in field order.
std::vector<Elem> split_xs(const Curve& c);

struct SubsetSums {
    unsigned long long count = 0;
    bool witnesses_complete = false;
    std::vector<std::vector<int>> witnesses;  // sorted index lists into D
};

// N(k, b, D): k-subsets of D summing to b. Witnesses are kept when count <= witness_cap.
SubsetSums subset_sum_count(const Curve& c, int k, const Point& b, const EvalSet& D,
                            unsigned long long witness_cap = 10000);

}  // namespace tecc
