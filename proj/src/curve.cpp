#include "tecc/curve.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace tecc {

const char* kind_name(CurveKind k) {
    switch (k) {
        case CurveKind::Type1: return "type1";
        case CurveKind::Type2: return "type2";
        case CurveKind::Type3: return "type3";
    }
    return "?";
}

Curve Curve::type1(FieldPtr f, const std::array<Elem, 4>& cubic) {
    if (f->p() == 2) throw Error(Errc::WrongCharacteristic, "y^2 = f(x) needs odd characteristic");
    Curve c;
    c.kind_ = CurveKind::Type1;
    c.field_ = std::move(f);
    c.f_ = PolyFq(*c.field_, {cubic.begin(), cubic.end()});
    if (c.f_.degree() != 3) throw Error(Errc::Singular, "f must be cubic");
    if (poly_gcd(c.f_, c.f_.derivative()).degree() != 0) throw Error(Errc::Singular, "f is not square-free");
    c.init_model();
    return c;
}

Curve Curve::type2(FieldPtr f, const std::array<Elem, 4>& cubic) {
    if (f->p() != 2) throw Error(Errc::WrongCharacteristic, "y^2 + y = f(x) needs characteristic 2");
    Curve c;
    c.kind_ = CurveKind::Type2;
    c.field_ = std::move(f);
    c.f_ = PolyFq(*c.field_, {cubic.begin(), cubic.end()});
    if (c.f_.degree() != 3) throw Error(Errc::Singular, "f must be cubic");
    c.init_model();
    return c;
}

Curve Curve::type3(FieldPtr f, Elem a, Elem b) {
    if (f->p() != 2) throw Error(Errc::WrongCharacteristic, "y^2 + y = x + 1/(ax+b) needs characteristic 2");
    if (a == 0) throw Error(Errc::Singular, "a must be nonzero");
    if (a >= static_cast<Elem>(f->q()) || b >= static_cast<Elem>(f->q())) throw Error(Errc::Parse, "coefficient out of range");
    Curve c;
    c.kind_ = CurveKind::Type3;
    c.field_ = std::move(f);
    c.a_ = a;
    c.b_ = b;
    c.init_model();
    return c;
}

void Curve::init_model() {
    const Field& k = *field_;
    switch (kind_) {
        case CurveKind::Type1:
            h_ = PolyFq(k);
            F_ = f_;
            break;
        case CurveKind::Type2:
            h_ = PolyFq(k, {1});
            F_ = f_;
            break;
        case CurveKind::Type3:
            // (ax+b)^2 (y^2 + y) = (ax+b)^2 x + (ax+b) with Y = (ax+b) y.
            h_ = PolyFq(k, {b_, a_});
            F_ = PolyFq(k, {b_, k.add(a_, k.mul(b_, b_)), 0, k.mul(a_, a_)});
            break;
    }
    if (k.p() == 2) {
        as_root_.assign(k.q(), -1);
        for (Elem z = 0; z < static_cast<Elem>(k.q()); ++z) {
            const Elem c = k.add(k.mul(z, z), z);
            if (as_root_[c] < 0) as_root_[c] = static_cast<int>(z);
        }
    }
}

Elem Curve::y_cofactor(Elem x) const {
    if (kind_ != CurveKind::Type3) return 1;
    return h_.eval(x);
}

bool Curve::is_ramified(Elem x) const {
    switch (kind_) {
        case CurveKind::Type1: return f_.eval(x) == 0;
        case CurveKind::Type2: return false;
        case CurveKind::Type3: return h_.eval(x) == 0;
    }
    return false;
}

std::vector<Elem> Curve::model_roots(Elem x) const {
    const Field& k = *field_;
    const Elem hx = h_.eval(x), Fx = F_.eval(x);
    std::vector<Elem> out;
    if (k.p() != 2) {
        auto r = k.sqrt(Fx);
        if (!r) return out;
        out.push_back(*r);
        if (*r != 0) out.push_back(k.neg(*r));
    } else if (hx == 0) {
        out.push_back(*k.sqrt(Fx));
    } else {
        // Y = h z with z^2 + z = F / h^2.
        const Elem c = k.div(Fx, k.mul(hx, hx));
        const int z = as_root_[c];
        if (z < 0) return out;
        const Elem Y = k.mul(hx, static_cast<Elem>(z));
        out.push_back(Y);
        out.push_back(k.add(Y, hx));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Point Curve::from_model(Elem x, Elem Y) const {
    if (kind_ != CurveKind::Type3) return Point::affine(x, Y);
    const Elem c = h_.eval(x);
    if (c == 0) return Point::at_pole(x);
    return Point::affine(x, field_->div(Y, c));
}

Elem Curve::model_y(const Point& p) const {
    if (p.pole) return 0;
    return field_->mul(p.y, y_cofactor(p.x));
}

std::vector<Point> Curve::points_above(Elem x) const {
    std::vector<Point> out;
    for (Elem Y : model_roots(x)) out.push_back(from_model(x, Y));
    std::sort(out.begin(), out.end());
    return out;
}

bool Curve::on_curve(const Point& p) const {
    if (p.inf) return true;
    const Field& k = *field_;
    if (p.x >= static_cast<Elem>(k.q()) || p.y >= static_cast<Elem>(k.q())) return false;
    if (p.pole) return kind_ == CurveKind::Type3 && h_.eval(p.x) == 0;
    if (kind_ == CurveKind::Type3 && h_.eval(p.x) == 0) return false;
    const Elem Y = model_y(p);
    const Elem lhs = k.add(k.mul(Y, Y), k.mul(h_.eval(p.x), Y));
    return lhs == F_.eval(p.x);
}

void Curve::require_on_curve(const Point& p) const {
    if (!on_curve(p)) throw Error(Errc::OffCurve, "point " + format_point(p) + " is not on the curve");
}

Point Curve::neg(const Point& p) const {
    require_on_curve(p);
    if (p.inf) return p;
    const Field& k = *field_;
    const Elem Y = model_y(p);
    return from_model(p.x, k.sub(k.neg(Y), h_.eval(p.x)));
}

Point Curve::add(const Point& p, const Point& q) const {
    require_on_curve(p);
    require_on_curve(q);
    if (p.inf) return q;
    if (q.inf) return p;
    const Field& k = *field_;
    const Elem x1 = p.x, x2 = q.x;
    const Elem y1 = model_y(p), y2 = model_y(q);
    const Elem h1 = h_.coeff(1);
    Elem lambda;
    if (x1 == x2) {
        // Vertical chord, or tangent at a point of order 2.
        if (k.add(k.add(y1, y2), h_.eval(x1)) == 0) return Point::infinity();
        const Elem num = k.sub(F_.derivative().eval(x1), k.mul(h1, y1));
        const Elem den = k.add(k.add(y1, y1), h_.eval(x1));
        lambda = k.div(num, den);
    } else {
        lambda = k.div(k.sub(y2, y1), k.sub(x2, x1));
    }
    const Elem nu = k.sub(y1, k.mul(lambda, x1));
    const Elem s = k.div(k.sub(k.add(k.mul(lambda, lambda), k.mul(h1, lambda)), F_.coeff(2)), F_.coeff(3));
    const Elem x3 = k.sub(k.sub(s, x1), x2);
    const Elem y3 = k.add(k.mul(lambda, x3), nu);
    return from_model(x3, k.sub(k.neg(y3), h_.eval(x3)));
}

Point Curve::mul(long long n, const Point& p) const {
    Point base = n < 0 ? neg(p) : p;
    if (n < 0) n = -n;
    Point acc = Point::infinity();
    while (n > 0) {
        if (n & 1) acc = add(acc, base);
        base = add(base, base);
        n >>= 1;
    }
    return acc;
}

std::vector<Point> Curve::points() const {
    std::vector<Point> out;
    for (Elem x = 0; x < static_cast<Elem>(field_->q()); ++x) {
        auto above = points_above(x);
        out.insert(out.end(), above.begin(), above.end());
    }
    out.push_back(Point::infinity());
    return out;
}

std::string Curve::describe(ElemStyle s) const {
    std::ostringstream os;
    switch (kind_) {
        case CurveKind::Type1: os << "y^2 = " << f_.str("x", s); break;
        case CurveKind::Type2: os << "y^2 + y = " << f_.str("x", s); break;
        case CurveKind::Type3:
            os << "y^2 + y = x + 1/(" << PolyFq(*field_, {b_, a_}).str("x", s) << ")";
            break;
    }
    os << " over " << field_->describe();
    return os.str();
}

std::string Curve::format_point(const Point& p, ElemStyle s) const {
    if (p.inf) return "O";
    if (p.pole) return "(" + field_->format(p.x, s) + ",inf)";
    return "(" + field_->format(p.x, s) + "," + field_->format(p.y, s) + ")";
}

Point Curve::parse_point(const std::string& text) const {
    std::string t;
    for (char ch : text)
        if (ch != ' ') t += ch;
    if (t == "O" || t == "inf") return Point::infinity();
    if (t.size() < 5 || t.front() != '(' || t.back() != ')') throw Error(Errc::Parse, "bad point '" + text + "'");
    const std::string body = t.substr(1, t.size() - 2);
    // Split on the comma that is not inside brackets.
    int depth = 0;
    std::size_t cut = std::string::npos;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '[') ++depth;
        if (body[i] == ']') --depth;
        if (body[i] == ',' && depth == 0) {
            cut = i;
            break;
        }
    }
    if (cut == std::string::npos) throw Error(Errc::Parse, "bad point '" + text + "'");
    const Elem x = field_->parse(body.substr(0, cut));
    const std::string ys = body.substr(cut + 1);
    Point p = ys == "inf" ? Point::at_pole(x) : Point::affine(x, field_->parse(ys));
    require_on_curve(p);
    return p;
}

// ---------------------------------------------------------------------------

std::size_t GroupStructure::index_of(const Point& p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p);
    if (it == points.end() || *it != p) throw Error(Errc::OffCurve, "point not in group table");
    return static_cast<std::size_t>(it - points.begin());
}

Point GroupStructure::from_dlog(long long i, long long j) const {
    i = ((i % n1) + n1) % n1;
    j = ((j % n2) + n2) % n2;
    for (std::size_t t = 0; t < points.size(); ++t)
        if (dlog[t].first == i && dlog[t].second == j) return points[t];
    throw Error(Errc::Precondition, "dlog out of range");
}

namespace {

long long point_order(const Curve& c, const Point& p, long long bound) {
    Point acc = p;
    for (long long n = 1; n <= bound; ++n) {
        if (acc.inf) return n;
        acc = c.add(acc, p);
    }
    return -1;
}

// Fills dlog for the pair (g1, g2); false if the map is not a bijection.
bool fill_dlog(const Curve& c, GroupStructure& gs) {
    const std::size_t N = gs.points.size();
    std::vector<char> seen(N, 0);
    gs.dlog.assign(N, {-1, -1});
    Point row = Point::infinity();
    for (long long i = 0; i < gs.n1; ++i) {
        Point cur = row;
        for (long long j = 0; j < gs.n2; ++j) {
            const std::size_t idx = gs.index_of(cur);
            if (seen[idx]) return false;
            seen[idx] = 1;
            gs.dlog[idx] = {i, j};
            cur = c.add(cur, gs.g2);
        }
        row = c.add(row, gs.g1);
    }
    return true;
}

}  // namespace

GroupStructure group_structure(const Curve& c, std::optional<std::pair<Point, Point>> generators, long long cap) {
    GroupStructure gs;
    gs.points = c.points();
    const long long N = static_cast<long long>(gs.points.size());
    if (N > cap) throw Error(Errc::CapExceeded, "group has " + std::to_string(N) + " points, cap is " + std::to_string(cap));

    std::vector<long long> ord(N);
    long long exponent = 1;
    for (long long i = 0; i < N; ++i) {
        ord[i] = point_order(c, gs.points[i], N);
        exponent = std::max(exponent, ord[i]);
    }
    gs.n2 = exponent;
    gs.n1 = N / exponent;

    if (generators) {
        gs.g1 = generators->first;
        gs.g2 = generators->second;
        if (!c.on_curve(gs.g1) || !c.on_curve(gs.g2)) throw Error(Errc::OffCurve, "generator not on curve");
        if (gs.n1 == 1 && !gs.g1.inf) {
            // Cyclic group given a single generator in either slot.
            if (gs.g2.inf) std::swap(gs.g1, gs.g2);
        }
        if (point_order(c, gs.g1, N) != gs.n1 || point_order(c, gs.g2, N) != gs.n2 || !fill_dlog(c, gs))
            throw Error(Errc::Precondition, "supplied generators do not give Z/n1 x Z/n2");
        return gs;
    }

    for (long long i = 0; i < N; ++i)
        if (ord[i] == gs.n2) {
            gs.g2 = gs.points[i];
            break;
        }
    gs.g1 = Point::infinity();
    if (gs.n1 == 1) {
        fill_dlog(c, gs);
        return gs;
    }
    for (long long i = 0; i < N; ++i) {
        if (ord[i] != gs.n1) continue;
        gs.g1 = gs.points[i];
        if (fill_dlog(c, gs)) return gs;
    }
    throw Error(Errc::Precondition, "failed to split the group");
}

// ---------------------------------------------------------------------------

EvalSet EvalSet::from_points(const Curve& c, std::vector<Point> pts) {
    EvalSet e;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& p = pts[i];
        if (p.inf) throw Error(Errc::BadRange, "evaluation point cannot be O");
        if (p.pole) throw Error(Errc::PoleAtPoint, "evaluation point above the pole of y");
        if (!c.on_curve(p)) throw Error(Errc::OffCurve, c.format_point(p) + " is not on the curve");
        for (std::size_t j = 0; j < i; ++j)
            if (pts[j] == p) throw Error(Errc::BadRange, "duplicate evaluation point " + c.format_point(p));
        if (std::find(e.xs_.begin(), e.xs_.end(), p.x) == e.xs_.end()) e.xs_.push_back(p.x);
    }
    e.pts_ = std::move(pts);
    bool split = !e.pts_.empty();
    for (Elem x : e.xs_) {
        if (c.is_ramified(x) || c.points_above(x).size() != 2) {
            split = false;
            break;
        }
        const auto cnt = std::count_if(e.pts_.begin(), e.pts_.end(), [&](const Point& p) { return p.x == x; });
        if (cnt != 2) {
            split = false;
            break;
        }
    }
    e.split_complete_ = split;
    return e;
}

std::vector<Elem> split_xs(const Curve& c) {
    std::vector<Elem> out;
    for (Elem x = 0; x < static_cast<Elem>(c.field().q()); ++x) {
        if (c.is_ramified(x)) continue;
        const auto above = c.points_above(x);
        if (above.size() == 2 && !above[0].pole && !above[1].pole) out.push_back(x);
    }
    return out;
}

EvalSet select_eval_set(const Curve& c, int want_n, XOrder order) {
    if (want_n <= 0 || want_n % 2 != 0) throw Error(Errc::Insufficient, "split-complete sets have even positive size");
    auto xs = split_xs(c);
    if (order == XOrder::NonzeroFirst && !xs.empty() && xs.front() == 0) std::rotate(xs.begin(), xs.begin() + 1, xs.end());
    if (static_cast<int>(xs.size()) * 2 < want_n)
        throw Error(Errc::Insufficient, "curve has only " + std::to_string(2 * xs.size()) + " points on split x-values");
    std::vector<Point> pts;
    for (int i = 0; i < want_n / 2; ++i) {
        auto above = c.points_above(xs[i]);
        pts.insert(pts.end(), above.begin(), above.end());
    }
    return EvalSet::from_points(c, std::move(pts));
}

// ---------------------------------------------------------------------------

namespace {

struct SideEntry {
    std::uint64_t mask;
};

std::uint64_t point_code(const Field& f, const Point& p) {
    if (p.inf) return 0;
    const std::uint64_t q = static_cast<std::uint64_t>(f.q());
    if (p.pole) return 1 + q * q + p.x;
    return 1 + static_cast<std::uint64_t>(p.x) * q + p.y;
}

// Enumerates subsets of pts[lo, hi) with size <= kmax, calling fn(mask, size, sum).
template <class Fn>
void enumerate_side(const Curve& c, const std::vector<Point>& pts, int lo, int hi, int kmax, Fn&& fn) {
    struct Frame {
        int next;
        int size;
        std::uint64_t mask;
        Point sum;
    };
    std::vector<Frame> stack{{lo, 0, 0, Point::infinity()}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        fn(fr.mask, fr.size, fr.sum);
        if (fr.size == kmax) continue;
        for (int i = hi - 1; i >= fr.next; --i)
            stack.push_back({i + 1, fr.size + 1, fr.mask | (std::uint64_t{1} << i), c.add(fr.sum, pts[i])});
    }
}

}  // namespace

SubsetSums subset_sum_count(const Curve& c, int k, const Point& b, const EvalSet& D, unsigned long long witness_cap) {
    const int n = static_cast<int>(D.size());
    if (k < 0 || k > n) throw Error(Errc::BadRange, "subset size out of range");
    if (n > 64) throw Error(Errc::CapExceeded, "subset enumeration limited to 64 points");
    const Field& f = c.field();
    const auto& pts = D.points();
    const int half = n / 2;

    // Meet in the middle: left sums bucketed by (size, sum), joined with right subsets.
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> left;
    const std::uint64_t stride = static_cast<std::uint64_t>(k + 1);
    std::size_t stored = 0;
    const std::size_t store_cap = 20'000'000;
    enumerate_side(c, pts, 0, half, k, [&](std::uint64_t mask, int size, const Point& sum) {
        if (++stored > store_cap) throw Error(Errc::CapExceeded, "subset enumeration exceeds memory cap");
        left[point_code(f, sum) * stride + size].push_back(mask);
    });

    SubsetSums out;
    std::vector<std::uint64_t> masks;
    bool keep = true;
    enumerate_side(c, pts, half, n, k, [&](std::uint64_t mask, int size, const Point& sum) {
        const Point need = c.add(b, c.neg(sum));
        auto it = left.find(point_code(f, need) * stride + (k - size));
        if (it == left.end()) return;
        out.count += it->second.size();
        if (keep) {
            if (out.count > witness_cap) {
                keep = false;
                masks.clear();
                return;
            }
            for (auto lm : it->second) masks.push_back(lm | mask);
        }
    });
    out.witnesses_complete = keep;
    if (keep) {
        for (auto m : masks) {
            std::vector<int> idx;
            for (int i = 0; i < n; ++i)
                if (m >> i & 1) idx.push_back(i);
            out.witnesses.push_back(std::move(idx));
        }
        std::sort(out.witnesses.begin(), out.witnesses.end());
    }
    return out;
}

}  // namespace tecc
