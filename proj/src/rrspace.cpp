#include "tecc/rrspace.hpp"

#include <algorithm>
#include <set>

namespace tecc {

CurveFunc CurveFunc::operator+(const CurveFunc& o) const {
    if (den_ != o.den_ && !is_zero() && !o.is_zero()) throw Error(Errc::Precondition, "adding functions with different denominators");
    const Denom d = is_zero() ? o.den_ : den_;
    return {u_ + o.u_, v_ + o.v_, d};
}

CurveFunc CurveFunc::operator-(const CurveFunc& o) const { return *this + o.scaled(o.u_.field().neg(1)); }

int CurveFunc::pole_order() const {
    if (is_zero()) return kZeroPole;
    int p = -1;
    if (!u_.is_zero()) p = 2 * u_.degree();
    if (!v_.is_zero()) p = std::max(p, 2 * v_.degree() + 3);
    switch (den_) {
        case Denom::One: return p;
        case Denom::Y: return p - 3;
        case Denom::H: return p - 2;
    }
    return p;
}

Elem CurveFunc::eval(const Curve& c, const Point& p) const {
    const Field& k = c.field();
    if (p.inf) throw Error(Errc::PoleAtPoint, "cannot evaluate at O");
    const Elem Y = c.model_y(p);
    Elem val = k.add(u_.eval(p.x), k.mul(v_.eval(p.x), Y));
    Elem d = 1;
    if (den_ == Denom::Y) d = Y;
    if (den_ == Denom::H) d = c.model_h().eval(p.x);
    if (d == 0) throw Error(Errc::PoleAtPoint, "denominator vanishes at " + c.format_point(p));
    return d == 1 ? val : k.div(val, d);
}

namespace {

std::string coef_text(const Field& k, Elem c, ElemStyle s, bool bare) {
    std::string t = k.format(c, s);
    if (!bare) return t;
    if (t.find_first_of("+-") != std::string::npos) return "(" + t + ")";
    return t;
}

std::string xpow(int i) {
    if (i == 0) return "";
    if (i == 1) return "x";
    return "x^" + std::to_string(i);
}

std::string join(const std::string& coef, const std::string& mono) {
    if (mono.empty()) return coef.empty() ? "1" : coef;
    if (coef.empty()) return mono;
    return coef + "*" + mono;
}

}  // namespace

std::string CurveFunc::str(const Curve& c, ElemStyle s) const {
    if (is_zero()) return "0";
    const Field& k = c.field();
    // Terms keyed by pole order of the numerator monomial for a stable ascending display.
    std::vector<std::pair<int, std::string>> terms;
    std::string hfac;
    if (c.kind() == CurveKind::Type3) hfac = "(" + c.model_h().str("x", s) + ")";
    for (int i = 0; i <= u_.degree(); ++i) {
        const Elem a = u_.coeff(i);
        if (a == 0) continue;
        std::string t = join(a == 1 ? "" : coef_text(k, a, s, i > 0 || den_ != Denom::One), xpow(i));
        if (den_ == Denom::Y) t += "/y";
        if (den_ == Denom::H) t += "/" + hfac;
        terms.emplace_back(2 * i, t);
    }
    for (int j = 0; j <= v_.degree(); ++j) {
        const Elem a = v_.coeff(j);
        if (a == 0) continue;
        std::string mono = xpow(j);
        // Y / Y = 1 and Y / (a x + b) = y.
        if (den_ == Denom::One) {
            const std::string yv = c.kind() == CurveKind::Type3 ? hfac + "*y" : "y";
            mono = mono.empty() ? yv : mono + "*" + yv;
        } else if (den_ == Denom::H) {
            mono = mono.empty() ? "y" : mono + "*y";
        }
        std::string co = a == 1 ? "" : coef_text(k, a, s, true);
        terms.emplace_back(2 * j + 3, join(co, mono));
    }
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += " + ";
        out += t.second;
    }
    return out;
}

CurveFunc mul(const Curve& c, const CurveFunc& a, const CurveFunc& b) {
    Denom d;
    if (a.den() == Denom::One)
        d = b.den();
    else if (b.den() == Denom::One)
        d = a.den();
    else
        throw Error(Errc::Precondition, "product of two functions with formal denominators");
    const PolyFq& h = c.model_h();
    const PolyFq& F = c.model_F();
    const PolyFq vv = a.v() * b.v();
    PolyFq u = a.u() * b.u() + vv * F;
    PolyFq v = a.u() * b.v() + a.v() * b.u() - vv * h;
    return {u, v, d};
}

int max_single_ell(int k) { return k % 2 ? (k - 3) / 2 : k / 2; }

bool is_extreme_ell(int k, int ell) { return ell == max_single_ell(k); }

FuncBasis basis_LkO(const Curve& c, int k) {
    if (k <= 0) throw Error(Errc::BadK, "k must be positive");
    const Field& f = c.field();
    FuncBasis fb;
    fb.tag = std::to_string(k) + "O";
    for (int i = 0; 2 * i <= k; ++i) fb.funcs.push_back(CurveFunc::x_pow(f, i));
    for (int j = 0; 2 * j + 3 <= k; ++j) fb.funcs.push_back(CurveFunc::xY_pow(f, j));
    return fb;
}

FuncBasis basis_dual_space(const Curve& c, int n, int k) {
    if (k < 1 || k >= n) throw Error(Errc::BadRange, "need 1 <= k < n");
    const Field& f = c.field();
    FuncBasis fb = basis_LkO(c, n - k);
    switch (c.kind()) {
        case CurveKind::Type1:
            for (auto& g : fb.funcs) {
                // x^j Y / Y simplifies to x^j.
                if (!g.v().is_zero())
                    g = CurveFunc::x_pow(f, g.v().degree());
                else
                    g = g.with_den(Denom::Y);
            }
            fb.tag = "(y)+" + std::to_string(n - k) + "O";
            break;
        case CurveKind::Type2:
            fb.tag = std::to_string(n - k) + "O";
            break;
        case CurveKind::Type3:
            for (auto& g : fb.funcs) g = g.with_den(Denom::H);
            fb.tag = "(ax+b)+" + std::to_string(n - k) + "O";
            break;
    }
    return fb;
}

FuncBasis defining_set_single(const Curve& c, int k, int ell, Elem eta) {
    if (k < 3) throw Error(Errc::BadTwist, "twists need k >= 3");
    if (ell < 0 || ell > max_single_ell(k))
        throw Error(Errc::BadTwist, "hook index " + std::to_string(ell) + " outside 0.." + std::to_string(max_single_ell(k)));
    if (eta == 0) throw Error(Errc::BadTwist, "twist coefficient must be nonzero");
    return defining_set_general(c, k, TwistSpec::single(ell, eta));
}

FuncBasis defining_set_general(const Curve& c, int k, const TwistSpec& tw, int n, std::vector<std::string>* warnings) {
    if (tw.empty()) return basis_LkO(c, k);
    if (k < 3) throw Error(Errc::BadTwist, "twists need k >= 3");
    if (tw.t.size() != tw.h.size() || tw.t.size() != tw.eta.size()) throw Error(Errc::BadTwist, "t, h and eta lengths differ");
    const Field& f = c.field();
    const int tmax = n < 0 ? k - 1 : std::min(k - 1, n - k - 1);
    std::set<int> ts, hx, hy;
    FuncBasis fb = basis_LkO(c, k);
    const int nx = k / 2 + 1;
    for (std::size_t s = 0; s < tw.t.size(); ++s) {
        const int t = tw.t[s], h = tw.h[s];
        const Elem eta = tw.eta[s];
        if (t < 1 || t > tmax) throw Error(Errc::BadTwist, "t=" + std::to_string(t) + " outside 1.." + std::to_string(tmax));
        if (!ts.insert(t).second) throw Error(Errc::BadTwist, "repeated t=" + std::to_string(t));
        if (eta == 0) throw Error(Errc::BadTwist, "twist coefficient must be nonzero");
        if ((k + t) % 2 == 1) {
            // x^h + eta x^{(k-3+t)/2} Y
            if (h < 0 || h > k / 2) throw Error(Errc::BadTwist, "h=" + std::to_string(h) + " outside 0.." + std::to_string(k / 2));
            if (!hx.insert(h).second) throw Error(Errc::BadTwist, "repeated x-hook h=" + std::to_string(h));
            fb.funcs[h] = CurveFunc::x_pow(f, h) + CurveFunc::xY_pow(f, (k - 3 + t) / 2, eta);
        } else {
            // x^h Y + eta x^{(k+t)/2}
            if (h < 0 || h > (k - 3) / 2)
                throw Error(Errc::BadTwist, "h=" + std::to_string(h) + " outside 0.." + std::to_string((k - 3) / 2));
            if (!hy.insert(h).second) throw Error(Errc::BadTwist, "repeated y-hook h=" + std::to_string(h));
            fb.funcs[nx + h] = CurveFunc::xY_pow(f, h) + CurveFunc::x_pow(f, (k + t) / 2, eta);
        }
    }
    if (warnings)
        for (int h : hx)
            if (hy.count(h)) warnings->push_back("h=" + std::to_string(h) + " used by hooks of both parities");
    fb.tag = "S(" + std::to_string(k) + ";twisted)";
    return fb;
}

FuncBasis defining_set(const Curve& c, int k, const TwistSpec& tw, int n, std::vector<std::string>* warnings) {
    if (tw.empty()) return basis_LkO(c, k);
    if (tw.is_single()) {
        if (n >= 0 && n - k - 1 < 1) throw Error(Errc::BadTwist, "a twist needs n - k >= 2");
        return defining_set_single(c, k, tw.ell(), tw.eta0());
    }
    return defining_set_general(c, k, tw, n, warnings);
}

std::vector<Elem> evaluate(const Curve& c, const CurveFunc& f, const EvalSet& D) {
    std::vector<Elem> out(D.size());
    for (std::size_t i = 0; i < D.size(); ++i) out[i] = f.eval(c, D[i]);
    return out;
}

Matrix evaluate(const Curve& c, const FuncBasis& fb, const EvalSet& D) {
    Matrix m(c.field(), 0, static_cast<int>(D.size()));
    for (const auto& g : fb.funcs) m.append_row(evaluate(c, g, D));
    return m;
}

}  // namespace tecc
