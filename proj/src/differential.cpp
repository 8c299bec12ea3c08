#include "tecc/differential.hpp"

namespace tecc {

ResidueVector residues(const Curve& c, const EvalSet& D) {
    const Field& k = c.field();
    ResidueVector r;
    r.kind = c.kind();
    r.xs = D.xs();
    r.gamma.resize(D.size());
    for (std::size_t i = 0; i < D.size(); ++i) {
        const Elem a = D[i].x;
        Elem prod = 1;
        for (Elem b : r.xs) {
            if (b == a) continue;
            prod = k.mul(prod, k.sub(a, b));
        }
        if (prod == 0) throw Error(Errc::DuplicateX, "repeated x-value in the uniformizer");
        r.gamma[i] = k.inv(prod);
    }
    return r;
}

CanonicalInfo canonical_info(const Curve& c) {
    CanonicalInfo ci;
    ci.kind = c.kind();
    switch (c.kind()) {
        case CurveKind::Type1:
            ci.dx_divisor = "(y)";
            ci.dual_divisor = "(y)+(n-k)O";
            ci.denom = Denom::Y;
            break;
        case CurveKind::Type2:
            ci.dx_divisor = "0";
            ci.dual_divisor = "(n-k)O";
            ci.denom = Denom::One;
            break;
        case CurveKind::Type3:
            ci.dx_divisor = "(ax+b)";
            ci.dual_divisor = "(ax+b)+(n-k)O";
            ci.denom = Denom::H;
            break;
    }
    return ci;
}

std::vector<Elem> dual_weights(const Curve& c, const EvalSet& D, const ResidueVector& r) {
    const Field& k = c.field();
    std::vector<Elem> w(D.size());
    for (std::size_t i = 0; i < D.size(); ++i) {
        Elem d = 1;
        if (c.kind() == CurveKind::Type1) d = c.model_y(D[i]);
        if (c.kind() == CurveKind::Type3) d = c.model_h().eval(D[i].x);
        if (d == 0) throw Error(Errc::PoleAtPoint, "dual weight undefined at " + c.format_point(D[i]));
        w[i] = k.div(r.gamma[i], d);
    }
    return w;
}

Elem dual_functional(const Curve& c, const EvalSet& D, const ResidueVector& r, const CurveFunc& phi) {
    const Field& k = c.field();
    const auto w = dual_weights(c, D, r);
    Elem s = 0;
    for (std::size_t i = 0; i < D.size(); ++i) s = k.add(s, k.mul(w[i], phi.eval(c, D[i])));
    return s;
}

}  // namespace tecc
