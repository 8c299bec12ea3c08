#include "tecc/teccbuild.hpp"

#include <algorithm>
#include <set>

namespace tecc {

namespace {

std::vector<Elem> inverses(const Field& k, const std::vector<Elem>& v) {
    std::vector<Elem> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = k.inv(v[i]);
    return out;
}

void require_split_even(const EvalSet& D, const char* what) {
    if (!D.split_complete()) throw Error(Errc::Precondition, std::string(what) + " needs a split-complete evaluation set");
}

}  // namespace

CodeHandle CodeHandle::make(Curve c, EvalSet D, int k, TwistSpec tw, std::optional<std::vector<Elem>> v) {
    CodeHandle h(std::move(c));
    const int n = static_cast<int>(D.size());
    if (k < 1 || k >= n) throw Error(Errc::BadShape, "need 1 <= k < n (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
    const Field& F = h.curve_.field();
    if (v) {
        if (static_cast<int>(v->size()) != n) throw Error(Errc::BadShape, "v has the wrong length");
        for (Elem e : *v)
            if (e == 0 || e >= static_cast<Elem>(F.q())) throw Error(Errc::BadRange, "v entries must be nonzero field elements");
    }
    h.D_ = std::move(D);
    h.k_ = k;
    h.tw_ = std::move(tw);
    h.v_ = std::move(v);
    h.basis_ = tecc::defining_set(h.curve_, k, h.tw_, n, &h.warnings_);
    h.gen_ = evaluate(h.curve_, h.basis_, h.D_);
    if (h.v_) h.gen_ = h.gen_.scale_columns(*h.v_);
    if (rank(h.gen_) != k) throw Error(Errc::BadShape, "evaluation map is not injective on this defining set");
    return h;
}

std::vector<Elem> CodeHandle::v_or_ones() const { return v_ ? *v_ : std::vector<Elem>(D_.size(), 1); }

const ResidueVector& CodeHandle::residues() const {
    if (!res_) res_ = tecc::residues(curve_, D_);
    return *res_;
}

CodeHandle CodeHandle::with_eta(Elem eta) const {
    TwistSpec tw = tw_;
    if (tw.empty()) throw Error(Errc::BadTwist, "handle has no twist");
    tw.eta[0] = eta;
    return make(curve_, D_, k_, tw, v_);
}

CodeHandle CodeHandle::with_v(std::optional<std::vector<Elem>> v) const { return make(curve_, D_, k_, tw_, std::move(v)); }

Matrix ecc_generator(const Curve& c, const EvalSet& D, int k, const std::optional<std::vector<Elem>>& v) {
    Matrix g = evaluate(c, basis_LkO(c, k), D);
    return v ? g.scale_columns(*v) : g;
}

Matrix ecc_parity_check(const Curve& c, const EvalSet& D, int k) {
    require_split_even(D, "the residue parity check");
    const ResidueVector r = residues(c, D);
    return evaluate(c, basis_dual_space(c, static_cast<int>(D.size()), k), D).scale_columns(r.gamma);
}

Matrix tecc_generator(const CodeHandle& h) { return h.generator(); }

Matrix parity_check_nullspace(const CodeHandle& h) { return nullspace(h.generator()); }

namespace {

// Rows of the extra function (scaled by the dual weights), then the residue block for k+1, all divided by v.
Matrix assemble(const CodeHandle& h, const CurveFunc& f) {
    const Curve& c = h.curve();
    const Field& F = h.field();
    const auto w = dual_weights(c, h.D(), h.residues());
    std::vector<Elem> row = evaluate(c, f, h.D());
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = F.mul(row[i], w[i]);
    Matrix H(F, 0, h.n());
    H.append_row(row);
    if (h.k() + 1 < h.n()) H = H.stacked(ecc_parity_check(c, h.D(), h.k() + 1));
    return H.scale_columns(inverses(F, h.v_or_ones()));
}

// Functional applied to the pointwise product of two functions.
Elem pair_functional(const Curve& c, const EvalSet& D, const std::vector<Elem>& w, const CurveFunc& a, const CurveFunc& b) {
    const Field& F = c.field();
    Elem s = 0;
    for (std::size_t i = 0; i < D.size(); ++i) s = F.add(s, F.mul(w[i], F.mul(a.eval(c, D[i]), b.eval(c, D[i]))));
    return s;
}

void require_single_even(const CodeHandle& h, const char* what) {
    if (!h.single_twist()) throw Error(Errc::Precondition, std::string(what) + " needs a single twist");
    if (h.n() % 2) throw Error(Errc::Precondition, std::string(what) + " needs even n");
    require_split_even(h.D(), what);
}

}  // namespace

RecursiveParity parity_check_recursive(const CodeHandle& h) {
    const Curve& c = h.curve();
    const Field& F = c.field();
    RecursiveParity out;
    if (!h.twisted()) {
        out.f = CurveFunc::zero(F);
        out.H = ecc_parity_check(c, h.D(), h.k()).scale_columns(inverses(F, h.v_or_ones()));
        return out;
    }
    require_single_even(h, "the recursive parity check");
    const int n = h.n(), k = h.k(), ell = h.twist().ell();
    const bool odd = k % 2 == 1;
    const int top = odd ? n - 2 * ell - 2 : n - 2 * ell + 1;
    const auto w = dual_weights(c, h.D(), h.residues());

    // Terms by descending pole order, from top down to n-k.
    int nx = 0, ny = 0;
    for (int p = top; p >= n - k; --p) {
        RecursionStep st;
        if (p % 2 == 0) {
            st.term = CurveFunc::x_pow(F, p / 2);
            st.name = std::string(odd ? "a" : "e") + "_" + std::to_string(nx++);
        } else {
            st.term = CurveFunc::xY_pow(F, (p - 3) / 2);
            st.name = std::string(odd ? "b" : "h") + "_" + std::to_string(ny++);
        }
        out.trace.push_back(st);
    }
    const FuncBasis& S = h.defining_set();
    out.trace[0].value = 1;
    for (std::size_t t = 1; t < out.trace.size(); ++t) {
        const int want = n + 1 - (top - static_cast<int>(t));
        const CurveFunc* partner = nullptr;
        for (const auto& g : S.funcs)
            if (g.pole_order() == want) partner = &g;
        if (!partner) {
            // Only the Weierstrass gap at pole 1; the term is x^s, which D reduces to lower terms.
            out.trace[t].value = 0;
            continue;
        }
        const Elem piv = pair_functional(c, h.D(), w, out.trace[t].term, *partner);
        if (piv == 0)
            throw Error(Errc::DegenerateRecursion, "vanishing denominator at " + out.trace[t].name);
        Elem acc = 0;
        for (std::size_t u = 0; u < t; ++u) {
            if (out.trace[u].value == 0) continue;
            acc = F.add(acc, F.mul(out.trace[u].value, pair_functional(c, h.D(), w, out.trace[u].term, *partner)));
        }
        out.trace[t].pivot = piv;
        out.trace[t].value = F.neg(F.div(acc, piv));
    }
    out.f = CurveFunc::zero(F);
    for (const auto& st : out.trace) out.f = out.f + st.term.scaled(st.value);
    out.H = assemble(h, out.f);
    return out;
}

ClosedFormParity parity_check_closed_form(const CodeHandle& h) {
    require_single_even(h, "the closed-form parity check");
    const int k = h.k(), s = h.n() / 2;
    if (!is_extreme_ell(k, h.twist().ell())) throw Error(Errc::BadShape, "closed form only covers the extreme hook index");
    const Curve& c = h.curve();
    const Field& F = c.field();
    const Elem eta = h.twist().eta0();
    const auto& gam = h.residues().gamma;
    const CurveKind kind = c.kind();
    auto sum = [&](auto term) {
        Elem acc = 0;
        for (std::size_t i = 0; i < h.D().size(); ++i) {
            const Point& P = h.D()[i];
            const Elem lin = kind == CurveKind::Type3 ? c.model_h().eval(P.x) : 1;
            acc = F.add(acc, F.mul(gam[i], term(P.x, P.y, lin)));
        }
        return acc;
    };
    auto pw = [&](Elem a, int e) { return F.pow(a, e); };
    ClosedFormParity out;
    // P is shared by both parities; beta is the y-coordinate of the point.
    out.P = sum([&](Elem a, Elem b, Elem) { return kind == CurveKind::Type1 ? pw(a, s - 1) : F.mul(pw(a, s - 1), b); });
    if (k % 2) {
        out.SQ = sum([&](Elem a, Elem b, Elem lin) {
            switch (kind) {
                case CurveKind::Type1: return F.div(pw(a, s + 1), b);
                case CurveKind::Type2: return pw(a, s + 1);
                case CurveKind::Type3: return F.div(pw(a, s + 1), lin);
            }
            return Elem(0);
        });
        out.f = CurveFunc::x_pow(F, s - (k - 1) / 2, F.mul(eta, out.P)) +
                CurveFunc::xY_pow(F, s - (k + 3) / 2, F.neg(F.add(out.P, F.mul(eta, out.SQ))));
    } else {
        out.SQ = sum([&](Elem a, Elem b, Elem lin) {
            switch (kind) {
                case CurveKind::Type1: return F.mul(pw(a, s - 2), b);
                case CurveKind::Type2: return F.mul(pw(a, s - 2), F.mul(b, b));
                case CurveKind::Type3: return F.mul(lin, F.mul(pw(a, s - 2), b));
            }
            return Elem(0);
        });
        out.f = CurveFunc::xY_pow(F, s - k / 2 - 1, F.mul(eta, out.P)) +
                CurveFunc::x_pow(F, s - k / 2, F.neg(F.add(out.P, F.mul(eta, out.SQ))));
    }
    out.H = assemble(h, out.f);
    return out;
}

const char* eta_status_name(EtaStatus s) {
    switch (s) {
        case EtaStatus::Value: return "eta";
        case EtaStatus::NoEta: return "no-eta";
        case EtaStatus::AllEta: return "all-eta";
        case EtaStatus::NoFunction: return "no-function";
    }
    return "?";
}

namespace {

CurveFunc normalized(const CurveFunc& f) {
    const Field& F = f.u().field();
    Elem lead = f.v().is_zero() ? f.u().lead() : f.v().lead();
    return f.scaled(F.inv(lead));
}

CurveFunc combine(const Field& F, const FuncBasis& fb, const std::vector<Elem>& coef) {
    CurveFunc f = CurveFunc::zero(F);
    for (std::size_t i = 0; i < fb.size(); ++i)
        if (coef[i]) f = f + fb[i].scaled(coef[i]);
    return f;
}

}  // namespace

std::optional<CurveFunc> vanishing_function(const Curve& c, const std::vector<Point>& pts) {
    const Field& F = c.field();
    const FuncBasis fb = basis_LkO(c, static_cast<int>(pts.size()));
    Matrix M(F, 0, static_cast<int>(pts.size()));
    for (const auto& g : fb.funcs) {
        std::vector<Elem> r;
        for (const auto& p : pts) r.push_back(g.eval(c, p));
        M.append_row(r);
    }
    const Matrix ns = nullspace(M.transposed());
    if (ns.rows() == 0) return std::nullopt;
    return normalized(combine(F, fb, ns.row(0)));
}

EtaWitness eta_of_points(const Curve& c, int k, int ell, const std::vector<Point>& pts) {
    const Field& F = c.field();
    EtaWitness w;
    w.points = pts;
    if (static_cast<int>(pts.size()) != k + 1) throw Error(Errc::BadShape, "need exactly k+1 points");
    Point sum = Point::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].inf) throw Error(Errc::BadRange, "points must differ from O");
        for (std::size_t j = 0; j < i; ++j)
            if (pts[i] == pts[j]) throw Error(Errc::BadRange, "points must be distinct");
        sum = c.add(sum, pts[i]);
    }
    if (!sum.inf) return w;
    const auto f = vanishing_function(c, pts);
    if (!f) return w;
    w.f = f;
    Elem num, den;
    if (k % 2) {
        num = f->coeff_x((k + 1) / 2);
        den = f->coeff_xY(ell);
    } else {
        num = f->coeff_xY((k - 2) / 2);
        den = f->coeff_x(ell);
    }
    if (num == 0 && den == 0)
        w.status = EtaStatus::AllEta;
    else if (den == 0)
        w.status = EtaStatus::NoEta;
    else {
        w.status = EtaStatus::Value;
        w.eta = F.div(num, den);
    }
    return w;
}

const char* distance_case_name(DistanceCase c) {
    switch (c) {
        case DistanceCase::NminusKminus1: return "n-k-1";
        case DistanceCase::NminusK: return "n-k";
        case DistanceCase::NminusKplus1: return "n-k+1";
    }
    return "?";
}

namespace {

bool next_combination(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

}  // namespace

DistanceClass min_distance_class(const CodeHandle& h, unsigned long long witness_cap, long long budget) {
    if (h.twisted() && !h.single_twist()) throw Error(Errc::Precondition, "distance classification covers single twists only");
    const Curve& c = h.curve();
    const Field& F = c.field();
    const EvalSet& D = h.D();
    const int n = h.n(), k = h.k();
    DistanceClass out;
    bool found = false;

    if (h.twisted()) {
        const Elem eta = h.twist().eta0();
        const SubsetSums ss = subset_sum_count(c, k + 1, Point::infinity(), D, witness_cap);
        if (!ss.witnesses_complete) throw Error(Errc::CapExceeded, "too many (k+1)-subsets summing to O for the witness cap");
        std::set<Elem> etas;
        for (const auto& wit : ss.witnesses) {
            std::vector<Point> pts;
            for (int i : wit) pts.push_back(D[i]);
            const EtaWitness ew = eta_of_points(c, k, h.twist().ell(), pts);
            const bool hit = ew.status == EtaStatus::AllEta || (ew.status == EtaStatus::Value && ew.eta == eta);
            if (ew.status == EtaStatus::AllEta) out.all_eta = true;
            if (ew.status == EtaStatus::Value) etas.insert(ew.eta);
            if (hit && !found) {
                found = true;
                out.d = n - k - 1;
                out.which = DistanceCase::NminusKminus1;
                out.detail = ew.status == EtaStatus::AllEta ? "all-eta witness" : "eta witness";
                out.witness = wit;
                out.witness_function = ew.f;
            }
        }
        out.eta_values.assign(etas.begin(), etas.end());
    }
    out.n_k_O = subset_sum_count(c, k, Point::infinity(), D, 0).count;

    if (!found) {
        const Matrix& G = h.generator();
        std::vector<int> K(k);
        for (int i = 0; i < k; ++i) K[i] = i;
        do {
            const Matrix GK = G.select_columns(K);
            if (rank(GK) == k) continue;
            found = true;
            out.d = n - k;
            out.which = DistanceCase::NminusK;
            out.witness = K;
            const Matrix msg = nullspace(GK.transposed());
            out.witness_function = normalized(combine(F, h.defining_set(), msg.row(0)));
            Point s = Point::infinity();
            for (int i : K) s = c.add(s, D[i]);
            const Point Q = c.neg(s);
            bool inK = false, inD = false;
            for (int i : K) inK |= D[i] == Q;
            for (const auto& p : D.points()) inD |= p == Q;
            if (Q.inf)
                out.detail = "k-subset summing to O";
            else if (inK)
                out.detail = "double zero at " + c.format_point(Q, ElemStyle::Poly);
            else if (inD)
                out.detail = "extra zero in D at " + c.format_point(Q, ElemStyle::Poly);
            else
                out.detail = "extra zero outside D at " + c.format_point(Q, ElemStyle::Poly);
            break;
        } while (next_combination(K, n));
    }
    if (!found) {
        out.d = n - k + 1;
        out.which = DistanceCase::NminusKplus1;
        out.detail = "MDS";
    }

    const bool eta_hit = h.twisted() && (out.all_eta || std::binary_search(out.eta_values.begin(), out.eta_values.end(), h.twist().eta0()));
    out.literal_prediction = eta_hit ? n - k - 1 : out.n_k_O > 0 ? n - k : n - k + 1;
    out.literal_agrees = out.literal_prediction == out.d;

    long double classes = 0, p = 1;
    for (int i = 0; i < k; ++i) classes += p, p *= F.q();
    if (classes <= budget) out.exhaustive_d = min_distance(h.generator(), budget);
    return out;
}

SelfDualCertificate self_dual_check(const CodeHandle& h) {
    if (h.n() != 2 * h.k()) throw Error(Errc::BadShape, "self-duality needs n = 2k");
    if (!h.single_twist() || !is_extreme_ell(h.k(), h.twist().ell()))
        throw Error(Errc::BadShape, "self-duality criterion covers single twists at the extreme hook index");
    require_split_even(h.D(), "the self-duality criterion");
    const Curve& c = h.curve();
    const Field& F = c.field();
    const int k = h.k();
    const Elem eta = h.twist().eta0();
    const auto& gam = h.residues().gamma;
    SelfDualCertificate cert;
    cert.kind = c.kind();
    cert.k_odd = k % 2 == 1;

    auto sum = [&](auto term) {
        Elem acc = 0;
        for (std::size_t i = 0; i < h.D().size(); ++i) {
            const Point& P = h.D()[i];
            const Elem lin = c.kind() == CurveKind::Type3 ? c.model_h().eval(P.x) : 1;
            acc = F.add(acc, F.mul(gam[i], term(P.x, P.y, lin)));
        }
        return acc;
    };
    auto pw = [&](Elem a, int e) { return F.pow(a, e); };
    const Elem two = F.from_int(2);
    switch (c.kind()) {
        case CurveKind::Type1: {
            const Elem base = F.mul(two, sum([&](Elem a, Elem, Elem) { return pw(a, k - 1); }));
            const Elem coef = cert.k_odd ? sum([&](Elem a, Elem b, Elem) { return F.div(pw(a, k + 1), b); })
                                         : sum([&](Elem a, Elem b, Elem) { return F.mul(b, pw(a, k - 2)); });
            cert.lhs = F.add(F.mul(eta, coef), base);
            break;
        }
        case CurveKind::Type2:
            cert.lhs = cert.k_odd ? sum([&](Elem a, Elem, Elem) { return pw(a, k + 1); })
                                  : sum([&](Elem a, Elem b, Elem) { return F.mul(pw(a, k - 2), F.mul(b, b)); });
            break;
        case CurveKind::Type3:
            cert.lhs = cert.k_odd ? sum([&](Elem a, Elem, Elem lin) { return F.div(pw(a, k + 1), lin); })
                                  : sum([&](Elem a, Elem b, Elem lin) { return F.mul(lin, F.mul(pw(a, k - 2), b)); });
            break;
    }
    cert.eta_condition = cert.lhs == 0;

    const auto w = dual_weights(c, h.D(), h.residues());
    const auto v = h.v_or_ones();
    const Elem lambda = F.div(F.mul(v[0], v[0]), w[0]);
    bool ok = true;
    for (std::size_t i = 0; i < v.size(); ++i) ok &= F.mul(v[i], v[i]) == F.mul(lambda, w[i]);
    cert.v_condition = ok;
    if (ok) cert.lambda = lambda;
    cert.verdict = cert.eta_condition && cert.v_condition;
    cert.span_verdict = is_self_dual(h.generator());
    return cert;
}

std::vector<std::vector<Elem>> candidate_multipliers(const Curve& c, const EvalSet& D) {
    const int n = static_cast<int>(D.size());
    const Field& F = c.field();
    std::vector<std::vector<Elem>> vs{std::vector<Elem>(n, 1)};
    if (D.split_complete()) {
        const auto w = dual_weights(c, D, residues(c, D));
        std::vector<Elem> lambdas{1};
        for (Elem e = 2; e < static_cast<Elem>(F.q()); ++e)
            if (!F.is_square(e)) {
                lambdas.push_back(e);
                break;
            }
        for (Elem lam : lambdas) {
            std::vector<Elem> v(n);
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                auto r = F.sqrt(F.mul(lam, w[i]));
                if (!r) ok = false;
                else v[i] = *r;
            }
            if (ok && std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        }
    }
    return vs;
}

std::vector<SearchHit> search_codes(const Curve& c, const EvalSet& D, int k, const SearchFilter& filter, long long budget) {
    const int n = static_cast<int>(D.size());
    if (k < 3 || k >= n - 1) throw Error(Errc::BadShape, "search needs 3 <= k <= n-2");
    const Field& F = c.field();
    long double classes = 0, p = 1;
    for (int i = 0; i < k; ++i) classes += p, p *= F.q();
    if (classes > budget) throw Error(Errc::BudgetExceeded, "q^k exceeds the enumeration budget");

    const auto vs = candidate_multipliers(c, D);
    std::vector<SearchHit> hits;
    for (int ell = 0; ell <= max_single_ell(k); ++ell)
        for (Elem eta = 1; eta < static_cast<Elem>(F.q()); ++eta)
            for (const auto& v : vs) {
                const bool ones = std::all_of(v.begin(), v.end(), [](Elem e) { return e == 1; });
                const CodeHandle h =
                    CodeHandle::make(c, D, k, TwistSpec::single(ell, eta), ones ? std::nullopt : std::optional(v));
                const CodeSummary s = classify(h.generator(), budget);
                if (filter.mds && s.cls != CodeClass::MDS) continue;
                if (filter.amds && !s.is_amds()) continue;
                if (filter.self_dual && !s.self_dual) continue;
                hits.push_back({ell, eta, v, s});
            }
    return hits;
}

SchurReport schur_audit(const CodeHandle& h) {
    if (h.twisted() && !h.single_twist()) throw Error(Errc::Precondition, "Schur audit covers single twists");
    SchurReport r;
    r.n = h.n();
    r.k = h.k();
    r.primal_in_range = 4 <= r.k && 2 * r.k <= r.n - 4;
    r.dual_in_range = 4 <= r.n - r.k && 2 * (r.n - r.k) <= r.n - 4;
    if (!r.primal_in_range && !r.dual_in_range) throw Error(Errc::BadShape, "neither the code nor its dual is in the Schur range");
    const Matrix& G = h.generator();
    const Matrix H = dual(G);
    r.dim = schur_square_dim(G);
    r.dual_dim = schur_square_dim(H);
    r.ecc_dim = schur_square_dim(ecc_generator(h.curve(), h.D(), r.k));
    for (const auto& g : h.defining_set().funcs) r.pole_set.push_back(g.pole_order());
    std::sort(r.pole_set.begin(), r.pole_set.end());
    std::set<int> sums;
    for (int a : r.pole_set)
        for (int b : r.pole_set) sums.insert(a + b);
    r.sumset_size = static_cast<int>(sums.size());
    r.primal_bound = 2 * r.k + 1;
    r.dual_bound = 2 * (r.n - r.k) + 1;
    r.extreme = h.single_twist() && is_extreme_ell(r.k, h.twist().ell());
    if (2 * r.k <= r.n) r.rs = rs_nonequiv_check(G);
    if (2 * (r.n - r.k) <= r.n) r.dual_rs = rs_nonequiv_check(H);
    return r;
}

}  // namespace tecc
