#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tecc/curve.hpp"
#include "tecc/differential.hpp"
#include "tecc/lincode.hpp"
#include "tecc/matrix.hpp"
#include "tecc/rrspace.hpp"

namespace tecc {

// Evaluation code on D from L(kO) or a twisted defining set, optionally with
// every coordinate scaled by a nonzero v_i.
class CodeHandle {
public:
    static CodeHandle make(Curve c, EvalSet D, int k, TwistSpec tw = {}, std::optional<std::vector<Elem>> v = std::nullopt);

    const Curve& curve() const { return curve_; }
    const Field& field() const { return curve_.field(); }
    const EvalSet& D() const { return D_; }
    int n() const { return static_cast<int>(D_.size()); }
    int k() const { return k_; }
    const TwistSpec& twist() const { return tw_; }
    bool twisted() const { return !tw_.empty(); }
    bool single_twist() const { return tw_.is_single(); }
    const std::optional<std::vector<Elem>>& v() const { return v_; }
    // v, or all ones when absent.
    std::vector<Elem> v_or_ones() const;
    const std::vector<std::string>& warnings() const { return warnings_; }

    const FuncBasis& defining_set() const { return basis_; }
    const Matrix& generator() const { return gen_; }
    const ResidueVector& residues() const;

    CodeHandle with_eta(Elem eta) const;
    CodeHandle with_v(std::optional<std::vector<Elem>> v) const;

private:
    explicit CodeHandle(Curve c) : curve_(std::move(c)) {}
    Curve curve_;
    EvalSet D_;
    int k_ = 0;
    TwistSpec tw_;
    std::optional<std::vector<Elem>> v_;
    std::vector<std::string> warnings_;
    FuncBasis basis_;
    Matrix gen_;
    mutable std::optional<ResidueVector> res_;
};

Matrix ecc_generator(const Curve& c, const EvalSet& D, int k, const std::optional<std::vector<Elem>>& v = std::nullopt);
// Residue-scaled evaluation of the dual basis; rows in the dual-basis order.
Matrix ecc_parity_check(const Curve& c, const EvalSet& D, int k);
Matrix tecc_generator(const CodeHandle& h);

// Reference route: reduced nullspace of the generator.
Matrix parity_check_nullspace(const CodeHandle& h);

struct RecursionStep {
    std::string name;  // a_i / b_j for odd k, h_j / e_i for even k
    CurveFunc term;
    Elem value = 0;
    Elem pivot = 0;    // functional value that fixed this coefficient (0 for the seed or a dropped term)
};

struct RecursiveParity {
    Matrix H;
    CurveFunc f;  // the extra dual function, before residue scaling
    std::vector<RecursionStep> trace;
};

// Triangular solve for the one dual function outside the residue block,
// then the block of L((n-k-1)O). Needs a single twist on a split-complete D.
RecursiveParity parity_check_recursive(const CodeHandle& h);

struct ClosedFormParity {
    Matrix H;
    CurveFunc f;
    // Per-type sums entering the coefficients (second one is S for odd k, Q for even k).
    Elem P = 0, SQ = 0;
};

// Extreme hook index only: coefficients written directly as residue sums.
ClosedFormParity parity_check_closed_form(const CodeHandle& h);

enum class EtaStatus { Value, NoEta, AllEta, NoFunction };
const char* eta_status_name(EtaStatus s);

struct EtaWitness {
    std::vector<Point> points;
    EtaStatus status = EtaStatus::NoFunction;
    std::optional<CurveFunc> f;  // normalized: leading Y coefficient 1 when present, else leading x coefficient 1
    Elem eta = 0;
};

// Nonzero function of L(mO) vanishing on m given points (m = pts.size()), normalized as in
// EtaWitness; absent when only the zero function does.
std::optional<CurveFunc> vanishing_function(const Curve& c, const std::vector<Point>& pts);

// The function of L((k+1)O) vanishing on k+1 points, and the twist value that places it in S_ell.
EtaWitness eta_of_points(const Curve& c, int k, int ell, const std::vector<Point>& pts);

enum class DistanceCase { NminusKminus1, NminusK, NminusKplus1 };
const char* distance_case_name(DistanceCase c);

struct DistanceClass {
    int d = 0;
    DistanceCase which = DistanceCase::NminusKplus1;
    std::string detail;           // sub-case label
    std::vector<int> witness;     // indices into D
    std::optional<CurveFunc> witness_function;
    std::vector<Elem> eta_values;  // distinct eta(ell, .) over (k+1)-subsets summing to O
    bool all_eta = false;
    unsigned long long n_k_O = 0;  // N(k, O, D)
    int literal_prediction = 0;    // the trichotomy read with N(k,O,D) alone for the middle case
    bool literal_agrees = false;
    std::optional<int> exhaustive_d;
};

DistanceClass min_distance_class(const CodeHandle& h, unsigned long long witness_cap = 10000,
                                 long long budget = default_budget());

struct SelfDualCertificate {
    CurveKind kind = CurveKind::Type1;
    bool k_odd = false;
    Elem lhs = 0;                 // eta-condition left-hand side
    bool eta_condition = false;
    std::optional<Elem> lambda;   // effective scalar with v_i^2 = lambda * w_i
    bool v_condition = false;
    bool verdict = false;
    bool span_verdict = false;    // row-space equality of generator and its dual
};

SelfDualCertificate self_dual_check(const CodeHandle& h);

struct SearchFilter {
    bool mds = false;
    bool self_dual = false;
    bool amds = false;
};

struct SearchHit {
    int ell = 0;
    Elem eta = 0;
    std::vector<Elem> v;
    CodeSummary summary;
};

// All ones, then per square class of lambda the v with v_i^2 = lambda * gamma_i / delta_i
// when every such square root exists (split-complete D only).
std::vector<std::vector<Elem>> candidate_multipliers(const Curve& c, const EvalSet& D);

// Sweeps every hook index and eta, with v = 1 and the square-root scalings that
// make the residue weights squares (one per square class of lambda).
std::vector<SearchHit> search_codes(const Curve& c, const EvalSet& D, int k, const SearchFilter& filter,
                                    long long budget = default_budget());

struct SchurReport {
    int n = 0, k = 0;
    int dim = 0;                 // Schur square of the code
    int dual_dim = 0;            // Schur square of the dual
    int ecc_dim = 0;             // untwisted L(kO) on the same D
    std::vector<int> pole_set;   // pole orders of the defining set
    int sumset_size = 0;         // |T + T|
    bool primal_in_range = false;  // 4 <= k <= (n-4)/2
    bool dual_in_range = false;    // 4 <= n-k <= (n-4)/2
    int primal_bound = 0;        // 2k+1
    int dual_bound = 0;          // 2(n-k)+1
    bool extreme = false;
    RsVerdict rs = RsVerdict::Inconclusive;
    RsVerdict dual_rs = RsVerdict::Inconclusive;
};

SchurReport schur_audit(const CodeHandle& h);

}  // namespace tecc
