#include "tecc/lincode.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace tecc {

long long default_budget() {
    if (const char* s = std::getenv("TECC_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end != s && v > 0) return v;
    }
    return 1000000;
}

namespace {

// Number of scalar classes (q^k - 1)/(q - 1), saturating.
long long class_count(int q, int k) {
    long double c = 0, p = 1;
    for (int i = 0; i < k; ++i) {
        c += p;
        p *= q;
    }
    return c > 9e18L ? std::numeric_limits<long long>::max() : static_cast<long long>(c);
}

int weight(const std::vector<Elem>& w) {
    int c = 0;
    for (Elem e : w) c += e != 0;
    return c;
}

// Every message whose leading nonzero coefficient is 1, via an odometer over
// precomputed row multiples.
int exhaustive(const Matrix& g) {
    const Field& F = g.field();
    const int k = g.rows(), n = g.cols(), q = F.q();
    std::vector<Elem> elems = F.elements();
    // mult[j][c] = elems[c] * row j
    std::vector<std::vector<std::vector<Elem>>> mult(k, std::vector<std::vector<Elem>>(q, std::vector<Elem>(n)));
    for (int j = 0; j < k; ++j)
        for (int c = 0; c < q; ++c)
            for (int i = 0; i < n; ++i) mult[j][c][i] = F.mul(elems[c], g.at(j, i));
    int best = n + 1;
    std::vector<Elem> w(n);
    for (int lead = 0; lead < k; ++lead) {
        w = g.row(lead);
        best = std::min(best, weight(w));
        const int free = k - 1 - lead;
        std::vector<int> digit(free, 0);
        while (true) {
            int pos = 0;
            while (pos < free && digit[pos] == q - 1) {
                const auto& old = mult[lead + 1 + pos][q - 1];
                for (int i = 0; i < n; ++i) w[i] = F.sub(w[i], old[i]);
                digit[pos] = 0;
                ++pos;
            }
            if (pos == free) break;
            const int j = lead + 1 + pos;
            const auto& old = mult[j][digit[pos]];
            const auto& nw = mult[j][digit[pos] + 1];
            for (int i = 0; i < n; ++i) w[i] = F.add(F.sub(w[i], old[i]), nw[i]);
            ++digit[pos];
            int wt = weight(w);
            if (wt < best) best = wt;
        }
    }
    return best;
}

// Systematic generators on pairwise disjoint information sets. Each entry is
// the reduced matrix together with its pivot columns.
std::vector<Rref> disjoint_systematic(const Matrix& g) {
    const int n = g.cols(), k = g.rows();
    std::vector<Rref> out;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<bool> used(n, false);
    while (true) {
        std::vector<int> cols;
        for (int i = 0; i < n; ++i)
            if (!used[i]) cols.push_back(i);
        for (int i = 0; i < n; ++i)
            if (used[i]) cols.push_back(i);
        Matrix perm = g.select_columns(cols);
        Rref r = rref(perm);
        if (static_cast<int>(r.pivots.size()) < k) break;
        bool disjoint = true;
        for (int p : r.pivots)
            if (used[cols[p]]) disjoint = false;
        if (!disjoint) break;
        // Undo the permutation.
        Matrix back(g.field(), k, n);
        for (int row = 0; row < k; ++row)
            for (int c = 0; c < n; ++c) back.at(row, cols[c]) = r.reduced.at(row, c);
        std::vector<int> piv;
        for (int p : r.pivots) {
            piv.push_back(cols[p]);
            used[cols[p]] = true;
        }
        out.push_back({std::move(back), std::move(piv)});
    }
    return out;
}

int info_set_search(const Matrix& g, long long budget) {
    const Field& F = g.field();
    const int k = g.rows(), n = g.cols(), q = F.q();
    auto sys = disjoint_systematic(g);
    const int m = static_cast<int>(sys.size());
    int upper = n + 1;
    for (const auto& s : sys)
        for (int r = 0; r < k; ++r) upper = std::min(upper, weight(s.reduced.row(r)));
    long long spent = 0;
    std::vector<Elem> elems = F.elements();
    for (int w = 1; w <= k; ++w) {
        if (m * (w + 1) >= upper) return upper;
        for (const auto& s : sys) {
            // Supports of size w, first coefficient fixed to 1.
            std::vector<int> sup(w);
            for (int i = 0; i < w; ++i) sup[i] = i;
            while (true) {
                std::vector<int> coef(w, 1);
                while (true) {
                    if (++spent > budget) throw Error(Errc::BudgetExceeded, "minimum distance search exceeded budget");
                    std::vector<Elem> word(n, 0);
                    for (int i = 0; i < w; ++i) {
                        Elem c = elems[coef[i]];
                        const Elem* row = s.reduced.row_ptr(sup[i]);
                        for (int j = 0; j < n; ++j) word[j] = F.add(word[j], F.mul(c, row[j]));
                    }
                    upper = std::min(upper, weight(word));
                    int p = 1;
                    while (p < w && coef[p] == q - 1) coef[p++] = 1;
                    if (p >= w) break;
                    ++coef[p];
                }
                int i = w - 1;
                while (i >= 0 && sup[i] == k - w + i) --i;
                if (i < 0) break;
                ++sup[i];
                for (int j = i + 1; j < w; ++j) sup[j] = sup[j - 1] + 1;
            }
        }
    }
    return upper;
}

}  // namespace

int min_distance(const Matrix& g, long long budget) {
    if (g.rows() == 0) throw Error(Errc::BadShape, "empty generator");
    if (rank(g) != g.rows()) throw Error(Errc::BadShape, "generator is not of full row rank");
    if (class_count(g.field().q(), g.rows()) <= budget) return exhaustive(g);
    return info_set_search(g, budget);
}

Matrix dual(const Matrix& g) { return nullspace(g); }

int schur_square_dim(const Matrix& g) {
    const Field& F = g.field();
    const int k = g.rows(), n = g.cols();
    Matrix prod(F, 0, n);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            std::vector<Elem> r(n);
            for (int c = 0; c < n; ++c) r[c] = F.mul(g.at(i, c), g.at(j, c));
            prod.append_row(r);
        }
    return rank(prod);
}

const char* rs_verdict_name(RsVerdict v) { return v == RsVerdict::NonRS ? "NON_RS" : "INCONCLUSIVE"; }

RsVerdict rs_nonequiv_check(const Matrix& g) {
    const int k = rank(g);
    if (2 * k > g.cols()) throw Error(Errc::Precondition, "k must not exceed n/2");
    return schur_square_dim(g) >= 2 * k ? RsVerdict::NonRS : RsVerdict::Inconclusive;
}

const char* class_name(CodeClass c) {
    switch (c) {
        case CodeClass::MDS: return "MDS";
        case CodeClass::NMDS: return "NMDS";
        case CodeClass::AMDS: return "AMDS";
        case CodeClass::Other: return "other";
    }
    return "?";
}

bool is_self_orthogonal(const Matrix& g) { return (g * g.transposed()).is_zero(); }

bool is_self_dual(const Matrix& g) {
    const int k = rank(g);
    if (2 * k != g.cols()) return false;
    return same_row_space(g, dual(g));
}

CodeSummary classify(const Matrix& g, long long budget) {
    CodeSummary s;
    s.n = g.cols();
    s.k = rank(g);
    Matrix base = rref(g).reduced;
    s.d = min_distance(base, budget);
    s.defect = s.n - s.k + 1 - s.d;
    if (s.k < s.n) {
        Matrix h = dual(base);
        s.dual_d = min_distance(h, budget);
        s.dual_defect = s.n - (s.n - s.k) + 1 - s.dual_d;
    }
    if (s.defect == 0)
        s.cls = CodeClass::MDS;
    else if (s.defect == 1 && s.k < s.n && s.dual_defect == 1)
        s.cls = CodeClass::NMDS;
    else if (s.defect == 1)
        s.cls = CodeClass::AMDS;
    s.self_orthogonal = is_self_orthogonal(base);
    s.self_dual = is_self_dual(base);
    return s;
}

}  // namespace tecc
