#pragma once

#include <string>

#include "tecc/matrix.hpp"

namespace tecc {

// Codeword-class budget: 10^6 unless TECC_BUDGET is set.
long long default_budget();

// Exact minimum Hamming weight of the code spanned by g (full row rank).
// Enumerates one word per scalar class when that fits the budget, otherwise
// runs a disjoint-information-set search by increasing message weight.
int min_distance(const Matrix& g, long long budget = default_budget());

// Full-rank (n-k) x n matrix spanning the Euclidean dual.
Matrix dual(const Matrix& g);

// Rank of all k(k+1)/2 componentwise products of rows of g.
int schur_square_dim(const Matrix& g);

enum class RsVerdict { NonRS, Inconclusive };
const char* rs_verdict_name(RsVerdict v);
RsVerdict rs_nonequiv_check(const Matrix& g);

enum class CodeClass { MDS, NMDS, AMDS, Other };
const char* class_name(CodeClass c);

struct CodeSummary {
    int n = 0, k = 0, d = 0;
    int defect = 0;
    int dual_d = 0;
    int dual_defect = 0;
    CodeClass cls = CodeClass::Other;
    bool self_dual = false;
    bool self_orthogonal = false;

    // Defect exactly one; NMDS codes are AMDS as well.
    bool is_amds() const { return defect == 1; }
};

CodeSummary classify(const Matrix& g, long long budget = default_budget());

bool is_self_dual(const Matrix& g);
bool is_self_orthogonal(const Matrix& g);

}  // namespace tecc
