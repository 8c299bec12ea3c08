#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tecc/gf.hpp"

namespace tecc {

// Dense row-major matrix over one field.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, int rows, int cols) : f_(&f), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}
    static Matrix identity(const Field& f, int n);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows, int cols = -1);

    const Field& field() const { return *f_; }
    bool has_field() const { return f_ != nullptr; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Elem& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    Elem at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }
    const Elem* row_ptr(int r) const { return a_.data() + std::size_t(r) * cols_; }
    std::vector<Elem> row(int r) const { return {row_ptr(r), row_ptr(r) + cols_}; }
    std::vector<std::vector<Elem>> to_rows() const;

    void append_row(const std::vector<Elem>& r);
    Matrix stacked(const Matrix& below) const;
    Matrix transposed() const;
    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;

    // Multiplies column j by s[j].
    Matrix scale_columns(const std::vector<Elem>& s) const;
    Matrix select_columns(const std::vector<int>& idx) const;

    // One row per line, entries separated by single spaces.
    std::string to_text(ElemStyle style = ElemStyle::Coeffs) const;
    static Matrix parse_text(const Field& f, const std::string& text);

private:
    const Field* f_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

struct Rref {
    Matrix reduced;          // zero rows removed
    std::vector<int> pivots;  // pivot column per row
};

Rref rref(const Matrix& m);
int rank(const Matrix& m);
// Basis of {v : m * v^T = 0}, in reduced form.
Matrix nullspace(const Matrix& m);
bool same_row_space(const Matrix& a, const Matrix& b);
// True when every row of b lies in the row space of a.
bool row_space_contains(const Matrix& a, const Matrix& b);
// T with targets = T * basis, when every target row lies in the row space of basis.
// Rows of basis must be independent for T to be unique.
std::optional<Matrix> solve_left(const Matrix& basis, const Matrix& targets);

}  // namespace tecc
