#include "tecc/matrix.hpp"

#include <sstream>

namespace tecc {

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows, int cols) {
    if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Matrix m(f, 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
    std::vector<std::vector<Elem>> out;
    out.reserve(rows_);
    for (int r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

void Matrix::append_row(const std::vector<Elem>& r) {
    if (static_cast<int>(r.size()) != cols_) throw Error(Errc::BadShape, "row length mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::stacked(const Matrix& below) const {
    if (below.rows_ == 0) return *this;
    if (rows_ == 0) return below;
    if (below.cols_ != cols_) throw Error(Errc::BadShape, "column count mismatch in stack");
    Matrix m = *this;
    m.a_.insert(m.a_.end(), below.a_.begin(), below.a_.end());
    m.rows_ += below.rows_;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(*f_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(Errc::BadShape, "inner dimensions differ");
    const Field& F = *f_;
    Matrix m(F, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l) {
            Elem a = at(i, l);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) = F.add(m.at(i, j), F.mul(a, o.at(l, j)));
        }
    return m;
}

bool Matrix::is_zero() const {
    for (Elem e : a_)
        if (e != 0) return false;
    return true;
}

Matrix Matrix::scale_columns(const std::vector<Elem>& s) const {
    if (static_cast<int>(s.size()) != cols_) throw Error(Errc::BadShape, "scaling vector length mismatch");
    Matrix m = *this;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = f_->mul(at(r, c), s[c]);
    return m;
}

Matrix Matrix::select_columns(const std::vector<int>& idx) const {
    Matrix m(*f_, rows_, static_cast<int>(idx.size()));
    for (int r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) m.at(r, static_cast<int>(c)) = at(r, idx[c]);
    return m;
}

std::string Matrix::to_text(ElemStyle style) const {
    std::string s;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) s += ' ';
            s += f_->format(at(r, c), style);
        }
        s += '\n';
    }
    return s;
}

Matrix Matrix::parse_text(const Field& f, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<Elem>> rows;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        std::vector<Elem> r;
        while (ls >> tok) r.push_back(f.parse(tok));
        if (r.empty()) continue;
        if (!rows.empty() && r.size() != rows[0].size()) throw Error(Errc::Parse, "ragged matrix text");
        rows.push_back(std::move(r));
    }
    return from_rows(f, rows);
}

Rref rref(const Matrix& m) {
    const Field& F = m.field();
    Matrix a = m;
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
        Elem inv = F.inv(a.at(r, c));
        for (int j = c; j < a.cols(); ++j) a.at(r, j) = F.mul(a.at(r, j), inv);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            Elem s = a.at(i, c);
            if (s == 0) continue;
            Elem ns = F.neg(s);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) = F.add(a.at(i, j), F.mul(ns, a.at(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    Matrix red(F, 0, a.cols());
    for (int i = 0; i < r; ++i) red.append_row(a.row(i));
    return {std::move(red), std::move(piv)};
}

int rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<int>(rref(m).pivots.size());
}

Matrix nullspace(const Matrix& m) {
    const Field& F = m.field();
    const int n = m.cols();
    Rref rr = rref(m);
    std::vector<int> is_piv(n, -1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) is_piv[rr.pivots[i]] = static_cast<int>(i);
    Matrix out(F, 0, n);
    for (int free = 0; free < n; ++free) {
        if (is_piv[free] >= 0) continue;
        std::vector<Elem> v(n, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = F.neg(rr.reduced.at(static_cast<int>(i), free));
        out.append_row(v);
    }
    if (out.rows() == 0) return out;
    return rref(out).reduced;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    if (a.rows() == 0 || b.rows() == 0) return rank(a.rows() ? a : b) == 0;
    return rref(a).reduced == rref(b).reduced;
}

bool row_space_contains(const Matrix& a, const Matrix& b) {
    if (b.rows() == 0) return true;
    if (a.rows() == 0) return rank(b) == 0;
    return rank(a.stacked(b)) == rank(a);
}

std::optional<Matrix> solve_left(const Matrix& basis, const Matrix& targets) {
    const Field& F = basis.field();
    const int r = basis.rows(), m = targets.rows(), n = basis.cols();
    if (targets.cols() != n) throw Error(Errc::BadShape, "column counts differ");
    // [basis^T | targets^T], reduced; a pivot in the right block means no solution.
    Matrix aug(F, n, r + m);
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < r; ++i) aug.at(c, i) = basis.at(i, c);
        for (int j = 0; j < m; ++j) aug.at(c, r + j) = targets.at(j, c);
    }
    const Rref red = rref(aug);
    Matrix T(F, m, r);
    for (std::size_t row = 0; row < red.pivots.size(); ++row) {
        const int p = red.pivots[row];
        if (p >= r) return std::nullopt;
        for (int j = 0; j < m; ++j) T.at(j, p) = red.reduced.at(static_cast<int>(row), r + j);
    }
    return T;
}

}  // namespace tecc
