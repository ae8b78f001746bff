#include "qti/matrix.hpp"

#include <algorithm>
#include <string>

namespace qti {

FqMatrix::FqMatrix(const Field& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, 0);
}

FqMatrix FqMatrix::identity(const Field& field, int n) {
    FqMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMatrix FqMatrix::from_rows(const Field& field,
                             const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    FqMatrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw ShapeMismatch("ragged rows in matrix literal");
        for (int j = 0; j < c; ++j) {
            const int v = rows[i][j];
            if (v < 0 || v >= field.q())
                throw BadArgs("matrix entry " + std::to_string(v) +
                              " outside [0, q) for q = " + std::to_string(field.q()));
            m.set(i, j, v);
        }
    }
    return m;
}

FqMatrix FqMatrix::mul(const FqMatrix& other) const {
    if (field_ != other.field_) throw FieldMismatch("matrix product over different fields");
    if (cols_ != other.rows_)
        throw ShapeMismatch("cannot multiply " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " by " + std::to_string(other.rows_) +
                            "x" + std::to_string(other.cols_));
    const int q = field_->q();
    const std::uint8_t* mul = field_->mul_table();
    const std::uint8_t* add = field_->add_table();
    FqMatrix out(*field_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        const std::uint8_t* ai = row_ptr(i);
        std::uint8_t* oi = out.row_ptr(i);
        for (int t = 0; t < cols_; ++t) {
            const int v = ai[t];
            if (v == 0) continue;
            const std::uint8_t* bt = other.row_ptr(t);
            const std::uint8_t* mv = mul + v * q;
            for (int j = 0; j < other.cols_; ++j)
                oi[j] = add[oi[j] * q + mv[bt[j]]];
        }
    }
    return out;
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix out(*field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

FqMatrix FqMatrix::neg() const {
    FqMatrix out(*field_, rows_, cols_);
    const std::uint8_t* neg = field_->neg_table();
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = neg[a_[t]];
    return out;
}

FqMatrix FqMatrix::add(const FqMatrix& other) const {
    if (field_ != other.field_) throw FieldMismatch("matrix sum over different fields");
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeMismatch("matrix sum of unequal shapes");
    const int q = field_->q();
    const std::uint8_t* add = field_->add_table();
    FqMatrix out(*field_, rows_, cols_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = add[a_[t] * q + other.a_[t]];
    return out;
}

bool FqMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint8_t v) { return v == 0; });
}

std::vector<std::vector<int>> FqMatrix::to_rows() const {
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i][j] = at(i, j);
    return out;
}

bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.a_ == b.a_;
}

EchelonForm rref(const FqMatrix& a) {
    FqMatrix m = a;
    const Field& f = m.field();
    const int q = f.q();
    const std::uint8_t* mul = f.mul_table();
    const std::uint8_t* add = f.add_table();
    const std::uint8_t* neg = f.neg_table();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols(); ++j) {
                const int t = m.at(r, j);
                m.set(r, j, m.at(pr, j));
                m.set(pr, j, t);
            }
        const int s = f.inv(m.at(r, c));
        if (s != 1) {
            const std::uint8_t* ms = mul + s * q;
            std::uint8_t* row = m.row_ptr(r);
            for (int j = c; j < m.cols(); ++j) row[j] = ms[row[j]];
        }
        const std::uint8_t* prow = m.row_ptr(r);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const int v = m.at(i, c);
            if (v == 0) continue;
            const std::uint8_t* mf = mul + neg[v] * q;
            std::uint8_t* row = m.row_ptr(i);
            for (int j = c; j < m.cols(); ++j) row[j] = add[row[j] * q + mf[prow[j]]];
        }
        pivots.push_back(c + 1);
        ++r;
    }
    return EchelonForm{std::move(m), std::move(pivots), r};
}

int rank(const FqMatrix& a) { return rref(a).rank; }

}  // namespace qti
