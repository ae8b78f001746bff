#pragma once

#include <cstdint>
#include <vector>

#include "qti/field.hpp"

namespace qti {

/// Dense matrix over a small finite field, entries stored row-major as
/// integer codes in [0, q). Value semantics; all operations are pure.
class FqMatrix {
public:
    FqMatrix(const Field& field, int rows, int cols);
    static FqMatrix identity(const Field& field, int n);
    /// Builds from nested rows, validating shape and entry range.
    static FqMatrix from_rows(const Field& field,
                              const std::vector<std::vector<int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *field_; }

    int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) { a_[static_cast<size_t>(r) * cols_ + c] = static_cast<std::uint8_t>(v); }

    const std::uint8_t* row_ptr(int r) const { return a_.data() + static_cast<size_t>(r) * cols_; }
    std::uint8_t* row_ptr(int r) { return a_.data() + static_cast<size_t>(r) * cols_; }
    const std::vector<std::uint8_t>& data() const { return a_; }

    FqMatrix mul(const FqMatrix& other) const;
    FqMatrix transpose() const;
    FqMatrix neg() const;
    FqMatrix add(const FqMatrix& other) const;
    bool is_zero() const;

    std::vector<std::vector<int>> to_rows() const;

    friend bool operator==(const FqMatrix& a, const FqMatrix& b);
    friend bool operator!=(const FqMatrix& a, const FqMatrix& b) { return !(a == b); }

private:
    const Field* field_;
    int rows_, cols_;
    std::vector<std::uint8_t> a_;
};

/// Reduced row echelon form together with its pivot profile.
/// Pivot columns are 1-indexed and strictly increasing; they are the
/// lexicographically first column subset carrying an invertible submatrix
/// of the row space.
struct EchelonForm {
    FqMatrix matrix;
    std::vector<int> pivots;
    int rank;
};

/// Canonical RREF of A: equal row spaces yield identical results.
EchelonForm rref(const FqMatrix& a);

int rank(const FqMatrix& a);

}  // namespace qti
