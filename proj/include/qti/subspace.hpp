#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "qti/matrix.hpp"

namespace qti {

/// Streams every dimension-i subspace of F_q^n exactly once, as the
/// canonical full-rank i x n matrix in reduced row echelon form whose rows
/// span the subspace. Order is deterministic: pivot column sets in
/// lexicographic order, free entries in lexicographic code order (the first
/// free cell, row-major, is the most significant base-q digit).
class SubspaceEnumerator {
public:
    /// Throws BadDimension unless 0 <= i <= n.
    SubspaceEnumerator(const Field& field, int n, int i);

    /// Copies the next canonical matrix into out. False when exhausted.
    bool next(FqMatrix& out);

    /// Borrowed view of the next matrix; valid until the following call.
    /// nullptr when exhausted.
    const FqMatrix* next_view();

    int ambient_dim() const { return n_; }
    int subspace_dim() const { return i_; }

private:
    void build_skeleton();
    bool advance_pivots();

    const Field* field_;
    int n_, i_;
    bool started_ = false, done_ = false;
    std::vector<int> pivots_;                     // 0-indexed columns
    std::vector<std::pair<int, int>> free_cells_;  // row-major (row, col)
    FqMatrix mat_;
};

/// Number of dimension-i subspaces of F_q^n (the Gaussian binomial
/// [n choose i] evaluated at q), computed by the exact product formula.
mpz_class grassmannian_size(int n, int i, int q);

/// Visits each canonical subspace matrix without copying; the reference is
/// only valid during the callback.
template <typename Fn>
void for_each_subspace(const Field& field, int n, int i, Fn&& fn) {
    SubspaceEnumerator e(field, n, i);
    while (const FqMatrix* m = e.next_view()) fn(*m);
}

}  // namespace qti
