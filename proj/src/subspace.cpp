#include "qti/subspace.hpp"

#include <string>

namespace qti {

SubspaceEnumerator::SubspaceEnumerator(const Field& field, int n, int i)
    : field_(&field), n_(n), i_(i), mat_(field, i < 0 ? 0 : i, n < 0 ? 0 : n) {
    if (n < 0 || i < 0 || i > n)
        throw BadDimension("subspace dimension i = " + std::to_string(i) +
                           " outside [0, n] for n = " + std::to_string(n));
    pivots_.resize(i_);
    for (int j = 0; j < i_; ++j) pivots_[j] = j;
}

void SubspaceEnumerator::build_skeleton() {
    mat_ = FqMatrix(*field_, i_, n_);
    free_cells_.clear();
    std::vector<bool> is_pivot(n_, false);
    for (int c : pivots_) is_pivot[c] = true;
    for (int j = 0; j < i_; ++j) {
        mat_.set(j, pivots_[j], 1);
        for (int c = pivots_[j] + 1; c < n_; ++c)
            if (!is_pivot[c]) free_cells_.emplace_back(j, c);
    }
}

bool SubspaceEnumerator::advance_pivots() {
    // Next i-combination of {0..n-1} in lexicographic order.
    int j = i_ - 1;
    while (j >= 0 && pivots_[j] == n_ - i_ + j) --j;
    if (j < 0) return false;
    ++pivots_[j];
    for (int l = j + 1; l < i_; ++l) pivots_[l] = pivots_[l - 1] + 1;
    return true;
}

const FqMatrix* SubspaceEnumerator::next_view() {
    if (done_) return nullptr;
    if (!started_) {
        started_ = true;
        build_skeleton();
        return &mat_;
    }
    // Odometer over free cells, least significant last.
    const int qm1 = field_->q() - 1;
    for (int t = static_cast<int>(free_cells_.size()) - 1; t >= 0; --t) {
        auto [r, c] = free_cells_[t];
        const int v = mat_.at(r, c);
        if (v < qm1) {
            mat_.set(r, c, v + 1);
            return &mat_;
        }
        mat_.set(r, c, 0);
    }
    if (!advance_pivots()) {
        done_ = true;
        return nullptr;
    }
    build_skeleton();
    return &mat_;
}

bool SubspaceEnumerator::next(FqMatrix& out) {
    const FqMatrix* m = next_view();
    if (!m) return false;
    out = *m;
    return true;
}

mpz_class grassmannian_size(int n, int i, int q) {
    if (n < 0 || i < 0 || i > n)
        throw BadDimension("grassmannian_size: i outside [0, n]");
    mpz_class num = 1, den = 1, qj = 1;
    mpz_class qz(q);
    mpz_class qpow_n, qpow_i;
    mpz_ui_pow_ui(qpow_n.get_mpz_t(), q, n);
    mpz_ui_pow_ui(qpow_i.get_mpz_t(), q, i);
    for (int j = 0; j < i; ++j) {
        num *= qpow_n - qj;
        den *= qpow_i - qj;
        qj *= qz;
    }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

}  // namespace qti
