#include "qti/altspace.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qti/errors.hpp"
#include "qti/subspace.hpp"

namespace qti {

namespace {

// Finds a witness u with u^T B u != 0, or returns an empty string if B is
// alternating.  Witnesses are e_i (nonzero diagonal) or e_i + e_j
// (B_ij != -B_ji).
std::string alternation_witness(const FqMatrix& b) {
  const Field& f = b.field();
  const int n = b.rows();
  for (int i = 0; i < n; ++i) {
    if (b.at(i, i) != 0) return "e_" + std::to_string(i + 1);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (b.at(i, j) != f.neg(b.at(j, i))) {
        return "e_" + std::to_string(i + 1) + " + e_" + std::to_string(j + 1);
      }
    }
  }
  return {};
}

// RREF of the k x n^2 coefficient matrix of the flattened generators;
// nonzero rows reshaped back to n x n.
std::vector<FqMatrix> canonical_gens(int n, const Field& field,
                                     const std::vector<FqMatrix>& matrices) {
  if (matrices.empty()) return {};
  FqMatrix flat(field, static_cast<int>(matrices.size()), n * n);
  for (std::size_t g = 0; g < matrices.size(); ++g) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        flat.set(static_cast<int>(g), r * n + c, matrices[g].at(r, c));
      }
    }
  }
  EchelonForm ech = rref(flat);
  std::vector<FqMatrix> gens;
  gens.reserve(ech.rank);
  for (int g = 0; g < ech.rank; ++g) {
    FqMatrix m(field, n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m.set(r, c, ech.matrix.at(g, r * n + c));
    }
    gens.push_back(std::move(m));
  }
  return gens;
}

}  // namespace

AltSpace altspace_make(int n, const Field& field,
                       const std::vector<FqMatrix>& matrices) {
  if (n < 0) throw BadArgs("ambient dimension must be nonnegative");
  for (std::size_t g = 0; g < matrices.size(); ++g) {
    const FqMatrix& b = matrices[g];
    if (&b.field() != &field) {
      throw ShapeMismatch("generator " + std::to_string(g + 1) +
                          " is over F_" + std::to_string(b.field().q()) +
                          ", expected F_" + std::to_string(field.q()));
    }
    if (b.rows() != n || b.cols() != n) {
      throw ShapeMismatch("generator " + std::to_string(g + 1) + " is " +
                          std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()) + ", expected " +
                          std::to_string(n) + "x" + std::to_string(n));
    }
    if (std::string w = alternation_witness(b); !w.empty()) {
      throw NotAlternating("generator " + std::to_string(g + 1) +
                           " is not alternating: u^T B u != 0 for u = " + w);
    }
  }
  return AltSpace(n, &field, canonical_gens(n, field, matrices));
}

AltSpace graphical_space(const Graph& g, const Field& field) {
  std::vector<FqMatrix> gens;
  gens.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    FqMatrix a(field, g.n(), g.n());
    a.set(u - 1, v - 1, 1);
    a.set(v - 1, u - 1, field.neg(1));
    gens.push_back(std::move(a));
  }
  return altspace_make(g.n(), field, gens);
}

AltSpace direct_sum(const AltSpace& b, const AltSpace& c) {
  if (&b.field() != &c.field()) {
    throw FieldMismatch("direct_sum requires both spaces over the same field"
                        " (got F_" + std::to_string(b.field().q()) + " and F_" +
                        std::to_string(c.field().q()) + ")");
  }
  const int n = b.n() + c.n();
  std::vector<FqMatrix> gens;
  gens.reserve(b.dim() + c.dim());
  for (const FqMatrix& m : b.gens()) {
    FqMatrix big(b.field(), n, n);
    for (int r = 0; r < b.n(); ++r) {
      for (int col = 0; col < b.n(); ++col) big.set(r, col, m.at(r, col));
    }
    gens.push_back(std::move(big));
  }
  for (const FqMatrix& m : c.gens()) {
    FqMatrix big(b.field(), n, n);
    for (int r = 0; r < c.n(); ++r) {
      for (int col = 0; col < c.n(); ++col) {
        big.set(b.n() + r, b.n() + col, m.at(r, col));
      }
    }
    gens.push_back(std::move(big));
  }
  return altspace_make(n, b.field(), gens);
}

SubspaceBasis::SubspaceBasis(FqMatrix t) : t_(std::move(t)) {
  if (rank(t_) != t_.cols()) {
    throw RankDeficient("subspace basis matrix has dependent columns (rank " +
                        std::to_string(rank(t_)) + " < " +
                        std::to_string(t_.cols()) + ")");
  }
}

namespace {

// r_a B r_b^T over F_q, rows as raw code arrays of length n.
inline bool pair_isotropic(const Field& f, const FqMatrix& b,
                           const std::uint8_t* ra, const std::uint8_t* rb,
                           int n) {
  const std::uint8_t* add = f.add_table();
  const std::uint8_t* mul = f.mul_table();
  const int q = f.q();
  int acc = 0;
  for (int s = 0; s < n; ++s) {
    const int as = ra[s];
    if (as == 0) continue;
    const std::uint8_t* brow = b.row_ptr(s);
    int inner = 0;
    for (int t = 0; t < n; ++t) {
      const int bt = rb[t];
      if (bt != 0) inner = add[inner * q + mul[brow[t] * q + bt]];
    }
    acc = add[acc * q + mul[as * q + inner]];
  }
  return acc == 0;
}

}  // namespace

bool is_totally_isotropic_rows(const AltSpace& s, const FqMatrix& rows) {
  if (&rows.field() != &s.field()) {
    throw FieldMismatch("subspace and space live over different fields");
  }
  if (rows.cols() != s.n()) {
    throw ShapeMismatch("subspace has ambient dimension " +
                        std::to_string(rows.cols()) + ", space has " +
                        std::to_string(s.n()));
  }
  const int i = rows.rows(), n = s.n();
  // Alternating generators vanish on (u, u) and are skew, so checking the
  // pairs a < b decides total isotropy.
  for (int bidx = 1; bidx < i; ++bidx) {
    const std::uint8_t* rb = rows.row_ptr(bidx);
    for (const FqMatrix& gen : s.gens()) {
      for (int a = 0; a < bidx; ++a) {
        if (!pair_isotropic(s.field(), gen, rows.row_ptr(a), rb, n)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_totally_isotropic(const AltSpace& s, const SubspaceBasis& u) {
  return is_totally_isotropic_rows(s, u.t().transpose());
}

PQLabel classify_pq_rows(const FqMatrix& rows) {
  EchelonForm ech = rref(rows);
  if (ech.rank != rows.rows()) {
    throw RankDeficient("subspace basis matrix has dependent rows (rank " +
                        std::to_string(ech.rank) + " < " +
                        std::to_string(rows.rows()) + ")");
  }
  PQLabel label;
  label.p = ech.pivots;
  std::vector<bool> is_pivot(rows.cols() + 1, false);
  for (int c : ech.pivots) is_pivot[c] = true;
  for (int c = 1; c <= rows.cols(); ++c) {
    if (is_pivot[c]) continue;
    for (int r = 0; r < ech.rank; ++r) {
      if (ech.matrix.at(r, c - 1) != 0) {
        label.q.push_back(c);
        break;
      }
    }
  }
  return label;
}

PQLabel classify_pq(const SubspaceBasis& u) {
  return classify_pq_rows(u.t().transpose());
}

std::vector<std::vector<int>> plucker_support(const SubspaceBasis& u) {
  const FqMatrix t = rref(u.t().transpose()).matrix.transpose();
  const int n = u.n(), i = u.i();
  std::vector<std::vector<int>> support;
  std::vector<int> subset(i);
  for (int j = 0; j < i; ++j) subset[j] = j + 1;
  while (true) {
    FqMatrix minor(u.field(), i, i);
    for (int r = 0; r < i; ++r) {
      for (int c = 0; c < i; ++c) minor.set(r, c, t.at(subset[r] - 1, c));
    }
    if (rank(minor) == i) support.push_back(subset);
    // Next lexicographic i-subset of {1..n}.
    int j = i - 1;
    while (j >= 0 && subset[j] == n - (i - 1 - j)) --j;
    if (j < 0) break;
    ++subset[j];
    for (int k = j + 1; k < i; ++k) subset[k] = subset[k - 1] + 1;
  }
  return support;
}

namespace {

mpz_class total_subspace_count(int n, int q) {
  mpz_class total = 0;
  for (int i = 0; i <= n; ++i) total += grassmannian_size(n, i, q);
  return total;
}

}  // namespace

std::vector<mpz_class> ti_counts_brute(const AltSpace& s,
                                       long long guard_limit) {
  const mpz_class estimate = total_subspace_count(s.n(), s.field().q());
  if (estimate > mpz_class(static_cast<long>(guard_limit))) {
    throw TooLarge("brute-force enumeration over " + std::to_string(s.n()) +
                       "-dimensional space at q = " +
                       std::to_string(s.field().q()) +
                       " exceeds the guard limit " + std::to_string(guard_limit),
                   estimate.get_str() + " canonical matrices");
  }
  std::vector<mpz_class> counts(s.n() + 1, 0);
  for (int i = 0; i <= s.n(); ++i) {
    for_each_subspace(s.field(), s.n(), i, [&](const FqMatrix& rows) {
      if (is_totally_isotropic_rows(s, rows)) ++counts[i];
    });
  }
  return counts;
}

XqPoly ti_polynomial_brute(const AltSpace& s, long long guard_limit) {
  const auto counts = ti_counts_brute(s, guard_limit);
  XqPoly p(Basis::kXq);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    p.set_coeff(static_cast<int>(i), IntPolyQ(counts[i]));
  }
  return p;
}

int alpha(const AltSpace& s, long long guard_limit) {
  const auto counts = ti_counts_brute(s, guard_limit);
  for (int i = static_cast<int>(counts.size()) - 1; i >= 0; --i) {
    if (counts[i] > 0) return i;
  }
  return 0;
}

std::vector<mpz_class> rank_locus_counts(const AltSpace& s,
                                         long long guard_limit) {
  const Field& f = s.field();
  mpz_class vectors;
  mpz_ui_pow_ui(vectors.get_mpz_t(), f.q(), s.n());
  if (vectors > mpz_class(static_cast<long>(guard_limit))) {
    throw TooLarge("rank-locus enumeration over F_" + std::to_string(f.q()) +
                       "^" + std::to_string(s.n()) +
                       " exceeds the guard limit " + std::to_string(guard_limit),
                   vectors.get_str() + " vectors");
  }
  const int n = s.n(), k = s.dim();
  std::vector<mpz_class> counts(std::min(n, k) + 1, 0);
  std::vector<std::uint8_t> v(n, 0);
  FqMatrix span(f, k, n);  // row g = (B_g v)^T
  while (true) {
    for (int g = 0; g < k; ++g) {
      const FqMatrix& b = s.gens()[g];
      for (int r = 0; r < n; ++r) {
        int acc = 0;
        for (int c = 0; c < n; ++c) acc = f.add(acc, f.mul(b.at(r, c), v[c]));
        span.set(g, r, acc);
      }
    }
    ++counts[k == 0 ? 0 : rank(span)];
    int j = n - 1;
    while (j >= 0 && v[j] == f.q() - 1) v[j--] = 0;
    if (j < 0) break;
    ++v[j];
  }
  return counts;
}

}  // namespace qti
