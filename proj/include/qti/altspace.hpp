#pragma once

#include <gmpxx.h>

#include <compare>
#include <vector>

#include "qti/field.hpp"
#include "qti/graph.hpp"
#include "qti/matrix.hpp"
#include "qti/xqpoly.hpp"

namespace qti {

// Default feasibility guard for brute-force enumerations, in canonical
// matrices (subspaces) or vectors visited.
inline constexpr long long kDefaultGuard = 100'000'000;

// A linear space of n x n alternating matrices over F_q.  Generators are
// validated (u^T B u = 0 for all u: zero diagonal and B^T = -B entrywise)
// and stored canonically as the RREF of the k x n^2 coefficient matrix, so
// dim() equals the stored generator count and equal spaces have equal
// generator lists.
class AltSpace {
 public:
  int n() const { return n_; }
  const Field& field() const { return *field_; }
  int dim() const { return static_cast<int>(gens_.size()); }
  const std::vector<FqMatrix>& gens() const { return gens_; }

  bool operator==(const AltSpace& o) const {
    return n_ == o.n_ && field_ == o.field_ && gens_ == o.gens_;
  }

 private:
  friend AltSpace altspace_make(int n, const Field& field,
                                const std::vector<FqMatrix>& matrices);
  AltSpace(int n, const Field* field, std::vector<FqMatrix> gens)
      : n_(n), field_(field), gens_(std::move(gens)) {}

  int n_;
  const Field* field_;
  std::vector<FqMatrix> gens_;
};

// Validates and canonicalizes.  Errors: ShapeMismatch (not n x n or wrong
// field), NotAlternating (reports the offending generator and a witness
// vector e_i or e_i + e_j).
AltSpace altspace_make(int n, const Field& field,
                       const std::vector<FqMatrix>& matrices);

// Graphical space B_G: span of the elementary alternating matrices A_{u,v}
// ((u,v) entry 1, (v,u) entry -1) over the edges of G; dimension = |E(G)|.
AltSpace graphical_space(const Graph& g, const Field& field);

// Block-diagonal disjoint direct sum; ambient dimension n_B + n_C.
// Errors: FieldMismatch.
AltSpace direct_sum(const AltSpace& b, const AltSpace& c);

// A dimension-i subspace of F_q^n, presented as an n x i matrix of full
// column rank whose columns span it.
class SubspaceBasis {
 public:
  // Errors: RankDeficient if the columns are dependent.
  explicit SubspaceBasis(FqMatrix t);

  int n() const { return t_.rows(); }
  int i() const { return t_.cols(); }
  const FqMatrix& t() const { return t_; }
  const Field& field() const { return t_.field(); }

 private:
  FqMatrix t_;
};

// True iff T^T B T = 0 for every generator B.  Errors: ShapeMismatch
// (ambient dimension), FieldMismatch.
bool is_totally_isotropic(const AltSpace& s, const SubspaceBasis& u);

// Row-matrix variant used by the enumeration loops: `rows` is an i x n
// matrix whose rows span the subspace.
bool is_totally_isotropic_rows(const AltSpace& s, const FqMatrix& rows);

// (P, Q) stratum label of a subspace: P is the lexicographic-first nonzero
// Pluecker coordinate (pivot set), Q the nonzero non-pivot coordinate rows.
// Both 1-indexed ascending; P and Q are disjoint.
struct PQLabel {
  std::vector<int> p;
  std::vector<int> q;

  friend auto operator<=>(const PQLabel&, const PQLabel&) = default;
};

PQLabel classify_pq(const SubspaceBasis& u);
// Variant taking an i x n row-span matrix.
PQLabel classify_pq_rows(const FqMatrix& rows);

// All i-subsets R of {1..n} (ascending, lexicographic order) whose i x i
// row-minor of T is nonsingular.
std::vector<std::vector<int>> plucker_support(const SubspaceBasis& u);

// c_0..c_n where c_i counts the dimension-i totally-isotropic subspaces
// (trailing zeros kept; c_0 = 1).  Errors: TooLarge when the total number of
// canonical matrices, sum_i [n choose i]_q, exceeds guard_limit.
std::vector<mpz_class> ti_counts_brute(const AltSpace& s,
                                       long long guard_limit = kDefaultGuard);

// TI(S, x) = 1 + sum c_i x_q^i with integer coefficients (zero terms
// dropped; x_q-degree = alpha).
XqPoly ti_polynomial_brute(const AltSpace& s,
                           long long guard_limit = kDefaultGuard);

// Largest i with c_i > 0.
int alpha(const AltSpace& s, long long guard_limit = kDefaultGuard);

// counts[e] = |{v in F_q^n : dim span{B v : B in gens} = e}|, iterating all
// q^n vectors; the counts sum to q^n.  Errors: TooLarge when q^n exceeds
// guard_limit.
std::vector<mpz_class> rank_locus_counts(const AltSpace& s,
                                         long long guard_limit = kDefaultGuard);

}  // namespace qti
