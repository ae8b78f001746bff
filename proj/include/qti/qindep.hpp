#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qti/altspace.hpp"
#include "qti/graph.hpp"
#include "qti/intpoly.hpp"
#include "qti/xqpoly.hpp"

namespace qti {

// Lemma conditions on the components of G[P u Q]: (i) each component holds
// at most one P-vertex, (ii) a component containing u in P has minimum u,
// (iii) a P-free component has minimum greater than min(P) (min of the empty
// P is +infinity, so P = {} admits only Q = {}).
// Pre: P independent, Q disjoint from P, both within {1..n}.
// Errors: BadArgs.
bool q_valid(const Graph& g, const std::vector<int>& p,
             const std::vector<int>& q);

// Stratum weight: a component C with a P-vertex contributes (q-1)^{|C|-1}; a
// P-free component D contributes (q^d - 1)(q-1)^{|D|-1} with
// d = |{u in P : u < min(D)}|.  Q = {} gives the empty product 1.
// Errors: InvalidStratum when q_valid fails (plus q_valid's BadArgs).
IntPolyQ pq_weight(const Graph& g, const std::vector<int>& p,
                   const std::vector<int>& q);

// c_i(q) = sum over size-i independent sets P of the weights of all valid
// Q subsets (full 2^{n-i} sweep filtered by q_valid).  Zero for i > alpha(G).
IntPolyQ symbolic_coefficient(const Graph& g, int i);

// All coefficients c_0..c_alpha in one pass over the (P, Q) strata.
std::vector<IntPolyQ> symbolic_coefficients(const Graph& g);

// I(G, x, q) = 1 + sum c_i(q) x_q^i (Theorem 1.3 polynomial).
XqPoly q_independence_polynomial(const Graph& g);

// One (P, Q) stratum in a cross-validation report.
struct StratumCheck {
  PQLabel label;
  bool valid = false;     // q_valid(G, P, Q)
  mpz_class expected;     // pq_weight evaluated at q0 (0 for invalid strata)
  mpz_class actual;       // brute-force count of TI subspaces in the stratum
  bool ok() const { return expected == actual; }
};

struct CrossValidateReport {
  int q0 = 0;
  bool pass = false;
  std::vector<mpz_class> symbolic;       // c_i(q0) for i = 0..alpha(G)
  std::vector<mpz_class> brute;          // c_0..c_n from ti_counts_brute
  std::vector<StratumCheck> strata;      // sorted by (|P|, P, Q)
  std::vector<std::string> mismatches;   // one line per discrepancy
};

// Evaluates every c_i at the prime power q0 and compares against the
// brute-force oracle on graphical_space(G, q0), totals and per-(P,Q) strata
// both.  Errors: NotAPrimePower, TooLarge (oracle guard).
CrossValidateReport cross_validate(const Graph& g, int q0,
                                   long long guard_limit = kDefaultGuard);

}  // namespace qti
