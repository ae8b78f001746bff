#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "qti/intpoly.hpp"

namespace qti {

// Basis of Z[q][x] a BivarPoly is expressed in: the monomial basis {x^d} or
// the q-falling basis {x_q^d} with x_q^d = x(x-(q-1))(x-(q^2-1))...(x-(q^{d-1}-1)).
enum class Basis { kMonomial, kXq };

// Element of Z[q][x]: sparse map from x-degree to Z[q] coefficient, tagged
// with the basis the x-powers are taken in.  No zero coefficients are stored.
class BivarPoly {
 public:
  explicit BivarPoly(Basis basis = Basis::kXq) : basis_(basis) {}

  static BivarPoly one(Basis basis);
  static BivarPoly term(Basis basis, int x_degree, IntPolyQ coeff);

  Basis basis() const { return basis_; }
  bool is_zero() const { return terms_.empty(); }
  int x_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  // Coefficient of the degree-d basis element; zero polynomial if absent.
  const IntPolyQ& coeff(int d) const;
  const std::map<int, IntPolyQ>& terms() const { return terms_; }

  // Adds c to the coefficient of degree d, dropping it if the sum is zero.
  void add_term(int d, const IntPolyQ& c);
  void set_coeff(int d, IntPolyQ c);

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  // Basis-aware product: convolution in the monomial basis, the Lemma 3.1
  // structure-constant rule in the q-falling basis.
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);

  bool operator==(const BivarPoly& o) const {
    return basis_ == o.basis_ && terms_ == o.terms_;
  }
  bool operator!=(const BivarPoly& o) const { return !(*this == o); }

  // Exact evaluation at integer points (x_q^d evaluated per its definition).
  mpz_class eval(const mpz_class& q0, const mpz_class& x0) const;

  // Substitutes q = q0, leaving a polynomial in x with integer coefficients.
  // The basis tag is preserved except at q0 = 1 in the q-falling basis, where
  // x_1^d = x^d makes the two bases coincide and the result is retagged
  // monomial.
  BivarPoly specialize_q(const mpz_class& q0) const;

 private:
  Basis basis_;
  std::map<int, IntPolyQ> terms_;
};

// A polynomial in the q-falling basis: TI(B, x) (integer constants as the
// coefficients) or I(G, x, q) (full Z[q] coefficients).
using XqPoly = BivarPoly;

// Gaussian binomial [n choose k]_q via the q-Pascal recurrence; counts
// dimension-k subspaces of F_q^n when evaluated at a prime power.
IntPolyQ gaussian_binomial(int n, int k);

// Lemma 3.1 structure constant
//   C_{d,e,s,q} = [d choose s]_q [e choose s]_q (q^s-1)(q^s-q)...(q^s-q^{s-1})
// for s <= e <= d.
IntPolyQ structure_constant(int d, int e, int s);

// x_q^d expanded in the monomial basis.
BivarPoly xq_expand(int d);

// Exact change of basis (unitriangular in both directions); round trip is the
// identity.  Inputs already in the target basis pass through unchanged.
BivarPoly to_monomial(const BivarPoly& p);
XqPoly from_monomial(const BivarPoly& m);

// Product of two q-falling-basis polynomials through the Lemma 3.1 rule
//   x_q^d x_q^e = sum_{s=0}^{e} C_{d,e,s,q} x_q^{d+e-s}   (d >= e).
XqPoly xq_mul(const XqPoly& a, const XqPoly& b);

}  // namespace qti
