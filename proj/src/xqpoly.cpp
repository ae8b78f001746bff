#include "qti/xqpoly.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "qti/errors.hpp"

namespace qti {

namespace {
const IntPolyQ kZeroPoly;
}  // namespace

BivarPoly BivarPoly::one(Basis basis) {
  BivarPoly p(basis);
  p.set_coeff(0, IntPolyQ(1));
  return p;
}

BivarPoly BivarPoly::term(Basis basis, int x_degree, IntPolyQ coeff) {
  BivarPoly p(basis);
  p.set_coeff(x_degree, std::move(coeff));
  return p;
}

const IntPolyQ& BivarPoly::coeff(int d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? kZeroPoly : it->second;
}

void BivarPoly::add_term(int d, const IntPolyQ& c) {
  if (c.is_zero()) return;
  if (d < 0) throw BadArgs("x-degree must be nonnegative");
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void BivarPoly::set_coeff(int d, IntPolyQ c) {
  if (d < 0) throw BadArgs("x-degree must be nonnegative");
  if (c.is_zero()) {
    terms_.erase(d);
  } else {
    terms_.insert_or_assign(d, std::move(c));
  }
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r(basis_);
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  if (basis_ != o.basis_) throw BadArgs("basis mismatch in polynomial sum");
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  if (basis_ != o.basis_) throw BadArgs("basis mismatch in polynomial difference");
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  if (a.basis() != b.basis()) throw BadArgs("basis mismatch in polynomial product");
  if (a.basis() == Basis::kXq) return xq_mul(a, b);
  BivarPoly r(Basis::kMonomial);
  for (const auto& [d, cd] : a.terms()) {
    for (const auto& [e, ce] : b.terms()) r.add_term(d + e, cd * ce);
  }
  return r;
}

mpz_class BivarPoly::eval(const mpz_class& q0, const mpz_class& x0) const {
  mpz_class total = 0;
  if (basis_ == Basis::kMonomial) {
    for (const auto& [d, c] : terms_) {
      mpz_class xp;
      mpz_pow_ui(xp.get_mpz_t(), x0.get_mpz_t(), d);
      total += c.eval(q0) * xp;
    }
    return total;
  }
  // x_q^d = prod_{j=0}^{d-1} (x0 - (q0^j - 1)), built incrementally across the
  // ascending-degree term map.
  mpz_class basis_val = 1, qpow = 1;  // q0^j, starting at j = 0
  int j = 0;
  for (const auto& [d, c] : terms_) {
    while (j < d) {
      basis_val *= x0 - (qpow - 1);
      qpow *= q0;
      ++j;
    }
    total += c.eval(q0) * basis_val;
  }
  return total;
}

BivarPoly BivarPoly::specialize_q(const mpz_class& q0) const {
  Basis out_basis = basis_;
  if (basis_ == Basis::kXq && q0 == 1) out_basis = Basis::kMonomial;
  BivarPoly r(out_basis);
  for (const auto& [d, c] : terms_) r.set_coeff(d, IntPolyQ(c.eval(q0)));
  return r;
}

IntPolyQ gaussian_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw BadArgs("gaussian_binomial requires 0 <= k <= n");
  }
  // Row DP on the q-Pascal recurrence [m j] = [m-1 j-1] + q^j [m-1 j].
  std::vector<IntPolyQ> row(k + 1);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(k, m); j >= 1; --j) {
      row[j] = row[j - 1] + IntPolyQ::monomial(j) * row[j];
    }
  }
  return row[k];
}

IntPolyQ structure_constant(int d, int e, int s) {
  if (s < 0 || s > e || e > d) {
    throw BadArgs("structure_constant requires s <= e <= d");
  }
  IntPolyQ c = gaussian_binomial(d, s) * gaussian_binomial(e, s);
  for (int j = 0; j < s; ++j) {
    // q^s - q^j
    c *= IntPolyQ::monomial(s) - IntPolyQ::monomial(j);
  }
  return c;
}

BivarPoly xq_expand(int d) {
  if (d < 0) throw BadArgs("xq_expand requires d >= 0");
  BivarPoly p = BivarPoly::one(Basis::kMonomial);
  for (int j = 0; j < d; ++j) {
    // Multiply by (x - (q^j - 1)).
    BivarPoly next(Basis::kMonomial);
    const IntPolyQ shift = IntPolyQ(1) - IntPolyQ::monomial(j);  // 1 - q^j
    for (const auto& [deg, c] : p.terms()) {
      next.add_term(deg + 1, c);
      next.add_term(deg, c * shift);
    }
    p = next;
  }
  return p;
}

BivarPoly to_monomial(const BivarPoly& p) {
  if (p.basis() == Basis::kMonomial) return p;
  BivarPoly r(Basis::kMonomial);
  for (const auto& [d, c] : p.terms()) {
    const BivarPoly expanded = xq_expand(d);
    for (const auto& [deg, mc] : expanded.terms()) r.add_term(deg, c * mc);
  }
  return r;
}

XqPoly from_monomial(const BivarPoly& m) {
  if (m.basis() == Basis::kXq) return m;
  XqPoly r(Basis::kXq);
  BivarPoly work = m;
  // x_q^d is monic of degree d in x, so peeling leading terms terminates.
  while (!work.is_zero()) {
    const int d = work.x_degree();
    const IntPolyQ lead = work.coeff(d);
    r.set_coeff(d, lead);
    const BivarPoly expanded = xq_expand(d);
    for (const auto& [deg, mc] : expanded.terms()) {
      work.add_term(deg, -(lead * mc));
    }
  }
  return r;
}

XqPoly xq_mul(const XqPoly& a, const XqPoly& b) {
  if (a.basis() != Basis::kXq || b.basis() != Basis::kXq) {
    throw BadArgs("xq_mul requires both factors in the q-falling basis");
  }
  XqPoly r(Basis::kXq);
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      const int d = std::max(da, db);  // Lemma 3.1 is stated for d >= e;
      const int e = std::min(da, db);  // commutativity justifies the swap
      const IntPolyQ prod = ca * cb;
      for (int s = 0; s <= e; ++s) {
        r.add_term(d + e - s, prod * structure_constant(d, e, s));
      }
    }
  }
  return r;
}

}  // namespace qti
