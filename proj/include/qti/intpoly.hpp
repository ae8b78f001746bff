#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qti {

// Element of Z[q]: dense coefficient vector, index j holds the coefficient of
// q^j.  Canonical form stores no trailing zeros; the zero polynomial is the
// empty vector (degree() == -1).
class IntPolyQ {
 public:
  IntPolyQ() = default;
  IntPolyQ(long constant);  // NOLINT(google-explicit-constructor)
  explicit IntPolyQ(mpz_class constant);
  explicit IntPolyQ(std::vector<mpz_class> coeffs);

  // coeff * q^degree.
  static IntPolyQ monomial(int degree, const mpz_class& coeff = 1);
  // q^e - 1 (e >= 0; e == 0 gives the zero polynomial).
  static IntPolyQ q_power_minus_one(int e);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // Coefficient of q^j; zero beyond the degree.
  const mpz_class& coeff(int j) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPolyQ operator-() const;
  IntPolyQ& operator+=(const IntPolyQ& o);
  IntPolyQ& operator-=(const IntPolyQ& o);
  IntPolyQ& operator*=(const IntPolyQ& o);
  friend IntPolyQ operator+(IntPolyQ a, const IntPolyQ& b) { return a += b; }
  friend IntPolyQ operator-(IntPolyQ a, const IntPolyQ& b) { return a -= b; }
  friend IntPolyQ operator*(const IntPolyQ& a, const IntPolyQ& b);

  IntPolyQ pow(int e) const;

  mpz_class eval(const mpz_class& q0) const;

  bool operator==(const IntPolyQ& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolyQ& o) const { return c_ != o.c_; }

  // Descending powers: "q^2 + q + 1", "2*q^3 - q", "-q + 1", "0".
  std::string str(const std::string& var = "q") const;
  // Same ordering with braced exponents: "q^{2} + q + 1", "2q^{3} - q".
  std::string latex(const std::string& var = "q") const;

  // Decimal strings, ascending powers (JSON wire format); zero -> {"0"}.
  std::vector<std::string> coeff_strings() const;
  static IntPolyQ from_coeff_strings(const std::vector<std::string>& strings);

 private:
  void normalize();

  std::vector<mpz_class> c_;
};

}  // namespace qti
