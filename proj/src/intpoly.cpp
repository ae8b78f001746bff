#include "qti/intpoly.hpp"

#include <sstream>
#include <utility>

#include "qti/errors.hpp"

namespace qti {

namespace {
const mpz_class kZero = 0;
}  // namespace

IntPolyQ::IntPolyQ(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

IntPolyQ::IntPolyQ(mpz_class constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

IntPolyQ::IntPolyQ(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

IntPolyQ IntPolyQ::monomial(int degree, const mpz_class& coeff) {
  if (degree < 0) throw BadArgs("monomial degree must be nonnegative");
  IntPolyQ p;
  if (coeff == 0) return p;
  p.c_.assign(degree + 1, kZero);
  p.c_[degree] = coeff;
  return p;
}

IntPolyQ IntPolyQ::q_power_minus_one(int e) {
  if (e < 0) throw BadArgs("q_power_minus_one requires e >= 0");
  IntPolyQ p;
  if (e == 0) return p;  // q^0 - 1 = 0
  p.c_.assign(e + 1, kZero);
  p.c_[0] = -1;
  p.c_[e] = 1;
  return p;
}

const mpz_class& IntPolyQ::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return kZero;
  return c_[j];
}

void IntPolyQ::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolyQ IntPolyQ::operator-() const {
  IntPolyQ r;
  r.c_.reserve(c_.size());
  for (const auto& v : c_) r.c_.push_back(-v);
  return r;
}

IntPolyQ& IntPolyQ::operator+=(const IntPolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  normalize();
  return *this;
}

IntPolyQ& IntPolyQ::operator-=(const IntPolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  normalize();
  return *this;
}

IntPolyQ operator*(const IntPolyQ& a, const IntPolyQ& b) {
  IntPolyQ r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

IntPolyQ& IntPolyQ::operator*=(const IntPolyQ& o) {
  *this = *this * o;
  return *this;
}

IntPolyQ IntPolyQ::pow(int e) const {
  if (e < 0) throw BadArgs("pow requires a nonnegative exponent");
  IntPolyQ result(1);
  IntPolyQ base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

mpz_class IntPolyQ::eval(const mpz_class& q0) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
  return acc;
}

namespace {

// Shared skeleton for str()/latex(): emits terms in descending powers with
// "+"/"-" separators and magnitude-1 coefficients elided on nonconstant terms.
std::string render(const std::vector<mpz_class>& c, const std::string& var,
                   bool star, bool braces) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
    const mpz_class& v = c[j];
    if (v == 0) continue;
    const bool neg = v < 0;
    mpz_class mag = neg ? mpz_class(-v) : v;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (j == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) {
      out << mag.get_str();
      if (star) out << "*";
    }
    out << var;
    if (j > 1) {
      if (braces) {
        out << "^{" << j << "}";
      } else {
        out << "^" << j;
      }
    }
  }
  return out.str();
}

}  // namespace

std::string IntPolyQ::str(const std::string& var) const {
  return render(c_, var, /*star=*/true, /*braces=*/false);
}

std::string IntPolyQ::latex(const std::string& var) const {
  return render(c_, var, /*star=*/false, /*braces=*/true);
}

std::vector<std::string> IntPolyQ::coeff_strings() const {
  if (c_.empty()) return {"0"};
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(v.get_str());
  return out;
}

IntPolyQ IntPolyQ::from_coeff_strings(const std::vector<std::string>& strings) {
  std::vector<mpz_class> coeffs;
  coeffs.reserve(strings.size());
  for (const auto& s : strings) {
    mpz_class v;
    if (v.set_str(s, 10) != 0) {
      throw ParseError("polynomial", "invalid integer literal '" + s + "'");
    }
    coeffs.push_back(std::move(v));
  }
  return IntPolyQ(std::move(coeffs));
}

}  // namespace qti
