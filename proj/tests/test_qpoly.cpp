#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "qti/errors.hpp"
#include "qti/xqpoly.hpp"

using namespace qti;

namespace {

IntPolyQ random_intpoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 4);
  std::uniform_int_distribution<long> c(-5, 5);
  std::vector<mpz_class> coeffs(deg(rng) + 1);
  for (auto& v : coeffs) v = c(rng);
  return IntPolyQ(std::move(coeffs));
}

BivarPoly random_bivar(Basis basis, std::mt19937& rng, int max_xdeg = 6) {
  std::uniform_int_distribution<int> deg(0, max_xdeg);
  BivarPoly p(basis);
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) p.add_term(i, random_intpoly(rng));
  return p;
}

// Zero-extended Gaussian binomial, so identities can reference [n k] with k > n.
IntPolyQ gb0(int n, int k) {
  if (k > n) return IntPolyQ(0);
  return gaussian_binomial(n, k);
}

}  // namespace

TEST_CASE("IntPolyQ basics: construction, arithmetic, evaluation") {
  IntPolyQ zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.coeff(3) == 0);

  IntPolyQ five(5);
  CHECK(five.degree() == 0);
  CHECK(five.coeff(0) == 5);

  IntPolyQ p({1, 2, 3});  // 3q^2 + 2q + 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(10) == 321);
  CHECK((p + (-p)).is_zero());
  CHECK(p - p == zero);

  IntPolyQ qm1 = IntPolyQ::q_power_minus_one(1);
  CHECK(qm1 == IntPolyQ({-1, 1}));
  CHECK(IntPolyQ::q_power_minus_one(0).is_zero());
  CHECK(IntPolyQ::q_power_minus_one(3).eval(2) == 7);

  CHECK(IntPolyQ::monomial(3, 2) == IntPolyQ({0, 0, 0, 2}));
  CHECK_THROWS_AS(IntPolyQ::monomial(-1), BadArgs);

  CHECK(qm1 * qm1 == IntPolyQ({1, -2, 1}));
  CHECK(qm1.pow(4) == qm1 * qm1 * qm1 * qm1);
  CHECK(qm1.pow(0).is_one());
  CHECK_THROWS_AS(qm1.pow(-1), BadArgs);

  // Trailing zeros are normalized away: q^2 - q^2 has degree -1.
  CHECK((IntPolyQ::monomial(2) - IntPolyQ::monomial(2)).degree() == -1);
}

TEST_CASE("IntPolyQ rendering and wire format") {
  IntPolyQ p({1, 1, 1});
  CHECK(p.str() == "q^2 + q + 1");
  CHECK(p.latex() == "q^{2} + q + 1");
  CHECK(IntPolyQ({0, -1, 0, 2}).str() == "2*q^3 - q");
  CHECK(IntPolyQ({1, -1}).str() == "-q + 1");
  CHECK(IntPolyQ(0).str() == "0");
  CHECK(IntPolyQ(-7).str() == "-7");
  CHECK(IntPolyQ::monomial(1).str("t") == "t");

  CHECK(p.coeff_strings() == std::vector<std::string>{"1", "1", "1"});
  CHECK(IntPolyQ(0).coeff_strings() == std::vector<std::string>{"0"});
  CHECK(IntPolyQ::from_coeff_strings({"-12", "0", "3"}) == IntPolyQ({-12, 0, 3}));
  CHECK_THROWS_AS(IntPolyQ::from_coeff_strings({"1", "x"}), ParseError);

  std::mt19937 rng(2024);
  for (int t = 0; t < 50; ++t) {
    IntPolyQ r = random_intpoly(rng);
    CHECK(IntPolyQ::from_coeff_strings(r.coeff_strings()) == r);
  }
}

TEST_CASE("gaussian_binomial: worked values and symmetry") {
  CHECK(gaussian_binomial(4, 2) == IntPolyQ({1, 1, 2, 1, 1}));
  CHECK(gaussian_binomial(4, 2).str() == "q^4 + q^3 + 2*q^2 + q + 1");
  CHECK(gaussian_binomial(3, 1) == IntPolyQ({1, 1, 1}));
  CHECK(gaussian_binomial(5, 0).is_one());
  CHECK(gaussian_binomial(5, 5).is_one());
  CHECK(gaussian_binomial(0, 0).is_one());
  CHECK_THROWS_AS(gaussian_binomial(3, 4), BadArgs);
  CHECK_THROWS_AS(gaussian_binomial(3, -1), BadArgs);

  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(gaussian_binomial(n, k) == gaussian_binomial(n, n - k));
      // Counting interpretation at q = 2 and q = 3.
      CHECK(gaussian_binomial(n, k).eval(1) > 0);
    }
}

TEST_CASE("q-Pascal and absorption identities") {
  for (int e = 1; e <= 8; ++e)
    for (int i = 0; i < e; ++i)
      CHECK(gb0(e - 1, i) * IntPolyQ::monomial(e - 1 - i) + gb0(e - 1, i + 1) ==
            gaussian_binomial(e, i + 1));
  for (int d = 1; d <= 8; ++d)
    for (int i = 0; i < d; ++i)
      CHECK(gaussian_binomial(d, i + 1) * IntPolyQ::q_power_minus_one(i + 1) ==
            gaussian_binomial(d, i) * IntPolyQ::q_power_minus_one(d - i));
}

TEST_CASE("structure constants: worked values") {
  CHECK(structure_constant(1, 1, 0).is_one());
  CHECK(structure_constant(1, 1, 1) == IntPolyQ({-1, 1}));            // q - 1
  CHECK(structure_constant(2, 1, 1) == IntPolyQ({-1, 0, 1}));         // q^2 - 1
  CHECK(structure_constant(2, 2, 1) ==
        gaussian_binomial(2, 1) * gaussian_binomial(2, 1) * IntPolyQ({-1, 1}));
  // s = 2 factor: (q^2 - 1)(q^2 - q).
  CHECK(structure_constant(2, 2, 2) ==
        IntPolyQ({-1, 0, 1}) * IntPolyQ({0, -1, 1}));
  CHECK(structure_constant(4, 2, 0).is_one());
  CHECK_THROWS_AS(structure_constant(1, 2, 0), BadArgs);  // needs e <= d
  CHECK_THROWS_AS(structure_constant(3, 2, 3), BadArgs);  // needs s <= e
}

TEST_CASE("xq_expand: the q-falling factorials in the monomial basis") {
  CHECK(xq_expand(0) == BivarPoly::one(Basis::kMonomial));
  CHECK(xq_expand(1) == BivarPoly::term(Basis::kMonomial, 1, 1));

  BivarPoly x2(Basis::kMonomial);  // x^2 - (q-1)x
  x2.set_coeff(2, IntPolyQ(1));
  x2.set_coeff(1, IntPolyQ({1, -1}));
  CHECK(xq_expand(2) == x2);

  BivarPoly x3(Basis::kMonomial);  // x^3 - (q^2+q-2)x^2 + (q^3-q^2-q+1)x
  x3.set_coeff(3, IntPolyQ(1));
  x3.set_coeff(2, IntPolyQ({2, -1, -1}));
  x3.set_coeff(1, IntPolyQ({1, -1, -1, 1}));
  CHECK(xq_expand(3) == x3);

  // Monic of degree d, and evaluation matches the defining product.
  for (int d = 0; d <= 7; ++d) {
    BivarPoly e = xq_expand(d);
    CHECK(e.basis() == Basis::kMonomial);
    CHECK(e.x_degree() == d);
    if (d > 0) CHECK(e.coeff(d).is_one());
    for (long q0 : {1L, 2L, 3L, 5L}) {
      for (long x0 : {0L, 1L, 7L}) {
        mpz_class expect = 1, qpow = 1;
        for (int j = 0; j < d; ++j) {
          expect *= mpz_class(x0) - (qpow - 1);
          qpow *= q0;
        }
        CHECK(e.eval(q0, x0) == expect);
      }
    }
  }
}

TEST_CASE("basis conversion: worked example and round trips") {
  // 1 + (q+1) x_q + x_q^2  ->  1 + 2x + x^2  at q fixed symbolically:
  // x_q^2 = x^2 - (q-1)x, so the monomial form is 1 + 2x + x^2 exactly.
  XqPoly p(Basis::kXq);
  p.set_coeff(0, IntPolyQ(1));
  p.set_coeff(1, IntPolyQ({1, 1}));
  p.set_coeff(2, IntPolyQ(1));
  BivarPoly m = to_monomial(p);
  CHECK(m.basis() == Basis::kMonomial);
  CHECK(m.coeff(0) == IntPolyQ(1));
  CHECK(m.coeff(1) == IntPolyQ(2));
  CHECK(m.coeff(2) == IntPolyQ(1));
  CHECK(from_monomial(m) == p);

  // Pass-through when already in the target basis.
  CHECK(to_monomial(m) == m);
  CHECK(from_monomial(p) == p);

  std::mt19937 rng(77);
  for (int t = 0; t < 50; ++t) {
    XqPoly a = random_bivar(Basis::kXq, rng);
    CHECK(from_monomial(to_monomial(a)) == a);
    BivarPoly b = random_bivar(Basis::kMonomial, rng);
    CHECK(to_monomial(from_monomial(b)) == b);
  }
}

TEST_CASE("xq_mul: Lemma 3.1 products") {
  XqPoly x1 = BivarPoly::term(Basis::kXq, 1, 1);
  XqPoly x2 = BivarPoly::term(Basis::kXq, 2, 1);

  // x_q * x_q = x_q^2 + (q-1) x_q.
  XqPoly sq = xq_mul(x1, x1);
  CHECK(sq.coeff(2).is_one());
  CHECK(sq.coeff(1) == IntPolyQ({-1, 1}));
  CHECK(sq.coeff(0).is_zero());

  // x_q^2 * x_q = x_q^3 + (q^2-1) x_q^2; order of arguments is immaterial.
  XqPoly cb = xq_mul(x2, x1);
  CHECK(cb.coeff(3).is_one());
  CHECK(cb.coeff(2) == IntPolyQ({-1, 0, 1}));
  CHECK(cb == xq_mul(x1, x2));

  // operator* dispatches to xq_mul on the q-falling basis.
  CHECK(x1 * x1 == sq);

  std::mt19937 rng(5150);
  for (int t = 0; t < 25; ++t) {
    XqPoly a = random_bivar(Basis::kXq, rng, 4);
    XqPoly b = random_bivar(Basis::kXq, rng, 4);
    XqPoly c = random_bivar(Basis::kXq, rng, 4);
    CHECK(xq_mul(a, b) == xq_mul(b, a));
    CHECK(xq_mul(xq_mul(a, b), c) == xq_mul(a, xq_mul(b, c)));
    // The derived oracle: multiply in the monomial basis and convert back.
    CHECK(to_monomial(xq_mul(a, b)) == to_monomial(a) * to_monomial(b));
    CHECK(xq_mul(a, b + c) == xq_mul(a, b) + xq_mul(a, c));
  }

  BivarPoly mono = BivarPoly::term(Basis::kMonomial, 1, 1);
  CHECK_THROWS_AS(xq_mul(x1, mono), BadArgs);
  CHECK_THROWS_AS((void)(x1 + mono), BadArgs);
}

TEST_CASE("evaluation: x_q^d at integer points") {
  XqPoly x2 = BivarPoly::term(Basis::kXq, 2, 1);
  CHECK(x2.eval(3, 13) == 143);
  BivarPoly m2 = BivarPoly::term(Basis::kMonomial, 2, 1);
  CHECK(m2.eval(3, 13) == 169);

  // At q = 1 the two bases agree pointwise.
  std::mt19937 rng(31);
  for (int t = 0; t < 20; ++t) {
    XqPoly a = random_bivar(Basis::kXq, rng, 5);
    BivarPoly m(Basis::kMonomial);
    for (const auto& [d, c] : a.terms()) m.set_coeff(d, c);
    for (long x0 : {0L, 1L, 2L, 9L}) CHECK(a.eval(1, x0) == m.eval(1, x0));
  }
}

TEST_CASE("specialize_q: fixes q, retagging only at q = 1") {
  XqPoly p(Basis::kXq);  // 1 + (q^2+q+1) x_q + x_q^2, the P_3 polynomial
  p.set_coeff(0, IntPolyQ(1));
  p.set_coeff(1, IntPolyQ({1, 1, 1}));
  p.set_coeff(2, IntPolyQ(1));

  XqPoly at2 = p.specialize_q(2);
  CHECK(at2.basis() == Basis::kXq);
  CHECK(at2.coeff(1) == IntPolyQ(7));
  CHECK(at2.coeff(2) == IntPolyQ(1));

  // q = 1 collapses the q-falling basis to the monomial basis: x_1^d = x^d.
  XqPoly e2(Basis::kXq);  // 1 + (q+1) x_q + x_q^2, the 2K_1 polynomial
  e2.set_coeff(0, IntPolyQ(1));
  e2.set_coeff(1, IntPolyQ({1, 1}));
  e2.set_coeff(2, IntPolyQ(1));
  BivarPoly at1 = e2.specialize_q(1);
  CHECK(at1.basis() == Basis::kMonomial);
  CHECK(at1.coeff(0) == IntPolyQ(1));
  CHECK(at1.coeff(1) == IntPolyQ(2));
  CHECK(at1.coeff(2) == IntPolyQ(1));

  // Monomial-basis polynomials keep their tag at q = 1.
  BivarPoly m = BivarPoly::term(Basis::kMonomial, 1, IntPolyQ::monomial(1));
  CHECK(m.specialize_q(1).basis() == Basis::kMonomial);

  // Specializing the Gaussian binomial at q = 1 gives the binomial coefficient.
  for (int n = 0; n <= 10; ++n) {
    mpz_class binom = 1;
    for (int k = 0; k <= n; ++k) {
      CHECK(gaussian_binomial(n, k).eval(1) == binom);
      binom = binom * (n - k) / (k + 1);
    }
  }
}

TEST_CASE("BivarPoly term bookkeeping") {
  BivarPoly p(Basis::kXq);
  CHECK(p.is_zero());
  CHECK(p.x_degree() == -1);
  p.add_term(2, IntPolyQ(3));
  p.add_term(2, IntPolyQ(-3));
  CHECK(p.is_zero());  // cancelled terms are dropped
  p.set_coeff(1, IntPolyQ({1, 1}));
  CHECK(p.x_degree() == 1);
  CHECK(p.coeff(5).is_zero());
  CHECK(p.terms().size() == 1);
  CHECK_THROWS_AS(p.add_term(-1, IntPolyQ(1)), BadArgs);
  CHECK(BivarPoly::one(Basis::kXq).coeff(0).is_one());
}
