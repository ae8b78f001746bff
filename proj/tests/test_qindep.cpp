#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "qti/errors.hpp"
#include "qti/qindep.hpp"

using namespace qti;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return graph_make(n, std::move(e));
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return graph_make(n, std::move(e));
}

Graph random_graph(int n, std::mt19937& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return graph_make(n, std::move(e));
}

const IntPolyQ kQm1 = IntPolyQ::q_power_minus_one(1);  // q - 1

}  // namespace

TEST_CASE("q_valid: the P_3 strata by hand") {
  Graph p3 = path(3);

  CHECK(q_valid(p3, {}, {}));
  CHECK_FALSE(q_valid(p3, {}, {1}));  // min of the empty P is +infinity

  CHECK(q_valid(p3, {1}, {}));
  CHECK(q_valid(p3, {1}, {2}));       // component {1,2} led by its P-vertex
  CHECK(q_valid(p3, {1}, {3}));       // P-free {3} with min 3 > min P = 1
  CHECK(q_valid(p3, {1}, {2, 3}));
  CHECK(q_valid(p3, {2}, {}));
  CHECK(q_valid(p3, {2}, {3}));
  CHECK_FALSE(q_valid(p3, {2}, {1}));     // component {1,2} starts below 2
  CHECK_FALSE(q_valid(p3, {2}, {1, 3}));
  CHECK(q_valid(p3, {3}, {}));
  CHECK_FALSE(q_valid(p3, {3}, {1}));     // P-free {1} below min P
  CHECK_FALSE(q_valid(p3, {3}, {2}));
  CHECK(q_valid(p3, {1, 3}, {}));
  CHECK_FALSE(q_valid(p3, {1, 3}, {2}));  // one component, two P-vertices

  CHECK_THROWS_AS(q_valid(p3, {1, 2}, {}), BadArgs);   // P not independent
  CHECK_THROWS_AS(q_valid(p3, {1}, {1}), BadArgs);     // overlap
  CHECK_THROWS_AS(q_valid(p3, {4}, {}), BadArgs);      // out of range
  CHECK_THROWS_AS(q_valid(p3, {1}, {0}), BadArgs);
}

TEST_CASE("pq_weight: worked values") {
  Graph p3 = path(3);

  CHECK(pq_weight(p3, {}, {}).is_one());
  CHECK(pq_weight(p3, {1}, {}).is_one());
  CHECK(pq_weight(p3, {1, 3}, {}).is_one());
  CHECK(pq_weight(p3, {1}, {2}) == kQm1);        // P-component of size 2
  CHECK(pq_weight(p3, {1}, {3}) == kQm1);        // P-free, d = 1
  CHECK(pq_weight(p3, {1}, {2, 3}) == kQm1 * kQm1);
  CHECK(pq_weight(p3, {2}, {3}) == kQm1);

  CHECK_THROWS_AS(pq_weight(p3, {3}, {1}), InvalidStratum);
  CHECK_THROWS_AS(pq_weight(p3, {1, 3}, {2}), InvalidStratum);
  CHECK_THROWS_AS(pq_weight(p3, {1, 2}, {}), BadArgs);

  // A P-free component below a later P-vertex sees d = 1, not 2.
  Graph e3 = graph_make(3, {});
  CHECK(pq_weight(e3, {1, 3}, {2}) == kQm1);  // d = |{1}| = 1
  // Both P-vertices precede the P-free component: d = 2, weight q^2 - 1.
  Graph e4 = graph_make(4, {});
  CHECK(pq_weight(e4, {1, 2}, {4}) == IntPolyQ::q_power_minus_one(2));

  // Weights of valid strata evaluate to >= 1 at every prime power.
  for (int q0 : {2, 3, 4, 5}) {
    CHECK(pq_weight(p3, {1}, {2, 3}).eval(q0) >= 1);
  }
}

TEST_CASE("symbolic coefficients: worked polynomials") {
  // K_2: 1 + (q + 1) x_q.
  auto k2 = symbolic_coefficients(complete(2));
  CHECK(k2.size() == 2);
  CHECK(k2[0].is_one());
  CHECK(k2[1] == IntPolyQ({1, 1}));

  // 2K_1: 1 + (q + 1) x_q + x_q^2.
  auto e2 = symbolic_coefficients(graph_make(2, {}));
  CHECK(e2.size() == 3);
  CHECK(e2[1] == IntPolyQ({1, 1}));
  CHECK(e2[2].is_one());

  // P_3: 1 + (q^2 + q + 1) x_q + x_q^2.
  auto p3 = symbolic_coefficients(path(3));
  CHECK(p3.size() == 3);
  CHECK(p3[1] == IntPolyQ({1, 1, 1}));
  CHECK(p3[2].is_one());

  // K_1: 1 + x_q.
  auto k1 = symbolic_coefficients(graph_make(1, {}));
  CHECK(k1.size() == 2);
  CHECK(k1[1].is_one());

  // Length runs to alpha(G); indexing past it yields zero.
  CHECK(symbolic_coefficients(graph_make(0, {})).size() == 1);
  CHECK(symbolic_coefficient(complete(3), 1) == IntPolyQ({1, 1, 1}));
  CHECK(symbolic_coefficient(complete(3), 2).is_zero());
  CHECK(symbolic_coefficient(path(3), 0).is_one());

  XqPoly ip = q_independence_polynomial(path(3));
  CHECK(ip.basis() == Basis::kXq);
  CHECK(ip.coeff(1) == IntPolyQ({1, 1, 1}));
  CHECK(ip.x_degree() == 2);
}

TEST_CASE("c_1(q) counts lines: 1 + q + ... + q^{n-1} for any graph") {
  std::mt19937 rng(808);
  for (int t = 0; t < 10; ++t) {
    Graph g = random_graph(6, rng);
    std::vector<mpz_class> ones(6, 1);
    CHECK(symbolic_coefficient(g, 1) == IntPolyQ(ones));
  }
}

TEST_CASE("specializing at q = 1 recovers the independence polynomial") {
  std::mt19937 rng(1203);
  for (int t = 0; t < 15; ++t) {
    Graph g = random_graph(7, rng);
    CHECK(q_independence_polynomial(g).specialize_q(1) ==
          independence_polynomial(g));
  }
}

TEST_CASE("product law and relabeling invariance") {
  std::mt19937 rng(42);
  for (int t = 0; t < 10; ++t) {
    Graph a = random_graph(4, rng);
    Graph b = random_graph(4, rng);
    CHECK(q_independence_polynomial(disjoint_union(a, b)) ==
          xq_mul(q_independence_polynomial(a), q_independence_polynomial(b)));
  }

  // The coefficients are graph invariants: relabel P_4 and compare.
  Graph p4 = path(4);
  Graph relabeled = graph_make(4, {{1, 3}, {2, 4}, {3, 4}});  // 2-4-3-1
  CHECK(symbolic_coefficients(p4) == symbolic_coefficients(relabeled));
}

TEST_CASE("cross_validate: worked reports") {
  CrossValidateReport r = cross_validate(path(3), 2);
  CHECK(r.pass);
  CHECK(r.q0 == 2);
  CHECK(r.symbolic == std::vector<mpz_class>{1, 7, 1});
  CHECK(r.brute == std::vector<mpz_class>{1, 7, 1, 0});
  CHECK(r.strata.size() == 9);  // the nine valid strata of P_3
  CHECK(r.mismatches.empty());
  for (const auto& s : r.strata) {
    CHECK(s.ok());
    CHECK(s.valid == (s.actual > 0));
  }
  CHECK(std::is_sorted(r.strata.begin(), r.strata.end(),
                       [](const StratumCheck& a, const StratumCheck& b) {
                         if (a.label.p.size() != b.label.p.size())
                           return a.label.p.size() < b.label.p.size();
                         if (a.label.p != b.label.p) return a.label.p < b.label.p;
                         return a.label.q < b.label.q;
                       }));

  CHECK(cross_validate(path(3), 3).symbolic ==
        std::vector<mpz_class>{1, 13, 1});
  CHECK(cross_validate(complete(2), 2).symbolic == std::vector<mpz_class>{1, 3});
  CHECK(cross_validate(graph_make(3, {}), 2).symbolic ==
        std::vector<mpz_class>{1, 7, 7, 1});
  CHECK(cross_validate(graph_make(0, {}), 2).pass);

  CHECK_THROWS_AS(cross_validate(path(3), 6), NotAPrimePower);
  CHECK_THROWS_AS(cross_validate(path(3), 2, 4), TooLarge);
}
