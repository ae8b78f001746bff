#include "qti/qindep.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <utility>

#include "qti/errors.hpp"
#include "qti/subspace.hpp"

namespace qti {

namespace {

std::uint64_t mask_of(const Graph& g, const std::vector<int>& vs,
                      const char* what) {
  std::uint64_t m = 0;
  for (int v : vs) {
    if (v < 1 || v > g.n()) {
      throw BadArgs(std::string(what) + " vertex " + std::to_string(v) +
                    " outside 1.." + std::to_string(g.n()));
    }
    m |= std::uint64_t{1} << (v - 1);
  }
  return m;
}

// Factored form of a stratum weight: (q-1)^epow * prod_j (q^{dvals[j]} - 1).
struct WeightShape {
  int epow = 0;
  std::vector<int> dvals;  // kept sorted

  bool operator<(const WeightShape& o) const {
    return std::tie(epow, dvals) < std::tie(o.epow, o.dvals);
  }
};

// Checks the Lemma conditions on the components of G[P u Q] and, when they
// hold, reports the factored weight.  Works on raw masks; tolerates a
// non-independent P (two adjacent P-vertices share a component and fail
// condition (i)).
bool analyze_stratum(const Graph& g, std::uint64_t pmask, std::uint64_t qmask,
                     WeightShape& shape) {
  shape.epow = 0;
  shape.dvals.clear();
  const std::uint64_t s = pmask | qmask;
  if (s == 0) return true;       // P = Q = {}: empty product
  if (pmask == 0) return false;  // P = {}: min(P) = +inf fails condition (iii)
  const int minp = std::countr_zero(pmask);
  std::uint64_t unseen = s;
  while (unseen) {
    const int v0 = std::countr_zero(unseen);  // minimum of its component
    std::uint64_t comp = std::uint64_t{1} << v0;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      while (frontier) {
        const int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= g.adjacency()[u];
      }
      frontier = next & s & ~comp;
      comp |= frontier;
    }
    unseen &= ~comp;
    const std::uint64_t pc = comp & pmask;
    if (pc) {
      if (std::popcount(pc) > 1) return false;            // (i)
      if (std::countr_zero(pc) != v0) return false;       // (ii)
    } else {
      if (v0 < minp) return false;                        // (iii)
      shape.dvals.push_back(
          std::popcount(pmask & ((std::uint64_t{1} << v0) - 1)));
    }
    shape.epow += std::popcount(comp) - 1;
  }
  std::sort(shape.dvals.begin(), shape.dvals.end());
  return true;
}

IntPolyQ expand_shape(const WeightShape& shape) {
  IntPolyQ w = IntPolyQ::q_power_minus_one(1).pow(shape.epow);
  for (int d : shape.dvals) w *= IntPolyQ::q_power_minus_one(d);
  return w;
}

void check_pq_args(const Graph& g, const std::vector<int>& p,
                   const std::vector<int>& q, std::uint64_t& pmask,
                   std::uint64_t& qmask) {
  pmask = mask_of(g, p, "P");
  qmask = mask_of(g, q, "Q");
  if (pmask & qmask) throw BadArgs("P and Q must be disjoint");
  for (int u : p) {
    if (g.neighbor_mask(u) & pmask) {
      throw BadArgs("P is not independent: vertex " + std::to_string(u) +
                    " has a neighbor in P");
    }
  }
}

}  // namespace

bool q_valid(const Graph& g, const std::vector<int>& p,
             const std::vector<int>& q) {
  std::uint64_t pmask = 0, qmask = 0;
  check_pq_args(g, p, q, pmask, qmask);
  WeightShape shape;
  return analyze_stratum(g, pmask, qmask, shape);
}

IntPolyQ pq_weight(const Graph& g, const std::vector<int>& p,
                   const std::vector<int>& q) {
  std::uint64_t pmask = 0, qmask = 0;
  check_pq_args(g, p, q, pmask, qmask);
  WeightShape shape;
  if (!analyze_stratum(g, pmask, qmask, shape)) {
    throw InvalidStratum("(P, Q) stratum violates the component conditions");
  }
  return expand_shape(shape);
}

namespace {

// Aggregated strata for one coefficient: multiplicity of each weight shape.
using ShapeCounts = std::map<WeightShape, mpz_class>;

// Sweeps every independent P (include/exclude recursion) and every
// Q subset of its complement, accumulating valid strata by weight shape.
void sweep(const Graph& g, std::uint64_t pmask, int psize, std::uint64_t cand,
           std::vector<ShapeCounts>& by_size) {
  const std::uint64_t all =
      g.n() == 64 ? ~std::uint64_t{0}
                  : (g.n() == 0 ? 0 : (std::uint64_t{1} << g.n()) - 1);
  const std::uint64_t comp = all & ~pmask;
  WeightShape shape;
  // Submask sweep of the complement (descending mask order, ending at 0).
  std::uint64_t qmask = comp;
  while (true) {
    if (analyze_stratum(g, pmask, qmask, shape)) {
      ++by_size[psize][shape];
    }
    if (qmask == 0) break;
    qmask = (qmask - 1) & comp;
  }
  while (cand) {
    const int v0 = std::countr_zero(cand);
    cand &= cand - 1;
    sweep(g, pmask | (std::uint64_t{1} << v0), psize + 1,
          cand & ~g.adjacency()[v0], by_size);
  }
}

std::vector<ShapeCounts> collect_strata(const Graph& g) {
  std::vector<ShapeCounts> by_size(g.n() + 1);
  const std::uint64_t all =
      g.n() == 64 ? ~std::uint64_t{0}
                  : (g.n() == 0 ? 0 : (std::uint64_t{1} << g.n()) - 1);
  sweep(g, 0, 0, all, by_size);
  return by_size;
}

std::vector<IntPolyQ> expand_strata(const std::vector<ShapeCounts>& by_size) {
  std::vector<IntPolyQ> coeffs;
  for (const ShapeCounts& counts : by_size) {
    IntPolyQ c;
    for (const auto& [shape, mult] : counts) {
      c += IntPolyQ(mult) * expand_shape(shape);
    }
    coeffs.push_back(std::move(c));
  }
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

}  // namespace

std::vector<IntPolyQ> symbolic_coefficients(const Graph& g) {
  return expand_strata(collect_strata(g));
}

IntPolyQ symbolic_coefficient(const Graph& g, int i) {
  if (i < 0) return IntPolyQ();
  const auto coeffs = symbolic_coefficients(g);
  return i < static_cast<int>(coeffs.size()) ? coeffs[i] : IntPolyQ();
}

XqPoly q_independence_polynomial(const Graph& g) {
  XqPoly p(Basis::kXq);
  const auto coeffs = symbolic_coefficients(g);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    p.set_coeff(static_cast<int>(i), coeffs[i]);
  }
  return p;
}

namespace {

std::string set_str(const std::vector<int>& vs) {
  std::ostringstream out;
  out << "{";
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (j) out << ",";
    out << vs[j];
  }
  out << "}";
  return out.str();
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

CrossValidateReport cross_validate(const Graph& g, int q0,
                                   long long guard_limit) {
  const Field& field = Field::get(q0);
  const AltSpace space = graphical_space(g, field);

  CrossValidateReport report;
  report.q0 = q0;

  // Guard identical to the oracle's (the stratified enumeration below visits
  // the same canonical matrices).
  mpz_class estimate = 0;
  for (int i = 0; i <= g.n(); ++i) estimate += grassmannian_size(g.n(), i, q0);
  if (estimate > mpz_class(static_cast<long>(guard_limit))) {
    throw TooLarge("cross-validation of a " + std::to_string(g.n()) +
                       "-vertex graph at q = " + std::to_string(q0) +
                       " exceeds the guard limit " + std::to_string(guard_limit),
                   estimate.get_str() + " canonical matrices");
  }

  // Brute side: totals plus per-stratum counts.
  std::map<PQLabel, mpz_class> actual;
  report.brute.assign(g.n() + 1, 0);
  for (int i = 0; i <= g.n(); ++i) {
    for_each_subspace(field, g.n(), i, [&](const FqMatrix& rows) {
      if (!is_totally_isotropic_rows(space, rows)) return;
      ++report.brute[i];
      ++actual[classify_pq_rows(rows)];
    });
  }

  // Symbolic side: stratum weights evaluated at q0.
  std::map<PQLabel, mpz_class> expected;
  const mpz_class qz(q0);
  for (int i = 0; i <= g.n(); ++i) {
    independent_sets(g, i, [&](const std::vector<int>& p) {
      const std::uint64_t pmask = mask_of(g, p, "P");
      const std::uint64_t all =
          g.n() == 64 ? ~std::uint64_t{0}
                      : (g.n() == 0 ? 0 : (std::uint64_t{1} << g.n()) - 1);
      const std::uint64_t comp = all & ~pmask;
      std::uint64_t qmask = comp;
      WeightShape shape;
      while (true) {
        if (analyze_stratum(g, pmask, qmask, shape)) {
          expected[PQLabel{p, mask_to_vertices(qmask)}] =
              expand_shape(shape).eval(qz);
        }
        if (qmask == 0) break;
        qmask = (qmask - 1) & comp;
      }
    });
  }

  // Merge and compare.
  std::map<PQLabel, StratumCheck> merged;
  for (const auto& [label, count] : expected) {
    StratumCheck c;
    c.label = label;
    c.valid = true;
    c.expected = count;
    merged.emplace(label, std::move(c));
  }
  for (const auto& [label, count] : actual) {
    auto [it, inserted] = merged.try_emplace(label);
    if (inserted) {
      it->second.label = label;
      it->second.valid = false;  // not produced by the valid-stratum sweep
    }
    it->second.actual = count;
  }

  report.strata.reserve(merged.size());
  for (auto& [label, check] : merged) report.strata.push_back(std::move(check));
  std::sort(report.strata.begin(), report.strata.end(),
            [](const StratumCheck& a, const StratumCheck& b) {
              if (a.label.p.size() != b.label.p.size()) {
                return a.label.p.size() < b.label.p.size();
              }
              if (a.label.p != b.label.p) return a.label.p < b.label.p;
              return a.label.q < b.label.q;
            });

  const auto coeffs = symbolic_coefficients(g);
  report.symbolic.reserve(coeffs.size());
  for (const IntPolyQ& c : coeffs) report.symbolic.push_back(c.eval(qz));

  report.pass = true;
  for (std::size_t i = 0; i < report.brute.size(); ++i) {
    const mpz_class& sym =
        i < report.symbolic.size() ? report.symbolic[i] : mpz_class(0);
    if (sym != report.brute[i]) {
      report.pass = false;
      std::ostringstream line;
      line << "c_" << i << ": symbolic " << sym.get_str() << " != brute "
           << report.brute[i].get_str();
      report.mismatches.push_back(line.str());
    }
  }
  for (const StratumCheck& check : report.strata) {
    if (check.ok()) continue;
    report.pass = false;
    std::ostringstream line;
    line << "i=" << check.label.p.size() << " P=" << set_str(check.label.p)
         << " Q=" << set_str(check.label.q) << ": expected "
         << check.expected.get_str() << ", actual " << check.actual.get_str();
    report.mismatches.push_back(line.str());
  }
  return report;
}

}  // namespace qti
