#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "support/laurent.hpp"
#include "symvol/correlators.hpp"
#include "symvol/intersections.hpp"
#include "symvol/ribbon/brute_volume.hpp"
#include "symvol/ribbon/cell_form.hpp"
#include "symvol/ribbon/enumerate.hpp"
#include "symvol/volumes.hpp"

namespace {

using namespace symvol;
using namespace symvol::ribbon;

Rational q(long p, long r = 1) { return Rational(BigInt(p), BigInt(r)); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;  // 0 = no runtime limit
  std::function<Outcome()> body;
};

std::string key(int g, int n) { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }

std::vector<std::pair<int, int>> stable_keys(int max_complexity) {
  std::vector<std::pair<int, int>> keys;
  for (int g = 0; 2 * g - 2 < max_complexity; ++g) {
    for (int n = 1; 2 * g - 2 + n <= max_complexity; ++n) {
      if (is_stable(g, n)) keys.emplace_back(g, n);
    }
  }
  return keys;
}

std::vector<RibbonGraph> trivalent_graphs(int g, int n) {
  std::vector<RibbonGraph> out;
  for (const auto& cls : enumerate(g, n, {.trivalent_only = true})) {
    for (const auto& lab : cls.labelings) out.push_back(lab.graph);
  }
  return out;
}

Outcome base_volumes() {
  Outcome o;
  o.require(volume(0, 3) == EvenPolynomial::constant(3, q(1)), "volume(0,3) != 1");
  o.require(volume(1, 1) == EvenPolynomial::monomial({1}, q(1, 48)), "volume(1,1) != L^2/48");
  for (const auto& l : std::vector<std::vector<Rational>>{{q(1), q(1), q(1)}, {q(3), q(4), q(5)}, {q(1, 2), q(7, 3), q(2)}}) {
    o.require(brute_volume(0, 3, l) == q(1), "brute (0,3) != 1");
  }
  for (const auto& l : {q(2), q(5, 3), q(11)}) {
    const std::vector<Rational> point{l};
    o.require(brute_volume(1, 1, point) == l * l / q(48), "brute (1,1) != L^2/48 at L=" + l.to_string());
  }
  return o;
}

Correlator displayed(int n) {
  if (n == 1) return Correlator::monomial({1}, q(1, 8));
  if (n == 3) return Correlator::constant(3, q(1));
  Correlator w(4);
  for (std::size_t i = 0; i < 4; ++i) {
    Exponents e(4, 0);
    e[i] = 1;
    w.add_term(e, q(3));
  }
  return w;
}

Outcome correlator_fixtures() {
  Outcome o;
  for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}}) {
    o.require(correlator_laplace(g, n) == displayed(n), "laplace W" + key(g, n));
    o.require(correlator_eo(g, n) == displayed(n), "eo W" + key(g, n));
  }
  return o;
}

Outcome triple_path() {
  Outcome o;
  const auto keys = stable_keys(5);
  for (auto [g, n] : keys) {
    const EvenPolynomial v = volume(g, n);
    o.require(v == volume_from_intersections(g, n), "recursion vs DVV at " + key(g, n));
    o.require(laplace(v) == correlator_eo(g, n), "laplace vs eo at " + key(g, n));
  }
  for (auto required : {std::pair{0, 7}, {1, 5}, {2, 3}, {3, 1}}) {
    o.require(std::find(keys.begin(), keys.end(), required) != keys.end(), "missing " + key(required.first, required.second));
  }
  if (o.ok) o.detail = std::to_string(keys.size()) + " keys";
  return o;
}

Outcome dvv_spot_values() {
  Outcome o;
  o.require(intersection(0, {0, 0, 0}) == q(1), "<t0^3>_0");
  o.require(intersection(1, {1}) == q(1, 24), "<t1>_1");
  o.require(intersection(0, {1, 0, 0, 0}) == q(1), "<t1 t0^3>_0");
  o.require(intersection(1, {2, 0}) == q(1, 24), "<t2 t0>_1");
  o.require(intersection(1, {1, 1}) == q(1, 24), "<t1^2>_1");
  return o;
}

Outcome enumeration_counts() {
  Outcome o;
  const auto torus = enumerate(1, 1);
  std::multiset<std::size_t> orders;
  for (const auto& cls : torus) orders.insert(cls.automorphisms);
  o.require(torus.size() == 2 && orders == std::multiset<std::size_t>{4, 6}, "(1,1) classes or Aut orders");
  const auto pants = enumerate(0, 3);
  o.require(labeled_count(pants) == 7, "(0,3) labeled count");
  for (const auto& cls : pants) {
    for (const auto& lab : cls.labelings) o.require(lab.automorphisms == 1, "(0,3) nontrivial labeled Aut");
  }
  return o;
}

Outcome brute_four_holed_sphere() {
  Outcome o;
  for (const auto& l : std::vector<std::vector<Rational>>{
           {q(3), q(4), q(5), q(6)}, {q(1, 2), q(9), q(2, 3), q(5)}, {q(7, 4), q(1), q(13, 5), q(3)}}) {
    Rational half_sum;
    for (const auto& x : l) half_sum += x * x / q(2);
    const Rational brute = brute_volume(0, 4, l);
    o.require(brute == evaluate(volume(0, 4), l) && brute == half_sum, "mismatch at " + l[0].to_string() + ",...");
  }
  return o;
}

bool symmetric(const EvenPolynomial& p) {
  std::vector<std::size_t> sigma(p.arity());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    EvenPolynomial permuted(p.arity());
    for (const auto& [e, c] : p.terms()) {
      Exponents f(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) f[sigma[i]] = e[i];
      permuted.add_term(f, c);
    }
    if (!(permuted == p)) return false;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return true;
}

Outcome property_suites() {
  Outcome o;
  for (auto [g, n] : stable_keys(4)) {
    const EvenPolynomial v = volume(g, n);
    o.require(symmetric(v), "symmetry at " + key(g, n));
    o.require(is_homogeneous(v, static_cast<unsigned>(volume_degree(g, n))), "homogeneity at " + key(g, n));
    for (const auto& [e, c] : v.terms()) o.require(c.sign() > 0, "positivity at " + key(g, n));
  }
  for (unsigned d = 0; d <= 4; ++d) {
    o.require(j_term_operator(d) == oracle::residue_oracle(d), "j-term vs residue at d=" + std::to_string(d));
  }
  std::size_t duality_checks = 0;
  for (auto [g, n] : {std::pair{1, 1}, {0, 4}}) {
    for (const auto& graph : trivalent_graphs(g, n)) {
      const Matrix full = kontsevich_form(graph);
      for (std::size_t h = 0; h < graph.half_edges(); ++h) {
        o.require(satisfies_duality(graph, full, h), "duality at " + key(g, n));
        ++duality_checks;
      }

      // starting half-edges: |Pf| itself is invariant
      const Rational reference = abs(pfaffian(cell_form(graph).matrix));
      std::vector<std::size_t> starts = graph.boundary_starts();
      for (std::size_t b = 0; b < graph.boundary_count(); ++b) {
        for (std::size_t h = 0; h < graph.half_edges(); ++h) {
          if (graph.boundary_of(h) != b) continue;
          auto moved = starts;
          moved[b] = h;
          o.require(abs(pfaffian(cell_form(graph, moved).matrix)) == reference, "|Pf| depends on start at " + key(g, n));
        }
      }

      // eliminations: |Pf| rescales by |det P_E|, the product is invariant
      const CellForm base = cell_form(graph);
      const Rational density = top_form_density(base);
      for (unsigned long mask = 0; mask < (1UL << graph.edge_count()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountl(mask)) != graph.boundary_count()) continue;
        std::vector<std::size_t> choice;
        for (std::size_t e = 0; e < graph.edge_count(); ++e) {
          if ((mask >> e) & 1UL) choice.push_back(e);
        }
        try {
          const CellForm cell = cell_form(graph, starts, choice);
          o.require(top_form_density(cell) == density, "|Pf| |det P_E| depends on elimination at " + key(g, n));
          if (abs(cell.pivot_minor) == abs(base.pivot_minor)) {
            o.require(abs(pfaffian(cell.matrix)) == reference, "|Pf| differs at equal minor at " + key(g, n));
          }
        } catch (const DegenerateCellError&) {
        }
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(duality_checks) +
               " duality checks; elimination invariance is of |Pf| * |det P_E| (raw |Pf| rescales with the minor)";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "base volumes and brute-force reproduction", 1.0, base_volumes},
      {"AC2", "displayed correlators from both paths", 1.0, correlator_fixtures},
      {"AC3", "recursion = DVV assembly, Laplace = EO for 2g-2+n <= 5", 120.0, triple_path},
      {"AC4", "intersection spot values", 0.0, dvv_spot_values},
      {"AC5", "enumeration counts (1,1) and (0,3)", 5.0, enumeration_counts},
      {"AC6", "brute-force Vol(0,4) at three points", 60.0, brute_four_holed_sphere},
      {"AC7", "property suites", 0.0, property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      outcome.ok = false;
      outcome.detail = "runtime limit exceeded";
    }
    char timing[64];
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.3fs < %.0fs", seconds, c.limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.3fs", seconds);
    }
    std::printf("[%s] %s %s (%s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), timing,
                outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
    if (!outcome.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
