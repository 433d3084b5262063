#include "symvol/ribbon/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>

namespace symvol::ribbon {

namespace {

// Nonincreasing sequences of `parts` integers >= 3 summing to `total`.
void vertex_degree_partitions(std::size_t total, std::size_t parts, bool trivalent_only,
                              std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t left,
                                                                       std::size_t slots,
                                                                       std::size_t cap) {
    if (slots == 0) {
      if (left == 0) out.push_back(current);
      return;
    }
    const std::size_t hi = std::min(cap, left - 3 * (slots - 1));
    for (std::size_t d = hi; d >= 3; --d) {
      if (trivalent_only && d != 3) continue;
      current.push_back(d);
      rec(left - d, slots - 1, d);
      current.pop_back();
    }
  };
  if (parts == 0 || total < 3 * parts) return;
  rec(total, parts, total);
}

// All fixed-point-free involutions on {0..size-1}.
std::vector<Permutation> perfect_matchings(std::size_t size) {
  std::vector<Permutation> out;
  std::vector<std::size_t> images(size, size);
  std::function<void()> rec = [&]() {
    std::size_t first = 0;
    while (first < size && images[first] != size) ++first;
    if (first == size) {
      out.emplace_back(images);
      return;
    }
    for (std::size_t other = first + 1; other < size; ++other) {
      if (images[other] != size) continue;
      images[first] = other;
      images[other] = first;
      rec();
      images[first] = size;
      images[other] = size;
    }
  };
  rec();
  return out;
}

Permutation consecutive_cycles(const std::vector<std::size_t>& degrees) {
  std::vector<Cycle> cycles;
  std::size_t next = 0;
  for (std::size_t d : degrees) {
    Cycle c(d);
    std::iota(c.begin(), c.end(), next);
    next += d;
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(next, cycles);
}

bool generates_transitive_group(const Permutation& a, const Permutation& b) {
  std::vector<bool> seen(a.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : {a(x), b(x)}) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == a.size();
}

}  // namespace

std::size_t half_edge_limit_from_environment() {
  if (const char* value = std::getenv(kHalfEdgeLimitVariable); value != nullptr && *value != 0) {
    try {
      return static_cast<std::size_t>(std::stoul(value));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(kHalfEdgeLimitVariable) + " is not a number: " + value);
    }
  }
  return kDefaultHalfEdgeLimit;
}

std::vector<GraphClass> enumerate(int genus, int n, const EnumerationOptions& options) {
  if (genus < 0 || n < 1 || 2 * genus - 2 + n <= 0) {
    throw std::invalid_argument("enumerate: (g, n) must be stable");
  }
  const std::size_t limit = options.max_half_edges.value_or(half_edge_limit_from_environment());
  // Edge counts: v = k + 2 - 2g - n vertices, each of degree >= 3.
  const long k_max = 6L * genus - 6 + 3L * n;
  if (static_cast<std::size_t>(2 * k_max) > limit) {
    throw ResourceLimitError("enumerate: type (" + std::to_string(genus) + "," + std::to_string(n) +
                             ") needs up to " + std::to_string(2 * k_max) +
                             " half-edges, above the limit of " + std::to_string(limit) + " (" +
                             kHalfEdgeLimitVariable + ")");
  }
  const long k_min = options.trivalent_only ? k_max : std::max(1L, 2L * genus - 1 + n);

  std::map<std::vector<std::size_t>, GraphClass> classes;
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));

  for (long k = k_min; k <= k_max; ++k) {
    const long v = k + 2 - 2L * genus - n;
    if (v < 1) continue;
    const auto size = static_cast<std::size_t>(2 * k);
    std::vector<std::vector<std::size_t>> partitions;
    vertex_degree_partitions(size, static_cast<std::size_t>(v), options.trivalent_only, partitions);
    if (partitions.empty()) continue;

    std::vector<Permutation> matchings = perfect_matchings(size);
    if (options.shuffle_seed) std::shuffle(matchings.begin(), matchings.end(), rng);
    if (options.shuffle_seed) std::shuffle(partitions.begin(), partitions.end(), rng);

    for (const auto& degrees : partitions) {
      const Permutation vertices = consecutive_cycles(degrees);
      const Permutation vertices_inverse = vertices.inverse();
      for (const auto& edges : matchings) {
        if (compose(vertices_inverse, edges).cycle_count() != static_cast<std::size_t>(n)) continue;
        if (!generates_transitive_group(vertices, edges)) continue;
        const RibbonGraph graph = RibbonGraph::make(vertices, edges);
        CanonicalForm form = canonical_form(graph, false);
        if (classes.contains(form.code)) continue;
        classes.emplace(std::move(form.code),
                        GraphClass{canonical_representative(graph, false), form.automorphism_count, {}});
      }
    }
  }

  std::vector<GraphClass> out;
  out.reserve(classes.size());
  for (auto& [code, graph_class] : classes) {
    std::map<std::vector<std::size_t>, LabeledGraph> labeled;
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    do {
      const RibbonGraph candidate = graph_class.representative.relabeled(labels);
      CanonicalForm form = canonical_form(candidate, true);
      if (labeled.contains(form.code)) continue;
      labeled.emplace(std::move(form.code),
                      LabeledGraph{canonical_representative(candidate, true), form.automorphism_count});
    } while (std::next_permutation(labels.begin(), labels.end()));
    for (auto& [labeled_code, entry] : labeled) graph_class.labelings.push_back(std::move(entry));
    out.push_back(std::move(graph_class));
  }
  return out;
}

std::size_t labeled_count(const std::vector<GraphClass>& classes) {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.labelings.size();
  return total;
}

}  // namespace symvol::ribbon
