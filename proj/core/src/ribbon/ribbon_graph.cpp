#include "symvol/ribbon/ribbon_graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace symvol::ribbon {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

// Assigns each point the index of its cycle (cycles ordered by smallest point).
std::vector<std::size_t> orbit_index(const Permutation& p, std::size_t& count) {
  std::vector<std::size_t> index(p.size(), kUnset);
  count = 0;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (index[start] != kUnset) continue;
    for (std::size_t x = start; index[x] == kUnset; x = p(x)) index[x] = count;
    ++count;
  }
  return index;
}

bool is_transitive(const Permutation& a, const Permutation& b) {
  const std::size_t n = a.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
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
  return reached == n;
}

// Breadth-first relabeling from `start`, exploring gamma0 then gamma1.
// Returns the traversal order and fills `code`.
std::vector<std::size_t> traverse(const RibbonGraph& g, std::size_t start, bool labeled,
                                  std::vector<std::size_t>& label,
                                  std::vector<std::size_t>& code) {
  const std::size_t size = g.half_edges();
  std::fill(label.begin(), label.end(), kUnset);
  std::vector<std::size_t> order;
  order.reserve(size);
  label[start] = 0;
  order.push_back(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t h = order[i];
    for (std::size_t next : {g.gamma0()(h), g.gamma1()(h)}) {
      if (label[next] == kUnset) {
        label[next] = order.size();
        order.push_back(next);
      }
    }
  }
  code.clear();
  for (std::size_t h : order) {
    code.push_back(label[g.gamma0()(h)]);
    code.push_back(label[g.gamma1()(h)]);
    if (labeled) code.push_back(static_cast<std::size_t>(g.label_of_boundary(g.boundary_of(h))));
  }
  return order;
}

}  // namespace

RibbonGraph RibbonGraph::make(Permutation gamma0, Permutation gamma1, std::vector<int> labels) {
  const std::size_t size = gamma0.size();
  if (size == 0 || size % 2 != 0 || gamma1.size() != size) {
    throw GraphError(GraphErrorKind::kSizeMismatch,
                     "ribbon graph: permutations must act on the same set of 2k > 0 half-edges");
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (gamma1(i) == i) {
      throw GraphError(GraphErrorKind::kFixedPointInEdges,
                       "ribbon graph: gamma1 fixes half-edge " + std::to_string(i + 1));
    }
    if (gamma1(gamma1(i)) != i) {
      throw GraphError(GraphErrorKind::kEdgesNotInvolution, "ribbon graph: gamma1 is not an involution");
    }
  }
  for (const auto& cycle : gamma0.cycles()) {
    if (cycle.size() < 3) {
      throw GraphError(GraphErrorKind::kShortVertexCycle,
                       "ribbon graph: vertex of degree " + std::to_string(cycle.size()) +
                           " at half-edge " + std::to_string(cycle.front() + 1));
    }
  }
  if (!is_transitive(gamma0, gamma1)) {
    throw GraphError(GraphErrorKind::kDisconnected, "ribbon graph: <gamma0, gamma1> is not transitive");
  }

  RibbonGraph g;
  g.gamma2_ = compose(gamma0.inverse(), gamma1);
  g.gamma0_ = std::move(gamma0);
  g.gamma1_ = std::move(gamma1);

  std::size_t edges = 0;
  std::size_t boundaries = 0;
  g.vertex_of_ = orbit_index(g.gamma0_, g.vertex_count_);
  g.edge_of_ = orbit_index(g.gamma1_, edges);
  g.boundary_of_ = orbit_index(g.gamma2_, boundaries);

  g.degree_.resize(size);
  std::vector<std::size_t> vertex_size(g.vertex_count_, 0);
  for (std::size_t h = 0; h < size; ++h) ++vertex_size[g.vertex_of_[h]];
  for (std::size_t h = 0; h < size; ++h) g.degree_[h] = vertex_size[g.vertex_of_[h]];

  g.boundary_starts_.assign(boundaries, kUnset);
  for (std::size_t h = 0; h < size; ++h) {
    auto& s = g.boundary_starts_[g.boundary_of_[h]];
    if (s == kUnset) s = h;
  }

  if (labels.empty()) {
    labels.resize(boundaries);
    std::iota(labels.begin(), labels.end(), 1);
  }
  if (labels.size() != boundaries) {
    throw GraphError(GraphErrorKind::kBadLabeling,
                     "ribbon graph: " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(boundaries) + " boundaries");
  }
  std::vector<bool> used(boundaries + 1, false);
  for (int l : labels) {
    if (l < 1 || static_cast<std::size_t>(l) > boundaries || used[static_cast<std::size_t>(l)]) {
      throw GraphError(GraphErrorKind::kBadLabeling, "ribbon graph: labels must be a bijection onto 1..n");
    }
    used[static_cast<std::size_t>(l)] = true;
  }
  g.labels_ = std::move(labels);

  const long euler = static_cast<long>(g.vertex_count_) - static_cast<long>(edges) +
                     static_cast<long>(boundaries);
  if ((2 - euler) % 2 != 0 || 2 - euler < 0) {
    throw GraphError(GraphErrorKind::kBadType, "ribbon graph: genus is not a nonnegative integer");
  }
  g.type_ = {static_cast<int>((2 - euler) / 2), static_cast<int>(boundaries)};
  return g;
}

RibbonGraph RibbonGraph::make(Permutation gamma0, Permutation gamma1,
                              const std::map<std::size_t, int>& labels_by_half_edge) {
  // Validate structure first with the identity labeling, then translate.
  RibbonGraph probe = make(gamma0, gamma1);
  std::vector<int> labels(probe.boundary_count(), 0);
  for (const auto& [h, l] : labels_by_half_edge) {
    if (h >= probe.half_edges()) {
      throw GraphError(GraphErrorKind::kBadLabeling, "ribbon graph: label key out of range");
    }
    int& slot = labels[probe.boundary_of(h)];
    if (slot != 0) {
      throw GraphError(GraphErrorKind::kBadLabeling, "ribbon graph: boundary labeled twice");
    }
    slot = l;
  }
  return probe.relabeled(std::move(labels));
}

bool RibbonGraph::is_trivalent() const {
  return std::all_of(degree_.begin(), degree_.end(), [](std::size_t d) { return d == 3; });
}

RibbonGraph RibbonGraph::relabeled(std::vector<int> labels) const {
  return make(gamma0_, gamma1_, std::move(labels));
}

GraphType graph_type(const RibbonGraph& graph) { return graph.type(); }

CanonicalForm canonical_form(const RibbonGraph& graph, bool labeled) {
  const std::size_t size = graph.half_edges();
  std::vector<std::size_t> label(size);
  std::vector<std::size_t> code;
  CanonicalForm best;
  for (std::size_t start = 0; start < size; ++start) {
    traverse(graph, start, labeled, label, code);
    if (best.automorphism_count == 0 || code < best.code) {
      best.code = code;
      best.relabeling = label;
      best.automorphism_count = 1;
    } else if (code == best.code) {
      ++best.automorphism_count;
    }
  }
  return best;
}

RibbonGraph canonical_representative(const RibbonGraph& graph, bool labeled) {
  const CanonicalForm form = canonical_form(graph, labeled);
  const std::size_t size = graph.half_edges();
  std::vector<std::size_t> g0(size);
  std::vector<std::size_t> g1(size);
  std::vector<std::size_t> original(size);
  for (std::size_t h = 0; h < size; ++h) {
    const std::size_t r = form.relabeling[h];
    g0[r] = form.relabeling[graph.gamma0()(h)];
    g1[r] = form.relabeling[graph.gamma1()(h)];
    original[r] = h;
  }
  RibbonGraph unlabeled = RibbonGraph::make(Permutation(g0), Permutation(g1));
  std::vector<int> labels(unlabeled.boundary_count());
  for (std::size_t b = 0; b < labels.size(); ++b) {
    const std::size_t h = original[unlabeled.boundary_starts()[b]];
    labels[b] = graph.label_of_boundary(graph.boundary_of(h));
  }
  return unlabeled.relabeled(std::move(labels));
}

std::vector<Permutation> automorphisms(const RibbonGraph& graph, bool labeled) {
  const std::size_t size = graph.half_edges();
  std::vector<std::size_t> label(size);
  std::vector<std::size_t> base_code;
  const std::vector<std::size_t> base_order = traverse(graph, 0, labeled, label, base_code);
  std::vector<Permutation> out;
  std::vector<std::size_t> code;
  for (std::size_t target = 0; target < size; ++target) {
    const std::vector<std::size_t> order = traverse(graph, target, labeled, label, code);
    if (code != base_code) continue;
    std::vector<std::size_t> images(size);
    for (std::size_t i = 0; i < size; ++i) images[base_order[i]] = order[i];
    out.emplace_back(std::move(images));
  }
  return out;
}

}  // namespace symvol::ribbon
