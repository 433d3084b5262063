#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "symvol/ribbon/permutation.hpp"

namespace symvol::ribbon {

enum class GraphErrorKind {
  kSizeMismatch,       ///< permutations act on sets of different or odd size
  kFixedPointInEdges,  ///< gamma1 fixes a half-edge
  kEdgesNotInvolution, ///< gamma1 is not an involution
  kShortVertexCycle,   ///< gamma0 has a cycle of length 1 or 2
  kDisconnected,       ///< <gamma0, gamma1> is not transitive
  kBadLabeling,        ///< labels are not a bijection onto {1, ..., n}
  kBadType,            ///< genus formula is not a nonnegative integer
};

class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

struct GraphType {
  int genus = 0;
  int n = 0;
  friend bool operator==(const GraphType&, const GraphType&) = default;
};

/// Ribbon graph given by half-edge permutations: gamma0 (vertices), gamma1
/// (edges) and the derived gamma2 = gamma0^{-1} o gamma1 (boundaries, gamma1
/// applied first), together with a boundary labeling.
///
/// Edges are indexed by the order of their smallest half-edge, boundaries and
/// vertices likewise. Labels run over 1..n.
class RibbonGraph {
 public:
  /// Validates the permutation pair. `labels[b]` is the label of boundary b
  /// (cycles of gamma2 ordered by smallest half-edge); an empty vector means
  /// the identity labeling. Throws GraphError.
  static RibbonGraph make(Permutation gamma0, Permutation gamma1, std::vector<int> labels = {});

  /// Same, with labels keyed by any half-edge of the labeled boundary.
  static RibbonGraph make(Permutation gamma0, Permutation gamma1,
                          const std::map<std::size_t, int>& labels_by_half_edge);

  const Permutation& gamma0() const { return gamma0_; }
  const Permutation& gamma1() const { return gamma1_; }
  const Permutation& gamma2() const { return gamma2_; }

  std::size_t half_edges() const { return gamma0_.size(); }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return gamma0_.size() / 2; }
  std::size_t boundary_count() const { return boundary_starts_.size(); }

  std::size_t vertex_of(std::size_t half_edge) const { return vertex_of_[half_edge]; }
  std::size_t edge_of(std::size_t half_edge) const { return edge_of_[half_edge]; }
  std::size_t boundary_of(std::size_t half_edge) const { return boundary_of_[half_edge]; }
  std::size_t degree(std::size_t half_edge) const { return degree_[half_edge]; }

  /// Smallest half-edge on each boundary.
  const std::vector<std::size_t>& boundary_starts() const { return boundary_starts_; }
  const std::vector<int>& labels() const { return labels_; }
  int label_of_boundary(std::size_t boundary) const { return labels_[boundary]; }

  GraphType type() const { return type_; }
  bool is_trivalent() const;

  /// Copy with a different boundary labeling (validated).
  RibbonGraph relabeled(std::vector<int> labels) const;

 private:
  RibbonGraph() = default;

  Permutation gamma0_;
  Permutation gamma1_;
  Permutation gamma2_;
  std::vector<std::size_t> vertex_of_;
  std::vector<std::size_t> edge_of_;
  std::vector<std::size_t> boundary_of_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> boundary_starts_;
  std::vector<int> labels_;
  std::size_t vertex_count_ = 0;
  GraphType type_;
};

/// Type of a validated graph: n = #cycles(gamma2), g = 1 - (v - e + n) / 2.
GraphType graph_type(const RibbonGraph& graph);

/// All alpha with alpha o gamma_i = gamma_i o alpha; with `labeled` also
/// b o alpha = b. Returned in increasing order of alpha(0).
std::vector<Permutation> automorphisms(const RibbonGraph& graph, bool labeled);

/// Canonical code of a graph up to half-edge relabeling (and, if `labeled`,
/// respecting boundary labels) together with the number of half-edges from
/// which the minimal traversal starts, which is the automorphism group order.
struct CanonicalForm {
  std::vector<std::size_t> code;
  std::size_t automorphism_count = 0;
  /// relabeling[h] = canonical index of half-edge h
  std::vector<std::size_t> relabeling;
};

CanonicalForm canonical_form(const RibbonGraph& graph, bool labeled);

/// Graph relabeled by its canonical form.
RibbonGraph canonical_representative(const RibbonGraph& graph, bool labeled);

}  // namespace symvol::ribbon
