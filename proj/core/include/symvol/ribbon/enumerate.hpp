#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symvol/ribbon/ribbon_graph.hpp"

namespace symvol::ribbon {

/// Environment variable overriding the half-edge limit of the enumerator.
inline constexpr const char* kHalfEdgeLimitVariable = "SYMVOL_MAX_HALF_EDGES";
inline constexpr std::size_t kDefaultHalfEdgeLimit = 12;

/// Raised when a request would enumerate graphs with more half-edges than
/// the configured limit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The limit from SYMVOL_MAX_HALF_EDGES, or kDefaultHalfEdgeLimit.
std::size_t half_edge_limit_from_environment();

struct EnumerationOptions {
  bool trivalent_only = false;
  std::optional<std::size_t> max_half_edges;  ///< defaults to the environment limit
  std::optional<std::uint64_t> shuffle_seed;  ///< permute candidate order (testing)
};

struct LabeledGraph {
  RibbonGraph graph;           ///< canonical for its labeled class
  std::size_t automorphisms;   ///< order of the label-preserving group
};

struct GraphClass {
  RibbonGraph representative;  ///< canonical for its unlabeled class
  std::size_t automorphisms;   ///< order of the full automorphism group
  std::vector<LabeledGraph> labelings;  ///< inequivalent boundary labelings
};

/// One representative per equivalence class of connected ribbon graphs of
/// type (g, n) with all vertices of degree >= 3, ordered by canonical code.
/// Requires 2g - 2 + n > 0; throws ResourceLimitError when the largest graphs
/// of the type exceed the half-edge limit.
std::vector<GraphClass> enumerate(int genus, int n, const EnumerationOptions& options = {});

std::size_t labeled_count(const std::vector<GraphClass>& classes);

}  // namespace symvol::ribbon
