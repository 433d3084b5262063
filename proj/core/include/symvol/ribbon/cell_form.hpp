#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "symvol/algebra/rational.hpp"
#include "symvol/ribbon/linalg.hpp"
#include "symvol/ribbon/ribbon_graph.hpp"

namespace symvol::ribbon {

/// The perimeter rows are linearly dependent on the requested edges.
class DegenerateCellError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// tau_i = sum_{j=1}^{d(i)-1} (-1)^j d/dl_{gamma0^j i}, as a vector over edges.
std::vector<int> half_edge_twist(const RibbonGraph& graph, std::size_t half_edge);

/// T_i = tau_i + tau_{gamma1 i}, as a vector over edges.
std::vector<int> twist_vector(const RibbonGraph& graph, std::size_t half_edge);

/// n x e matrix; row (label - 1) counts how often each edge occurs on the
/// boundary with that label (entries 0, 1 or 2).
Matrix perimeter_matrix(const RibbonGraph& graph);

/// Edges met along the boundary of `start`, following gamma2.
std::vector<std::size_t> boundary_edge_sequence(const RibbonGraph& graph, std::size_t start);

/// Antisymmetric e x e matrix A with Omega = sum_{p<q} A[p][q] dl_p ^ dl_q,
/// where Omega is half the sum over boundaries of sum_{i<j} dl_i ^ dl_j along
/// each boundary sequence read from the given starting half-edges
/// (`starts[b]` lies on boundary b).
Matrix kontsevich_form(const RibbonGraph& graph, std::span<const std::size_t> starts);
Matrix kontsevich_form(const RibbonGraph& graph);

/// Omega restricted to the level set {p = L} of one cell, written in the
/// coordinates of the free edges. The eliminated edges are affine functions
/// l_E = P_E^{-1} L - P_E^{-1} P_F x of the free ones.
struct CellForm {
  std::vector<std::size_t> free_edges;
  std::vector<std::size_t> eliminated_edges;
  Matrix matrix;        ///< restricted form, free x free
  Matrix full;          ///< Omega on all edges
  Matrix perimeter;     ///< n x e perimeter matrix
  Matrix slope;         ///< P_E^{-1} P_F, eliminated x free
  Rational pivot_minor; ///< det P_E

  std::size_t dimension() const { return free_edges.size(); }

  /// Values P_E^{-1} L of the eliminated edges at x = 0.
  std::vector<Rational> offset(std::span<const Rational> perimeters) const;

  /// Edge lengths of the metric graph at free coordinates x.
  std::vector<Rational> edge_lengths(std::span<const Rational> perimeters,
                                     std::span<const Rational> x) const;
};

/// Builds the restricted form. `eliminated` (one edge per boundary) defaults to
/// the first independent choice scanning edges from the last one down.
/// Throws DegenerateCellError when the perimeter rows are dependent on the
/// eliminated edges and std::invalid_argument on bad starts.
CellForm cell_form(const RibbonGraph& graph, std::span<const std::size_t> starts,
                   std::optional<std::vector<std::size_t>> eliminated = std::nullopt);
CellForm cell_form(const RibbonGraph& graph);

/// |Pf(matrix)| * |det P_E|: the density of Omega^d/d! ^ dp_1 ^ ... ^ dp_n in
/// edge coordinates. Unlike |Pf| alone it does not depend on the elimination.
Rational top_form_density(const CellForm& cell);

/// Whether iota_{T_i} Omega + 2 dl_i lies in the row span of the perimeter
/// matrix for the edge of `half_edge`.
bool satisfies_duality(const RibbonGraph& graph, const Matrix& full_form, std::size_t half_edge);

}  // namespace symvol::ribbon
