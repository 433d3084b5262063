#include "symvol/ribbon/brute_volume.hpp"

#include <algorithm>
#include <stdexcept>

#include "symvol/ribbon/linalg.hpp"

namespace symvol::ribbon {

std::vector<Halfspace> cell_polytope(const CellForm& cell, std::span<const Rational> perimeters) {
  const std::size_t d = cell.dimension();
  const auto base = cell.offset(perimeters);
  std::vector<Halfspace> out;
  for (std::size_t f = 0; f < d; ++f) {
    Halfspace h;
    h.normal.assign(d, Rational());
    h.normal[f] = Rational(-1);
    out.push_back(std::move(h));
  }
  for (std::size_t r = 0; r < cell.eliminated_edges.size(); ++r) {
    out.push_back(Halfspace{cell.slope[r], base[r]});
  }
  return out;
}

namespace {

bool has_positive_metric(const RibbonGraph& graph, std::span<const Rational> perimeters) {
  const auto solution = solve_unique(perimeter_matrix(graph),
                                     std::vector<Rational>(perimeters.begin(), perimeters.end()));
  return solution && std::all_of(solution->begin(), solution->end(),
                                 [](const Rational& x) { return x.sign() > 0; });
}

}  // namespace

Rational cell_volume(const RibbonGraph& graph, std::span<const Rational> perimeters) {
  const CellForm cell = cell_form(graph);
  try {
    const Rational volume = polytope_volume(cell_polytope(cell, perimeters), cell.dimension());
    if (volume.is_zero()) return {};
    return abs(pfaffian(cell.matrix)) * volume;
  } catch (const PolytopeError& e) {
    if (e.kind() == PolytopeErrorKind::kEmpty) return {};
    throw;
  }
}

Rational brute_volume(int genus, int n, std::span<const Rational> perimeters,
                      const EnumerationOptions& options) {
  if (n < 1 || perimeters.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("brute_volume: need one perimeter per boundary");
  }
  for (const auto& p : perimeters) {
    if (p.sign() <= 0) throw std::invalid_argument("brute_volume: perimeters must be positive");
  }
  const bool discrete = 6 * genus - 6 + 2 * n == 0;
  EnumerationOptions opts = options;
  opts.trivalent_only = !discrete;

  Rational total;
  for (const auto& cls : enumerate(genus, n, opts)) {
    for (const auto& labeled : cls.labelings) {
      const Rational weight(1, static_cast<long>(labeled.automorphisms));
      if (discrete) {
        if (has_positive_metric(labeled.graph, perimeters)) total += weight;
      } else {
        total += weight * cell_volume(labeled.graph, perimeters);
      }
    }
  }
  return total;
}

}  // namespace symvol::ribbon
