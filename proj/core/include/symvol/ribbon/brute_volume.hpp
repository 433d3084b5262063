#pragma once

#include <span>
#include <vector>

#include "symvol/algebra/rational.hpp"
#include "symvol/ribbon/cell_form.hpp"
#include "symvol/ribbon/enumerate.hpp"
#include "symvol/ribbon/polytope.hpp"

namespace symvol::ribbon {

/// The polytope {l > 0, p(l) = L} of one cell in the free coordinates of `cell`.
std::vector<Halfspace> cell_polytope(const CellForm& cell, std::span<const Rational> perimeters);

/// Contribution |Pf| * vol of one trivalent labeled graph (before dividing by
/// automorphisms); zero when the level set misses the cell.
Rational cell_volume(const RibbonGraph& graph, std::span<const Rational> perimeters);

/// Volume of the fixed-perimeter ribbon graph complex by direct integration
/// of exp(Omega) over the trivalent cells, each divided by the order of its
/// labeled automorphism group. In dimension zero the metric graphs with the
/// given perimeters are counted instead. Requires positive perimeters, one
/// per boundary; throws ResourceLimitError through the enumerator.
Rational brute_volume(int genus, int n, std::span<const Rational> perimeters,
                      const EnumerationOptions& options = {});

}  // namespace symvol::ribbon
