#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "symvol/algebra/rational.hpp"

namespace symvol::ribbon {

/// The closed halfspace {x : normal . x <= bound}.
struct Halfspace {
  std::vector<Rational> normal;
  Rational bound;
};

enum class PolytopeErrorKind { kEmpty, kUnbounded, kBadInput };

class PolytopeError : public std::invalid_argument {
 public:
  PolytopeError(PolytopeErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  PolytopeErrorKind kind() const { return kind_; }

 private:
  PolytopeErrorKind kind_;
};

/// Vertices of the polyhedron, in lexicographic order.
std::vector<std::vector<Rational>> polytope_vertices(const std::vector<Halfspace>& halfspaces,
                                                     std::size_t dimension);

/// Exact Lebesgue volume of a bounded polyhedron given by halfspaces, by
/// vertex enumeration and a pulling triangulation. Lower-dimensional
/// polytopes have volume zero; dimension 0 gives 1 for a nonempty region.
/// Throws PolytopeError when the region is empty or unbounded.
Rational polytope_volume(const std::vector<Halfspace>& halfspaces, std::size_t dimension);

}  // namespace symvol::ribbon
