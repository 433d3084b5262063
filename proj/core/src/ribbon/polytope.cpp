#include "symvol/ribbon/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symvol/algebra/combinatorics.hpp"
#include "symvol/ribbon/linalg.hpp"

namespace symvol::ribbon {

namespace {

using Point = std::vector<Rational>;

Rational dot(const std::vector<Rational>& a, const Point& x) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

void check_input(const std::vector<Halfspace>& hs, std::size_t dim) {
  for (const auto& h : hs) {
    if (h.normal.size() != dim) {
      throw PolytopeError(PolytopeErrorKind::kBadInput, "polytope: halfspace normal has wrong dimension");
    }
  }
}

// Calls f on every k-subset of {0..n-1} (as sorted indices).
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Fourier-Motzkin feasibility of {a . x <= b}.
bool feasible(std::vector<Halfspace> hs, std::size_t dim) {
  for (std::size_t var = dim; var-- > 0;) {
    std::vector<Halfspace> pos, neg, out;
    for (auto& h : hs) {
      const int s = h.normal[var].sign();
      if (s > 0) pos.push_back(std::move(h));
      else if (s < 0) neg.push_back(std::move(h));
      else out.push_back(std::move(h));
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        const Rational wp = -q.normal[var];
        const Rational wq = p.normal[var];
        Halfspace c;
        c.normal.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) c.normal[i] = wp * p.normal[i] + wq * q.normal[i];
        c.normal[var] = Rational();
        c.bound = wp * p.bound + wq * q.bound;
        out.push_back(std::move(c));
      }
    }
    hs = std::move(out);
  }
  return std::all_of(hs.begin(), hs.end(), [](const Halfspace& h) { return h.bound.sign() >= 0; });
}

std::size_t affine_rank(const std::vector<Point>& pts, const std::vector<std::size_t>& which) {
  if (which.size() <= 1) return 0;
  Matrix diffs;
  for (std::size_t i = 1; i < which.size(); ++i) {
    Point d(pts[which[0]].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = pts[which[i]][c] - pts[which[0]][c];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

struct Triangulator {
  const std::vector<Point>& vertices;
  const std::vector<std::vector<bool>>& tight;  // tight[v][h]
  std::size_t halfspace_count;
  std::vector<std::vector<std::size_t>> simplices;

  // Pulling triangulation of the face spanned by `face` (sorted vertex ids)
  // of affine dimension `dim`; each simplex is extended by `apex`.
  void run(const std::vector<std::size_t>& face, std::size_t dim, std::vector<std::size_t> apex) {
    if (dim == 0) {
      apex.push_back(face.front());
      simplices.push_back(std::move(apex));
      return;
    }
    const std::size_t pivot = face.front();
    std::set<std::vector<std::size_t>> facets;
    for (std::size_t h = 0; h < halfspace_count; ++h) {
      if (tight[pivot][h]) continue;
      std::vector<std::size_t> sub;
      for (std::size_t v : face) {
        if (tight[v][h]) sub.push_back(v);
      }
      if (sub.size() < dim || sub.size() == face.size()) continue;
      if (affine_rank(vertices, sub) + 1 != dim) continue;
      facets.insert(std::move(sub));
    }
    apex.push_back(pivot);
    for (const auto& facet : facets) run(facet, dim - 1, apex);
  }
};

}  // namespace

std::vector<std::vector<Rational>> polytope_vertices(const std::vector<Halfspace>& hs, std::size_t dim) {
  check_input(hs, dim);
  std::set<Point> found;
  if (dim == 0) {
    if (std::all_of(hs.begin(), hs.end(), [](const Halfspace& h) { return h.bound.sign() >= 0; })) {
      found.insert(Point{});
    }
    return {found.begin(), found.end()};
  }
  for_each_subset(hs.size(), dim, [&](const std::vector<std::size_t>& idx) {
    Matrix m;
    std::vector<Rational> rhs;
    for (std::size_t i : idx) {
      m.push_back(hs[i].normal);
      rhs.push_back(hs[i].bound);
    }
    auto x = solve_unique(m, rhs);
    if (!x) return;
    for (const auto& h : hs) {
      if (dot(h.normal, *x) > h.bound) return;
    }
    found.insert(std::move(*x));
  });
  return {found.begin(), found.end()};
}

Rational polytope_volume(const std::vector<Halfspace>& hs, std::size_t dim) {
  check_input(hs, dim);
  const auto vertices = polytope_vertices(hs, dim);
  if (dim == 0) {
    if (vertices.empty()) throw PolytopeError(PolytopeErrorKind::kEmpty, "polytope: empty region");
    return Rational(1);
  }

  Matrix normals;
  for (const auto& h : hs) normals.push_back(h.normal);
  const bool pointed = rank(normals) == dim;
  if (vertices.empty()) {
    if (pointed || !feasible(hs, dim)) throw PolytopeError(PolytopeErrorKind::kEmpty, "polytope: empty region");
    throw PolytopeError(PolytopeErrorKind::kUnbounded, "polytope: region contains a line");
  }

  // A pointed recession cone {a . y <= 0} other than {0} has an extreme ray
  // cut out by dim - 1 independent constraints.
  bool unbounded = false;
  for_each_subset(hs.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
    if (unbounded) return;
    Matrix m;
    for (std::size_t i : idx) m.push_back(hs[i].normal);
    const auto kernel = null_space(m, dim);
    if (kernel.size() != 1) return;
    for (int sign : {1, -1}) {
      bool ok = true;
      for (const auto& h : hs) {
        if ((dot(h.normal, kernel[0]) * Rational(sign)).sign() > 0) {
          ok = false;
          break;
        }
      }
      if (ok) unbounded = true;
    }
  });
  if (unbounded) throw PolytopeError(PolytopeErrorKind::kUnbounded, "polytope: unbounded region");

  std::vector<std::size_t> all(vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (affine_rank(vertices, all) < dim) return {};

  std::vector<std::vector<bool>> tight(vertices.size(), std::vector<bool>(hs.size()));
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (std::size_t h = 0; h < hs.size(); ++h) tight[v][h] = dot(hs[h].normal, vertices[v]) == hs[h].bound;
  }
  Triangulator tri{vertices, tight, hs.size(), {}};
  tri.run(all, dim, {});

  Rational total;
  for (const auto& simplex : tri.simplices) {
    Matrix m;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
      Point d(dim);
      for (std::size_t c = 0; c < dim; ++c) d[c] = vertices[simplex[i]][c] - vertices[simplex[0]][c];
      m.push_back(std::move(d));
    }
    total += abs(determinant(std::move(m)));
  }
  return total / Rational(factorial(static_cast<unsigned>(dim)));
}

}  // namespace symvol::ribbon
