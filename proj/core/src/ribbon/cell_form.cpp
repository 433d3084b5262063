#include "symvol/ribbon/cell_form.hpp"

#include <algorithm>
#include <string>

namespace symvol::ribbon {

std::vector<int> half_edge_twist(const RibbonGraph& graph, std::size_t half_edge) {
  std::vector<int> out(graph.edge_count(), 0);
  std::size_t h = half_edge;
  int sign = 1;
  for (std::size_t j = 1; j < graph.degree(half_edge); ++j) {
    h = graph.gamma0()(h);
    sign = -sign;
    out[graph.edge_of(h)] += sign;
  }
  return out;
}

std::vector<int> twist_vector(const RibbonGraph& graph, std::size_t half_edge) {
  auto out = half_edge_twist(graph, half_edge);
  const auto other = half_edge_twist(graph, graph.gamma1()(half_edge));
  for (std::size_t e = 0; e < out.size(); ++e) out[e] += other[e];
  return out;
}

Matrix perimeter_matrix(const RibbonGraph& graph) {
  Matrix p = zero_matrix(graph.boundary_count(), graph.edge_count());
  for (std::size_t h = 0; h < graph.half_edges(); ++h) {
    const auto row = static_cast<std::size_t>(graph.label_of_boundary(graph.boundary_of(h)) - 1);
    p[row][graph.edge_of(h)] += Rational(1);
  }
  return p;
}

std::vector<std::size_t> boundary_edge_sequence(const RibbonGraph& graph, std::size_t start) {
  std::vector<std::size_t> out;
  std::size_t h = start;
  do {
    out.push_back(graph.edge_of(h));
    h = graph.gamma2()(h);
  } while (h != start);
  return out;
}

Matrix kontsevich_form(const RibbonGraph& graph, std::span<const std::size_t> starts) {
  if (starts.size() != graph.boundary_count()) {
    throw std::invalid_argument("kontsevich_form: need one starting half-edge per boundary");
  }
  const Rational half(1, 2);
  Matrix a = zero_matrix(graph.edge_count(), graph.edge_count());
  for (std::size_t b = 0; b < starts.size(); ++b) {
    if (starts[b] >= graph.half_edges() || graph.boundary_of(starts[b]) != b) {
      throw std::invalid_argument("kontsevich_form: starting half-edge " + std::to_string(starts[b]) +
                                  " is not on boundary " + std::to_string(b));
    }
    const auto seq = boundary_edge_sequence(graph, starts[b]);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (std::size_t j = i + 1; j < seq.size(); ++j) {
        if (seq[i] == seq[j]) continue;
        a[seq[i]][seq[j]] += half;
        a[seq[j]][seq[i]] -= half;
      }
    }
  }
  return a;
}

Matrix kontsevich_form(const RibbonGraph& graph) {
  return kontsevich_form(graph, graph.boundary_starts());
}

std::vector<Rational> CellForm::offset(std::span<const Rational> perimeters) const {
  if (perimeters.size() != perimeter.size()) {
    throw std::invalid_argument("CellForm: expected one perimeter per boundary");
  }
  Matrix pe = zero_matrix(perimeter.size(), eliminated_edges.size());
  for (std::size_t r = 0; r < perimeter.size(); ++r) {
    for (std::size_t c = 0; c < eliminated_edges.size(); ++c) pe[r][c] = perimeter[r][eliminated_edges[c]];
  }
  auto sol = solve_unique(pe, std::vector<Rational>(perimeters.begin(), perimeters.end()));
  if (!sol) throw DegenerateCellError("CellForm: singular perimeter minor");
  return *sol;
}

std::vector<Rational> CellForm::edge_lengths(std::span<const Rational> perimeters,
                                             std::span<const Rational> x) const {
  if (x.size() != free_edges.size()) throw std::invalid_argument("CellForm: wrong coordinate count");
  const auto base = offset(perimeters);
  std::vector<Rational> lengths(free_edges.size() + eliminated_edges.size());
  for (std::size_t f = 0; f < free_edges.size(); ++f) lengths[free_edges[f]] = x[f];
  for (std::size_t r = 0; r < eliminated_edges.size(); ++r) {
    Rational v = base[r];
    for (std::size_t f = 0; f < free_edges.size(); ++f) v -= slope[r][f] * x[f];
    lengths[eliminated_edges[r]] = v;
  }
  return lengths;
}

namespace {

std::vector<std::size_t> default_elimination(const Matrix& p, std::size_t edges) {
  std::vector<std::size_t> chosen;
  Matrix columns;  // chosen columns as rows
  for (std::size_t c = edges; c-- > 0 && chosen.size() < p.size();) {
    std::vector<Rational> col(p.size());
    for (std::size_t r = 0; r < p.size(); ++r) col[r] = p[r][c];
    columns.push_back(col);
    if (rank(columns) == columns.size()) {
      chosen.push_back(c);
    } else {
      columns.pop_back();
    }
  }
  if (chosen.size() != p.size()) throw DegenerateCellError("cell_form: perimeter map has deficient rank");
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

CellForm cell_form(const RibbonGraph& graph, std::span<const std::size_t> starts,
                   std::optional<std::vector<std::size_t>> eliminated) {
  if (!graph.is_trivalent()) throw std::invalid_argument("cell_form: graph is not trivalent");
  const std::size_t e = graph.edge_count();
  const std::size_t n = graph.boundary_count();

  CellForm cell;
  cell.full = kontsevich_form(graph, starts);
  cell.perimeter = perimeter_matrix(graph);

  if (eliminated) {
    auto chosen = *eliminated;
    std::sort(chosen.begin(), chosen.end());
    if (chosen.size() != n || std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end() ||
        (!chosen.empty() && chosen.back() >= e)) {
      throw std::invalid_argument("cell_form: need n distinct edges to eliminate");
    }
    cell.eliminated_edges = std::move(chosen);
  } else {
    cell.eliminated_edges = default_elimination(cell.perimeter, e);
  }
  for (std::size_t c = 0; c < e; ++c) {
    if (!std::binary_search(cell.eliminated_edges.begin(), cell.eliminated_edges.end(), c)) {
      cell.free_edges.push_back(c);
    }
  }

  Matrix pe = zero_matrix(n, n);
  Matrix pf = zero_matrix(n, cell.free_edges.size());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) pe[r][c] = cell.perimeter[r][cell.eliminated_edges[c]];
    for (std::size_t c = 0; c < cell.free_edges.size(); ++c) pf[r][c] = cell.perimeter[r][cell.free_edges[c]];
  }
  cell.pivot_minor = determinant(pe);
  const auto pe_inv = inverse(pe);
  if (!pe_inv) throw DegenerateCellError("cell_form: perimeter rows are dependent on the eliminated edges");

  const std::size_t d = cell.free_edges.size();
  cell.slope = zero_matrix(n, d);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t k = 0; k < n; ++k) cell.slope[r][c] += (*pe_inv)[r][k] * pf[k][c];
    }
  }

  // Tangent vectors of the level set: v_f = e_f - sum_r slope[r][f] e_{E_r}.
  Matrix tangent = zero_matrix(d, e);
  for (std::size_t f = 0; f < d; ++f) {
    tangent[f][cell.free_edges[f]] = Rational(1);
    for (std::size_t r = 0; r < n; ++r) tangent[f][cell.eliminated_edges[r]] = -cell.slope[r][f];
  }
  cell.matrix = zero_matrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Rational v;
      for (std::size_t p = 0; p < e; ++p) {
        if (tangent[i][p].is_zero()) continue;
        for (std::size_t q = 0; q < e; ++q) {
          if (!tangent[j][q].is_zero()) v += tangent[i][p] * cell.full[p][q] * tangent[j][q];
        }
      }
      cell.matrix[i][j] = v;
    }
  }
  return cell;
}

CellForm cell_form(const RibbonGraph& graph) { return cell_form(graph, graph.boundary_starts()); }

Rational top_form_density(const CellForm& cell) {
  return abs(pfaffian(cell.matrix)) * abs(cell.pivot_minor);
}

bool satisfies_duality(const RibbonGraph& graph, const Matrix& full_form, std::size_t half_edge) {
  const std::size_t e = graph.edge_count();
  const auto t = twist_vector(graph, half_edge);
  std::vector<Rational> covector(e);
  for (std::size_t a = 0; a < e; ++a) {
    if (t[a] == 0) continue;
    for (std::size_t b = 0; b < e; ++b) covector[b] += Rational(t[a]) * full_form[a][b];
  }
  covector[graph.edge_of(half_edge)] += Rational(2);
  Matrix rows = perimeter_matrix(graph);
  const std::size_t base_rank = rank(rows);
  rows.push_back(std::move(covector));
  return rank(std::move(rows)) == base_rank;
}

}  // namespace symvol::ribbon
