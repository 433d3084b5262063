#pragma once

#include <nlohmann/json.hpp>

#include "symvol/algebra/correlator.hpp"
#include "symvol/algebra/even_polynomial.hpp"
#include "symvol/algebra/rational.hpp"
#include "symvol/ribbon/ribbon_graph.hpp"

namespace symvol::io {

using Json = nlohmann::ordered_json;

/// Rationals are strings "p/q" (or "p"), never JSON numbers.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

/// {"arity": n, "terms": [{"exponents": [...], "coefficient": "p/q"}, ...]}
/// with terms in graded-lex order.
Json to_json(const EvenPolynomial& p);
Json to_json(const Correlator& w);
EvenPolynomial polynomial_from_json(const Json& j);
Correlator correlator_from_json(const Json& j);

/// Graph interchange record: {"half_edges": 2k, "gamma0": [[...]], "gamma1":
/// [[...]], "labels": {"h": label}} with 1-based half-edges; each label is
/// keyed by the smallest half-edge of its boundary.
Json to_json(const ribbon::RibbonGraph& graph);
/// Accepts labels keyed by any half-edge of the boundary. Throws
/// std::invalid_argument or ribbon::GraphError.
ribbon::RibbonGraph graph_from_json(const Json& j);

}  // namespace symvol::io
