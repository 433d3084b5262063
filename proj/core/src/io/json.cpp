#include "symvol/io/json.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace symvol::io {

namespace {

template <class Series>
Json series_to_json(const Series& s) {
  Json terms = Json::array();
  for (const auto& [exponents, coefficient] : s.terms()) {
    terms.push_back(Json{{"exponents", exponents}, {"coefficient", to_json(coefficient)}});
  }
  return Json{{"arity", s.arity()}, {"terms", std::move(terms)}};
}

template <class Series>
Series series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("terms")) {
    throw std::invalid_argument("expected {\"arity\", \"terms\"}");
  }
  Series s(j.at("arity").get<std::size_t>());
  for (const auto& term : j.at("terms")) {
    s.add_term(term.at("exponents").get<Exponents>(), rational_from_json(term.at("coefficient")));
  }
  return s;
}

std::vector<ribbon::Cycle> cycles_from_json(const Json& j, std::size_t size) {
  std::vector<ribbon::Cycle> out;
  for (const auto& c : j) {
    ribbon::Cycle cycle;
    for (const auto& h : c) {
      const auto v = h.get<long long>();
      if (v < 1 || static_cast<std::size_t>(v) > size) {
        throw std::invalid_argument("half-edge " + std::to_string(v) + " out of range");
      }
      cycle.push_back(static_cast<std::size_t>(v - 1));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Json cycles_to_json(const ribbon::Permutation& p) {
  Json out = Json::array();
  for (const auto& c : p.cycles()) {
    Json cycle = Json::array();
    for (std::size_t h : c) cycle.push_back(h + 1);
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace

Json to_json(const Rational& value) { return value.to_string(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a string");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const EvenPolynomial& p) { return series_to_json(p); }
Json to_json(const Correlator& w) { return series_to_json(w); }
EvenPolynomial polynomial_from_json(const Json& j) { return series_from_json<EvenPolynomial>(j); }
Correlator correlator_from_json(const Json& j) { return series_from_json<Correlator>(j); }

Json to_json(const ribbon::RibbonGraph& graph) {
  Json labels = Json::object();
  for (std::size_t b = 0; b < graph.boundary_count(); ++b) {
    labels[std::to_string(graph.boundary_starts()[b] + 1)] = graph.label_of_boundary(b);
  }
  return Json{{"half_edges", graph.half_edges()},
              {"gamma0", cycles_to_json(graph.gamma0())},
              {"gamma1", cycles_to_json(graph.gamma1())},
              {"labels", std::move(labels)}};
}

ribbon::RibbonGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph record must be an object");
  const auto size = j.at("half_edges").get<std::size_t>();
  const auto g0 = cycles_from_json(j.at("gamma0"), size);
  const auto g1 = cycles_from_json(j.at("gamma1"), size);
  std::map<std::size_t, int> labels;
  if (j.contains("labels")) {
    for (const auto& [key, value] : j.at("labels").items()) {
      std::size_t pos = 0;
      const long long h = std::stoll(key, &pos);
      if (pos != key.size() || h < 1 || static_cast<std::size_t>(h) > size) {
        throw std::invalid_argument("bad label key '" + key + "'");
      }
      labels[static_cast<std::size_t>(h - 1)] = value.get<int>();
    }
  }
  auto gamma0 = ribbon::Permutation::from_cycles(size, g0);
  auto gamma1 = ribbon::Permutation::from_cycles(size, g1);
  if (labels.empty()) return ribbon::RibbonGraph::make(std::move(gamma0), std::move(gamma1));
  return ribbon::RibbonGraph::make(std::move(gamma0), std::move(gamma1), labels);
}

}  // namespace symvol::io
