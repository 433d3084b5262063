#include "render.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace symvol::cli {

namespace {

template <class Series, class Factor>
std::string format_series(const Series& s, Factor&& factor) {
  if (s.terms().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exponents, coefficient] : s.terms()) {
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (auto f = factor(i, exponents[i]); !f.empty()) factors.push_back(std::move(f));
    }
    const Rational magnitude = abs(coefficient);
    if (first) {
      if (coefficient.sign() < 0) out << '-';
    } else {
      out << (coefficient.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == Rational(1) && !factors.empty();
    if (!unit) out << magnitude.to_string();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0 || !unit) out << " * ";
      out << factors[i];
    }
  }
  return out.str();
}

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_polynomial(const EvenPolynomial& p) {
  return format_series(p, [](std::size_t i, unsigned d) {
    return d == 0 ? std::string() : "L" + std::to_string(i + 1) + "^" + std::to_string(2 * d);
  });
}

std::string format_correlator(const Correlator& w) {
  return format_series(w, [](std::size_t i, unsigned d) {
    return "z" + std::to_string(i + 1) + "^-" + std::to_string(2 * d + 2);
  });
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (auto part : split(text)) out.push_back(Rational::parse(part));
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (auto part : split(text)) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw std::invalid_argument("not an integer: '" + std::string(part) + "'");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace symvol::cli
