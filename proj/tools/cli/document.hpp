#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "symvol/io/json.hpp"

namespace symvol::cli {

/// Machine-readable result of one command.
struct OutputDocument {
  std::string kind;  ///< volume, intersections, correlator, graphs or verify-report
  std::optional<int> genus;
  std::optional<int> n;
  std::string version;
  io::Json payload;

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

std::string tool_version();

/// Pretty-printed JSON with a trailing newline.
std::string render(const OutputDocument& doc);

/// Inverse of render. Throws std::invalid_argument on malformed documents.
OutputDocument parse_document(std::string_view text);

}  // namespace symvol::cli
