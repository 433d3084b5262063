#include "document.hpp"

#include <set>
#include <stdexcept>

#ifndef SYMVOL_VERSION
#define SYMVOL_VERSION "0.0.0"
#endif

namespace symvol::cli {

namespace {

const std::set<std::string> kKinds = {"volume", "intersections", "correlator", "graphs", "verify-report"};

io::Json optional_int(const std::optional<int>& v) { return v ? io::Json(*v) : io::Json(nullptr); }

std::optional<int> read_optional_int(const io::Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

}  // namespace

std::string tool_version() { return SYMVOL_VERSION; }

std::string render(const OutputDocument& doc) {
  io::Json j{{"kind", doc.kind},
             {"metadata", {{"g", optional_int(doc.genus)}, {"n", optional_int(doc.n)}, {"version", doc.version}}},
             {"payload", doc.payload}};
  return j.dump(2) + "\n";
}

OutputDocument parse_document(std::string_view text) {
  io::Json j;
  try {
    j = io::Json::parse(text);
  } catch (const io::Json::parse_error& e) {
    throw std::invalid_argument(std::string("document is not valid JSON: ") + e.what());
  }
  try {
    OutputDocument doc;
    doc.kind = j.at("kind").get<std::string>();
    if (!kKinds.contains(doc.kind)) throw std::invalid_argument("unknown document kind '" + doc.kind + "'");
    const auto& meta = j.at("metadata");
    doc.genus = read_optional_int(meta.at("g"));
    doc.n = read_optional_int(meta.at("n"));
    doc.version = meta.at("version").get<std::string>();
    doc.payload = j.at("payload");
    return doc;
  } catch (const io::Json::exception& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  }
}

}  // namespace symvol::cli
