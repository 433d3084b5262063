#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "document.hpp"
#include "render.hpp"
#include "verify.hpp"
#include "symvol/correlators.hpp"
#include "symvol/intersections.hpp"
#include "symvol/io/json.hpp"
#include "symvol/ribbon/enumerate.hpp"
#include "symvol/volumes.hpp"

namespace symvol::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string approx(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r.to_double());
  return buf;
}

OutputDocument document(std::string kind, std::optional<int> g, std::optional<int> n, io::Json payload) {
  return {std::move(kind), g, n, tool_version(), std::move(payload)};
}

struct VolumeArgs {
  int genus = 0;
  int n = 0;
  std::string eval;
  bool json = false;
  bool approx = false;
};

int cmd_volume(const VolumeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.genus < 0 || a.n < 1) throw UsageError("volume: need g >= 0 and n >= 1");
  std::optional<std::vector<Rational>> point;
  if (!a.eval.empty()) {
    try {
      point = parse_rational_list(a.eval);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--eval: ") + e.what());
    }
    if (point->size() != static_cast<std::size_t>(a.n)) throw UsageError("--eval: expected n values");
    for (const auto& x : *point) {
      if (x.sign() < 0) throw UsageError("--eval: boundary lengths must be nonnegative");
    }
  }
  const bool stable = is_stable(a.genus, a.n);
  const EvenPolynomial vol = volume(a.genus, a.n);
  if (!stable) err << "warning: (g,n) = (" << a.genus << "," << a.n << ") is unstable; volume is zero\n";

  io::Json payload{{"polynomial", io::to_json(vol)}};
  std::optional<Rational> value;
  if (point) {
    value = evaluate(vol, *point);
    io::Json coords = io::Json::array();
    for (const auto& x : *point) coords.push_back(io::to_json(x));
    payload["point"] = std::move(coords);
    payload["value"] = io::to_json(*value);
    if (a.approx) payload["approx"] = value->to_double();
  }
  if (a.json) {
    out << render(document("volume", a.genus, a.n, std::move(payload)));
  } else {
    out << format_polynomial(vol) << '\n';
    if (value) {
      out << value->to_string() << '\n';
      if (a.approx) out << "approx " << approx(*value) << '\n';
    }
  }
  return stable ? kExitOk : kExitUsage;
}

struct IntersectArgs {
  int genus = 0;
  std::string degrees;
  bool json = false;
  bool approx = false;
};

int cmd_intersect(const IntersectArgs& a, std::ostream& out) {
  std::vector<int> degrees;
  try {
    degrees = parse_int_list(a.degrees);
  } catch (const std::exception& e) {
    throw UsageError(std::string("-d: ") + e.what());
  }
  if (a.genus < 0) throw UsageError("intersect: need g >= 0");
  if (degrees.empty()) throw UsageError("intersect: need at least one degree");
  if (std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 0; })) {
    throw UsageError("intersect: degrees must be nonnegative");
  }
  const int n = static_cast<int>(degrees.size());
  int total = 0;
  for (int d : degrees) total += d;
  const bool stable = is_stable(a.genus, n);
  const bool dimension_match = total == volume_degree(a.genus, n);
  const Rational value = intersection(a.genus, degrees);

  if (a.json) {
    io::Json payload{{"degrees", degrees},
                     {"value", io::to_json(value)},
                     {"stable", stable},
                     {"dimension_match", dimension_match}};
    if (a.approx) payload["approx"] = value.to_double();
    out << render(document("intersections", a.genus, n, std::move(payload)));
  } else {
    out << value.to_string();
    if (!stable) {
      out << " (unstable)";
    } else if (!dimension_match) {
      out << " (dimension mismatch)";
    }
    out << '\n';
    if (a.approx) out << "approx " << approx(value) << '\n';
  }
  return kExitOk;
}

struct CorrelatorArgs {
  int genus = 0;
  int n = 0;
  std::string path = "laplace";
  bool json = false;
};

int cmd_correlator(const CorrelatorArgs& a, std::ostream& out) {
  if (!is_stable(a.genus, a.n) || a.n < 1) {
    throw UsageError("correlator: (g,n) = (" + std::to_string(a.genus) + "," + std::to_string(a.n) +
                     ") is unstable");
  }
  std::optional<Correlator> laplace;
  std::optional<Correlator> eo;
  if (a.path != "eo") laplace = correlator_laplace(a.genus, a.n);
  if (a.path != "laplace") eo = correlator_eo(a.genus, a.n);
  const bool both = laplace && eo;
  const bool match = !both || *laplace == *eo;

  if (a.json) {
    io::Json payload{{"path", a.path}};
    if (laplace) payload["laplace"] = io::to_json(*laplace);
    if (eo) payload["eo"] = io::to_json(*eo);
    if (both) payload["match"] = match;
    out << render(document("correlator", a.genus, a.n, std::move(payload)));
  } else if (both) {
    out << "laplace: " << format_correlator(*laplace) << '\n';
    out << "eo:      " << format_correlator(*eo) << '\n';
    out << (match ? "MATCH" : "MISMATCH") << '\n';
  } else {
    out << format_correlator(laplace ? *laplace : *eo) << '\n';
  }
  return match ? kExitOk : kExitMismatch;
}

struct GraphsArgs {
  int genus = 0;
  int n = 0;
  bool trivalent = false;
  bool json = false;
};

int cmd_graphs(const GraphsArgs& a, std::ostream& out) {
  if (a.genus < 0 || a.n < 1 || !is_stable(a.genus, a.n)) throw UsageError("graphs: need a stable (g,n) with n >= 1");
  ribbon::EnumerationOptions options;
  options.trivalent_only = a.trivalent;
  const auto classes = ribbon::enumerate(a.genus, a.n, options);

  io::Json records = io::Json::array();
  for (const auto& cls : classes) {
    for (const auto& labeled : cls.labelings) {
      io::Json record = io::to_json(labeled.graph);
      record["aut"] = labeled.automorphisms;
      record["unlabeled_aut"] = cls.automorphisms;
      records.push_back(std::move(record));
    }
  }
  if (a.json) {
    io::Json payload{{"trivalent_only", a.trivalent},
                     {"classes", classes.size()},
                     {"count", records.size()},
                     {"graphs", std::move(records)}};
    out << render(document("graphs", a.genus, a.n, std::move(payload)));
  } else {
    for (const auto& r : records) out << r.dump() << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  int max_complexity = 0;
  std::uint64_t seed = 1;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.max_complexity < 1) throw UsageError("verify: -c must be >= 1");
  VerifyOptions options;
  options.max_complexity = a.max_complexity;
  options.seed = a.seed;
  const VerifyReport report = run_verify(options);
  if (a.json) {
    out << render(document("verify-report", std::nullopt, std::nullopt, to_json(report)));
  } else {
    out << format_report(report);
  }
  return report.passed() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic volumes of moduli spaces of curves, computed exactly", "symvol"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  VolumeArgs volume_args;
  auto* volume_cmd = app.add_subcommand("volume", "Print the volume polynomial Vol_{g,n}(L)");
  volume_cmd->add_option("-g,--genus", volume_args.genus, "Genus")->required();
  volume_cmd->add_option("-n,--boundaries", volume_args.n, "Number of boundary components")->required();
  volume_cmd->add_option("--eval", volume_args.eval, "Evaluate at comma-separated rationals L1,...,Ln");
  volume_cmd->add_flag("--json", volume_args.json, "Machine-readable output");
  volume_cmd->add_flag("--approx", volume_args.approx, "Also print a decimal approximation of --eval");

  IntersectArgs intersect_args;
  auto* intersect_cmd = app.add_subcommand("intersect", "Print a psi-class intersection number");
  intersect_cmd->add_option("-g,--genus", intersect_args.genus, "Genus")->required();
  intersect_cmd->add_option("-d,--degrees", intersect_args.degrees, "Comma-separated degrees d1,...,dn")
      ->required();
  intersect_cmd->add_flag("--json", intersect_args.json, "Machine-readable output");
  intersect_cmd->add_flag("--approx", intersect_args.approx, "Also print a decimal approximation");

  CorrelatorArgs correlator_args;
  auto* correlator_cmd = app.add_subcommand("correlator", "Print the Airy-curve correlator W_{g,n}");
  correlator_cmd->add_option("-g,--genus", correlator_args.genus, "Genus")->required();
  correlator_cmd->add_option("-n,--points", correlator_args.n, "Number of points")->required();
  correlator_cmd->add_option("--path", correlator_args.path, "laplace, eo or both")
      ->check(CLI::IsMember({"laplace", "eo", "both"}));
  correlator_cmd->add_flag("--json", correlator_args.json, "Machine-readable output");

  GraphsArgs graphs_args;
  auto* graphs_cmd = app.add_subcommand("graphs", "Enumerate labeled ribbon graphs of type (g,n)");
  graphs_cmd->add_option("-g,--genus", graphs_args.genus, "Genus")->required();
  graphs_cmd->add_option("-n,--boundaries", graphs_args.n, "Number of boundary components")->required();
  graphs_cmd->add_flag("--trivalent", graphs_args.trivalent, "Only graphs with all vertices of degree 3");
  graphs_cmd->add_flag("--json", graphs_args.json, "Machine-readable output");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all computation paths up to a complexity");
  verify_cmd->add_option("-c,--max-complexity", verify_args.max_complexity, "Largest 2g-2+n to check")
      ->required();
  verify_cmd->add_option("--seed", verify_args.seed, "Seed for evaluation points and enumeration order");
  verify_cmd->add_flag("--json", verify_args.json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (e.get_exit_code() == 0) return kExitOk;
    return kExitUsage;
  }

  try {
    if (*volume_cmd) return cmd_volume(volume_args, out, err);
    if (*intersect_cmd) return cmd_intersect(intersect_args, out);
    if (*correlator_cmd) return cmd_correlator(correlator_args, out);
    if (*graphs_cmd) return cmd_graphs(graphs_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ribbon::ResourceLimitError& e) {
    err << "error: " << e.what() << " (raise " << ribbon::kHalfEdgeLimitVariable << " to allow it)\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace symvol::cli
