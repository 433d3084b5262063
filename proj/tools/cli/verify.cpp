#include "verify.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "render.hpp"
#include "symvol/correlators.hpp"
#include "symvol/ribbon/brute_volume.hpp"

namespace symvol::cli {

namespace {

constexpr int kBruteForceComplexity = 2;

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kSkip: return "SKIP";
  }
  return "?";
}

std::string key_name(int g, int n) { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }

CheckResult make(std::string name, int g, int n, bool ok, std::string detail = {}) {
  return {std::move(name), g, n, ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(detail)};
}

std::vector<Rational> random_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> point;
  for (int i = 0; i < n; ++i) point.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
  return point;
}

std::string point_name(const std::vector<Rational>& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + p[i].to_string();
  return out + ")";
}

std::vector<CheckResult> check_key(int g, int n, const VerifyOptions& options, VolumeTable& table) {
  std::vector<CheckResult> out;
  const EvenPolynomial vol = table.volume(g, n);

  const EvenPolynomial assembled = volume_from_intersections(g, n);
  out.push_back(make("recursion-vs-intersections", g, n, vol == assembled,
                     vol == assembled ? "" : "recursion " + format_polynomial(vol) +
                                                 " vs " + format_polynomial(assembled)));

  const Correlator laplace = correlator_laplace(g, n, table);
  const Correlator eo = correlator_eo(g, n);
  out.push_back(make("laplace-vs-eo", g, n, laplace == eo));

  std::vector<std::size_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  bool symmetric = true;
  do {
    symmetric = vol.permuted(perm) == vol;
  } while (symmetric && std::next_permutation(perm.begin(), perm.end()));
  out.push_back(make("symmetry", g, n, symmetric));

  out.push_back(make("homogeneity", g, n, is_homogeneous(vol, static_cast<unsigned>(volume_degree(g, n)))));

  const bool positive = !vol.terms().empty() &&
                        std::all_of(vol.terms().begin(), vol.terms().end(),
                                    [](const auto& t) { return t.second.sign() > 0; });
  out.push_back(make("positivity", g, n, positive));

  if (2 * g - 2 + n <= kBruteForceComplexity) {
    std::mt19937_64 rng(options.seed ^ (static_cast<std::uint64_t>(g) << 32) ^ static_cast<std::uint64_t>(n));
    ribbon::EnumerationOptions enum_opts;
    enum_opts.shuffle_seed = options.seed;
    try {
      std::string detail;
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        const auto point = random_point(rng, n);
        const Rational brute = ribbon::brute_volume(g, n, point, enum_opts);
        const Rational expected = evaluate(vol, point);
        if (brute != expected) {
          ok = false;
          detail = "at " + point_name(point) + ": cells " + brute.to_string() + " vs polynomial " +
                   expected.to_string();
        }
      }
      out.push_back(make("brute-force", g, n, ok, detail));
    } catch (const ribbon::ResourceLimitError& e) {
      out.push_back({"brute-force", g, n, CheckStatus::kSkip, e.what()});
    }
  }
  return out;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::kFail; });
}

std::vector<std::pair<int, int>> verify_keys(int max_complexity) {
  std::vector<std::pair<int, int>> keys;
  for (int c = 1; c <= max_complexity; ++c) {
    for (int g = 0; 2 * g - 2 < c; ++g) {
      const int n = c - 2 * g + 2;
      if (n >= 1) keys.emplace_back(g, n);
    }
  }
  return keys;
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.max_complexity < 1) throw std::invalid_argument("verify: max complexity must be >= 1");
  VolumeTable local(options.corrupt_base_case.value_or(VolumeBaseCases{}));
  VolumeTable& table = options.corrupt_base_case ? local : default_volume_table();

  std::vector<std::future<std::vector<CheckResult>>> pending;
  for (const auto& [g, n] : verify_keys(options.max_complexity)) {
    pending.push_back(std::async(std::launch::async, [g, n, &options, &table] {
      return check_key(g, n, options, table);
    }));
  }
  VerifyReport report{options, {}};
  for (auto& f : pending) {
    for (auto& c : f.get()) report.checks.push_back(std::move(c));
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << status_name(c.status) << "  " << key_name(c.genus, c.n) << "  " << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const CheckResult& c) { return c.status == CheckStatus::kFail; });
  out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << " ("
      << report.checks.size() << " run)\n";
  return out.str();
}

io::Json to_json(const VerifyReport& report) {
  io::Json checks = io::Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(io::Json{{"name", c.name},
                              {"g", c.genus},
                              {"n", c.n},
                              {"status", status_name(c.status)},
                              {"detail", c.detail}});
  }
  return io::Json{{"max_complexity", report.options.max_complexity},
                  {"seed", report.options.seed},
                  {"passed", report.passed()},
                  {"checks", std::move(checks)}};
}

}  // namespace symvol::cli
