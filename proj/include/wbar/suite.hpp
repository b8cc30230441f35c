#pragma once

// Fixture loading and suite orchestration behind the command-line front end.
//
// Fixture URIs:
//   constant:<C1|C2|C3|S3>       constant simplicial group
//   translation:<C1|C2|C3|S3>    translation simplicial group E(G)
//   product:<uri>,<uri>          levelwise product (the left URI may not
//                                contain a comma)
//   corrupt:<uri>                <uri> with one entry of d_0 at level 1
//                                changed, loaded without validation
//   anything else                a JSON file; relative paths that do not
//                                exist are looked up in $WBAR_FIXTURE_DIR

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wbar/checks.hpp"
#include "wbar/error.hpp"
#include "wbar/json_io.hpp"
#include "wbar/report.hpp"
#include "wbar/retract.hpp"
#include "wbar/simplicial_group.hpp"

namespace wbar {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kFixtureDirEnv = "WBAR_FIXTURE_DIR";

inline GroupPtr named_group(std::string_view name) {
  if (name == "C1") return cyclic_group(1);
  if (name == "C2") return cyclic_group(2);
  if (name == "C3") return cyclic_group(3);
  if (name == "S3") return symmetric_group_3();
  throw ParseError("unknown group '" + std::string(name) + "' (expected C1, C2, C3 or S3)");
}

/// True for URIs naming a built-in fixture, whose truncation is chosen by
/// the caller.
inline bool is_builtin_fixture(std::string_view uri) {
  for (std::string_view prefix : {"constant:", "translation:", "product:", "corrupt:"})
    if (uri.substr(0, prefix.size()) == prefix) return true;
  return false;
}

inline std::filesystem::path resolve_fixture_path(std::string_view uri) {
  std::filesystem::path path(uri);
  if (std::filesystem::exists(path) || path.is_absolute()) return path;
  if (const char* dir = std::getenv(kFixtureDirEnv); dir != nullptr && *dir != '\0') {
    const auto candidate = std::filesystem::path(dir) / path;
    if (std::filesystem::exists(candidate)) return candidate;
  }
  return path;
}

inline TruncatedSimplicialGroup load_fixture_value(std::string_view uri, int max_level) {
  auto after = [&](std::string_view prefix) { return uri.substr(prefix.size()); };
  if (uri.starts_with("constant:"))
    return constant_simplicial_group(named_group(after("constant:")), max_level);
  if (uri.starts_with("translation:"))
    return translation_simplicial_group(named_group(after("translation:")), max_level);
  if (uri.starts_with("product:")) {
    const std::string_view rest = after("product:");
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos)
      throw ParseError("product fixture '" + std::string(uri) + "' needs two URIs");
    return product_simplicial_group(load_fixture_value(rest.substr(0, comma), max_level),
                                    load_fixture_value(rest.substr(comma + 1), max_level));
  }
  if (uri.starts_with("corrupt:")) {
    const TruncatedSimplicialGroup base = load_fixture_value(after("corrupt:"), max_level);
    if (base.max_level() < 1 || base.level(0).order() < 2)
      throw ParseError("corrupt fixture needs levels 0 and 1 with at least two elements");
    const Element x = 1;
    const Element bad = static_cast<Element>((base.face(1, 0, x) + 1) % base.level(0).order());
    return corrupt_face(base, 1, 0, x, bad);
  }
  const auto path = resolve_fixture_path(uri);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fixture file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("fixture file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return simplicial_group_from_json(j, Validation::full, path.filename().string());
}

/// Loads a fixture. Built-in fixtures are truncated at `max_level`; files
/// keep their own truncation.
inline SimplicialGroupPtr load_fixture(std::string_view uri, int max_level) {
  return std::make_shared<const TruncatedSimplicialGroup>(load_fixture_value(uri, max_level));
}

// ---------------------------------------------------------------------------
// Suites

/// Check names, in the order a suite runs them.
inline const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{"identities", "functoriality", "iso",
                                              "phi",        "retraction",    "simplicial_maps",
                                              "endpoints",  "constancy",     "naturality"};
  return names;
}

struct SuiteConfig {
  std::string fixture = "constant:C2";
  int max_dim = 3;
  Budget budget;
  std::set<std::string> checks{all_checks().begin(), all_checks().end()};
  std::string report_path;  // empty: no report file
};

/// Parses "auto", "exhaustive", "sampled:COUNT" or a plain instance limit.
inline Budget parse_budget(std::string_view text, std::uint64_t seed) {
  Budget b;
  b.seed = seed;
  auto parse_u64 = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw ParseError("cannot parse budget '" + std::string(text) + "'");
    return v;
  };
  if (text == "auto") return b;
  if (text == "exhaustive") {
    b.max_exhaustive = Budget::exhaustive().max_exhaustive;
    return b;
  }
  if (text.starts_with("sampled:")) {
    b.max_exhaustive = 0;
    b.sample_count = parse_u64(text.substr(8));
    return b;
  }
  b.max_exhaustive = parse_u64(text);
  return b;
}

inline std::set<std::string> parse_checks(std::string_view text) {
  std::set<std::string> out;
  if (text == "all") return {all_checks().begin(), all_checks().end()};
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string name(text.substr(0, comma));
    if (std::find(all_checks().begin(), all_checks().end(), name) == all_checks().end())
      throw ParseError("unknown check '" + name + "'");
    out.insert(name);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  if (out.empty()) throw ParseError("no checks selected");
  return out;
}

/// Morphisms out of the fixture used by the naturality check: the identity,
/// the map to the trivial group, the diagonal into E(G) for constant
/// fixtures and both projections for product fixtures.
inline std::vector<SimplicialMorphism> naturality_morphisms(const std::string& uri,
                                                            const SimplicialGroupPtr& g) {
  std::vector<SimplicialMorphism> out;
  out.push_back(SimplicialMorphism::identity(g));
  out.push_back(SimplicialMorphism::to_trivial(g));
  if (uri.starts_with("constant:")) {
    auto e = load_fixture("translation:" + uri.substr(9), g->max_level());
    out.push_back(constant_to_translation_diagonal(g, e));
  } else if (uri.starts_with("product:")) {
    const std::string rest = uri.substr(8);
    const auto comma = rest.find(',');
    auto left = load_fixture(rest.substr(0, comma), g->max_level());
    auto right = load_fixture(rest.substr(comma + 1), g->max_level());
    out.push_back(product_projection(g, left, true));
    out.push_back(product_projection(g, right, false));
  }
  return out;
}

struct SuiteResult {
  std::vector<VerificationReport> reports;

  bool ok() const {
    for (const auto& r : reports)
      if (!r.ok()) return false;
    return true;
  }
};

/// Runs the selected checks in dependency order for every dimension up to
/// config.max_dim. `progress` (if set) sees each report as it completes.
inline SuiteResult run_suite(const SuiteConfig& config, const SimplicialGroupPtr& g,
                             const std::function<void(const VerificationReport&)>& progress = {}) {
  if (config.max_dim < 0) throw DimensionError("max_dim must be non-negative");
  if (config.max_dim + 1 > g->max_level())
    throw TruncationError("max_dim " + std::to_string(config.max_dim) +
                          " needs truncation level " + std::to_string(config.max_dim + 1) +
                          ", fixture '" + g->label() + "' has " + std::to_string(g->max_level()));
  SuiteResult result;
  auto emit = [&](VerificationReport r) {
    if (progress) progress(r);
    result.reports.push_back(std::move(r));
  };
  const auto& b = config.budget;
  const auto wants = [&](const char* name) { return config.checks.count(name) > 0; };

  if (wants("identities")) emit(verify_identities(*g));
  if (wants("functoriality")) emit(verify_functoriality(*g, config.max_dim, b));
  for (int n = 0; n <= config.max_dim && wants("iso"); ++n) emit(verify_iso(*g, n, config.max_dim, b));
  for (int n = 0; n <= config.max_dim && wants("phi"); ++n) emit(verify_phi_factorization(*g, n, b));
  for (int n = 0; n <= config.max_dim && wants("retraction"); ++n)
    emit(verify_retraction_identity(*g, n, b));
  for (int n = 0; n <= config.max_dim && wants("simplicial_maps"); ++n)
    for (RetractMap m : {RetractMap::D, RetractMap::S, RetractMap::H})
      emit(verify_simplicial_map(*g, m, n, b));
  for (int n = 0; n <= config.max_dim && wants("endpoints"); ++n)
    emit(verify_homotopy_endpoints(*g, n, b));
  for (int n = 0; n <= config.max_dim && wants("constancy"); ++n)
    emit(verify_constant_along_S(*g, n, b));
  if (wants("naturality"))
    for (const auto& f : naturality_morphisms(config.fixture, g))
      for (int n = 0; n <= config.max_dim; ++n) emit(verify_naturality(f, n, b));
  return result;
}

/// The aggregated report. Everything except "generated_at" is a function of
/// the configuration and fixture.
inline json suite_report_json(const SuiteConfig& config, const SuiteResult& result,
                              std::string generated_at) {
  json reports = json::array();
  for (const auto& r : result.reports) reports.push_back(to_json(r));
  json budget = {{"max_exhaustive", config.budget.max_exhaustive},
                 {"sample_count", config.budget.sample_count},
                 {"seed", config.budget.seed}};
  return {{"schema_version", kReportSchemaVersion},
          {"fixture", config.fixture},
          {"max_dim", config.max_dim},
          {"budget", std::move(budget)},
          {"ok", result.ok()},
          {"generated_at", std::move(generated_at)},
          {"reports", std::move(reports)}};
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

/// One human-readable line per report.
inline std::string summary_line(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.ok() ? "[PASS] " : "[FAIL] ") << r.check << " dim=" << r.dim << " " << r.passed << "/"
      << r.attempted;
  if (r.sampled()) out << " (sampled, seed " << *r.seed << ")";
  out << "  " << r.fixture;
  return out.str();
}

}  // namespace wbar
