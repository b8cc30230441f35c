// wbar: verify the W-bar / Diag retract on finite fixtures, evaluate the maps,
// and print canonical factorizations.
//
// Exit codes: 0 success, 1 verification failure, 2 input or configuration
// error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wbar/suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

wbar::json read_payload(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw wbar::ParseError("cannot open payload file '" + text.substr(1) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    body = buf.str();
  }
  try {
    return wbar::json::parse(body);
  } catch (const wbar::json::exception& e) {
    throw wbar::ParseError(std::string("payload is not valid JSON: ") + e.what());
  }
}

int cmd_verify(wbar::SuiteConfig config, const std::string& budget_text, std::uint64_t seed,
               const std::string& checks_text, unsigned workers) {
  config.budget = wbar::parse_budget(budget_text, seed);
  config.budget.workers = workers;
  config.checks = wbar::parse_checks(checks_text);
  const auto g = wbar::load_fixture(config.fixture, config.max_dim + 1);
  const auto result = wbar::run_suite(config, g, [](const wbar::VerificationReport& r) {
    std::cout << wbar::summary_line(r) << '\n' << std::flush;
  });
  std::uint64_t failed = 0;
  for (const auto& r : result.reports) failed += r.failed();
  std::cout << (result.ok() ? "OK" : "FAILED") << ": " << result.reports.size() << " reports, "
            << failed << " failed instances\n";
  if (!config.report_path.empty()) {
    std::ofstream out(config.report_path);
    if (!out) throw wbar::ParseError("cannot write report '" + config.report_path + "'");
    out << wbar::suite_report_json(config, result, wbar::utc_timestamp()).dump(2) << '\n';
  }
  return result.ok() ? kExitOk : kExitVerification;
}

int cmd_compute(const std::string& fixture, const std::string& map, const std::string& input,
                const std::optional<std::string>& op_text, const std::optional<int>& time) {
  const wbar::json payload = read_payload(input);
  if (!payload.is_object() || !payload.contains("dim") || !payload.at("dim").is_number_integer())
    throw wbar::ParseError("payload needs an integer 'dim'");
  const int dim = payload.at("dim").get<int>();
  if (dim < 0) throw wbar::ParseError("payload has a negative dimension");
  std::optional<wbar::MonotoneMap> op;
  if (op_text) op = wbar::MonotoneMap::parse(*op_text);

  int needed = dim;
  if (op) needed = std::max({needed, op->src(), op->dst()});
  const auto g = wbar::load_fixture(fixture, needed + 1);

  auto require_op = [&]() -> const wbar::MonotoneMap& {
    if (!op) throw wbar::ParseError(map + " needs --operator");
    return *op;
  };
  wbar::json out;
  if (map == "D") {
    out = wbar::to_json(wbar::retraction_D(*g, wbar::diag_from_json(payload, *g)));
  } else if (map == "S") {
    out = wbar::to_json(wbar::coretraction_S(*g, wbar::wbar_from_json(payload, *g)));
  } else if (map == "H") {
    if (!time) throw wbar::ParseError("H needs --time");
    out = wbar::to_json(wbar::homotopy_H(*g, wbar::diag_from_json(payload, *g), wbar::tau(dim, *time)));
  } else if (map == "wbar_action") {
    out = wbar::to_json(wbar::wbar_action(*g, require_op(), wbar::wbar_from_json(payload, *g)));
  } else if (map == "diag_action") {
    out = wbar::to_json(wbar::diag_action(*g, require_op(), wbar::diag_from_json(payload, *g)));
  } else {
    throw wbar::ParseError("unknown map '" + map + "'");
  }
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int cmd_factorize(const std::string& text) {
  const auto f = wbar::factorize(wbar::MonotoneMap::parse(text));
  wbar::json out = {{"map", text},
                    {"degeneracies", f.degeneracy_indices},
                    {"faces", f.face_indices},
                    {"intermediate_dim", f.intermediate_dim}};
  std::cout << out.dump() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kan's W-bar versus Diag NG: retract, homotopy and their verification"};
  app.require_subcommand(1);

  wbar::SuiteConfig config;
  std::string budget_text = "auto";
  std::string checks_text = "all";
  std::uint64_t seed = 0;
  unsigned workers = 1;
  auto* verify = app.add_subcommand("verify", "run the verification suite on a fixture");
  verify->add_option("--fixture", config.fixture, "fixture URI or JSON file")->required();
  verify->add_option("--max-dim", config.max_dim, "largest simplex dimension checked")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--budget", budget_text, "auto | exhaustive | sampled:COUNT | LIMIT");
  verify->add_option("--seed", seed, "seed for sampled checks");
  verify->add_option("--checks", checks_text, "comma-separated checks, or 'all'");
  verify->add_option("--report", config.report_path, "write the JSON report here");
  verify->add_option("--workers", workers, "threads per check")->check(CLI::PositiveNumber);

  std::string fixture = "constant:C2";
  std::string map;
  std::string input;
  std::optional<std::string> op_text;
  std::optional<int> time;
  auto* compute = app.add_subcommand("compute", "evaluate one map on one simplex");
  compute->add_option("map", map, "D | S | H | wbar_action | diag_action")
      ->required()
      ->check(CLI::IsMember({"D", "S", "H", "wbar_action", "diag_action"}));
  compute->add_option("--fixture", fixture, "fixture URI or JSON file");
  compute->add_option("--input", input, "simplex as JSON, or @file")->required();
  compute->add_option("--operator", op_text, "monotone map 'm->n:v0,...,vm'");
  compute->add_option("--time", time, "prism coordinate k, meaning tau^k");

  std::string map_text;
  auto* factor = app.add_subcommand("factorize", "print the canonical factorization of a map");
  factor->add_option("map", map_text, "monotone map 'm->n:v0,...,vm'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*verify) return cmd_verify(config, budget_text, seed, checks_text, workers);
    if (*compute) return cmd_compute(fixture, map, input, op_text, time);
    return cmd_factorize(map_text);
  } catch (const wbar::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const wbar::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
