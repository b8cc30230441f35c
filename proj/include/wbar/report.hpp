#pragma once

// Verification reports and the exhaustive-or-sampled instance driver.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace wbar {

/// How many instances a check may evaluate. Up to `max_exhaustive` instances
/// are enumerated completely; above that, `sample_count` instances are drawn
/// uniformly (with replacement) from a generator seeded with `seed`.
struct Budget {
  std::uint64_t max_exhaustive = 1'000'000;
  std::uint64_t sample_count = 100'000;
  std::uint64_t seed = 0;
  unsigned workers = 1;

  static Budget exhaustive() {
    Budget b;
    b.max_exhaustive = std::numeric_limits<std::uint64_t>::max();
    return b;
  }

  static Budget sampled(std::uint64_t count, std::uint64_t seed) {
    Budget b;
    b.max_exhaustive = 0;
    b.sample_count = count;
    b.seed = seed;
    return b;
  }
};

/// One failed instance: both sides of the equation that should have held.
struct Witness {
  nlohmann::json input;
  std::string operator_name;
  nlohmann::json lhs;
  nlohmann::json rhs;
};

struct VerificationReport {
  /// Witnesses kept per report; further failures are only counted.
  static constexpr std::size_t kMaxWitnesses = 32;

  std::string check;
  std::string fixture;
  int dim = 0;
  std::uint64_t attempted = 0;
  std::uint64_t passed = 0;
  std::optional<std::uint64_t> seed;  // set when the instances were sampled
  std::vector<Witness> failures;

  std::uint64_t failed() const noexcept { return attempted - passed; }
  bool ok() const noexcept { return attempted == passed; }
  bool sampled() const noexcept { return seed.has_value(); }

  void record(std::optional<Witness> failure) {
    ++attempted;
    if (!failure) {
      ++passed;
    } else if (failures.size() < kMaxWitnesses) {
      failures.push_back(std::move(*failure));
    }
  }

  /// Appends the counts and witnesses of `other`; associative.
  void merge(const VerificationReport& other) {
    attempted += other.attempted;
    passed += other.passed;
    for (const auto& w : other.failures) {
      if (failures.size() >= kMaxWitnesses) break;
      failures.push_back(w);
    }
  }
};

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& w : r.failures)
    failures.push_back({{"input", w.input}, {"operator", w.operator_name}, {"lhs", w.lhs}, {"rhs", w.rhs}});
  return {{"check", r.check},
          {"fixture", r.fixture},
          {"dim", r.dim},
          {"attempted", r.attempted},
          {"passed", r.passed},
          {"failed", r.failed()},
          {"seed", r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr)},
          {"failures", std::move(failures)}};
}

namespace detail {

/// Unbiased draw from [0, bound) by rejection; independent of the standard
/// library's distribution implementations so sampled runs reproduce exactly.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v = 0;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

}  // namespace detail

/// Evaluates `check(index)` for every instance index in [0, total) or for a
/// seeded sample of them. `check` returns a witness on failure. Work is split
/// into contiguous partitions merged in order, so the report does not depend
/// on the number of workers.
template <typename Check>
VerificationReport run_instances(std::string check_name, std::string fixture, int dim,
                                 std::uint64_t total, const Budget& budget, Check&& check) {
  VerificationReport report;
  report.check = std::move(check_name);
  report.fixture = std::move(fixture);
  report.dim = dim;
  if (total == 0) return report;

  std::vector<std::uint64_t> picks;
  const bool sampling = total > budget.max_exhaustive;
  if (sampling) {
    report.seed = budget.seed;
    std::mt19937_64 rng(budget.seed);
    picks.resize(budget.sample_count);
    for (auto& p : picks) p = detail::draw_below(rng, total);
  }
  const std::uint64_t count = sampling ? picks.size() : total;
  auto index_of = [&](std::uint64_t t) { return sampling ? picks[t] : t; };

  const unsigned workers =
      static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(budget.workers, count)));
  if (workers == 1) {
    for (std::uint64_t t = 0; t < count; ++t) report.record(check(index_of(t)));
    return report;
  }

  std::vector<VerificationReport> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      try {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min(count, lo + chunk);
        for (std::uint64_t t = lo; t < hi; ++t) parts[w].record(check(index_of(t)));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : threads) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& p : parts) report.merge(p);
  return report;
}

}  // namespace wbar
