#pragma once

// Soundness checks for the layers underneath the retract: the simplicial
// identities of a fixture, functoriality of operator application, and the
// isomorphism between W(G) and the total simplicial set of NG.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wbar/classifying.hpp"
#include "wbar/delta.hpp"
#include "wbar/json_io.hpp"
#include "wbar/report.hpp"
#include "wbar/simplicial_group.hpp"

namespace wbar {

/// Every instance of every simplicial identity within the truncation.
inline VerificationReport verify_identities(const TruncatedSimplicialGroup& g) {
  const IdentityReport ir = check_simplicial_identities(g);
  VerificationReport r;
  r.check = "identities";
  r.fixture = g.label();
  r.dim = g.max_level();
  r.attempted = ir.checked;
  r.passed = ir.checked - ir.violations.size();
  for (const auto& v : ir.violations) {
    if (r.failures.size() >= VerificationReport::kMaxWitnesses) break;
    r.failures.push_back({{{"level", v.level}, {"element", v.input}}, v.identity, v.lhs, v.rhs});
  }
  return r;
}

/// All composable pairs (theta : [a] -> [b], psi : [b] -> [c]) with
/// a, b, c <= max_dim.
inline std::vector<std::pair<MonotoneMap, MonotoneMap>> composable_pairs(int max_dim) {
  std::vector<std::pair<MonotoneMap, MonotoneMap>> pairs;
  for (int a = 0; a <= max_dim; ++a)
    for (int b = 0; b <= max_dim; ++b)
      for (int c = 0; c <= max_dim; ++c)
        for (const auto& theta : all_monotone_maps(a, b))
          for (const auto& psi : all_monotone_maps(b, c)) pairs.emplace_back(theta, psi);
  return pairs;
}

/// x G_{theta psi} = (x G_psi) G_theta for all composable pairs with
/// dimensions <= max_dim and every x in G_c.
inline VerificationReport verify_functoriality(const TruncatedSimplicialGroup& g, int max_dim,
                                               const Budget& budget = {}) {
  if (max_dim > g.max_level())
    throw TruncationError("functoriality: dimension " + std::to_string(max_dim) +
                          " exceeds truncation " + std::to_string(g.max_level()));
  // Flatten (pair, element) instances with a prefix sum over |G_c|.
  const auto pairs = composable_pairs(max_dim);
  std::vector<std::uint64_t> offsets{0};
  for (const auto& [theta, psi] : pairs) offsets.push_back(offsets.back() + g.level(psi.dst()).order());
  return run_instances("functoriality", g.label(), max_dim, offsets.back(), budget,
                       [&](std::uint64_t index) -> std::optional<Witness> {
                         const auto it = std::upper_bound(offsets.begin(), offsets.end(), index) - 1;
                         const auto p = static_cast<std::size_t>(it - offsets.begin());
                         const auto& [theta, psi] = pairs[p];
                         const auto x = static_cast<Element>(index - *it);
                         const Element lhs = apply_operator(g, compose(theta, psi), x);
                         const Element rhs = apply_operator(g, theta, apply_operator(g, psi, x));
                         if (lhs == rhs) return std::nullopt;
                         return Witness{{{"level", psi.dst()}, {"element", x}},
                                        theta.to_string() + " then " + psi.to_string(), lhs, rhs};
                       });
}

/// The isomorphism W_n = T_n(NG) at dimension n:
///  - total_to_wbar(wbar_to_total(w)) = w for every w;
///  - wbar_to_total(w) satisfies the matching condition;
///  - the matching-condition enumeration of T_n equals the image of
///    wbar_to_total, and total_to_wbar is inverse on it;
///  - equivariance under every monotone map [m] -> [n], m <= max_src.
/// The matching enumeration is exhaustive whenever it fits the budget;
/// otherwise that part is skipped and only the sampled parts run.
inline VerificationReport verify_iso(const TruncatedSimplicialGroup& g, int n, int max_src,
                                     const Budget& budget = {}) {
  if (std::max(n, max_src) > g.max_level())
    throw TruncationError("iso: dimension exceeds truncation " + std::to_string(g.max_level()));
  const std::uint64_t n_wbar = simplex_count(g, SimplexKind::wbar, n);

  // Image of wbar_to_total versus the direct matching-condition enumeration.
  VerificationReport set_part;
  set_part.check = "iso";
  set_part.fixture = g.label();
  set_part.dim = n;
  std::uint64_t raw = 1;
  for (auto r : simplex_radices(g, SimplexKind::total, n)) raw = saturating_mul(raw, r);
  if (raw <= budget.max_exhaustive) {
    const auto matched = enumerate_total_by_matching(g, n, raw);
    set_part.record(matched.size() == n_wbar
                        ? std::nullopt
                        : std::optional<Witness>(Witness{{{"dim", n}}, "count of matching tuples",
                                                         matched.size(), n_wbar}));
    for (const auto& t : matched) {
      const WBarSimplex w = total_to_wbar(t);
      const TotalSimplex back = wbar_to_total(g, w);
      set_part.record(back == t ? std::nullopt
                                : std::optional<Witness>(Witness{to_json(t), "total_to_wbar then wbar_to_total",
                                                                 to_json(back), to_json(t)}));
    }
  }

  std::vector<MonotoneMap> maps;
  for (int m = 0; m <= max_src; ++m)
    for (auto& theta : all_monotone_maps(m, n)) maps.push_back(std::move(theta));
  const std::uint64_t per_simplex = 1 + maps.size();

  VerificationReport report = run_instances(
      "iso", g.label(), n, saturating_mul(n_wbar, per_simplex), budget,
      [&](std::uint64_t index) -> std::optional<Witness> {
        const WBarSimplex w = wbar_at(g, n, index / per_simplex);
        const std::uint64_t which = index % per_simplex;
        const TotalSimplex t = wbar_to_total(g, w);
        if (which == 0) {
          if (!satisfies_matching(g, t))
            return Witness{to_json(w), "matching condition of wbar_to_total", to_json(t), nullptr};
          const WBarSimplex back = total_to_wbar(t);
          if (back != w) return Witness{to_json(w), "wbar_to_total then total_to_wbar", to_json(back), to_json(w)};
          return std::nullopt;
        }
        const MonotoneMap& theta = maps[which - 1];
        const WBarSimplex lhs = total_to_wbar(total_action(g, theta, t));
        const WBarSimplex rhs = wbar_action(g, theta, w);
        if (lhs == rhs) return std::nullopt;
        return Witness{to_json(w), theta.to_string(), to_json(lhs), to_json(rhs)};
      });
  report.merge(set_part);
  return report;
}

}  // namespace wbar
