#pragma once

// The retraction D : Diag NG -> W(G), the coretraction S : W(G) -> Diag NG
// and the simplicial homotopy H : Diag NG x Delta[1] -> Diag NG from
// "D then S" to the identity, which is constant along S. Together they make
// W(G) a strong simplicial deformation retract of Diag NG.
//
// Composites of faces and degeneracies are written in application order:
// d<j..i> = d_j then d_{j-1} ... then d_i, s<i..j> = s_i then ... s_j.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "wbar/classifying.hpp"
#include "wbar/delta.hpp"
#include "wbar/error.hpp"
#include "wbar/json_io.hpp"
#include "wbar/report.hpp"
#include "wbar/simplicial_group.hpp"

namespace wbar {

/// (g_{n,n-1}, ..., g_{n,0}) |-> (g_{n,i} d<n..i+1>)_i.
inline WBarSimplex retraction_D(const TruncatedSimplicialGroup& g, const DiagSimplex& x) {
  const int n = x.dim;
  if (n > g.max_level())
    throw TruncationError("retraction_D: dimension " + std::to_string(n) + " exceeds truncation " +
                          std::to_string(g.max_level()));
  WBarSimplex out{n, std::vector<Element>(static_cast<std::size_t>(n))};
  for (int i = n - 1; i >= 0; --i)
    detail::index_at(out.entries, i) = composite_faces(g, n, x.at(i), n, i + 1);
  return out;
}

/// y_i, for i from n-1 down to 0, is
///   prod_{j = i+1 .. n-1} (y_j^{-1} d<j..i+1> s<i..j-1>)
///     * prod_{j = n-1 .. i} (g_j d<j..i+1> s<i..n-1>)
/// in G_n.
inline DiagSimplex coretraction_S(const TruncatedSimplicialGroup& g, const WBarSimplex& w) {
  const int n = w.dim;
  if (n > g.max_level())
    throw TruncationError("coretraction_S: dimension " + std::to_string(n) +
                          " exceeds truncation " + std::to_string(g.max_level()));
  DiagSimplex out{n, std::vector<Element>(static_cast<std::size_t>(n))};
  if (n == 0) return out;
  const FiniteGroup& gn = g.level(n);
  for (int i = n - 1; i >= 0; --i) {
    Element y = gn.identity();
    for (int j = i + 1; j <= n - 1; ++j) {
      const Element lowered = composite_faces(g, n, gn.inverse(out.at(j)), j, i + 1);
      y = gn.mult(y, composite_degeneracies(g, n - (j - i), lowered, i, j - 1));
    }
    for (int j = n - 1; j >= i; --j) {
      const Element lowered = composite_faces(g, j, w.at(j), j, i + 1);
      y = gn.mult(y, composite_degeneracies(g, i, lowered, i, n - 1));
    }
    detail::index_at(out.entries, i) = y;
  }
  return out;
}

/// A point (x, tau^t) of Diag_n NG x Delta[1]_n.
struct HomotopyInput {
  DiagSimplex simplex;
  Delta1Simplex time;
};

/// H((g_{n,i}), tau^{n+1-k}) = (y_i): y_i = g_{n,i} for i >= k-1, and for
/// i from k-2 down to 0
///   y_i = prod_{j = i+1 .. k-2} (y_j^{-1} d<j..i+1> s<i..j-1>)
///         * prod_{j = k-2 .. i} (g_{n,j} d<k-1..i+1> s<i..k-2>).
/// tau^{n+1} gives the identity and tau^0 gives "D then S".
inline DiagSimplex homotopy_H(const TruncatedSimplicialGroup& g, const HomotopyInput& input) {
  const DiagSimplex& x = input.simplex;
  const int n = x.dim;
  if (input.time.dim() != n)
    throw DimensionError("homotopy_H: simplex of dimension " + std::to_string(n) +
                         " paired with tau of dimension " + std::to_string(input.time.dim()));
  if (n > g.max_level())
    throw TruncationError("homotopy_H: dimension " + std::to_string(n) + " exceeds truncation " +
                          std::to_string(g.max_level()));
  const int k = n + 1 - input.time.k();
  DiagSimplex out{n, x.entries};
  if (n == 0) return out;
  const FiniteGroup& gn = g.level(n);
  for (int i = k - 2; i >= 0; --i) {
    Element y = gn.identity();
    for (int j = i + 1; j <= k - 2; ++j) {
      const Element lowered = composite_faces(g, n, gn.inverse(out.at(j)), j, i + 1);
      y = gn.mult(y, composite_degeneracies(g, n - (j - i), lowered, i, j - 1));
    }
    for (int j = k - 2; j >= i; --j) {
      const Element lowered = composite_faces(g, n, x.at(j), k - 1, i + 1);
      y = gn.mult(y, composite_degeneracies(g, n - (k - 1 - i), lowered, i, k - 2));
    }
    detail::index_at(out.entries, i) = y;
  }
  return out;
}

inline DiagSimplex homotopy_H(const TruncatedSimplicialGroup& g, const DiagSimplex& x,
                              const Delta1Simplex& time) {
  return homotopy_H(g, HomotopyInput{x, time});
}

// ---------------------------------------------------------------------------
// Verification

/// The faces then the degeneracies of dimension n, as operators landing in
/// [n]: d_k = coface(n, k) for n >= 1 and s_k = codegeneracy(n, k).
struct NamedOperator {
  std::string name;
  MonotoneMap map;
};

inline std::vector<NamedOperator> generators_into(int n) {
  std::vector<NamedOperator> ops;
  for (int k = 0; n >= 1 && k <= n; ++k) ops.push_back({"d_" + std::to_string(k), coface(n, k)});
  for (int k = 0; k <= n; ++k) ops.push_back({"s_" + std::to_string(k), codegeneracy(n, k)});
  return ops;
}

namespace detail {

inline void require_levels(const TruncatedSimplicialGroup& g, int needed, const char* check) {
  if (needed > g.max_level())
    throw TruncationError(std::string(check) + ": needs level " + std::to_string(needed) +
                          ", fixture '" + g.label() + "' is truncated at " +
                          std::to_string(g.max_level()));
}

/// `input` is a simplex, or a callable returning the witness input; either
/// way it is only serialized on failure.
template <typename T, typename Input>
std::optional<Witness> compare(const T& lhs, const T& rhs, const Input& input, std::string_view op) {
  if (lhs == rhs) return std::nullopt;
  json in;
  if constexpr (std::is_invocable_v<const Input&>) {
    in = input();
  } else {
    in = to_json(input);
  }
  return Witness{std::move(in), std::string(op), to_json(lhs), to_json(rhs)};
}

}  // namespace detail

/// S then D is the identity on W_n.
inline VerificationReport verify_retraction_identity(const TruncatedSimplicialGroup& g, int n,
                                                     const Budget& budget = {}) {
  detail::require_levels(g, n, "retraction");
  return run_instances("retraction", g.label(), n, simplex_count(g, SimplexKind::wbar, n), budget,
                       [&](std::uint64_t index) {
                         const WBarSimplex w = wbar_at(g, n, index);
                         return detail::compare(retraction_D(g, coretraction_S(g, w)), w, w,
                                                "S then D");
                       });
}

enum class RetractMap { D, S, H };

inline const char* to_string(RetractMap m) {
  switch (m) {
    case RetractMap::D: return "D";
    case RetractMap::S: return "S";
    case RetractMap::H: return "H";
  }
  return "?";
}

/// Map-then-operator equals operator-then-map for every face and degeneracy
/// on every n-simplex of the domain (and for H, every tau). Needs level n+1.
inline VerificationReport verify_simplicial_map(const TruncatedSimplicialGroup& g, RetractMap which,
                                                int n, const Budget& budget = {}) {
  detail::require_levels(g, n + 1, "simplicial_maps");
  const auto ops = generators_into(n);
  const std::uint64_t n_ops = ops.size();
  const std::string name = std::string("simplicial_map_") + to_string(which);
  switch (which) {
    case RetractMap::D: {
      const std::uint64_t total = saturating_mul(simplex_count(g, SimplexKind::diag, n), n_ops);
      return run_instances(name, g.label(), n, total, budget, [&](std::uint64_t index) {
        const DiagSimplex x = diag_at(g, n, index / n_ops);
        const NamedOperator& op = ops[index % n_ops];
        return detail::compare(retraction_D(g, diag_action(g, op.map, x)),
                               wbar_action(g, op.map, retraction_D(g, x)), x, op.name);
      });
    }
    case RetractMap::S: {
      const std::uint64_t total = saturating_mul(simplex_count(g, SimplexKind::wbar, n), n_ops);
      return run_instances(name, g.label(), n, total, budget, [&](std::uint64_t index) {
        const WBarSimplex w = wbar_at(g, n, index / n_ops);
        const NamedOperator& op = ops[index % n_ops];
        return detail::compare(coretraction_S(g, wbar_action(g, op.map, w)),
                               diag_action(g, op.map, coretraction_S(g, w)), w, op.name);
      });
    }
    case RetractMap::H: {
      const std::uint64_t n_times = static_cast<std::uint64_t>(n) + 2;
      const std::uint64_t total =
          saturating_mul(saturating_mul(simplex_count(g, SimplexKind::diag, n), n_times), n_ops);
      return run_instances(name, g.label(), n, total, budget, [&](std::uint64_t index) {
        const NamedOperator& op = ops[index % n_ops];
        const Delta1Simplex time(n, static_cast<int>((index / n_ops) % n_times));
        const DiagSimplex x = diag_at(g, n, index / n_ops / n_times);
        const DiagSimplex lhs =
            homotopy_H(g, diag_action(g, op.map, x), apply_operator_to_tau(time, op.map));
        const DiagSimplex rhs = diag_action(g, op.map, homotopy_H(g, x, time));
        return detail::compare(lhs, rhs, [&] { return json{{"simplex", to_json(x)}, {"time", to_json(time)}}; },
                               op.name);
      });
    }
  }
  throw Error("verify_simplicial_map: unknown map");
}

/// H(x, tau^0) = S(D(x)) and H(x, tau^{n+1}) = x on Diag_n.
inline VerificationReport verify_homotopy_endpoints(const TruncatedSimplicialGroup& g, int n,
                                                    const Budget& budget = {}) {
  detail::require_levels(g, n, "endpoints");
  return run_instances(
      "endpoints", g.label(), n, simplex_count(g, SimplexKind::diag, n), budget,
      [&](std::uint64_t index) -> std::optional<Witness> {
        const DiagSimplex x = diag_at(g, n, index);
        const DiagSimplex start = homotopy_H(g, x, tau(n, 0));
        const DiagSimplex round_trip = coretraction_S(g, retraction_D(g, x));
        if (start != round_trip) return Witness{to_json(x), "tau^0 vs D then S", to_json(start), to_json(round_trip)};
        const DiagSimplex end = homotopy_H(g, x, tau(n, n + 1));
        if (end != x) return Witness{to_json(x), "tau^" + std::to_string(n + 1) + " vs id", to_json(end), to_json(x)};
        return std::nullopt;
      });
}

/// H(S(w), tau^k) = S(w) for every w in W_n and k in [0, n+1].
inline VerificationReport verify_constant_along_S(const TruncatedSimplicialGroup& g, int n,
                                                  const Budget& budget = {}) {
  detail::require_levels(g, n, "constancy");
  const std::uint64_t n_times = static_cast<std::uint64_t>(n) + 2;
  return run_instances("constancy", g.label(), n,
                       saturating_mul(simplex_count(g, SimplexKind::wbar, n), n_times), budget,
                       [&](std::uint64_t index) {
                         const WBarSimplex w = wbar_at(g, n, index / n_times);
                         const int k = static_cast<int>(index % n_times);
                         const DiagSimplex s = coretraction_S(g, w);
                         return detail::compare(homotopy_H(g, s, tau(n, k)), s, w,
                                                "tau^" + std::to_string(k));
                       });
}

/// total_to_wbar(phi(x)) = D(x) on Diag_n.
inline VerificationReport verify_phi_factorization(const TruncatedSimplicialGroup& g, int n,
                                                   const Budget& budget = {}) {
  detail::require_levels(g, n, "phi");
  return run_instances("phi", g.label(), n, simplex_count(g, SimplexKind::diag, n), budget,
                       [&](std::uint64_t index) {
                         const DiagSimplex x = diag_at(g, n, index);
                         return detail::compare(total_to_wbar(phi(g, x)), retraction_D(g, x),
                                                x, "phi then iso vs D");
                       });
}

/// D and S commute with the maps induced by a morphism f : G -> G'.
/// Instances: every x in Diag_n G (for D), then every w in W_n G (for S).
inline VerificationReport verify_naturality(const SimplicialMorphism& f, int n,
                                            const Budget& budget = {}) {
  const TruncatedSimplicialGroup& src = f.source();
  const TruncatedSimplicialGroup& dst = f.target();
  detail::require_levels(src, n, "naturality");
  const std::uint64_t n_diag = simplex_count(src, SimplexKind::diag, n);
  const std::uint64_t n_wbar = simplex_count(src, SimplexKind::wbar, n);
  const std::string label = src.label() + " -> " + dst.label();
  return run_instances(
      "naturality", label, n, n_diag + n_wbar, budget, [&](std::uint64_t index) {
        if (index < n_diag) {
          const DiagSimplex x = diag_at(src, n, index);
          DiagSimplex fx{n, x.entries};
          for (auto& e : fx.entries) e = f(n, e);
          WBarSimplex lhs = retraction_D(src, x);
          for (int j = 0; j < n; ++j) detail::index_at(lhs.entries, j) = f(j, lhs.at(j));
          return detail::compare(lhs, retraction_D(dst, fx), x, "D");
        }
        const WBarSimplex w = wbar_at(src, n, index - n_diag);
        WBarSimplex fw{n, w.entries};
        for (int j = 0; j < n; ++j) detail::index_at(fw.entries, j) = f(j, w.at(j));
        DiagSimplex lhs = coretraction_S(src, w);
        for (auto& e : lhs.entries) e = f(n, e);
        return detail::compare(lhs, coretraction_S(dst, fw), w, "S");
      });
}

}  // namespace wbar
