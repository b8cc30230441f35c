#pragma once

// The dimensionwise nerve NG of a simplicial group, its diagonal and total
// simplicial sets, the comparison map phi : Diag NG -> T(NG), and Kan's
// classifying simplicial set W(G) together with the isomorphism
// W(G) = T(NG).
//
// Bisimplicial orientation: (NG)_{p,q} = N_q(G_p). "Horizontal" operators act
// on the group level p, "vertical" ones on the nerve length q.
//
// Every tuple is stored in descending mathematical index: storage position 0 holds
// the highest index. Use at(j) to read by mathematical index.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "wbar/delta.hpp"
#include "wbar/error.hpp"
#include "wbar/finite_group.hpp"
#include "wbar/simplicial_group.hpp"

namespace wbar {

namespace detail {

inline Element index_at(const std::vector<Element>& entries, int j) {
  return entries[entries.size() - 1 - static_cast<std::size_t>(j)];
}

inline Element& index_at(std::vector<Element>& entries, int j) {
  return entries[entries.size() - 1 - static_cast<std::size_t>(j)];
}

}  // namespace detail

/// A q-simplex (g_{q-1}, ..., g_0) of the nerve of G_p.
struct NerveSimplex {
  int group_level = 0;
  std::vector<Element> entries;

  int length() const noexcept { return static_cast<int>(entries.size()); }
  Element at(int j) const { return detail::index_at(entries, j); }

  bool operator==(const NerveSimplex&) const = default;
};

/// An n-simplex of Diag NG: n entries of G_n.
struct DiagSimplex {
  int dim = 0;
  std::vector<Element> entries;

  Element at(int i) const { return detail::index_at(entries, i); }

  bool operator==(const DiagSimplex&) const = default;
};

/// An n-simplex (g_{n-1}, ..., g_0) of W(G), with g_j in G_j.
struct WBarSimplex {
  int dim = 0;
  std::vector<Element> entries;

  Element at(int j) const { return detail::index_at(entries, j); }

  bool operator==(const WBarSimplex&) const = default;
};

/// An n-simplex (x_n, ..., x_0) of T(NG), with x_q in N_{n-q}(G_q).
struct TotalSimplex {
  int dim = 0;
  std::vector<NerveSimplex> components;  // position t holds x_{dim - t}

  const NerveSimplex& component(int q) const {
    return components[static_cast<std::size_t>(dim - q)];
  }

  bool operator==(const TotalSimplex&) const = default;
};

// ---------------------------------------------------------------------------
// Actions

/// The nerve operator N_theta on an n-tuple of a single group: component i
/// is the descending product g_{(i+1)theta - 1} ... g_{i theta}.
inline std::vector<Element> nerve_action(const FiniteGroup& g, const MonotoneMap& theta,
                                         const std::vector<Element>& x) {
  if (static_cast<int>(x.size()) != theta.dst())
    throw DimensionError("nerve_action: tuple of length " + std::to_string(x.size()) +
                         " under operator " + theta.to_string());
  const int m = theta.src();
  std::vector<Element> out(static_cast<std::size_t>(m));
  for (int i = m - 1; i >= 0; --i) {
    Element prod = g.identity();
    for (int j = theta(i + 1) - 1; j >= theta(i); --j) prod = g.mult(prod, detail::index_at(x, j));
    detail::index_at(out, i) = prod;
  }
  return out;
}

inline NerveSimplex nerve_action(const FiniteGroup& g, const MonotoneMap& theta,
                                 const NerveSimplex& x) {
  return {x.group_level, nerve_action(g, theta, x.entries)};
}

/// (NG)_{alpha, beta}: G_alpha entrywise, then the nerve operator beta.
inline NerveSimplex bisimplicial_action(const TruncatedSimplicialGroup& g,
                                        const MonotoneMap& alpha, const MonotoneMap& beta,
                                        const NerveSimplex& x) {
  if (x.group_level != alpha.dst())
    throw DimensionError("bisimplicial_action: element at level " +
                         std::to_string(x.group_level) + ", horizontal operator " +
                         alpha.to_string());
  if (alpha.src() > g.max_level() || alpha.dst() > g.max_level())
    throw TruncationError("bisimplicial_action: operator " + alpha.to_string() +
                          " exceeds truncation " + std::to_string(g.max_level()));
  const Factorization f = factorize(alpha);
  std::vector<Element> moved(x.entries.size());
  for (std::size_t t = 0; t < moved.size(); ++t) moved[t] = apply_factorization(g, f, x.entries[t]);
  return {alpha.src(), nerve_action(g.level(alpha.src()), beta, moved)};
}

inline DiagSimplex diag_action(const TruncatedSimplicialGroup& g, const MonotoneMap& theta,
                               const DiagSimplex& x) {
  if (x.dim != theta.dst())
    throw DimensionError("diag_action: simplex of dimension " + std::to_string(x.dim) +
                         " under operator " + theta.to_string());
  NerveSimplex moved = bisimplicial_action(g, theta, theta, NerveSimplex{x.dim, x.entries});
  return {theta.src(), std::move(moved.entries)};
}

/// True when x_q d_q^h = x_{q-1} d_0^v for every q in [1, n] (and shapes fit).
inline bool satisfies_matching(const TruncatedSimplicialGroup& g, const TotalSimplex& t) {
  if (t.dim < 0 || t.components.size() != static_cast<std::size_t>(t.dim) + 1) return false;
  for (int q = 0; q <= t.dim; ++q) {
    const NerveSimplex& x = t.component(q);
    if (x.group_level != q || x.length() != t.dim - q) return false;
    for (Element e : x.entries)
      if (q > g.max_level() || !g.level(q).contains(e)) return false;
  }
  for (int q = t.dim; q >= 1; --q) {
    const NerveSimplex& hi = t.component(q);
    const NerveSimplex& lo = t.component(q - 1);
    // d_0^v drops the index-0 entry, which is stored last.
    for (std::size_t s = 0; s < hi.entries.size(); ++s)
      if (g.face(q, q, hi.entries[s]) != lo.entries[s]) return false;
  }
  return true;
}

/// Component p of the result is x_{p theta} under the splitting Spl_p(theta).
inline TotalSimplex total_action(const TruncatedSimplicialGroup& g, const MonotoneMap& theta,
                                 const TotalSimplex& x) {
  if (x.dim != theta.dst())
    throw DimensionError("total_action: simplex of dimension " + std::to_string(x.dim) +
                         " under operator " + theta.to_string());
  const int m = theta.src();
  TotalSimplex out{m, {}};
  out.components.reserve(static_cast<std::size_t>(m) + 1);
  for (int p = m; p >= 0; --p) {
    const auto [low, high] = splitting(theta, p);
    out.components.push_back(bisimplicial_action(g, low, high, x.component(theta(p))));
  }
  return out;
}

/// phi: component q is x d^h_n ... d^h_{q+1} d^v_{q-1} ... d^v_0.
inline TotalSimplex phi(const TruncatedSimplicialGroup& g, const DiagSimplex& x) {
  const int n = x.dim;
  if (n > g.max_level())
    throw TruncationError("phi: dimension " + std::to_string(n) + " exceeds truncation " +
                          std::to_string(g.max_level()));
  const NerveSimplex whole{n, x.entries};
  TotalSimplex out{n, {}};
  for (int q = n; q >= 0; --q) {
    // Horizontal d_n ... d_{q+1} is the inclusion [q] -> [n]; vertical
    // d_{q-1} ... d_0 is the shift [n-q] -> [n], i |-> i + q.
    std::vector<int> incl(static_cast<std::size_t>(q) + 1);
    for (int i = 0; i <= q; ++i) incl[static_cast<std::size_t>(i)] = i;
    std::vector<int> shift(static_cast<std::size_t>(n - q) + 1);
    for (int i = 0; i <= n - q; ++i) shift[static_cast<std::size_t>(i)] = i + q;
    out.components.push_back(bisimplicial_action(g, MonotoneMap(q, n, std::move(incl)),
                                                 MonotoneMap(n - q, n, std::move(shift)), whole));
  }
  return out;
}

/// W(G)_theta: component i is the descending product over j of
/// g_j G_{theta|[i]^[j]}, taken in G_i.
inline WBarSimplex wbar_action(const TruncatedSimplicialGroup& g, const MonotoneMap& theta,
                               const WBarSimplex& w) {
  if (w.dim != theta.dst())
    throw DimensionError("wbar_action: simplex of dimension " + std::to_string(w.dim) +
                         " under operator " + theta.to_string());
  const int m = theta.src();
  WBarSimplex out{m, std::vector<Element>(static_cast<std::size_t>(m))};
  for (int i = m - 1; i >= 0; --i) {
    const FiniteGroup& gi = g.level(i);
    Element prod = gi.identity();
    for (int j = theta(i + 1) - 1; j >= theta(i); --j)
      prod = gi.mult(prod, apply_operator(g, restrict_to(theta, i, j), w.at(j)));
    detail::index_at(out.entries, i) = prod;
  }
  return out;
}

/// x_q has index-r entry g_{q+r} d_{q+r} ... d_{q+1}.
inline TotalSimplex wbar_to_total(const TruncatedSimplicialGroup& g, const WBarSimplex& w) {
  const int n = w.dim;
  if (n > 0 && n - 1 > g.max_level())
    throw TruncationError("wbar_to_total: dimension " + std::to_string(n) + " exceeds truncation");
  TotalSimplex out{n, {}};
  for (int q = n; q >= 0; --q) {
    NerveSimplex x{q, std::vector<Element>(static_cast<std::size_t>(n - q))};
    for (int r = 0; r < n - q; ++r)
      detail::index_at(x.entries, r) = composite_faces(g, q + r, w.at(q + r), q + r, q + 1);
    out.components.push_back(std::move(x));
  }
  return out;
}

/// g_q is the index-0 entry of x_q.
inline WBarSimplex total_to_wbar(const TotalSimplex& t) {
  WBarSimplex out{t.dim, std::vector<Element>(static_cast<std::size_t>(t.dim))};
  for (int q = t.dim - 1; q >= 0; --q) detail::index_at(out.entries, q) = t.component(q).at(0);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

enum class SimplexKind { wbar, diag, total };

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

/// Mixed radix over the entries of a simplex of the given kind, storage
/// order, most significant first. For `total` this is the raw (unmatched)
/// product of all components.
inline std::vector<std::size_t> simplex_radices(const TruncatedSimplicialGroup& g, SimplexKind kind,
                                                int n) {
  std::vector<std::size_t> radices;
  switch (kind) {
    case SimplexKind::wbar:
      for (int j = n - 1; j >= 0; --j) radices.push_back(g.level(j).order());
      break;
    case SimplexKind::diag:
      for (int i = 0; i < n; ++i) radices.push_back(g.level(n).order());
      break;
    case SimplexKind::total:
      for (int q = n; q >= 0; --q)
        for (int r = 0; r < n - q; ++r) radices.push_back(g.level(q).order());
      break;
  }
  return radices;
}

/// Number of simplices of the kind at dimension n. For `total` this counts
/// the image of wbar_to_total, which equals |W_n|.
inline std::uint64_t simplex_count(const TruncatedSimplicialGroup& g, SimplexKind kind, int n) {
  if (kind == SimplexKind::total) kind = SimplexKind::wbar;
  std::uint64_t count = 1;
  for (auto r : simplex_radices(g, kind, n)) count = saturating_mul(count, r);
  return count;
}

inline WBarSimplex wbar_at(const TruncatedSimplicialGroup& g, int n, std::uint64_t index) {
  const MixedRadix radix(simplex_radices(g, SimplexKind::wbar, n));
  return {n, radix.decode(static_cast<std::size_t>(index))};
}

inline DiagSimplex diag_at(const TruncatedSimplicialGroup& g, int n, std::uint64_t index) {
  const MixedRadix radix(simplex_radices(g, SimplexKind::diag, n));
  return {n, radix.decode(static_cast<std::size_t>(index))};
}

template <SimplexKind Kind>
struct SimplexOf;
template <>
struct SimplexOf<SimplexKind::wbar> {
  using type = WBarSimplex;
};
template <>
struct SimplexOf<SimplexKind::diag> {
  using type = DiagSimplex;
};
template <>
struct SimplexOf<SimplexKind::total> {
  using type = TotalSimplex;
};

/// All simplices of the kind at dimension n. Total simplices come from
/// wbar_to_total; see enumerate_total_by_matching for the independent route.
template <SimplexKind Kind>
std::vector<typename SimplexOf<Kind>::type> enumerate_level(const TruncatedSimplicialGroup& g,
                                                            int n, std::uint64_t max_count) {
  const std::uint64_t count = simplex_count(g, Kind, n);
  if (count > max_count)
    throw BudgetExceeded("enumerate_level: " + std::to_string(count) + " simplices at dimension " +
                         std::to_string(n) + " exceed the budget of " + std::to_string(max_count));
  std::vector<typename SimplexOf<Kind>::type> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t index = 0; index < count; ++index) {
    if constexpr (Kind == SimplexKind::wbar) {
      out.push_back(wbar_at(g, n, index));
    } else if constexpr (Kind == SimplexKind::diag) {
      out.push_back(diag_at(g, n, index));
    } else {
      out.push_back(wbar_to_total(g, wbar_at(g, n, index)));
    }
  }
  return out;
}

/// Every tuple (x_q) in the raw product that satisfies the matching
/// condition, in raw mixed-radix order.
inline std::vector<TotalSimplex> enumerate_total_by_matching(const TruncatedSimplicialGroup& g,
                                                             int n, std::uint64_t max_raw) {
  const auto radices = simplex_radices(g, SimplexKind::total, n);
  std::uint64_t raw = 1;
  for (auto r : radices) raw = saturating_mul(raw, r);
  if (raw > max_raw)
    throw BudgetExceeded("enumerate_total_by_matching: " + std::to_string(raw) +
                         " raw tuples exceed the budget of " + std::to_string(max_raw));
  const MixedRadix radix(radices);
  std::vector<TotalSimplex> out;
  std::vector<Element> digits(radices.size());
  for (std::uint64_t index = 0; index < raw; ++index) {
    radix.decode(static_cast<std::size_t>(index), digits);
    TotalSimplex t{n, {}};
    std::size_t pos = 0;
    for (int q = n; q >= 0; --q) {
      NerveSimplex x{q, {}};
      for (int r = 0; r < n - q; ++r) x.entries.push_back(digits[pos++]);
      t.components.push_back(std::move(x));
    }
    if (satisfies_matching(g, t)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace wbar
