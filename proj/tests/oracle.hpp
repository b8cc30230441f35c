#pragma once

// Reference implementations of D, S and H for n <= 3, written against raw
// copies of the structure tables. They share no helpers with the library:
// entries are indexed by their mathematical index (entry i at position i),
// composite faces and degeneracies are spelled out, and S is unwound by hand
// for each dimension.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wbar/simplicial_group.hpp"

namespace oracle {

using Table = std::vector<std::uint32_t>;

struct Tables {
  std::vector<std::vector<Table>> mult;  // mult[n][a][b]
  std::vector<Table> inv;                // inv[n][a]
  std::vector<std::vector<Table>> d;     // d[n][k][x], n >= 1
  std::vector<std::vector<Table>> s;     // s[n][k][x]

  explicit Tables(const wbar::TruncatedSimplicialGroup& g) {
    const int top = g.max_level();
    mult.resize(top + 1);
    inv.resize(top + 1);
    d.resize(top + 1);
    s.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
      const auto& grp = g.level(n);
      const auto order = static_cast<std::uint32_t>(grp.order());
      mult[n].assign(order, Table(order));
      inv[n].assign(order, 0);
      for (std::uint32_t a = 0; a < order; ++a)
        for (std::uint32_t b = 0; b < order; ++b) {
          mult[n][a][b] = grp.mult(a, b);
          if (mult[n][a][b] == grp.identity()) inv[n][a] = b;
        }
      if (n >= 1)
        for (int k = 0; k <= n; ++k) {
          const auto img = g.face_hom(n, k).image();
          d[n].emplace_back(img.begin(), img.end());
        }
      if (n < top)
        for (int k = 0; k <= n; ++k) {
          const auto img = g.degeneracy_hom(n, k).image();
          s[n].emplace_back(img.begin(), img.end());
        }
    }
  }
};

// An element together with its level, so chains read left to right.
struct V {
  const Tables* t;
  int level;
  std::uint32_t x;

  V d(int k) const { return {t, level - 1, t->d.at(level).at(k).at(x)}; }
  V s(int k) const { return {t, level + 1, t->s.at(level).at(k).at(x)}; }
  V inv() const { return {t, level, t->inv.at(level).at(x)}; }
  V operator*(const V& o) const {
    if (o.level != level) throw std::logic_error("oracle: level mismatch");
    return {t, level, t->mult.at(level).at(x).at(o.x)};
  }
};

/// D on (g_{n,i}) given by mathematical index: entry i = g_{n,i} d_n ... d_{i+1}.
inline std::vector<std::uint32_t> D(const Tables& t, int n, const std::vector<std::uint32_t>& g) {
  std::vector<std::uint32_t> out(n);
  for (int i = 0; i < n; ++i) {
    V v{&t, n, g[i]};
    for (int k = n; k >= i + 1; --k) v = v.d(k);
    out[i] = v.x;
  }
  return out;
}

/// S on (g_q), g_q in G_q, by mathematical index; unwound for n <= 3.
inline std::vector<std::uint32_t> S(const Tables& t, int n, const std::vector<std::uint32_t>& g) {
  auto at = [&](int q) { return V{&t, q, g[q]}; };
  switch (n) {
    case 0:
      return {};
    case 1:
      return {at(0).s(0).x};
    case 2: {
      const V y1 = at(1).s(1);
      const V y0 = y1.inv().d(1).s(0) * at(1).d(1).s(0).s(1) * at(0).s(0).s(1);
      return {y0.x, y1.x};
    }
    case 3: {
      const V y2 = at(2).s(2);
      const V y1 = y2.inv().d(2).s(1) * at(2).d(2).s(1).s(2) * at(1).s(1).s(2);
      const V y0 = y1.inv().d(1).s(0) * y2.inv().d(2).d(1).s(0).s(1) *
                   at(2).d(2).d(1).s(0).s(1).s(2) * at(1).d(1).s(0).s(1).s(2) *
                   at(0).s(0).s(1).s(2);
      return {y0.x, y1.x, y2.x};
    }
    default:
      throw std::invalid_argument("oracle::S is unwound only for n <= 3");
  }
}

namespace detail {

inline V faces_down(V v, int hi, int lo) {
  for (int k = hi; k >= lo; --k) v = v.d(k);
  return v;
}

inline V degeneracies_up(V v, int lo, int hi) {
  for (int k = lo; k <= hi; ++k) v = v.s(k);
  return v;
}

// y_i of H at prism parameter k (input tau^{n+1-k}), recomputed top-down.
inline V h_entry(const Tables& t, int n, const std::vector<std::uint32_t>& g, int k, int i) {
  if (i >= k - 1) return V{&t, n, g[i]};
  V y{&t, n, 0};
  for (std::uint32_t e = 0; e < t.mult[n].size(); ++e)  // the idempotent of G_n
    if (t.mult[n][e][e] == e) y.x = e;
  for (int j = i + 1; j <= k - 2; ++j)
    y = y * degeneracies_up(faces_down(h_entry(t, n, g, k, j).inv(), j, i + 1), i, j - 1);
  for (int j = k - 2; j >= i; --j)
    y = y * degeneracies_up(faces_down(V{&t, n, g[j]}, k - 1, i + 1), i, k - 2);
  return y;
}

}  // namespace detail

/// H on ((g_{n,i}), tau^time) by mathematical index, time in [0, n+1].
inline std::vector<std::uint32_t> H(const Tables& t, int n, const std::vector<std::uint32_t>& g,
                                    int time) {
  const int k = n + 1 - time;
  std::vector<std::uint32_t> out(n);
  for (int i = 0; i < n; ++i) out[i] = detail::h_entry(t, n, g, k, i).x;
  return out;
}

}  // namespace oracle
