#pragma once

// The simplex category: monotone maps [m] -> [n], their generators, and the
// combinatorics needed to evaluate simplicial operators.
//
// Composition is written left to right throughout: compose(f, g) applies f
// first, so i(fg) = (if)g. A simplicial object acts on the right, which is
// why evaluating X_theta applies the faces of theta's factorization before
// its degeneracies.

#include <charconv>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wbar/error.hpp"

namespace wbar {

/// A morphism [src] -> [dst] of the simplex category, stored densely.
class MonotoneMap {
 public:
  MonotoneMap(int src, int dst, std::vector<int> values)
      : src_(src), dst_(dst), values_(std::move(values)) {
    if (src_ < 0 || dst_ < 0)
      throw DimensionError("monotone map: negative dimension");
    if (values_.size() != static_cast<std::size_t>(src_) + 1)
      throw DimensionError("monotone map: expected " + std::to_string(src_ + 1) +
                           " values, got " + std::to_string(values_.size()));
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] < 0 || values_[i] > dst_)
        throw DimensionError("monotone map: value " + std::to_string(values_[i]) +
                             " outside [0," + std::to_string(dst_) + "]");
      if (i > 0 && values_[i - 1] > values_[i])
        throw DimensionError("monotone map: values not weakly increasing at position " +
                             std::to_string(i));
    }
  }

  static MonotoneMap identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
    return MonotoneMap(n, n, std::move(v));
  }

  /// The constant map [m] -> [n] with value c.
  static MonotoneMap constant(int m, int n, int c) {
    return MonotoneMap(m, n, std::vector<int>(static_cast<std::size_t>(m) + 1, c));
  }

  int src() const noexcept { return src_; }
  int dst() const noexcept { return dst_; }

  /// Image of i under the map.
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }

  std::span<const int> values() const noexcept { return values_; }

  bool is_identity() const noexcept {
    if (src_ != dst_) return false;
    for (int i = 0; i <= src_; ++i)
      if (values_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  bool operator==(const MonotoneMap&) const = default;

  /// Textual form "m->n:v0,v1,...,vm".
  std::string to_string() const {
    std::string s = std::to_string(src_) + "->" + std::to_string(dst_) + ":";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(values_[i]);
    }
    return s;
  }

  static MonotoneMap parse(std::string_view text);

 private:
  int src_;
  int dst_;
  std::vector<int> values_;
};

namespace detail {

inline int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || value < 0)
    throw ParseError("cannot parse monotone map '" + std::string(whole) + "'");
  return value;
}

}  // namespace detail

inline MonotoneMap MonotoneMap::parse(std::string_view text) {
  const auto arrow = text.find("->");
  const auto colon = text.find(':');
  if (arrow == std::string_view::npos || colon == std::string_view::npos || colon < arrow)
    throw ParseError("cannot parse monotone map '" + std::string(text) +
                     "': expected m->n:v0,...,vm");
  const int src = detail::parse_int(text.substr(0, arrow), text);
  const int dst = detail::parse_int(text.substr(arrow + 2, colon - arrow - 2), text);
  std::vector<int> values;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    values.push_back(detail::parse_int(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  try {
    return MonotoneMap(src, dst, std::move(values));
  } catch (const DimensionError& e) {
    throw ParseError(std::string("invalid monotone map '") + std::string(text) + "': " + e.what());
  }
}

/// delta^k : [n-1] -> [n], the injection omitting k.
inline MonotoneMap coface(int n, int k) {
  if (n < 1 || k < 0 || k > n)
    throw DimensionError("coface(" + std::to_string(n) + "," + std::to_string(k) +
                         "): index out of range");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i < k ? i : i + 1;
  return MonotoneMap(n - 1, n, std::move(v));
}

/// sigma^k : [n+1] -> [n], the surjection repeating k.
inline MonotoneMap codegeneracy(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw DimensionError("codegeneracy(" + std::to_string(n) + "," + std::to_string(k) +
                         "): index out of range");
  std::vector<int> v(static_cast<std::size_t>(n) + 2);
  for (int i = 0; i <= n + 1; ++i) v[static_cast<std::size_t>(i)] = i <= k ? i : i - 1;
  return MonotoneMap(n + 1, n, std::move(v));
}

/// Applies `first`, then `second`.
inline MonotoneMap compose(const MonotoneMap& first, const MonotoneMap& second) {
  if (first.dst() != second.src())
    throw DimensionError("compose: " + first.to_string() + " then " + second.to_string() +
                         " are not composable");
  std::vector<int> v(static_cast<std::size_t>(first.src()) + 1);
  for (int i = 0; i <= first.src(); ++i) v[static_cast<std::size_t>(i)] = second(first(i));
  return MonotoneMap(first.src(), second.dst(), std::move(v));
}

/// Epi-mono normal form of a monotone map, listed in the order a simplicial
/// object applies the generators: every face d_c (c descending) first, then
/// every degeneracy s_a (a ascending).
struct Factorization {
  std::vector<int> degeneracy_indices;  // strictly ascending
  std::vector<int> face_indices;        // strictly descending
  int intermediate_dim = 0;

  int src() const { return intermediate_dim + static_cast<int>(degeneracy_indices.size()); }
  int dst() const { return intermediate_dim + static_cast<int>(face_indices.size()); }

  bool operator==(const Factorization&) const = default;
};

inline Factorization factorize(const MonotoneMap& theta) {
  Factorization f;
  // Collapsed positions give the degeneracies.
  for (int i = 0; i < theta.src(); ++i)
    if (theta(i) == theta(i + 1)) f.degeneracy_indices.push_back(i);
  // Values missed by the image give the faces.
  std::vector<bool> hit(static_cast<std::size_t>(theta.dst()) + 1, false);
  for (int v : theta.values()) hit[static_cast<std::size_t>(v)] = true;
  for (int c = theta.dst(); c >= 0; --c)
    if (!hit[static_cast<std::size_t>(c)]) f.face_indices.push_back(c);
  f.intermediate_dim = theta.dst() - static_cast<int>(f.face_indices.size());
  return f;
}

/// Inverse of factorize. Throws if the index lists are not in canonical form.
inline MonotoneMap recompose(const Factorization& f) {
  const int waist = f.intermediate_dim;
  if (waist < 0) throw DimensionError("recompose: negative intermediate dimension");
  for (std::size_t i = 0; i < f.degeneracy_indices.size(); ++i) {
    const int a = f.degeneracy_indices[i];
    // s_a is applied at level waist + i, so a must lie in [0, waist + i].
    if (a < 0 || a > waist + static_cast<int>(i) || (i > 0 && f.degeneracy_indices[i - 1] >= a))
      throw DimensionError("recompose: degeneracy indices not canonical");
  }
  for (std::size_t i = 0; i < f.face_indices.size(); ++i) {
    const int c = f.face_indices[i];
    // d_c is applied at level dst - i.
    if (c < 0 || c > f.dst() - static_cast<int>(i) || (i > 0 && f.face_indices[i - 1] <= c))
      throw DimensionError("recompose: face indices not canonical");
  }
  MonotoneMap result = MonotoneMap::identity(f.src());
  for (auto it = f.degeneracy_indices.rbegin(); it != f.degeneracy_indices.rend(); ++it)
    result = compose(result, codegeneracy(result.dst() - 1, *it));
  for (auto it = f.face_indices.rbegin(); it != f.face_indices.rend(); ++it)
    result = compose(result, coface(result.dst() + 1, *it));
  return result;
}

/// The restriction [i] -> [j], k |-> k theta.
inline MonotoneMap restrict_to(const MonotoneMap& theta, int i, int j) {
  if (i < 0 || i > theta.src())
    throw DimensionError("restrict: i = " + std::to_string(i) + " outside the domain");
  if (j < theta(i) || j > theta.dst())
    throw DimensionError("restrict: j = " + std::to_string(j) + " outside [" +
                         std::to_string(theta(i)) + "," + std::to_string(theta.dst()) + "]");
  std::vector<int> v(theta.values().begin(), theta.values().begin() + i + 1);
  return MonotoneMap(i, j, std::move(v));
}

/// The splitting at p: ([p] -> [p theta], [m-p] -> [n - p theta]).
inline std::pair<MonotoneMap, MonotoneMap> splitting(const MonotoneMap& theta, int p) {
  if (p < 0 || p > theta.src())
    throw DimensionError("splitting: p = " + std::to_string(p) + " outside the domain");
  const int pt = theta(p);
  std::vector<int> low(theta.values().begin(), theta.values().begin() + p + 1);
  std::vector<int> high;
  high.reserve(static_cast<std::size_t>(theta.src() - p) + 1);
  for (int i = 0; i <= theta.src() - p; ++i) high.push_back(theta(i + p) - pt);
  return {MonotoneMap(p, pt, std::move(low)), MonotoneMap(theta.src() - p, theta.dst() - pt, std::move(high))};
}

/// The n-simplex tau^k of the 1-simplex: [0, n-k] |-> 0, [n-k+1, n] |-> 1.
class Delta1Simplex {
 public:
  Delta1Simplex(int dim, int k) : dim_(dim), k_(k) {
    if (dim < 0 || k < 0 || k > dim + 1)
      throw DimensionError("tau(" + std::to_string(dim) + "," + std::to_string(k) +
                           "): index out of range");
  }

  int dim() const noexcept { return dim_; }
  int k() const noexcept { return k_; }

  MonotoneMap as_map() const {
    std::vector<int> v(static_cast<std::size_t>(dim_) + 1);
    for (int i = 0; i <= dim_; ++i) v[static_cast<std::size_t>(i)] = i <= dim_ - k_ ? 0 : 1;
    return MonotoneMap(dim_, 1, std::move(v));
  }

  bool operator==(const Delta1Simplex&) const = default;

 private:
  int dim_;
  int k_;
};

inline Delta1Simplex tau(int n, int k) { return Delta1Simplex(n, k); }

/// theta followed by tau, put back into tau form (k = number of positions
/// sent to 1).
inline Delta1Simplex apply_operator_to_tau(const Delta1Simplex& t, const MonotoneMap& theta) {
  if (theta.dst() != t.dim())
    throw DimensionError("apply_operator_to_tau: operator " + theta.to_string() +
                         " does not land in dimension " + std::to_string(t.dim()));
  const int threshold = t.dim() - t.k();  // positions <= threshold map to 0
  int ones = 0;
  for (int v : theta.values())
    if (v > threshold) ++ones;
  return Delta1Simplex(theta.src(), ones);
}

/// Every monotone map [m] -> [n], in lexicographic order of the value list.
inline std::vector<MonotoneMap> all_monotone_maps(int m, int n) {
  std::vector<MonotoneMap> out;
  std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    out.emplace_back(m, n, v);
    int pos = m;
    while (pos >= 0 && v[static_cast<std::size_t>(pos)] == n) --pos;
    if (pos < 0) break;
    const int next = v[static_cast<std::size_t>(pos)] + 1;
    for (int i = pos; i <= m; ++i) v[static_cast<std::size_t>(i)] = next;
  }
  return out;
}

}  // namespace wbar
