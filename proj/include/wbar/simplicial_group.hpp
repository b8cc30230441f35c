#pragma once

// Truncated simplicial groups stored as level / face / degeneracy tables.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wbar/delta.hpp"
#include "wbar/error.hpp"
#include "wbar/finite_group.hpp"

namespace wbar {

/// An element g of G_level.
struct LeveledElement {
  int level = 0;
  Element value = 0;

  bool operator==(const LeveledElement&) const = default;
};

/// One violated instance of a simplicial identity.
struct IdentityViolation {
  std::string identity;  // e.g. "x d_0 d_1 = x d_2 d_0"
  int level = 0;         // level of the input element
  Element input = 0;
  Element lhs = 0;
  Element rhs = 0;
};

struct IdentityReport {
  std::size_t checked = 0;
  std::vector<IdentityViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

class TruncatedSimplicialGroup;
IdentityReport check_simplicial_identities(const TruncatedSimplicialGroup& g);

enum class Validation { full, skip };

/// Levels G_0..G_N with faces d_k : G_n -> G_{n-1} (n in [1,N], k in [0,n])
/// and degeneracies s_k : G_n -> G_{n+1} (n in [0,N-1], k in [0,n]).
///
/// With Validation::full every structure map must be a homomorphism and
/// every simplicial identity must hold inside the truncation.
class TruncatedSimplicialGroup {
 public:
  TruncatedSimplicialGroup(std::string label, std::vector<GroupPtr> levels,
                           std::vector<std::vector<GroupHom>> faces,
                           std::vector<std::vector<GroupHom>> degeneracies,
                           Validation validation = Validation::full)
      : label_(std::move(label)),
        levels_(std::move(levels)),
        faces_(std::move(faces)),
        degeneracies_(std::move(degeneracies)) {
    check_shape();
    if (validation == Validation::full) {
      for (const auto& row : faces_)
        for (const auto& h : row) require_hom(h, "face");
      for (const auto& row : degeneracies_)
        for (const auto& h : row) require_hom(h, "degeneracy");
      const IdentityReport report = check_simplicial_identities(*this);
      if (!report.ok()) {
        const auto& v = report.violations.front();
        throw ValidationError("simplicial group '" + label_ + "': " +
                              std::to_string(report.violations.size()) +
                              " simplicial identity violation(s), first: " + v.identity +
                              " at level " + std::to_string(v.level) + " on element " +
                              std::to_string(v.input));
      }
    }
  }

  const std::string& label() const noexcept { return label_; }
  int max_level() const noexcept { return static_cast<int>(levels_.size()) - 1; }

  const FiniteGroup& level(int n) const { return *levels_.at(checked_level(n)); }
  const GroupPtr& level_ptr(int n) const { return levels_.at(checked_level(n)); }

  const GroupHom& face_hom(int n, int k) const {
    if (n < 1 || n > max_level() || k < 0 || k > n)
      throw TruncationError("face d_" + std::to_string(k) + " at level " + std::to_string(n) +
                            " outside truncation " + std::to_string(max_level()));
    return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  const GroupHom& degeneracy_hom(int n, int k) const {
    if (n < 0 || n >= max_level() || k < 0 || k > n)
      throw TruncationError("degeneracy s_" + std::to_string(k) + " at level " +
                            std::to_string(n) + " outside truncation " +
                            std::to_string(max_level()));
    return degeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  /// d_k applied to x in G_n.
  Element face(int n, int k, Element x) const { return face_hom(n, k)(x); }
  /// s_k applied to x in G_n.
  Element degeneracy(int n, int k, Element x) const { return degeneracy_hom(n, k)(x); }

  /// Rows of structure maps, indexed [level][index]; faces[0] is empty and
  /// degeneracies has max_level rows.
  const std::vector<std::vector<GroupHom>>& faces() const noexcept { return faces_; }
  const std::vector<std::vector<GroupHom>>& degeneracies() const noexcept { return degeneracies_; }
  const std::vector<GroupPtr>& levels() const noexcept { return levels_; }

 private:
  std::size_t checked_level(int n) const {
    if (n < 0 || n > max_level())
      throw TruncationError("level " + std::to_string(n) + " outside truncation " +
                            std::to_string(max_level()) + " of '" + label_ + "'");
    return static_cast<std::size_t>(n);
  }

  void check_shape() const {
    if (levels_.empty()) throw ValidationError("simplicial group '" + label_ + "': no levels");
    const auto n_levels = levels_.size();
    if (faces_.size() != n_levels)
      throw ValidationError("simplicial group '" + label_ + "': expected " +
                            std::to_string(n_levels) + " face rows");
    if (degeneracies_.size() != n_levels - 1)
      throw ValidationError("simplicial group '" + label_ + "': expected " +
                            std::to_string(n_levels - 1) + " degeneracy rows");
    for (std::size_t n = 0; n < n_levels; ++n) {
      const std::size_t want = n == 0 ? 0 : n + 1;
      if (faces_[n].size() != want)
        throw ValidationError("simplicial group '" + label_ + "': level " + std::to_string(n) +
                              " needs " + std::to_string(want) + " faces");
      for (const auto& h : faces_[n])
        if (!(h.source() == *levels_[n]) || !(h.target() == *levels_[n - 1]))
          throw ValidationError("simplicial group '" + label_ + "': face at level " +
                                std::to_string(n) + " has the wrong source or target");
    }
    for (std::size_t n = 0; n + 1 < n_levels; ++n) {
      if (degeneracies_[n].size() != n + 1)
        throw ValidationError("simplicial group '" + label_ + "': level " + std::to_string(n) +
                              " needs " + std::to_string(n + 1) + " degeneracies");
      for (const auto& h : degeneracies_[n])
        if (!(h.source() == *levels_[n]) || !(h.target() == *levels_[n + 1]))
          throw ValidationError("simplicial group '" + label_ + "': degeneracy at level " +
                                std::to_string(n) + " has the wrong source or target");
    }
  }

  void require_hom(const GroupHom& h, const char* what) const {
    Element a = 0;
    Element b = 0;
    if (h.find_violation(a, b))
      throw ValidationError("simplicial group '" + label_ + "': " + what + " " +
                            h.source().label() + " -> " + h.target().label() +
                            " is not a homomorphism on (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
  }

  std::string label_;
  std::vector<GroupPtr> levels_;
  std::vector<std::vector<GroupHom>> faces_;
  std::vector<std::vector<GroupHom>> degeneracies_;
};

using SimplicialGroupPtr = std::shared_ptr<const TruncatedSimplicialGroup>;

// ---------------------------------------------------------------------------
// Operator application

/// Applies a precomputed factorization to x in G_{f.dst()}.
inline Element apply_factorization(const TruncatedSimplicialGroup& g, const Factorization& f,
                                   Element x) {
  int level = f.dst();
  for (int c : f.face_indices) x = g.face(level--, c, x);
  for (int a : f.degeneracy_indices) x = g.degeneracy(level++, a, x);
  return x;
}

/// x G_theta for theta : [m] -> [n] and x in G_n; the result lives in G_m.
/// Faces of the canonical factorization are applied before its degeneracies.
inline Element apply_operator(const TruncatedSimplicialGroup& g, const MonotoneMap& theta,
                              Element x) {
  if (theta.src() > g.max_level() || theta.dst() > g.max_level())
    throw TruncationError("operator " + theta.to_string() + " exceeds truncation " +
                          std::to_string(g.max_level()) + " of '" + g.label() + "'");
  return apply_factorization(g, factorize(theta), x);
}

inline LeveledElement apply_operator(const TruncatedSimplicialGroup& g, const MonotoneMap& theta,
                                     const LeveledElement& x) {
  if (x.level != theta.dst())
    throw DimensionError("apply_operator: element at level " + std::to_string(x.level) +
                         ", operator " + theta.to_string() + " expects level " +
                         std::to_string(theta.dst()));
  return {theta.src(), apply_operator(g, theta, x.value)};
}

/// d_hi d_{hi-1} ... d_lo applied to x (highest index first). Empty when
/// hi < lo.
inline Element composite_faces(const TruncatedSimplicialGroup& g, int level, Element x, int hi,
                               int lo) {
  for (int k = hi; k >= lo; --k) {
    if (level < 1) throw TruncationError("composite_faces: level underflow");
    x = g.face(level--, k, x);
  }
  return x;
}

inline LeveledElement composite_faces(const TruncatedSimplicialGroup& g, const LeveledElement& x,
                                      int hi, int lo) {
  const int count = hi >= lo ? hi - lo + 1 : 0;
  return {x.level - count, composite_faces(g, x.level, x.value, hi, lo)};
}

/// s_lo s_{lo+1} ... s_hi applied to x (lowest index first). Empty when
/// lo > hi.
inline Element composite_degeneracies(const TruncatedSimplicialGroup& g, int level, Element x,
                                      int lo, int hi) {
  for (int k = lo; k <= hi; ++k) x = g.degeneracy(level++, k, x);
  return x;
}

inline LeveledElement composite_degeneracies(const TruncatedSimplicialGroup& g,
                                             const LeveledElement& x, int lo, int hi) {
  const int count = hi >= lo ? hi - lo + 1 : 0;
  return {x.level + count, composite_degeneracies(g, x.level, x.value, lo, hi)};
}

// ---------------------------------------------------------------------------
// Simplicial identities, written in application order ("x d_i d_j" applies
// d_i first):
//   x d_i d_{j-1} = x d_j d_i      (i < j)
//   x s_j s_i     = x s_i s_{j+1}  (i <= j)
//   x s_j d_i     = x d_i s_{j-1}  (i < j)
//   x s_j d_j     = x s_j d_{j+1} = x
//   x s_j d_i     = x d_{i-1} s_j  (i > j + 1)

inline IdentityReport check_simplicial_identities(const TruncatedSimplicialGroup& g) {
  IdentityReport report;
  const int top = g.max_level();
  auto record = [&](std::string name, int level, Element x, Element lhs, Element rhs) {
    ++report.checked;
    if (lhs != rhs) report.violations.push_back({std::move(name), level, x, lhs, rhs});
  };
  auto name = [](char a, int i, char b, int j, char c, int k, char d, int l) {
    return std::string("x ") + a + "_" + std::to_string(i) + " " + b + "_" + std::to_string(j) +
           " = x " + c + "_" + std::to_string(k) + " " + d + "_" + std::to_string(l);
  };

  for (int n = 0; n <= top; ++n) {
    const auto order = static_cast<Element>(g.level(n).order());
    for (Element x = 0; x < order; ++x) {
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            record(name('d', i, 'd', j - 1, 'd', j, 'd', i), n, x,
                   g.face(n - 1, j - 1, g.face(n, i, x)), g.face(n - 1, i, g.face(n, j, x)));
      if (n + 2 <= top)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            record(name('s', j, 's', i, 's', i, 's', j + 1), n, x,
                   g.degeneracy(n + 1, i, g.degeneracy(n, j, x)),
                   g.degeneracy(n + 1, j + 1, g.degeneracy(n, i, x)));
      if (n + 1 <= top)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + 1; ++i) {
            const Element lhs = g.face(n + 1, i, g.degeneracy(n, j, x));
            if (i == j || i == j + 1) {
              record("x s_" + std::to_string(j) + " d_" + std::to_string(i) + " = x", n, x, lhs, x);
            } else if (i < j) {
              record(name('s', j, 'd', i, 'd', i, 's', j - 1), n, x, lhs,
                     g.degeneracy(n - 1, j - 1, g.face(n, i, x)));
            } else {
              record(name('s', j, 'd', i, 'd', i - 1, 's', j), n, x, lhs,
                     g.degeneracy(n - 1, j, g.face(n, i - 1, x)));
            }
          }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Fixtures

/// G_n = g for every n; every structure map is the identity.
inline TruncatedSimplicialGroup constant_simplicial_group(const GroupPtr& g, int max_level) {
  if (max_level < 0) throw DimensionError("constant_simplicial_group: negative truncation");
  const auto n_levels = static_cast<std::size_t>(max_level) + 1;
  std::vector<GroupPtr> levels(n_levels, g);
  std::vector<std::vector<GroupHom>> faces(n_levels);
  std::vector<std::vector<GroupHom>> degeneracies(n_levels - 1);
  for (std::size_t n = 1; n < n_levels; ++n) faces[n].assign(n + 1, GroupHom::identity(g));
  for (std::size_t n = 0; n + 1 < n_levels; ++n) degeneracies[n].assign(n + 1, GroupHom::identity(g));
  return TruncatedSimplicialGroup("constant:" + g->label(), std::move(levels), std::move(faces),
                                  std::move(degeneracies), Validation::skip);
}

namespace detail {

/// Hom G^{src_copies} -> G^{dst_copies} sending coordinate tuple a to
/// (a[pick[0]], ..., a[pick[dst_copies-1]]).
inline GroupHom coordinate_map(const GroupPtr& base, const GroupPtr& src, std::size_t src_copies,
                               const GroupPtr& dst, const std::vector<std::size_t>& pick) {
  const MixedRadix src_radix(std::vector<std::size_t>(src_copies, base->order()));
  const MixedRadix dst_radix(std::vector<std::size_t>(pick.size(), base->order()));
  std::vector<Element> image(src->order());
  std::vector<Element> digits(src_copies);
  std::vector<Element> out(pick.size());
  for (std::size_t a = 0; a < image.size(); ++a) {
    src_radix.decode(a, digits);
    for (std::size_t t = 0; t < pick.size(); ++t) out[t] = digits[pick[t]];
    image[a] = static_cast<Element>(dst_radix.encode(out));
  }
  return GroupHom(src, dst, std::move(image));
}

}  // namespace detail

/// Level n is g^{n+1} (coordinates 0..n, coordinate 0 most significant);
/// d_k deletes coordinate k and s_k repeats it.
inline TruncatedSimplicialGroup translation_simplicial_group(const GroupPtr& g, int max_level) {
  if (max_level < 0) throw DimensionError("translation_simplicial_group: negative truncation");
  const auto n_levels = static_cast<std::size_t>(max_level) + 1;
  std::vector<GroupPtr> levels;
  for (std::size_t n = 0; n < n_levels; ++n) {
    const std::vector<GroupPtr> factors(n + 1, g);
    levels.push_back(direct_product(std::span<const GroupPtr>(factors)));
  }
  std::vector<std::vector<GroupHom>> faces(n_levels);
  std::vector<std::vector<GroupHom>> degeneracies(n_levels - 1);
  for (std::size_t n = 1; n < n_levels; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<std::size_t> pick;
      for (std::size_t t = 0; t <= n; ++t)
        if (t != k) pick.push_back(t);
      faces[n].push_back(detail::coordinate_map(g, levels[n], n + 1, levels[n - 1], pick));
    }
  for (std::size_t n = 0; n + 1 < n_levels; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<std::size_t> pick;
      for (std::size_t t = 0; t <= n; ++t) {
        pick.push_back(t);
        if (t == k) pick.push_back(t);
      }
      degeneracies[n].push_back(detail::coordinate_map(g, levels[n], n + 1, levels[n + 1], pick));
    }
  return TruncatedSimplicialGroup("translation:" + g->label(), std::move(levels),
                                  std::move(faces), std::move(degeneracies));
}

namespace detail {

inline GroupHom product_hom(const GroupPtr& src, const GroupPtr& dst, const GroupHom& a,
                            const GroupHom& b) {
  const std::size_t nb_src = b.source().order();
  const std::size_t nb_dst = b.target().order();
  std::vector<Element> image(src->order());
  for (std::size_t x = 0; x < image.size(); ++x)
    image[x] = static_cast<Element>(a(static_cast<Element>(x / nb_src)) * nb_dst +
                                    b(static_cast<Element>(x % nb_src)));
  return GroupHom::unchecked(src, dst, std::move(image));
}

}  // namespace detail

/// Levelwise direct product a_n x b_n with componentwise structure maps.
/// Faithful copies of the factor tables: inputs validated means output
/// valid, but a corrupted factor stays corrupted.
inline TruncatedSimplicialGroup product_simplicial_group(const TruncatedSimplicialGroup& a,
                                                         const TruncatedSimplicialGroup& b) {
  if (a.max_level() != b.max_level())
    throw DimensionError("product_simplicial_group: truncation levels " +
                         std::to_string(a.max_level()) + " and " + std::to_string(b.max_level()) +
                         " differ");
  const auto n_levels = static_cast<std::size_t>(a.max_level()) + 1;
  std::vector<GroupPtr> levels;
  for (std::size_t n = 0; n < n_levels; ++n)
    levels.push_back(direct_product({a.level_ptr(static_cast<int>(n)), b.level_ptr(static_cast<int>(n))}));
  std::vector<std::vector<GroupHom>> faces(n_levels);
  std::vector<std::vector<GroupHom>> degeneracies(n_levels - 1);
  for (std::size_t n = 1; n < n_levels; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      faces[n].push_back(detail::product_hom(levels[n], levels[n - 1], a.faces()[n][k], b.faces()[n][k]));
  for (std::size_t n = 0; n + 1 < n_levels; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      degeneracies[n].push_back(
          detail::product_hom(levels[n], levels[n + 1], a.degeneracies()[n][k], b.degeneracies()[n][k]));
  return TruncatedSimplicialGroup("product:" + a.label() + "," + b.label(), std::move(levels),
                                  std::move(faces), std::move(degeneracies), Validation::skip);
}

/// Copy of `g` with the image of `element` under d_k at `level` replaced by
/// `value`, skipping validation. Fault-injection fixture.
inline TruncatedSimplicialGroup corrupt_face(const TruncatedSimplicialGroup& g, int level, int k,
                                             Element element, Element value) {
  auto faces = g.faces();
  const GroupHom& h = g.face_hom(level, k);
  if (element >= h.source().order() || value >= h.target().order() || h(element) == value)
    throw DimensionError("corrupt_face: (" + std::to_string(element) + " -> " +
                         std::to_string(value) + ") does not change d_" + std::to_string(k) +
                         " at level " + std::to_string(level));
  std::vector<Element> image(h.image().begin(), h.image().end());
  image[element] = value;
  faces[static_cast<std::size_t>(level)][static_cast<std::size_t>(k)] =
      GroupHom::unchecked(h.source_ptr(), h.target_ptr(), std::move(image));
  return TruncatedSimplicialGroup("corrupt:" + g.label(), g.levels(), std::move(faces),
                                  g.degeneracies(), Validation::skip);
}

/// Copy of `g` with the image of `element` under s_k at `level` replaced by
/// `value`, skipping validation. Fault-injection fixture.
inline TruncatedSimplicialGroup corrupt_degeneracy(const TruncatedSimplicialGroup& g, int level,
                                                   int k, Element element, Element value) {
  auto degeneracies = g.degeneracies();
  const GroupHom& h = g.degeneracy_hom(level, k);
  if (element >= h.source().order() || value >= h.target().order() || h(element) == value)
    throw DimensionError("corrupt_degeneracy: (" + std::to_string(element) + " -> " +
                         std::to_string(value) + ") does not change s_" + std::to_string(k) +
                         " at level " + std::to_string(level));
  std::vector<Element> image(h.image().begin(), h.image().end());
  image[element] = value;
  degeneracies[static_cast<std::size_t>(level)][static_cast<std::size_t>(k)] =
      GroupHom::unchecked(h.source_ptr(), h.target_ptr(), std::move(image));
  return TruncatedSimplicialGroup("corrupt:" + g.label(), g.levels(), g.faces(),
                                  std::move(degeneracies), Validation::skip);
}

// ---------------------------------------------------------------------------
// Morphisms

/// Levelwise homomorphisms f_n : G_n -> H_n commuting with all structure
/// maps; checked exhaustively at construction.
class SimplicialMorphism {
 public:
  SimplicialMorphism(SimplicialGroupPtr source, SimplicialGroupPtr target,
                     std::vector<GroupHom> levels)
      : source_(std::move(source)), target_(std::move(target)), levels_(std::move(levels)) {
    if (source_->max_level() != target_->max_level())
      throw ValidationError("simplicial morphism: truncation levels differ");
    if (levels_.size() != static_cast<std::size_t>(source_->max_level()) + 1)
      throw ValidationError("simplicial morphism: need one hom per level");
    for (int n = 0; n <= source_->max_level(); ++n) {
      const GroupHom& f = levels_[static_cast<std::size_t>(n)];
      if (!(f.source() == source_->level(n)) || !(f.target() == target_->level(n)))
        throw ValidationError("simplicial morphism: level " + std::to_string(n) +
                              " hom has the wrong source or target");
      Element a = 0;
      Element b = 0;
      if (f.find_violation(a, b))
        throw ValidationError("simplicial morphism: level " + std::to_string(n) +
                              " map is not a homomorphism");
      for (Element x = 0; x < f.source().order(); ++x) {
        for (int k = 0; n >= 1 && k <= n; ++k)
          if (target_->face(n, k, f(x)) != levels_[static_cast<std::size_t>(n - 1)](source_->face(n, k, x)))
            throw ValidationError("simplicial morphism: does not commute with d_" +
                                  std::to_string(k) + " at level " + std::to_string(n));
        for (int k = 0; n < source_->max_level() && k <= n; ++k)
          if (target_->degeneracy(n, k, f(x)) !=
              levels_[static_cast<std::size_t>(n + 1)](source_->degeneracy(n, k, x)))
            throw ValidationError("simplicial morphism: does not commute with s_" +
                                  std::to_string(k) + " at level " + std::to_string(n));
      }
    }
  }

  static SimplicialMorphism identity(const SimplicialGroupPtr& g) {
    std::vector<GroupHom> levels;
    for (int n = 0; n <= g->max_level(); ++n) levels.push_back(GroupHom::identity(g->level_ptr(n)));
    return SimplicialMorphism(g, g, std::move(levels));
  }

  /// The morphism to the trivial simplicial group of the same truncation.
  static SimplicialMorphism to_trivial(const SimplicialGroupPtr& g) {
    auto trivial = std::make_shared<const TruncatedSimplicialGroup>(
        constant_simplicial_group(cyclic_group(1), g->max_level()));
    std::vector<GroupHom> levels;
    for (int n = 0; n <= g->max_level(); ++n)
      levels.push_back(GroupHom::trivial(g->level_ptr(n), trivial->level_ptr(n)));
    return SimplicialMorphism(g, trivial, std::move(levels));
  }

  const TruncatedSimplicialGroup& source() const noexcept { return *source_; }
  const TruncatedSimplicialGroup& target() const noexcept { return *target_; }
  const SimplicialGroupPtr& source_ptr() const noexcept { return source_; }
  const SimplicialGroupPtr& target_ptr() const noexcept { return target_; }

  Element operator()(int level, Element x) const { return levels_.at(static_cast<std::size_t>(level))(x); }

 private:
  SimplicialGroupPtr source_;
  SimplicialGroupPtr target_;
  std::vector<GroupHom> levels_;
};

/// The diagonal g |-> (g, ..., g) from the constant simplicial group on a
/// group into its translation simplicial group.
inline SimplicialMorphism constant_to_translation_diagonal(const SimplicialGroupPtr& constant,
                                                           const SimplicialGroupPtr& translation) {
  std::vector<GroupHom> levels;
  for (int n = 0; n <= constant->max_level(); ++n)
    levels.push_back(diagonal(constant->level_ptr(n), translation->level_ptr(n),
                              static_cast<std::size_t>(n) + 1));
  return SimplicialMorphism(constant, translation, std::move(levels));
}

/// Projection of a product simplicial group onto its first or second factor.
inline SimplicialMorphism product_projection(const SimplicialGroupPtr& product,
                                             const SimplicialGroupPtr& factor, bool first) {
  std::vector<GroupHom> levels;
  for (int n = 0; n <= product->max_level(); ++n) {
    const std::size_t other = first ? product->level(n).order() / factor->level(n).order()
                                    : factor->level(n).order();
    std::vector<Element> image(product->level(n).order());
    for (std::size_t x = 0; x < image.size(); ++x)
      image[x] = static_cast<Element>(first ? x / other : x % other);
    levels.emplace_back(product->level_ptr(n), factor->level_ptr(n), std::move(image));
  }
  return SimplicialMorphism(product, factor, std::move(levels));
}

}  // namespace wbar
