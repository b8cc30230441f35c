#pragma once

// Multiplication-table groups and table-backed homomorphisms.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wbar/error.hpp"

namespace wbar {

/// Dense element index 0..order-1.
using Element = std::uint32_t;

/// A finite group given by its full multiplication table. Construction
/// checks the group axioms exhaustively.
class FiniteGroup {
 public:
  /// `mult` is row-major, mult[a * order + b] = ab.
  FiniteGroup(std::string label, std::size_t order, std::vector<Element> mult)
      : FiniteGroup(std::move(label), order, std::move(mult), AxiomsProven{}) {
    check_associativity();
  }

  /// Tag for tables that are groups by construction (direct products of
  /// validated groups). Identity and inverses are still located and checked;
  /// the cubic associativity scan is skipped.
  struct AxiomsProven {};

  FiniteGroup(std::string label, std::size_t order, std::vector<Element> mult, AxiomsProven)
      : label_(std::move(label)), order_(order), mult_(std::move(mult)) {
    if (order_ == 0) throw ValidationError("group '" + label_ + "': order must be positive");
    if (mult_.size() != order_ * order_)
      throw ValidationError("group '" + label_ + "': multiplication table has " +
                            std::to_string(mult_.size()) + " entries, expected " +
                            std::to_string(order_ * order_));
    for (Element v : mult_)
      if (v >= order_)
        throw ValidationError("group '" + label_ + "': table entry " + std::to_string(v) +
                              " out of range");
    locate_identity_and_inverses();
  }

  const std::string& label() const noexcept { return label_; }
  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  Element mult(Element a, Element b) const noexcept { return mult_[a * order_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }

  bool contains(Element a) const noexcept { return a < order_; }

  std::span<const Element> table() const noexcept { return mult_; }

  bool is_abelian() const noexcept {
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < a; ++b)
        if (mult(a, b) != mult(b, a)) return false;
    return true;
  }

  bool operator==(const FiniteGroup& other) const {
    if (this == &other) return true;
    return order_ == other.order_ && mult_ == other.mult_;
  }

 private:
  void locate_identity_and_inverses() {
    const auto n = static_cast<Element>(order_);
    bool found = false;
    for (Element e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (Element a = 0; a < n && ok; ++a) ok = mult(e, a) == a && mult(a, e) == a;
      if (ok) {
        identity_ = e;
        found = true;
      }
    }
    if (!found) throw ValidationError("group '" + label_ + "': no identity element");

    inverse_.assign(order_, 0);
    for (Element a = 0; a < n; ++a) {
      bool ok = false;
      for (Element b = 0; b < n && !ok; ++b)
        if (mult(a, b) == identity_ && mult(b, a) == identity_) {
          inverse_[a] = b;
          ok = true;
        }
      if (!ok)
        throw ValidationError("group '" + label_ + "': element " + std::to_string(a) +
                              " has no inverse");
    }
  }

  void check_associativity() const {
    const auto n = static_cast<Element>(order_);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (mult(mult(a, b), c) != mult(a, mult(b, c)))
            throw ValidationError("group '" + label_ + "': associativity fails for (" +
                                  std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + ")");
  }

  std::string label_;
  std::size_t order_;
  std::vector<Element> mult_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A table-backed homomorphism. The checked constructor verifies the
/// homomorphism law on every pair.
class GroupHom {
 public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Element> image)
      : GroupHom(std::move(source), std::move(target), std::move(image), Unchecked{}) {
    validate();
  }

  /// Skips the homomorphism law. Tables must still have the right shape.
  /// Only meant for fault injection.
  static GroupHom unchecked(GroupPtr source, GroupPtr target, std::vector<Element> image) {
    return GroupHom(std::move(source), std::move(target), std::move(image), Unchecked{});
  }

  static GroupHom identity(const GroupPtr& g) {
    std::vector<Element> image(g->order());
    std::iota(image.begin(), image.end(), Element{0});
    return GroupHom(g, g, std::move(image), Unchecked{});
  }

  static GroupHom trivial(const GroupPtr& source, const GroupPtr& target) {
    return GroupHom(source, target, std::vector<Element>(source->order(), target->identity()),
                    Unchecked{});
  }

  const FiniteGroup& source() const noexcept { return *source_; }
  const FiniteGroup& target() const noexcept { return *target_; }
  const GroupPtr& source_ptr() const noexcept { return source_; }
  const GroupPtr& target_ptr() const noexcept { return target_; }
  std::span<const Element> image() const noexcept { return image_; }

  Element operator()(Element g) const noexcept { return image_[g]; }

  /// First violated pair of the homomorphism law, if any.
  bool find_violation(Element& a, Element& b) const {
    for (a = 0; a < source_->order(); ++a)
      for (b = 0; b < source_->order(); ++b)
        if (image_[source_->mult(a, b)] != target_->mult(image_[a], image_[b])) return true;
    return false;
  }

  /// Same underlying tables.
  bool operator==(const GroupHom& other) const {
    return *source_ == *other.source_ && *target_ == *other.target_ && image_ == other.image_;
  }

 private:
  struct Unchecked {};

  GroupHom(GroupPtr source, GroupPtr target, std::vector<Element> image, Unchecked)
      : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
    if (!source_ || !target_) throw ValidationError("homomorphism: null group");
    if (image_.size() != source_->order())
      throw ValidationError("homomorphism " + source_->label() + " -> " + target_->label() +
                            ": image table has " + std::to_string(image_.size()) +
                            " entries, expected " + std::to_string(source_->order()));
    for (Element v : image_)
      if (v >= target_->order())
        throw ValidationError("homomorphism " + source_->label() + " -> " + target_->label() +
                              ": image entry " + std::to_string(v) + " out of range");
  }

  void validate() const {
    Element a = 0;
    Element b = 0;
    if (find_violation(a, b))
      throw ValidationError("homomorphism " + source_->label() + " -> " + target_->label() +
                            " fails on (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }

  GroupPtr source_;
  GroupPtr target_;
  std::vector<Element> image_;
};

/// Table lookup with a range check.
inline Element hom_apply(const GroupHom& h, Element g) {
  if (g >= h.source().order())
    throw DimensionError("hom_apply: element " + std::to_string(g) + " outside " +
                         h.source().label());
  return h(g);
}

/// Applies f, then g.
inline GroupHom hom_compose(const GroupHom& f, const GroupHom& g) {
  if (!(f.target() == g.source()))
    throw DimensionError("hom_compose: target " + f.target().label() + " does not match source " +
                         g.source().label());
  std::vector<Element> image(f.source().order());
  for (Element a = 0; a < image.size(); ++a) image[a] = g(f(a));
  return GroupHom(f.source_ptr(), g.target_ptr(), std::move(image));
}

inline GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw DimensionError("cyclic_group: order must be positive");
  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = static_cast<Element>((a + b) % n);
  return std::make_shared<const FiniteGroup>("C" + std::to_string(n), n, std::move(mult));
}

/// The six permutations of {0,1,2}, in lexicographic order of their
/// one-line notation; element 0 is the identity. Product ab means "apply a,
/// then b", matching the right-action convention.
inline const std::array<std::array<int, 3>, 6>& s3_permutations() {
  static const std::array<std::array<int, 3>, 6> perms{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return perms;
}

inline GroupPtr symmetric_group_3() {
  const auto& perms = s3_permutations();
  std::vector<Element> mult(36);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> ab{};
      for (int x = 0; x < 3; ++x) ab[x] = perms[b][perms[a][x]];
      const auto it = std::find(perms.begin(), perms.end(), ab);
      mult[a * 6 + b] = static_cast<Element>(it - perms.begin());
    }
  return std::make_shared<const FiniteGroup>("S3", 6, std::move(mult));
}

/// Mixed-radix encoding over factor orders, most significant factor first.
class MixedRadix {
 public:
  MixedRadix() = default;
  explicit MixedRadix(std::vector<std::size_t> radices) : radices_(std::move(radices)) {}

  std::size_t size() const noexcept {
    std::size_t s = 1;
    for (auto r : radices_) s *= r;
    return s;
  }
  std::size_t factors() const noexcept { return radices_.size(); }
  std::span<const std::size_t> radices() const noexcept { return radices_; }

  std::size_t encode(std::span<const Element> digits) const {
    std::size_t code = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) code = code * radices_[i] + digits[i];
    return code;
  }

  void decode(std::size_t code, std::span<Element> digits) const {
    for (std::size_t i = radices_.size(); i-- > 0;) {
      digits[i] = static_cast<Element>(code % radices_[i]);
      code /= radices_[i];
    }
  }

  std::vector<Element> decode(std::size_t code) const {
    std::vector<Element> digits(radices_.size());
    decode(code, digits);
    return digits;
  }

 private:
  std::vector<std::size_t> radices_;
};

/// Direct product with componentwise multiplication. Elements are indexed
/// in mixed radix over the factor orders, most significant factor first.
/// The empty product is the trivial group.
inline GroupPtr direct_product(std::span<const GroupPtr> gs) {
  std::vector<std::size_t> radices;
  std::string label;
  for (const auto& g : gs) {
    radices.push_back(g->order());
    label += (label.empty() ? "" : "x") + g->label();
  }
  if (gs.empty()) label = "C1";
  const MixedRadix radix(radices);
  const std::size_t n = radix.size();
  std::vector<Element> mult(n * n);
  std::vector<Element> da(gs.size()), db(gs.size()), dc(gs.size());
  for (std::size_t a = 0; a < n; ++a) {
    radix.decode(a, da);
    for (std::size_t b = 0; b < n; ++b) {
      radix.decode(b, db);
      for (std::size_t i = 0; i < gs.size(); ++i) dc[i] = gs[i]->mult(da[i], db[i]);
      mult[a * n + b] = static_cast<Element>(radix.encode(dc));
    }
  }
  return std::make_shared<const FiniteGroup>(label, n, std::move(mult), FiniteGroup::AxiomsProven{});
}

inline GroupPtr direct_product(std::initializer_list<GroupPtr> gs) {
  const std::vector<GroupPtr> v(gs);
  return direct_product(std::span<const GroupPtr>(v));
}

/// Projection of a direct product onto factor `index`.
inline GroupHom projection(const GroupPtr& product, std::span<const GroupPtr> factors,
                           std::size_t index) {
  std::vector<std::size_t> radices;
  for (const auto& g : factors) radices.push_back(g->order());
  const MixedRadix radix(radices);
  if (radix.size() != product->order() || index >= factors.size())
    throw DimensionError("projection: factors do not match the product");
  std::vector<Element> image(product->order());
  std::vector<Element> digits(factors.size());
  for (std::size_t a = 0; a < image.size(); ++a) {
    radix.decode(a, digits);
    image[a] = digits[index];
  }
  return GroupHom(product, factors[index], std::move(image));
}

/// Diagonal g |-> (g, ..., g) into the `copies`-fold power.
inline GroupHom diagonal(const GroupPtr& g, const GroupPtr& power, std::size_t copies) {
  const MixedRadix radix(std::vector<std::size_t>(copies, g->order()));
  if (radix.size() != power->order())
    throw DimensionError("diagonal: power group has the wrong order");
  std::vector<Element> image(g->order());
  for (Element a = 0; a < image.size(); ++a) {
    const std::vector<Element> digits(copies, a);
    image[a] = static_cast<Element>(radix.encode(digits));
  }
  return GroupHom(g, power, std::move(image));
}

}  // namespace wbar
