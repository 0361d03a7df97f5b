#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "coex/errors.hpp"
#include "coex/rational.hpp"

namespace coex {

class EffectAlgebra;

/// One element of an effect algebra. Table-backed algebras store an index
/// into their element list; interval algebras store exact rational
/// coordinates. Elements keep their owning algebra alive and may only be
/// combined with elements of the same algebra instance.
class Element {
 public:
  Element(std::shared_ptr<const EffectAlgebra> algebra, std::size_t index);
  Element(std::shared_ptr<const EffectAlgebra> algebra, GroupVector coords);

  const EffectAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const EffectAlgebra>& algebra_ptr() const { return algebra_; }

  bool holds_index() const { return std::holds_alternative<std::size_t>(rep_); }
  std::size_t index() const;
  const GroupVector& coords() const;

  std::string str() const;

  /// Exact equality within one algebra; comparing elements of different
  /// algebra instances is an input error, never silently false.
  bool operator==(const Element& other) const;
  bool operator!=(const Element& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const EffectAlgebra> algebra_;
  std::variant<std::size_t, GroupVector> rep_;
};

/// Ambient-group view of an interval effect algebra: the algebra is the
/// interval [0,u] of Q^dim under componentwise order, and elements embed
/// into the group as exact rational vectors.
class IntervalStructure {
 public:
  virtual ~IntervalStructure() = default;
  virtual std::size_t group_dim() const = 0;
  virtual GroupVector to_group(const Element& a) const = 0;
  /// Inverse of the embedding; absent when the vector is not in [0,u] or not
  /// a carrier point.
  virtual std::optional<Element> from_group(const GroupVector& v) const = 0;
};

/// Partial algebra (E; ⊕, 0, 1). The partial sum returns an absent optional
/// when undefined; undefinedness is a semantic outcome, not an error. The
/// derived order a ≤ b holds when some c satisfies a ⊕ c = b, and b ⊖ a is
/// the unique such c.
class EffectAlgebra : public std::enable_shared_from_this<EffectAlgebra> {
 public:
  virtual ~EffectAlgebra() = default;

  Element zero() const { return zero_impl(); }
  Element unit() const { return unit_impl(); }

  std::optional<Element> oplus(const Element& a, const Element& b) const;
  /// b ⊖ a, defined exactly when a ≤ b; satisfies a ⊕ (b ⊖ a) = b.
  std::optional<Element> ominus(const Element& b, const Element& a) const;
  bool leq(const Element& a, const Element& b) const;
  bool equal(const Element& a, const Element& b) const;
  /// The unique a' with a ⊕ a' = 1. Always defined in a valid algebra.
  Element orthocomplement(const Element& a) const;

  virtual bool lattice_ordered() const = 0;
  Element meet(const Element& a, const Element& b) const;
  Element join(const Element& a, const Element& b) const;

  virtual bool enumerable() const = 0;
  virtual std::size_t size() const;
  virtual Element element_at(std::size_t i) const;

  /// Non-null when the algebra carries an interval embedding into Q^n.
  virtual const IntervalStructure* interval() const { return nullptr; }
  /// Set when the MV property is known structurally and a pair sweep is
  /// impossible (non-enumerable carriers).
  virtual std::optional<bool> known_mv() const { return std::nullopt; }

  virtual std::string describe(const Element& a) const = 0;
  virtual std::string name() const = 0;

 protected:
  virtual Element zero_impl() const = 0;
  virtual Element unit_impl() const = 0;
  virtual std::optional<Element> oplus_impl(const Element& a, const Element& b) const = 0;
  virtual std::optional<Element> ominus_impl(const Element& b, const Element& a) const = 0;
  virtual bool leq_impl(const Element& a, const Element& b) const;
  virtual bool equal_impl(const Element& a, const Element& b) const = 0;
  virtual Element meet_impl(const Element& a, const Element& b) const;
  virtual Element join_impl(const Element& a, const Element& b) const;

  void check_owned(const Element& a) const;
  Element index_element(std::size_t i) const;
  Element coord_element(GroupVector coords) const;
};

std::optional<Element> oplus(const Element& a, const Element& b);
std::optional<Element> ominus(const Element& b, const Element& a);
bool leq(const Element& a, const Element& b);
Element orthocomplement(const Element& a);

/// Left fold of ⊕ with failure propagation. The empty family sums to 0; the
/// result does not depend on the input order.
std::optional<Element> big_oplus(const EffectAlgebra& algebra, std::span<const Element> family);
std::optional<Element> big_oplus(const EffectAlgebra& algebra, const std::vector<Element>& family);

}  // namespace coex
