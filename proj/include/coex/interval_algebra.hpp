#pragma once

#include <vector>

#include "coex/algebra.hpp"

namespace coex {

/// The interval effect algebra [0,1]^dim inside Q^dim: ⊕ is coordinatewise
/// addition when the sum stays below the all-ones top, order and lattice
/// operations are coordinatewise. Models a simultaneously diagonalized
/// commuting family with exact rational spectra.
class TupleEffectAlgebra final : public EffectAlgebra, private IntervalStructure {
 public:
  static std::shared_ptr<TupleEffectAlgebra> create(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Element element(GroupVector coords) const;

  /// Coordinatewise product; total, lands in [0,1]^dim.
  Element mul(const Element& a, const Element& b) const;
  /// a + b - ab coordinatewise, the dual of the product; total on [0,1]^dim.
  Element probsum(const Element& a, const Element& b) const;

  bool lattice_ordered() const override { return true; }
  bool enumerable() const override { return false; }
  std::optional<bool> known_mv() const override { return true; }
  const IntervalStructure* interval() const override { return this; }
  std::string describe(const Element& a) const override;
  std::string name() const override;

  std::size_t group_dim() const override { return dim_; }
  GroupVector to_group(const Element& a) const override;
  std::optional<Element> from_group(const GroupVector& v) const override;

 protected:
  Element zero_impl() const override;
  Element unit_impl() const override;
  std::optional<Element> oplus_impl(const Element& a, const Element& b) const override;
  std::optional<Element> ominus_impl(const Element& b, const Element& a) const override;
  bool leq_impl(const Element& a, const Element& b) const override;
  bool equal_impl(const Element& a, const Element& b) const override;
  Element meet_impl(const Element& a, const Element& b) const override;
  Element join_impl(const Element& a, const Element& b) const override;

 private:
  explicit TupleEffectAlgebra(std::size_t dim) : dim_(dim) {}
  std::size_t dim_;
};

/// Finite product of chains C_{k_1} x ... x C_{k_m}, the chain C_k carrying
/// {0, 1/k, ..., 1}. Lattice ordered and enumerable; the canonical small MV
/// effect algebra family.
class MVChainProduct final : public EffectAlgebra, private IntervalStructure {
 public:
  static std::shared_ptr<MVChainProduct> create(std::vector<unsigned> orders);

  const std::vector<unsigned>& orders() const { return orders_; }
  Element element(GroupVector coords) const;
  Element element_from_steps(const std::vector<unsigned>& steps) const;

  bool lattice_ordered() const override { return true; }
  bool enumerable() const override { return true; }
  std::size_t size() const override { return size_; }
  Element element_at(std::size_t i) const override;
  const IntervalStructure* interval() const override { return this; }
  std::string describe(const Element& a) const override;
  std::string name() const override;

  std::size_t group_dim() const override { return orders_.size(); }
  GroupVector to_group(const Element& a) const override;
  std::optional<Element> from_group(const GroupVector& v) const override;

 protected:
  Element zero_impl() const override;
  Element unit_impl() const override;
  std::optional<Element> oplus_impl(const Element& a, const Element& b) const override;
  std::optional<Element> ominus_impl(const Element& b, const Element& a) const override;
  bool leq_impl(const Element& a, const Element& b) const override;
  bool equal_impl(const Element& a, const Element& b) const override;
  Element meet_impl(const Element& a, const Element& b) const override;
  Element join_impl(const Element& a, const Element& b) const override;

 private:
  explicit MVChainProduct(std::vector<unsigned> orders);
  std::vector<unsigned> orders_;
  std::size_t size_ = 1;
};

}  // namespace coex
