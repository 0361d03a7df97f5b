#include "coex/algebra.hpp"

namespace coex {

Element::Element(std::shared_ptr<const EffectAlgebra> algebra, std::size_t index)
    : algebra_(std::move(algebra)), rep_(index) {
  if (!algebra_) throw input_error("element constructed without an algebra");
}

Element::Element(std::shared_ptr<const EffectAlgebra> algebra, GroupVector coords)
    : algebra_(std::move(algebra)), rep_(std::move(coords)) {
  if (!algebra_) throw input_error("element constructed without an algebra");
}

std::size_t Element::index() const {
  if (!holds_index()) throw input_error("element does not carry a table index");
  return std::get<std::size_t>(rep_);
}

const GroupVector& Element::coords() const {
  if (holds_index()) throw input_error("element does not carry coordinates");
  return std::get<GroupVector>(rep_);
}

std::string Element::str() const { return algebra_->describe(*this); }

bool Element::operator==(const Element& other) const {
  if (algebra_.get() != other.algebra_.get())
    throw input_error("cannot compare elements of different algebras");
  return algebra_->equal(*this, other);
}

void EffectAlgebra::check_owned(const Element& a) const {
  if (a.algebra_ptr().get() != this)
    throw input_error("element does not belong to this algebra");
}

Element EffectAlgebra::index_element(std::size_t i) const {
  return Element(shared_from_this(), i);
}

Element EffectAlgebra::coord_element(GroupVector coords) const {
  return Element(shared_from_this(), std::move(coords));
}

std::optional<Element> EffectAlgebra::oplus(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  return oplus_impl(a, b);
}

std::optional<Element> EffectAlgebra::ominus(const Element& b, const Element& a) const {
  check_owned(a);
  check_owned(b);
  return ominus_impl(b, a);
}

bool EffectAlgebra::leq(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  return leq_impl(a, b);
}

bool EffectAlgebra::equal(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  return equal_impl(a, b);
}

Element EffectAlgebra::orthocomplement(const Element& a) const {
  check_owned(a);
  auto c = ominus_impl(unit(), a);
  if (!c) throw axiom_breach("orthocomplement undefined: " + describe(a) + " is not below the unit");
  return *c;
}

Element EffectAlgebra::meet(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  if (!lattice_ordered()) throw input_error(name() + " is not lattice ordered, meet unavailable");
  return meet_impl(a, b);
}

Element EffectAlgebra::join(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  if (!lattice_ordered()) throw input_error(name() + " is not lattice ordered, join unavailable");
  return join_impl(a, b);
}

bool EffectAlgebra::leq_impl(const Element& a, const Element& b) const {
  return ominus_impl(b, a).has_value();
}

Element EffectAlgebra::meet_impl(const Element&, const Element&) const {
  throw input_error(name() + " does not implement meet");
}

Element EffectAlgebra::join_impl(const Element&, const Element&) const {
  throw input_error(name() + " does not implement join");
}

std::size_t EffectAlgebra::size() const {
  throw input_error(name() + " is not enumerable");
}

Element EffectAlgebra::element_at(std::size_t) const {
  throw input_error(name() + " is not enumerable");
}

std::optional<Element> oplus(const Element& a, const Element& b) {
  return a.algebra().oplus(a, b);
}

std::optional<Element> ominus(const Element& b, const Element& a) {
  return b.algebra().ominus(b, a);
}

bool leq(const Element& a, const Element& b) { return a.algebra().leq(a, b); }

Element orthocomplement(const Element& a) { return a.algebra().orthocomplement(a); }

std::optional<Element> big_oplus(const EffectAlgebra& algebra, std::span<const Element> family) {
  Element acc = algebra.zero();
  for (const Element& x : family) {
    auto next = algebra.oplus(acc, x);
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

std::optional<Element> big_oplus(const EffectAlgebra& algebra, const std::vector<Element>& family) {
  return big_oplus(algebra, std::span<const Element>(family.data(), family.size()));
}

}  // namespace coex
