#include "coex/interval_algebra.hpp"

#include <algorithm>

namespace coex {

namespace {

bool coords_leq(const GroupVector& a, const GroupVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string coords_str(const GroupVector& a) { return format_group_vector(a); }

}  // namespace

// ---------------------------------------------------------------------------
// TupleEffectAlgebra

std::shared_ptr<TupleEffectAlgebra> TupleEffectAlgebra::create(std::size_t dim) {
  if (dim == 0) throw input_error("tuple algebra dimension must be positive");
  return std::shared_ptr<TupleEffectAlgebra>(new TupleEffectAlgebra(dim));
}

Element TupleEffectAlgebra::element(GroupVector coords) const {
  if (coords.size() != dim_)
    throw input_error("expected " + std::to_string(dim_) + " coordinates, got " + std::to_string(coords.size()));
  for (const auto& x : coords)
    if (x < 0 || x > 1) throw input_error("coordinate " + format_rational(x) + " outside [0,1]");
  return coord_element(std::move(coords));
}

Element TupleEffectAlgebra::mul(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  GroupVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = a.coords()[i] * b.coords()[i];
  return coord_element(std::move(out));
}

Element TupleEffectAlgebra::probsum(const Element& a, const Element& b) const {
  check_owned(a);
  check_owned(b);
  GroupVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const Rational &x = a.coords()[i], &y = b.coords()[i];
    out[i] = x + y - x * y;
  }
  return coord_element(std::move(out));
}

std::string TupleEffectAlgebra::describe(const Element& a) const { return coords_str(a.coords()); }

std::string TupleEffectAlgebra::name() const {
  return "[0,1]^" + std::to_string(dim_);
}

GroupVector TupleEffectAlgebra::to_group(const Element& a) const {
  check_owned(a);
  return a.coords();
}

std::optional<Element> TupleEffectAlgebra::from_group(const GroupVector& v) const {
  if (v.size() != dim_) return std::nullopt;
  for (const auto& x : v)
    if (x < 0 || x > 1) return std::nullopt;
  return coord_element(v);
}

Element TupleEffectAlgebra::zero_impl() const { return coord_element(GroupVector(dim_, Rational(0))); }
Element TupleEffectAlgebra::unit_impl() const { return coord_element(GroupVector(dim_, Rational(1))); }

std::optional<Element> TupleEffectAlgebra::oplus_impl(const Element& a, const Element& b) const {
  GroupVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    out[i] = a.coords()[i] + b.coords()[i];
    if (out[i] > 1) return std::nullopt;
  }
  return coord_element(std::move(out));
}

std::optional<Element> TupleEffectAlgebra::ominus_impl(const Element& b, const Element& a) const {
  GroupVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    out[i] = b.coords()[i] - a.coords()[i];
    if (out[i] < 0) return std::nullopt;
  }
  return coord_element(std::move(out));
}

bool TupleEffectAlgebra::leq_impl(const Element& a, const Element& b) const {
  return coords_leq(a.coords(), b.coords());
}

bool TupleEffectAlgebra::equal_impl(const Element& a, const Element& b) const {
  return a.coords() == b.coords();
}

Element TupleEffectAlgebra::meet_impl(const Element& a, const Element& b) const {
  GroupVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = std::min(a.coords()[i], b.coords()[i]);
  return coord_element(std::move(out));
}

Element TupleEffectAlgebra::join_impl(const Element& a, const Element& b) const {
  GroupVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = std::max(a.coords()[i], b.coords()[i]);
  return coord_element(std::move(out));
}

// ---------------------------------------------------------------------------
// MVChainProduct

MVChainProduct::MVChainProduct(std::vector<unsigned> orders) : orders_(std::move(orders)) {
  for (unsigned k : orders_) size_ *= static_cast<std::size_t>(k) + 1;
}

std::shared_ptr<MVChainProduct> MVChainProduct::create(std::vector<unsigned> orders) {
  if (orders.empty()) throw input_error("chain product needs at least one chain");
  for (unsigned k : orders)
    if (k == 0) throw input_error("chain orders must be positive");
  auto alg = std::shared_ptr<MVChainProduct>(new MVChainProduct(std::move(orders)));
  if (alg->size_ > 1'000'000) throw input_error("chain product too large to enumerate");
  return alg;
}

Element MVChainProduct::element(GroupVector coords) const {
  if (coords.size() != orders_.size())
    throw input_error("expected " + std::to_string(orders_.size()) + " coordinates");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Rational scaled = coords[i] * orders_[i];
    if (coords[i] < 0 || coords[i] > 1 || denominator(scaled) != 1)
      throw input_error("coordinate " + format_rational(coords[i]) + " is not a multiple of 1/" +
                        std::to_string(orders_[i]) + " in [0,1]");
  }
  return coord_element(std::move(coords));
}

Element MVChainProduct::element_from_steps(const std::vector<unsigned>& steps) const {
  if (steps.size() != orders_.size()) throw input_error("step vector has wrong length");
  GroupVector coords(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] > orders_[i]) throw input_error("step exceeds chain order");
    coords[i] = Rational(steps[i], orders_[i]);
  }
  return coord_element(std::move(coords));
}

Element MVChainProduct::element_at(std::size_t i) const {
  if (i >= size_) throw input_error("element index out of range");
  std::vector<unsigned> steps(orders_.size());
  for (std::size_t d = 0; d < orders_.size(); ++d) {
    const std::size_t radix = orders_[d] + 1;
    steps[d] = static_cast<unsigned>(i % radix);
    i /= radix;
  }
  return element_from_steps(steps);
}

std::string MVChainProduct::describe(const Element& a) const { return coords_str(a.coords()); }

std::string MVChainProduct::name() const {
  std::string out = "chain product C_";
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += " x C_";
    out += std::to_string(orders_[i]);
  }
  return out;
}

GroupVector MVChainProduct::to_group(const Element& a) const {
  check_owned(a);
  return a.coords();
}

std::optional<Element> MVChainProduct::from_group(const GroupVector& v) const {
  if (v.size() != orders_.size()) return std::nullopt;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > 1) return std::nullopt;
    if (denominator(Rational(v[i] * orders_[i])) != 1) return std::nullopt;
  }
  return coord_element(v);
}

Element MVChainProduct::zero_impl() const {
  return coord_element(GroupVector(orders_.size(), Rational(0)));
}

Element MVChainProduct::unit_impl() const {
  return coord_element(GroupVector(orders_.size(), Rational(1)));
}

std::optional<Element> MVChainProduct::oplus_impl(const Element& a, const Element& b) const {
  GroupVector out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coords()[i] + b.coords()[i];
    if (out[i] > 1) return std::nullopt;
  }
  return coord_element(std::move(out));
}

std::optional<Element> MVChainProduct::ominus_impl(const Element& b, const Element& a) const {
  GroupVector out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = b.coords()[i] - a.coords()[i];
    if (out[i] < 0) return std::nullopt;
  }
  return coord_element(std::move(out));
}

bool MVChainProduct::leq_impl(const Element& a, const Element& b) const {
  return coords_leq(a.coords(), b.coords());
}

bool MVChainProduct::equal_impl(const Element& a, const Element& b) const {
  return a.coords() == b.coords();
}

Element MVChainProduct::meet_impl(const Element& a, const Element& b) const {
  GroupVector out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(a.coords()[i], b.coords()[i]);
  return coord_element(std::move(out));
}

Element MVChainProduct::join_impl(const Element& a, const Element& b) const {
  GroupVector out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a.coords()[i], b.coords()[i]);
  return coord_element(std::move(out));
}

}  // namespace coex
