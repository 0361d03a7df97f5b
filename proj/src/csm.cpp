#include "coex/csm.hpp"

#include <sstream>

#include "coex/mv_check.hpp"
#include "coex/interval_algebra.hpp"

namespace coex {

CsmDomain CsmDomain::make(std::shared_ptr<const EffectAlgebra> algebra, std::vector<Element> s,
                          unsigned cap) {
  if (!algebra) throw input_error("null algebra");
  if (cap > kMaxGroundSize) cap = kMaxGroundSize;
  CsmDomain d;
  d.algebra_ = std::move(algebra);
  d.s_ = std::move(s);
  for (const Element& e : d.s_)
    if (e.algebra_ptr().get() != d.algebra_.get())
      throw input_error("S contains an element of a different algebra");
  for (std::size_t i = 0; i < d.s_.size(); ++i)
    for (std::size_t j = i + 1; j < d.s_.size(); ++j)
      if (d.s_[i] == d.s_[j])
        throw input_error("S contains a duplicate element: " + d.s_[i].str());
  const Element unit = d.algebra_->unit();
  bool found = false;
  for (std::size_t i = 0; i < d.s_.size(); ++i) {
    if (d.s_[i] == unit) {
      d.unit_index_ = static_cast<unsigned>(i);
      found = true;
      break;
    }
  }
  if (!found) {
    d.s_.push_back(unit);
    d.unit_index_ = static_cast<unsigned>(d.s_.size() - 1);
    d.unit_adjoined_ = true;
  }
  if (d.s_.empty()) throw input_error("S must be nonempty");
  if (d.s_.size() > cap)
    throw input_error("S has " + std::to_string(d.s_.size()) + " elements, above the cap of " +
                      std::to_string(cap));
  return d;
}

std::optional<unsigned> CsmDomain::index_of(const Element& e) const {
  for (unsigned i = 0; i < size(); ++i)
    if (s_[i] == e) return i;
  return std::nullopt;
}

std::vector<Element> CsmDomain::subset_elements(SMask mask) const {
  std::vector<Element> out;
  for (unsigned i = 0; i < size(); ++i)
    if (mask >> i & 1u) out.push_back(s_[i]);
  return out;
}

std::string CsmDomain::subset_str(SMask mask) const {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 0; i < size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    if (!first) out += ", ";
    out += s_[i].str();
    first = false;
  }
  return out + "}";
}

Element Csm::eval(SMask u, SMask v) const {
  const SMask full = domain_.full_mask();
  if ((u & ~full) || (v & ~full)) throw input_error("subset mask outside of S");
  return eval_impl(u, v);
}

std::size_t table_index(const CsmDomain& domain, SMask u, SMask v) {
  return static_cast<std::size_t>(u) * (std::size_t{1} << domain.size()) + v;
}

namespace {

class JoinMeetCsm final : public Csm {
 public:
  explicit JoinMeetCsm(CsmDomain d) : Csm(std::move(d)) {}
  std::string kind() const override { return "join-meet"; }

 protected:
  Element eval_impl(SMask u, SMask v) const override {
    const EffectAlgebra& alg = domain().algebra();
    Element meet_u = alg.unit();
    for (unsigned i = 0; i < domain().size(); ++i)
      if (u >> i & 1u) meet_u = alg.meet(meet_u, domain().at(i));
    Element join_v = alg.zero();
    for (unsigned i = 0; i < domain().size(); ++i)
      if (v >> i & 1u) join_v = alg.join(join_v, domain().at(i));
    return alg.meet(meet_u, join_v);
  }
};

class ProductCsm final : public Csm {
 public:
  ProductCsm(CsmDomain d, std::shared_ptr<const TupleEffectAlgebra> alg)
      : Csm(std::move(d)), alg_(std::move(alg)) {}
  std::string kind() const override { return "product"; }

 protected:
  Element eval_impl(SMask u, SMask v) const override {
    Element prod_u = alg_->unit();
    for (unsigned i = 0; i < domain().size(); ++i)
      if (u >> i & 1u) prod_u = alg_->mul(prod_u, domain().at(i));
    // 0 is neutral for x ⊔ y = x + y - xy, so the empty fold gives ⊔∅ = 0
    // and a singleton fold gives ⊔{c} = c.
    Element sq_v = alg_->zero();
    for (unsigned i = 0; i < domain().size(); ++i)
      if (v >> i & 1u) sq_v = alg_->probsum(sq_v, domain().at(i));
    return alg_->mul(prod_u, sq_v);
  }

 private:
  std::shared_ptr<const TupleEffectAlgebra> alg_;
};

class TableCsm final : public Csm {
 public:
  TableCsm(CsmDomain d, std::vector<Element> entries)
      : Csm(std::move(d)), entries_(std::move(entries)) {}
  std::string kind() const override { return "table"; }

 protected:
  Element eval_impl(SMask u, SMask v) const override {
    return entries_[table_index(domain(), u, v)];
  }

 private:
  std::vector<Element> entries_;
};

class ObservableCsm final : public Csm {
 public:
  ObservableCsm(CsmDomain d, Observable alpha, std::vector<std::uint64_t> picks)
      : Csm(std::move(d)), alpha_(std::move(alpha)), picks_(std::move(picks)) {}
  std::string kind() const override { return "observable-derived"; }

 protected:
  Element eval_impl(SMask u, SMask v) const override {
    std::uint64_t meet_u = alpha_.top_mask();
    for (unsigned i = 0; i < domain().size(); ++i)
      if (u >> i & 1u) meet_u &= picks_[i];
    std::uint64_t join_v = 0;
    for (unsigned i = 0; i < domain().size(); ++i)
      if (v >> i & 1u) join_v |= picks_[i];
    return alpha_.eval_checked(meet_u & join_v);
  }

 private:
  Observable alpha_;
  std::vector<std::uint64_t> picks_;
};

}  // namespace

CsmPtr csm_joinmeet(CsmDomain domain) {
  const auto check = is_mv_effect_algebra(domain.algebra_ptr());
  if (!check.is_mv)
    throw input_error("join-meet mapping needs an MV effect algebra; " + check.message);
  return std::make_shared<JoinMeetCsm>(std::move(domain));
}

CsmPtr csm_product(CsmDomain domain) {
  auto alg = std::dynamic_pointer_cast<const TupleEffectAlgebra>(domain.algebra_ptr());
  if (!alg)
    throw input_error("product mapping is defined over tuple algebras, got " +
                      domain.algebra().name());
  return std::make_shared<ProductCsm>(std::move(domain), std::move(alg));
}

CsmPtr csm_table(CsmDomain domain, std::vector<Element> entries) {
  const std::size_t expected = std::size_t{1} << (2 * domain.size());
  if (entries.size() != expected)
    throw input_error("table mapping needs " + std::to_string(expected) + " entries, got " +
                      std::to_string(entries.size()));
  for (const Element& e : entries)
    if (e.algebra_ptr().get() != domain.algebra_ptr().get())
      throw input_error("table entry from a different algebra");
  return std::make_shared<TableCsm>(std::move(domain), std::move(entries));
}

CsmPtr csm_from_observable(const Observable& alpha, CsmDomain domain,
                           const std::optional<std::vector<std::uint64_t>>& picks) {
  if (domain.algebra_ptr().get() != alpha.codomain_ptr().get())
    throw input_error("the domain S and the observable codomain must share one algebra");
  std::vector<std::uint64_t> chosen;
  if (picks) {
    if (picks->size() != domain.size())
      throw input_error("one preimage pick per element of S is required");
    chosen = *picks;
    for (unsigned i = 0; i < domain.size(); ++i) {
      const auto v = alpha.eval(chosen[i]);
      if (!v || !(*v == domain.at(i)))
        throw input_error("pick for " + domain.at(i).str() + " is not a preimage");
    }
  } else {
    for (unsigned i = 0; i < domain.size(); ++i) {
      const auto pre = preimages_of(alpha, domain.at(i));
      if (pre.empty())
        throw input_error("element not in range of the observable: " + domain.at(i).str());
      chosen.push_back(pre.front());
    }
  }
  return std::make_shared<ObservableCsm>(std::move(domain), alpha, std::move(chosen));
}

Element D(const Csm& csm, SMask x, SMask a) {
  const SMask full = csm.domain().full_mask();
  if ((x & ~a) || (a & ~full)) throw input_error("D requires X ⊆ A ⊆ S");
  const Element lhs = csm.eval(x, csm.domain().unit_mask());
  const Element rhs = csm.eval(x, a & ~x);
  const auto diff = ominus(lhs, rhs);
  if (!diff) {
    std::ostringstream msg;
    msg << "D(" << csm.domain().subset_str(x) << ", " << csm.domain().subset_str(a)
        << ") undefined: ⟨X|A∖X⟩ = " << rhs.str() << " is not below ⟨X|{1}⟩ = " << lhs.str()
        << "; axiom (b) (or monotonicity (a)) fails for this mapping";
    throw axiom_breach(msg.str());
  }
  return *diff;
}

std::vector<Element> materialize(const Csm& csm) {
  const unsigned n = csm.domain().size();
  std::vector<Element> out;
  out.reserve(std::size_t{1} << (2 * n));
  for (SMask u = 0; u <= csm.domain().full_mask(); ++u)
    for (SMask v = 0; v <= csm.domain().full_mask(); ++v) out.push_back(csm.eval(u, v));
  return out;
}

CsmPtr to_table(const Csm& csm) {
  return std::make_shared<TableCsm>(csm.domain(), materialize(csm));
}

bool same_table(const Csm& lhs, const Csm& rhs) {
  if (lhs.domain().size() != rhs.domain().size()) return false;
  const SMask full = lhs.domain().full_mask();
  for (SMask u = 0; u <= full; ++u)
    for (SMask v = 0; v <= full; ++v)
      if (!(lhs.eval(u, v) == rhs.eval(u, v))) return false;
  return true;
}

}  // namespace coex
