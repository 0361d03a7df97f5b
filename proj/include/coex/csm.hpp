#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coex/algebra.hpp"
#include "coex/observable.hpp"
#include "coex/subset_family.hpp"

namespace coex {

inline constexpr unsigned kDefaultSCap = 5;

/// The ordered finite index set S ⊆ E with the unit present. When the input
/// misses the unit it is adjoined at the end and flagged, so every report can
/// say so. Subsets of S are SMask bitmasks over positions.
class CsmDomain {
 public:
  static CsmDomain make(std::shared_ptr<const EffectAlgebra> algebra, std::vector<Element> s,
                        unsigned cap = kDefaultSCap);

  const EffectAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const EffectAlgebra>& algebra_ptr() const { return algebra_; }
  unsigned size() const { return static_cast<unsigned>(s_.size()); }
  const Element& at(unsigned i) const { return s_.at(i); }
  const std::vector<Element>& elements() const { return s_; }
  SMask full_mask() const { return (SMask{1} << s_.size()) - 1; }
  unsigned unit_index() const { return unit_index_; }
  SMask unit_mask() const { return SMask{1} << unit_index_; }
  bool unit_adjoined() const { return unit_adjoined_; }

  std::optional<unsigned> index_of(const Element& e) const;
  std::vector<Element> subset_elements(SMask mask) const;
  std::string subset_str(SMask mask) const;

 private:
  CsmDomain() = default;
  std::shared_ptr<const EffectAlgebra> algebra_;
  std::vector<Element> s_;
  unsigned unit_index_ = 0;
  bool unit_adjoined_ = false;
};

/// Compatibility support mapping: a total evaluator ⟨U|V⟩ on pairs of
/// subsets of S with values in E. Whether the axioms hold is the verifier's
/// business; evaluators only promise totality.
class Csm {
 public:
  explicit Csm(CsmDomain domain) : domain_(std::move(domain)) {}
  virtual ~Csm() = default;

  const CsmDomain& domain() const { return domain_; }
  virtual std::string kind() const = 0;
  Element eval(SMask u, SMask v) const;

  /// Lazily verified axiom caches; defined next to the verifier.
  bool is_valid_csm() const;
  bool is_strong_csm() const;

 protected:
  virtual Element eval_impl(SMask u, SMask v) const = 0;

 private:
  CsmDomain domain_;
  mutable std::optional<bool> valid_cache_;
  mutable std::optional<bool> strong_cache_;
  friend struct CsmCacheAccess;
};

using CsmPtr = std::shared_ptr<const Csm>;

/// ⟨U|V⟩ = (⋀U) ∧ (⋁V) over a lattice-ordered MV algebra, with ⋀∅ = 1 and
/// ⋁∅ = 0. The MV property is checked up front; failure is an input error
/// naming the violated characterization clause.
CsmPtr csm_joinmeet(CsmDomain domain);

/// ⟨U|V⟩ = (∏U) · (⊔V) over a tuple algebra, where x ⊔ y = x + y - xy,
/// ∏∅ = 1 and ⊔∅ = 0.
CsmPtr csm_product(CsmDomain domain);

/// Table-backed evaluator; `entries` holds all 4^|S| values indexed by
/// table_index.
CsmPtr csm_table(CsmDomain domain, std::vector<Element> entries);

std::size_t table_index(const CsmDomain& domain, SMask u, SMask v);

enum class PreimagePolicy { FirstInOrder };

/// ⟨U|V⟩ = α((⋀_{a∈U} p_a) ∧ (⋁_{b∈V} p_b)) for fixed preimages p_a of the
/// domain elements under α. Without explicit picks the first preimage in
/// mask order is used. Elements without preimages are an input error.
CsmPtr csm_from_observable(const Observable& alpha, CsmDomain domain,
                           const std::optional<std::vector<std::uint64_t>>& picks = std::nullopt);

/// D(X,A) = ⟨X|{1}⟩ ⊖ ⟨X|A∖X⟩ for X ⊆ A. For mappings satisfying (a) and
/// (b) the difference is always defined; otherwise an axiom_breach names the
/// failed precondition.
Element D(const Csm& csm, SMask x, SMask a);

/// Evaluates ⟨U|V⟩ purely from D values: D(U,U) when U meets V, otherwise
/// the orthogonal sum of D(U∪Y, U∪V) over nonempty Y ⊆ V. Requires a strong
/// mapping.
Element reconstruct_from_D(const Csm& csm, SMask u, SMask v);

/// Full table of values indexed by table_index.
std::vector<Element> materialize(const Csm& csm);

/// Table-backed copy of any evaluator.
CsmPtr to_table(const Csm& csm);

/// True when both mappings have the same S size and identical value tables.
bool same_table(const Csm& lhs, const Csm& rhs);

}  // namespace coex
