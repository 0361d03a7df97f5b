#pragma once

#include "coex/csm.hpp"

namespace coex {

/// β: Fin(S) → E over an interval effect algebra, stored as all 2^|S|
/// values. The defining conditions are (A1) β(∅)=1, (A2) β({c})=c, and (A3)
/// nonnegativity of every inclusion-exclusion difference D_β in the ambient
/// group.
class WitnessMapping {
 public:
  WitnessMapping(CsmDomain domain, std::vector<Element> values);

  const CsmDomain& domain() const { return domain_; }
  const IntervalStructure& group() const { return *interval_; }
  const Element& value(SMask x) const { return values_.at(x); }
  const std::vector<Element>& values() const { return values_; }

 private:
  CsmDomain domain_;
  std::vector<Element> values_;
  const IntervalStructure* interval_;
};

/// D_β(X,A) = Σ_{X⊆Z⊆A} (-1)^{|X|+|Z|} β(Z), computed exactly in the ambient
/// group; may be negative for invalid candidates.
GroupVector D_beta(const WitnessMapping& beta, SMask x, SMask a);

/// Independent second route: the two-term recursion
/// D_β(X,A) = D_β(X,A∖{c}) − D_β(X∪{c},A) peeled one element at a time, with
/// D_β(X,X) = β(X) as the base.
GroupVector D_beta_recursive(const WitnessMapping& beta, SMask x, SMask a);

struct WitnessViolation {
  std::string axiom;  // "(A1)", "(A2)", "(A3)"
  SMask x = 0, a = 0;
  std::string message;
};

struct WitnessReport {
  std::vector<WitnessViolation> violations;
  std::uint64_t pairs_checked = 0;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks (A1) and (A2) directly and (A3) over every comparable pair X ⊆ A,
/// 3^|S| pairs in total.
WitnessReport verify_witness(const WitnessMapping& beta);

/// β(X) = ⟨X|{1}⟩. Requires the codomain to expose its ambient group.
WitnessMapping witness_from_csm(const Csm& csm);

struct DEqualityCheck {
  bool ok = false;
  std::optional<std::pair<SMask, SMask>> mismatch;
  std::uint64_t pairs_checked = 0;
  std::string detail;
};

/// Compares the effect-algebra difference D(X,A), embedded into the group,
/// against the group-valued D_β(X,A) over every comparable pair.
DEqualityCheck check_D_equality(const Csm& csm, const WitnessMapping& beta);

}  // namespace coex
