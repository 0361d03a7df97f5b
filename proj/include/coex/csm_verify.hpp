#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coex/csm.hpp"

namespace coex {

struct CsmViolation {
  std::string axiom;  // "(a)".."(e)", "(e*)"
  SMask u = 0, v = 0;
  std::optional<SMask> v2;      // second set for the monotonicity axiom
  std::optional<unsigned> c;    // index into S for (d), (e), (e*)
  std::optional<Element> lhs, rhs;
  std::string message;
};

struct AxiomStatus {
  bool checked = false;
  std::vector<CsmViolation> violations;
  bool holds() const { return checked && violations.empty(); }
};

struct AxiomReport {
  AxiomStatus a, b, c, d, e, estar;
  bool unit_adjoined = false;
  bool csm_ok() const { return a.holds() && b.holds() && c.holds() && d.holds() && e.holds(); }
  bool strong_ok() const { return estar.holds(); }
  std::vector<const CsmViolation*> all_violations() const;
  std::string summary() const;
};

/// Exhaustive check of conditions (a) through (e) over all subsets of S.
/// An undefined difference inside (e) is itself reported as a violation of
/// (e). Fills the mapping's validity cache.
AxiomReport verify_csm(const Csm& csm);

/// Exhaustive check of (e*): the (e) identity for every c in S, including
/// c ∈ U ∪ V. Fills the strength cache.
AxiomReport verify_strong(const Csm& csm);

/// Both of the above merged into one report.
AxiomReport verify_all(const Csm& csm);

struct PropertyCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Exhaustive sweep of the strong-mapping facts: the non-disjoint collapse,
/// the adjoin-to-left identity, reconstruction from D, antitonicity in U,
/// the lower-bound facts and the upper-bound fact. Assertable only for
/// strong mappings; for merely valid mappings the outcome is informative.
std::vector<PropertyCheck> strong_property_report(const Csm& csm);

}  // namespace coex
