#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coex/algebra.hpp"

namespace coex {

/// Explicit description of a finite effect algebra: named elements and the
/// partial sum as a list of rows a ⊕ b = c. Nothing is symmetrized or
/// completed; the table is validated exactly as given.
struct TableAlgebraSpec {
  std::vector<std::string> elements;
  std::vector<std::array<std::string, 3>> sums;
  std::string zero;
  std::string unit;
  /// Optional interval embedding: exact coordinates per element, all of the
  /// same dimension. Required for witness-mapping work on this algebra.
  std::map<std::string, GroupVector> embedding;
};

/// Finite effect algebra backed by an explicit sum table. Construction checks
/// well-formedness only (identifiers resolve, no conflicting duplicate rows);
/// the axioms are the validator's concern, so structurally broken tables can
/// be represented and reported on.
class TableEffectAlgebra final : public EffectAlgebra, private IntervalStructure {
 public:
  static std::shared_ptr<TableEffectAlgebra> create(TableAlgebraSpec spec);

  std::size_t element_count() const { return ids_.size(); }
  const std::string& id_of(std::size_t i) const { return ids_.at(i); }
  std::optional<std::size_t> index_of(std::string_view id) const;
  Element element(std::string_view id) const;
  std::optional<std::size_t> sum_entry(std::size_t a, std::size_t b) const;
  std::size_t zero_index() const { return zero_; }
  std::size_t unit_index() const { return unit_; }
  bool has_embedding() const { return !coords_.empty(); }
  const TableAlgebraSpec& spec() const { return spec_; }

  bool lattice_ordered() const override;
  bool enumerable() const override { return true; }
  std::size_t size() const override { return ids_.size(); }
  Element element_at(std::size_t i) const override;
  const IntervalStructure* interval() const override;
  std::string describe(const Element& a) const override;
  std::string name() const override;

  // IntervalStructure (active only when an embedding is present)
  std::size_t group_dim() const override;
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
  TableEffectAlgebra() = default;

  struct LatticeTables {
    bool is_lattice = false;
    // n*n matrices of element indices; valid only when is_lattice.
    std::vector<std::size_t> meet, join;
  };
  const LatticeTables& lattice() const;

  TableAlgebraSpec spec_;
  std::vector<std::string> ids_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::optional<std::size_t>> table_;  // n*n partial sum
  std::size_t zero_ = 0, unit_ = 0;
  std::vector<GroupVector> coords_;  // empty unless embedding given
  mutable std::optional<LatticeTables> lattice_cache_;
};

struct TableViolation {
  std::string axiom;    // "E1".."E4", "CANCEL", "ORDER"
  std::string witness;  // offending elements
  std::string message;
};

struct ValidationReport {
  std::vector<TableViolation> violations;
  bool valid() const { return violations.empty(); }
  std::string summary() const;
};

/// Exhaustively checks (E1)-(E4), cancellativity, and that the derived
/// relation ≤ is a partial order with bottom 0 and top 1. Every violation is
/// reported with a witnessing tuple.
ValidationReport validate_effect_algebra(const TableEffectAlgebra& algebra);

/// Powerset Boolean algebra over `atom_count` named atoms, as an effect
/// algebra: a ⊕ b defined iff a ∩ b = ∅, and then a ⊕ b = a ∪ b. Carries the
/// 0/1 interval embedding into Z^atom_count.
std::shared_ptr<TableEffectAlgebra> powerset_algebra(unsigned atom_count);

/// The chain 0 < 1/k < ... < 1 with i ⊕ j defined iff i + j ≤ k. Carries the
/// scalar interval embedding.
std::shared_ptr<TableEffectAlgebra> chain_algebra(unsigned order);

/// Horizontal sum of two four-element Boolean algebras: elements
/// {0, a, a', b, b', 1} where sums never cross blocks. The standard example
/// of a lattice-ordered algebra that is not MV.
std::shared_ptr<TableEffectAlgebra> mo2();

}  // namespace coex
