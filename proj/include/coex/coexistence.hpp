#pragma once

#include "coex/csm.hpp"
#include "coex/observable.hpp"

namespace coex {

/// α_A(𝕏) = ⊕_{X ∈ 𝕏} D(X, A) for a family grounded on A ⊆ S. Total for
/// valid mappings because (D(X,A))_{X⊆A} decomposes the unit; a failing sum
/// is reported as a decomposition breach of the mapping.
Element alpha_A(const Csm& csm, const SubsetFamily& fam);

struct DecompositionCheck {
  SMask a = 0;
  bool ok = false;
  std::optional<Element> total;
  std::string detail;
};

/// Sums D(X, A) over all X ⊆ A and compares against the unit.
DecompositionCheck check_decomposition(const Csm& csm, SMask a);

struct DiagramCheck {
  SMask a = 0, b = 0;
  bool ok = false;
  bool full_sweep = false;
  std::uint64_t families_checked = 0;
  std::optional<SubsetFamily> mismatch;
  std::string detail;
};

/// Compares α_B(g(𝕏)) with α_A(𝕏). Ground sets up to `full_sweep_max` are
/// swept over all 2^(2^|A|) families; larger ones over the atom families
/// {X}, which determine both sides by additivity.
DiagramCheck check_diagram(const Csm& csm, SMask a, SMask b, unsigned full_sweep_max = 3);

struct CoexistenceWitness {
  Element element;
  SubsetFamily family;  // canonical over the full S
};

/// Independently re-checkable record of the construction: one witness family
/// per element of S, each evaluating exactly to its target under α_S.
struct CoexistenceCertificate {
  std::vector<std::string> s_names;
  std::uint64_t boolean_atoms = 0;
  std::vector<CoexistenceWitness> witnesses;
  bool decomposition_ok = false;
  bool diagram_ok = false;
  bool observable_ok = false;
};

struct AlphaS {
  Observable observable;
  CoexistenceCertificate certificate;
};

/// Builds the observable α_S on the canonical limit algebra 2^(2^S), atom
/// (the family {X}) mapping to D(X, S). Validates the unit decompositions,
/// the diagram commutations for all A ⊆ B ⊆ S and the observable itself, and
/// produces a certificate with one range witness per element of S. Any check
/// failure aborts the construction with the failed check named.
AlphaS build_alpha_S(const Csm& csm, VerifyMode mode = VerifyMode::Auto,
                     std::uint64_t samples = 100000, std::uint64_t seed = kDefaultSeed,
                     unsigned diagram_full_sweep_max = 3);

}  // namespace coex
