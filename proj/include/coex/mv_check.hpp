#pragma once

#include <optional>
#include <utility>

#include "coex/algebra.hpp"

namespace coex {

struct MvCheckResult {
  bool is_mv = false;
  /// Label of the violated characterization clause; "(b)" when a disjoint
  /// pair fails a ≤ b'.
  std::string failed_clause;
  std::optional<std::pair<Element, Element>> counterexample;
  std::string message;
};

/// Decides whether a lattice-ordered effect algebra is MV, using the
/// characterization "a ∧ b = 0 implies a ≤ b'". Enumerable algebras are swept
/// over all pairs; non-enumerable algebras must declare the property
/// structurally. Algebras without lattice operations are an input error.
MvCheckResult is_mv_effect_algebra(const std::shared_ptr<const EffectAlgebra>& algebra);

}  // namespace coex
