#include "coex/mv_check.hpp"

namespace coex {

MvCheckResult is_mv_effect_algebra(const std::shared_ptr<const EffectAlgebra>& algebra) {
  if (!algebra) throw input_error("null algebra");
  if (!algebra->lattice_ordered())
    throw input_error(algebra->name() + " is not lattice ordered; the MV check needs meets and joins");
  if (auto known = algebra->known_mv(); known.has_value()) {
    MvCheckResult r;
    r.is_mv = *known;
    r.message = algebra->name() + (*known ? " is MV by structure" : " is not MV by structure");
    return r;
  }
  if (!algebra->enumerable())
    throw input_error(algebra->name() + " is not enumerable and does not declare the MV property");

  const std::size_t n = algebra->size();
  const Element zero = algebra->zero();
  for (std::size_t i = 0; i < n; ++i) {
    const Element a = algebra->element_at(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Element b = algebra->element_at(j);
      if (algebra->meet(a, b) == zero && !algebra->leq(a, algebra->orthocomplement(b))) {
        MvCheckResult r;
        r.is_mv = false;
        r.failed_clause = "(b)";
        r.counterexample = {a, b};
        r.message = "clause (b) fails: " + a.str() + " ∧ " + b.str() + " = 0 but " + a.str() +
                    " is not below the orthocomplement of " + b.str();
        return r;
      }
    }
  }
  MvCheckResult r;
  r.is_mv = true;
  r.message = "clause (b) holds for all " + std::to_string(n * n) + " pairs";
  return r;
}

}  // namespace coex
