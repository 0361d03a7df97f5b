#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coex/algebra.hpp"

namespace coex {

inline constexpr std::uint64_t kDefaultSeed = 0x5eedc0e7ULL;

/// Domains with at most this many elements are verified exhaustively over all
/// disjoint pairs; larger domains fall back to seeded sampling.
inline constexpr std::uint64_t kExhaustiveDomainLimit = 256;

/// Observable on the powerset Boolean algebra with `atom_count` atoms, into
/// an effect algebra. Stored on atoms and extended additively; domain
/// elements are bitmasks over atoms.
class Observable {
 public:
  explicit Observable(std::vector<Element> atom_values);

  unsigned atom_count() const { return static_cast<unsigned>(atoms_.size()); }
  std::uint64_t domain_size() const { return std::uint64_t{1} << atoms_.size(); }
  std::uint64_t top_mask() const { return domain_size() - 1; }
  const std::vector<Element>& atom_values() const { return atoms_; }
  const EffectAlgebra& codomain() const { return *codomain_; }
  const std::shared_ptr<const EffectAlgebra>& codomain_ptr() const { return codomain_; }

  /// Additive extension; absent when the partial sum of the atoms fails,
  /// which verify_observable reports as an additivity defect.
  std::optional<Element> eval(std::uint64_t x) const;
  Element eval_checked(std::uint64_t x) const;

 private:
  std::vector<Element> atoms_;
  std::shared_ptr<const EffectAlgebra> codomain_;
};

enum class VerifyMode { Auto, Exhaustive, Sampled };

struct ObservableCheck {
  bool ok = false;
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
  std::string detail;
};

/// Checks α(⊥) = 0, α(⊤) = 1 and additivity over disjoint pairs. Exhaustive
/// for domains up to kExhaustiveDomainLimit elements, otherwise `samples`
/// seeded random disjoint pairs.
ObservableCheck verify_observable(const Observable& alpha, VerifyMode mode = VerifyMode::Auto,
                                  std::uint64_t samples = 100000,
                                  std::uint64_t seed = kDefaultSeed);

/// All domain elements mapping onto `target`, in mask order. Exhaustive scan;
/// guarded against oversized domains.
std::vector<std::uint64_t> preimages_of(const Observable& alpha, const Element& target);

struct RangeWitness {
  Element target;
  std::optional<std::uint64_t> preimage;
};

/// Per-target preimage search; absence is a result, not an error.
std::vector<RangeWitness> range_contains(const Observable& alpha, const std::vector<Element>& targets);

}  // namespace coex
