#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "coex/errors.hpp"

namespace coex {

/// A subset of the fixed ordered index set S, as a bitmask over positions.
using SMask = std::uint32_t;

inline unsigned mask_size(SMask m) { return static_cast<unsigned>(std::popcount(m)); }

/// Visits every submask of `m` in increasing numeric order, including 0 and m.
template <typename F>
void for_each_submask(SMask m, F&& f) {
  SMask s = 0;
  while (true) {
    f(s);
    if (s == m) break;
    s = (s - m) & m;
  }
}

/// An element 𝕏 of the powerset Boolean algebra 2^(2^A) for a ground set
/// A ⊆ S: bit j of `members` marks membership of the j-th subset of `ground`,
/// subsets ordered by their local bitmask over the positions of `ground`.
struct SubsetFamily {
  SMask ground = 0;
  std::uint64_t members = 0;
  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;
};

/// `members` is a 64-bit set over the 2^|ground| subsets of the ground set.
inline constexpr unsigned kMaxGroundSize = 6;

unsigned subset_count(SMask ground);
/// Spreads a local subset index over the positions of `ground` inside S.
SMask local_to_global(unsigned local, SMask ground);
/// Inverse of local_to_global; requires subset ⊆ ground.
unsigned global_to_local(SMask subset, SMask ground);

SubsetFamily family_empty(SMask ground);
SubsetFamily family_full(SMask ground);
SubsetFamily make_family(SMask ground, const std::vector<SMask>& subsets);
std::vector<SMask> family_members(const SubsetFamily& fam);
bool family_contains(const SubsetFamily& fam, SMask subset);

/// The canonical injective Boolean homomorphism 2^(2^A) -> 2^(2^B) for
/// A ⊆ B: every member X is padded with every subset of B \ A.
SubsetFamily g_embed(const SubsetFamily& fam, SMask target_ground);

/// Directed-system equivalence: the two pairs agree once both are embedded
/// over the union of their ground sets.
bool equiv(const SubsetFamily& p, const SubsetFamily& q);

/// Canonical representative of the equivalence class over the full index set.
SubsetFamily canonicalize(const SubsetFamily& fam, SMask full);

/// Join and meet computed at the union index, exactly as the direct-limit
/// operations are defined on pairs.
SubsetFamily pair_join(const SubsetFamily& p, const SubsetFamily& q);
SubsetFamily pair_meet(const SubsetFamily& p, const SubsetFamily& q);

/// Boolean operations on canonical representatives over the full index set.
SubsetFamily limit_join(const SubsetFamily& p, const SubsetFamily& q, SMask full);
SubsetFamily limit_meet(const SubsetFamily& p, const SubsetFamily& q, SMask full);
SubsetFamily limit_complement(const SubsetFamily& p, SMask full);

}  // namespace coex
