#include "coex/subset_family.hpp"

namespace coex {

namespace {

void check_ground(SMask ground) {
  if (mask_size(ground) > kMaxGroundSize)
    throw input_error("ground set exceeds the supported size of " + std::to_string(kMaxGroundSize));
}

std::uint64_t full_bits(SMask ground) {
  const unsigned count = subset_count(ground);
  return count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

}  // namespace

unsigned subset_count(SMask ground) {
  check_ground(ground);
  return 1u << mask_size(ground);
}

SMask local_to_global(unsigned local, SMask ground) {
  SMask out = 0;
  SMask rest = ground;
  unsigned bit = 0;
  while (rest) {
    const SMask lowest = rest & (~rest + 1);
    if (local & (1u << bit)) out |= lowest;
    rest &= rest - 1;
    ++bit;
  }
  if (local >> bit) throw input_error("local subset index out of range for ground set");
  return out;
}

unsigned global_to_local(SMask subset, SMask ground) {
  if ((subset & ~ground) != 0) throw input_error("subset is not contained in the ground set");
  unsigned out = 0;
  SMask rest = ground;
  unsigned bit = 0;
  while (rest) {
    const SMask lowest = rest & (~rest + 1);
    if (subset & lowest) out |= 1u << bit;
    rest &= rest - 1;
    ++bit;
  }
  return out;
}

SubsetFamily family_empty(SMask ground) {
  check_ground(ground);
  return {ground, 0};
}

SubsetFamily family_full(SMask ground) {
  check_ground(ground);
  return {ground, full_bits(ground)};
}

SubsetFamily make_family(SMask ground, const std::vector<SMask>& subsets) {
  SubsetFamily fam = family_empty(ground);
  for (SMask s : subsets) fam.members |= std::uint64_t{1} << global_to_local(s, ground);
  return fam;
}

std::vector<SMask> family_members(const SubsetFamily& fam) {
  std::vector<SMask> out;
  const unsigned count = subset_count(fam.ground);
  for (unsigned j = 0; j < count; ++j)
    if (fam.members >> j & 1u) out.push_back(local_to_global(j, fam.ground));
  return out;
}

bool family_contains(const SubsetFamily& fam, SMask subset) {
  return fam.members >> global_to_local(subset, fam.ground) & 1u;
}

SubsetFamily g_embed(const SubsetFamily& fam, SMask target_ground) {
  if ((fam.ground & ~target_ground) != 0)
    throw input_error("embedding requires the ground set to be contained in the target");
  check_ground(target_ground);
  if ((fam.members & ~full_bits(fam.ground)) != 0)
    throw input_error("family has member bits outside its ground set");
  SubsetFamily out = family_empty(target_ground);
  const SMask pad = target_ground & ~fam.ground;
  const unsigned count = subset_count(fam.ground);
  for (unsigned j = 0; j < count; ++j) {
    if (!(fam.members >> j & 1u)) continue;
    const SMask base = local_to_global(j, fam.ground);
    for_each_submask(pad, [&](SMask extra) {
      out.members |= std::uint64_t{1} << global_to_local(base | extra, target_ground);
    });
  }
  return out;
}

bool equiv(const SubsetFamily& p, const SubsetFamily& q) {
  const SMask common = p.ground | q.ground;
  return g_embed(p, common) == g_embed(q, common);
}

SubsetFamily canonicalize(const SubsetFamily& fam, SMask full) { return g_embed(fam, full); }

SubsetFamily pair_join(const SubsetFamily& p, const SubsetFamily& q) {
  const SMask common = p.ground | q.ground;
  SubsetFamily out = g_embed(p, common);
  out.members |= g_embed(q, common).members;
  return out;
}

SubsetFamily pair_meet(const SubsetFamily& p, const SubsetFamily& q) {
  const SMask common = p.ground | q.ground;
  SubsetFamily out = g_embed(p, common);
  out.members &= g_embed(q, common).members;
  return out;
}

SubsetFamily limit_join(const SubsetFamily& p, const SubsetFamily& q, SMask full) {
  SubsetFamily out = canonicalize(p, full);
  out.members |= canonicalize(q, full).members;
  return out;
}

SubsetFamily limit_meet(const SubsetFamily& p, const SubsetFamily& q, SMask full) {
  SubsetFamily out = canonicalize(p, full);
  out.members &= canonicalize(q, full).members;
  return out;
}

SubsetFamily limit_complement(const SubsetFamily& p, SMask full) {
  SubsetFamily out = canonicalize(p, full);
  out.members = ~out.members & full_bits(full);
  return out;
}

}  // namespace coex
