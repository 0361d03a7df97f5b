#include "coex/coexistence.hpp"

#include <sstream>

namespace coex {

Element alpha_A(const Csm& csm, const SubsetFamily& fam) {
  const SMask full = csm.domain().full_mask();
  if ((fam.ground & ~full) != 0) throw input_error("family ground set is not a subset of S");
  std::vector<Element> terms;
  for (SMask x : family_members(fam)) terms.push_back(D(csm, x, fam.ground));
  const auto sum = big_oplus(csm.domain().algebra(), terms);
  if (!sum)
    throw axiom_breach("decomposition breach: the D(X, A) values over A=" +
                       csm.domain().subset_str(fam.ground) +
                       " are not orthogonal, the mapping violates its axioms");
  return *sum;
}

DecompositionCheck check_decomposition(const Csm& csm, SMask a) {
  DecompositionCheck out;
  out.a = a;
  const SMask full = csm.domain().full_mask();
  if ((a & ~full) != 0) throw input_error("A is not a subset of S");
  Element acc = csm.domain().algebra().zero();
  bool defined = true;
  SMask failed_at = 0;
  for_each_submask(a, [&](SMask x) {
    if (!defined) return;
    const auto next = oplus(acc, D(csm, x, a));
    if (!next) {
      defined = false;
      failed_at = x;
      return;
    }
    acc = *next;
  });
  if (!defined) {
    out.ok = false;
    out.detail = "partial sum of D(X, A) leaves the algebra at X=" + csm.domain().subset_str(failed_at);
    return out;
  }
  out.total = acc;
  out.ok = acc == csm.domain().algebra().unit();
  if (out.ok) {
    out.detail = "sums to the unit over " + std::to_string(subset_count(a)) + " terms";
  } else {
    const auto residual = ominus(csm.domain().algebra().unit(), acc);
    out.detail = "total " + acc.str() + " misses the unit" +
                 (residual ? " by " + residual->str() : "");
  }
  return out;
}

DiagramCheck check_diagram(const Csm& csm, SMask a, SMask b, unsigned full_sweep_max) {
  DiagramCheck out;
  out.a = a;
  out.b = b;
  const SMask full = csm.domain().full_mask();
  if ((a & ~b) != 0 || (b & ~full) != 0) throw input_error("diagram check requires A ⊆ B ⊆ S");
  if (a == b) {
    out.ok = true;
    out.full_sweep = true;
    out.detail = "identity embedding";
    return out;
  }
  const auto compare = [&](const SubsetFamily& fam) -> bool {
    const Element lhs = alpha_A(csm, g_embed(fam, b));
    const Element rhs = alpha_A(csm, fam);
    if (lhs == rhs) return true;
    out.mismatch = fam;
    out.detail = "α_B(g(𝕏)) = " + lhs.str() + " differs from α_A(𝕏) = " + rhs.str();
    return false;
  };
  if (mask_size(a) <= full_sweep_max) {
    out.full_sweep = true;
    const std::uint64_t families = std::uint64_t{1} << subset_count(a);
    for (std::uint64_t members = 0; members < families; ++members) {
      ++out.families_checked;
      if (!compare(SubsetFamily{a, members})) return out;
    }
  } else {
    // atoms generate the algebra and both sides are additive
    out.full_sweep = false;
    for_each_submask(a, [&](SMask x) {
      if (out.mismatch) return;
      ++out.families_checked;
      compare(make_family(a, {x}));
    });
    if (out.mismatch) return out;
  }
  out.ok = true;
  if (out.detail.empty())
    out.detail = "commutes on " + std::to_string(out.families_checked) + " families";
  return out;
}

AlphaS build_alpha_S(const Csm& csm, VerifyMode mode, std::uint64_t samples, std::uint64_t seed,
                     unsigned diagram_full_sweep_max) {
  const CsmDomain& dom = csm.domain();
  if (dom.size() > 5)
    throw input_error("the limit construction supports |S| up to 5 (2^|S| atoms)");
  if (!csm.is_valid_csm())
    throw axiom_breach("the mapping fails conditions (a)-(e); verify it before building α_S");

  const SMask full = dom.full_mask();
  for (SMask a = 0; a <= full; ++a) {
    const auto check = check_decomposition(csm, a);
    if (!check.ok)
      throw axiom_breach("unit-decomposition check failed at A=" + dom.subset_str(a) + ": " +
                         check.detail);
  }
  for (SMask a = 0; a <= full; ++a) {
    const SMask rest = full & ~a;
    bool bad = false;
    std::string why;
    for_each_submask(rest, [&](SMask extra) {
      if (bad) return;
      const auto check = check_diagram(csm, a, a | extra, diagram_full_sweep_max);
      if (!check.ok) {
        bad = true;
        why = "diagram-commutation check failed at A=" + dom.subset_str(a) + " ⊆ B=" +
              dom.subset_str(a | extra) + ": " + check.detail;
      }
    });
    if (bad) throw axiom_breach(why);
  }

  std::vector<Element> atoms;
  for (unsigned j = 0; j < subset_count(full); ++j)
    atoms.push_back(D(csm, local_to_global(j, full), full));
  Observable alpha(std::move(atoms));

  const auto obs_check = verify_observable(alpha, mode, samples, seed);
  if (!obs_check.ok)
    throw axiom_breach("observable check failed on the limit algebra: " + obs_check.detail);

  CoexistenceCertificate cert;
  cert.boolean_atoms = subset_count(full);
  cert.decomposition_ok = true;
  cert.diagram_ok = true;
  cert.observable_ok = true;
  for (unsigned i = 0; i < dom.size(); ++i) {
    cert.s_names.push_back(dom.at(i).str());
    const SMask single = SMask{1} << i;
    // the witness family over {a} containing only {a}, embedded up to S
    const SubsetFamily fam = g_embed(SubsetFamily{single, 0b10}, full);
    std::uint64_t mask = 0;
    for (SMask x : family_members(fam)) mask |= std::uint64_t{1} << global_to_local(x, full);
    const Element got = alpha.eval_checked(mask);
    if (!(got == dom.at(i)))
      throw axiom_breach("range-witness check failed for " + dom.at(i).str() + ": α evaluates to " +
                         got.str());
    cert.witnesses.push_back({dom.at(i), fam});
  }

  return AlphaS{std::move(alpha), std::move(cert)};
}

}  // namespace coex
