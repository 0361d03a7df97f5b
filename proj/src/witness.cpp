#include "coex/witness.hpp"

#include <sstream>

namespace coex {

WitnessMapping::WitnessMapping(CsmDomain domain, std::vector<Element> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  interval_ = domain_.algebra().interval();
  if (!interval_)
    throw input_error("witness mappings need an interval effect algebra; " +
                      domain_.algebra().name() + " exposes no ambient group");
  const std::size_t expected = std::size_t{1} << domain_.size();
  if (values_.size() != expected)
    throw input_error("witness mapping needs " + std::to_string(expected) + " values, got " +
                      std::to_string(values_.size()));
  for (const Element& e : values_)
    if (e.algebra_ptr().get() != domain_.algebra_ptr().get())
      throw input_error("witness value from a different algebra");
}

GroupVector D_beta(const WitnessMapping& beta, SMask x, SMask a) {
  if ((x & ~a) || (a & ~beta.domain().full_mask()))
    throw input_error("D_beta requires X ⊆ A ⊆ S");
  GroupVector acc(beta.group().group_dim(), Rational(0));
  for_each_submask(a & ~x, [&](SMask extra) {
    const GroupVector term = beta.group().to_group(beta.value(x | extra));
    // sign is (-1)^(|X|+|Z|) = (-1)^|Z∖X|
    if (mask_size(extra) % 2 == 0)
      acc = gv_add(acc, term);
    else
      acc = gv_sub(acc, term);
  });
  return acc;
}

GroupVector D_beta_recursive(const WitnessMapping& beta, SMask x, SMask a) {
  if ((x & ~a) || (a & ~beta.domain().full_mask()))
    throw input_error("D_beta requires X ⊆ A ⊆ S");
  if (x == a) return beta.group().to_group(beta.value(x));
  const SMask rest = a & ~x;
  const SMask cbit = rest & (~rest + 1);
  return gv_sub(D_beta_recursive(beta, x, a & ~cbit), D_beta_recursive(beta, x | cbit, a));
}

std::string WitnessReport::summary() const {
  if (ok())
    return "witness mapping: (A1), (A2) and (A3) hold on " + std::to_string(pairs_checked) +
           " comparable pairs";
  std::ostringstream out;
  out << violations.size() << " violation(s); first: [" << violations.front().axiom << "] "
      << violations.front().message;
  return out.str();
}

WitnessReport verify_witness(const WitnessMapping& beta) {
  WitnessReport report;
  const CsmDomain& dom = beta.domain();

  if (!(beta.value(0) == dom.algebra().unit()))
    report.violations.push_back({"(A1)", 0, 0, "β(∅) = " + beta.value(0).str() + " != 1"});

  for (unsigned i = 0; i < dom.size(); ++i) {
    const SMask single = SMask{1} << i;
    if (!(beta.value(single) == dom.at(i)))
      report.violations.push_back(
          {"(A2)", single, single,
           "β({" + dom.at(i).str() + "}) = " + beta.value(single).str()});
  }

  for (SMask a = 0; a <= dom.full_mask(); ++a) {
    for_each_submask(a, [&](SMask x) {
      ++report.pairs_checked;
      const GroupVector d = D_beta(beta, x, a);
      if (!gv_nonnegative(d))
        report.violations.push_back({"(A3)", x, a,
                                     "D_β(" + dom.subset_str(x) + ", " + dom.subset_str(a) +
                                         ") = " + format_group_vector(d) + " has a negative entry"});
    });
  }
  return report;
}

WitnessMapping witness_from_csm(const Csm& csm) {
  const CsmDomain& dom = csm.domain();
  if (!dom.algebra().interval())
    throw input_error("the mapping's codomain " + dom.algebra().name() +
                      " exposes no ambient group; witness extraction needs an interval algebra");
  std::vector<Element> values;
  values.reserve(std::size_t{1} << dom.size());
  for (SMask x = 0; x <= dom.full_mask(); ++x) values.push_back(csm.eval(x, dom.unit_mask()));
  return WitnessMapping(dom, std::move(values));
}

DEqualityCheck check_D_equality(const Csm& csm, const WitnessMapping& beta) {
  DEqualityCheck out;
  if (csm.domain().size() != beta.domain().size())
    throw input_error("the mapping and the witness have different index sets");
  const IntervalStructure& group = beta.group();
  for (SMask a = 0; a <= csm.domain().full_mask(); ++a) {
    for_each_submask(a, [&](SMask x) {
      if (out.mismatch) return;
      ++out.pairs_checked;
      const GroupVector lhs = group.to_group(D(csm, x, a));
      const GroupVector rhs = D_beta(beta, x, a);
      if (lhs != rhs) {
        out.mismatch = {x, a};
        out.detail = "D and D_β differ at X=" + csm.domain().subset_str(x) + ", A=" +
                     csm.domain().subset_str(a) + ": " + format_group_vector(lhs) + " vs " +
                     format_group_vector(rhs);
      }
    });
    if (out.mismatch) break;
  }
  out.ok = !out.mismatch;
  if (out.ok) out.detail = "D = D_β on all " + std::to_string(out.pairs_checked) + " comparable pairs";
  return out;
}

}  // namespace coex
