#include "coex/csm_verify.hpp"

#include <sstream>

namespace coex {

struct CsmCacheAccess {
  static std::optional<bool>& valid(const Csm& csm) { return csm.valid_cache_; }
  static std::optional<bool>& strong(const Csm& csm) { return csm.strong_cache_; }
};

namespace {

std::string set_pair(const CsmDomain& d, SMask u, SMask v) {
  return "U=" + d.subset_str(u) + ", V=" + d.subset_str(v);
}

/// Value table plus shared sweep helpers.
struct Sweep {
  const Csm& csm;
  const CsmDomain& dom;
  SMask full;
  std::vector<Element> table;

  explicit Sweep(const Csm& m)
      : csm(m), dom(m.domain()), full(m.domain().full_mask()), table(materialize(m)) {}

  const Element& at(SMask u, SMask v) const { return table[table_index(dom, u, v)]; }

  void check_identity_e(AxiomStatus& status, const char* axiom, bool all_c) const {
    status.checked = true;
    const unsigned n = dom.size();
    for (SMask u = 0; u <= full; ++u) {
      for (SMask v = 0; v <= full; ++v) {
        for (unsigned ci = 0; ci < n; ++ci) {
          const SMask cbit = SMask{1} << ci;
          if (!all_c && ((u | v) & cbit)) continue;
          const Element& l1 = at(u | cbit, dom.unit_mask());
          const Element& l2 = at(u | cbit, v);
          const Element& r1 = at(u, v | cbit);
          const Element& r2 = at(u, v);
          const auto lhs = ominus(l1, l2);
          const auto rhs = ominus(r1, r2);
          if (lhs && rhs && *lhs == *rhs) continue;
          CsmViolation viol;
          viol.axiom = axiom;
          viol.u = u;
          viol.v = v;
          viol.c = ci;
          viol.lhs = lhs;
          viol.rhs = rhs;
          std::ostringstream msg;
          msg << axiom << " fails at " << set_pair(dom, u, v) << ", c=" << dom.at(ci).str() << ": ";
          if (!lhs)
            msg << "left difference ⟨U∪{c}|{1}⟩⊖⟨U∪{c}|V⟩ undefined";
          else if (!rhs)
            msg << "right difference ⟨U|V∪{c}⟩⊖⟨U|V⟩ undefined";
          else
            msg << "left side " << lhs->str() << " != right side " << rhs->str();
          viol.message = msg.str();
          status.violations.push_back(std::move(viol));
        }
      }
    }
  }
};

}  // namespace

std::vector<const CsmViolation*> AxiomReport::all_violations() const {
  std::vector<const CsmViolation*> out;
  for (const AxiomStatus* s : {&a, &b, &c, &d, &e, &estar})
    for (const CsmViolation& v : s->violations) out.push_back(&v);
  return out;
}

std::string AxiomReport::summary() const {
  std::ostringstream out;
  bool first = true;
  const std::pair<const char*, const AxiomStatus*> entries[] = {
      {"(a)", &a}, {"(b)", &b}, {"(c)", &c}, {"(d)", &d}, {"(e)", &e}, {"(e*)", &estar}};
  for (const auto& [label, status] : entries) {
    if (!status->checked) continue;
    if (!first) out << ", ";
    out << label << (status->holds() ? " holds" : " VIOLATED");
    first = false;
  }
  if (unit_adjoined) out << " [1 was adjoined to S]";
  return out.str();
}

AxiomReport verify_csm(const Csm& csm) {
  AxiomReport report;
  report.unit_adjoined = csm.domain().unit_adjoined();
  const Sweep sweep(csm);
  const CsmDomain& dom = csm.domain();
  const SMask full = dom.full_mask();

  // (a) monotone in V: single-step inclusions suffice, the rest follows by
  // transitivity of ≤, but report the direct pair for readability.
  report.a.checked = true;
  for (SMask u = 0; u <= full; ++u) {
    for (SMask v2 = 0; v2 <= full; ++v2) {
      for_each_submask(v2, [&](SMask v1) {
        if (v1 == v2) return;
        if (leq(sweep.at(u, v1), sweep.at(u, v2))) return;
        CsmViolation viol;
        viol.axiom = "(a)";
        viol.u = u;
        viol.v = v1;
        viol.v2 = v2;
        viol.lhs = sweep.at(u, v1);
        viol.rhs = sweep.at(u, v2);
        viol.message = "(a) fails at U=" + dom.subset_str(u) + ": ⟨U|" + dom.subset_str(v1) +
                       "⟩ = " + viol.lhs->str() + " is not below ⟨U|" + dom.subset_str(v2) +
                       "⟩ = " + viol.rhs->str();
        report.a.violations.push_back(std::move(viol));
      });
    }
  }

  // (b) every value is below ⟨U|{1}⟩
  report.b.checked = true;
  for (SMask u = 0; u <= full; ++u) {
    const Element& cap = sweep.at(u, dom.unit_mask());
    for (SMask v = 0; v <= full; ++v) {
      if (leq(sweep.at(u, v), cap)) continue;
      CsmViolation viol;
      viol.axiom = "(b)";
      viol.u = u;
      viol.v = v;
      viol.lhs = sweep.at(u, v);
      viol.rhs = cap;
      viol.message = "(b) fails at " + set_pair(dom, u, v) + ": value " + viol.lhs->str() +
                     " is not below ⟨U|{1}⟩ = " + cap.str();
      report.b.violations.push_back(std::move(viol));
    }
  }

  // (c) ⟨U|∅⟩ = 0
  report.c.checked = true;
  const Element zero = dom.algebra().zero();
  for (SMask u = 0; u <= full; ++u) {
    if (sweep.at(u, 0) == zero) continue;
    CsmViolation viol;
    viol.axiom = "(c)";
    viol.u = u;
    viol.lhs = sweep.at(u, 0);
    viol.message = "(c) fails: ⟨" + dom.subset_str(u) + "|∅⟩ = " + viol.lhs->str() + " != 0";
    report.c.violations.push_back(std::move(viol));
  }

  // (d) ⟨∅|{c}⟩ = c
  report.d.checked = true;
  for (unsigned ci = 0; ci < dom.size(); ++ci) {
    const Element& got = sweep.at(0, SMask{1} << ci);
    if (got == dom.at(ci)) continue;
    CsmViolation viol;
    viol.axiom = "(d)";
    viol.v = SMask{1} << ci;
    viol.c = ci;
    viol.lhs = got;
    viol.rhs = dom.at(ci);
    viol.message = "(d) fails: ⟨∅|{" + dom.at(ci).str() + "}⟩ = " + got.str();
    report.d.violations.push_back(std::move(viol));
  }

  // (e) difference identity for c outside U ∪ V
  sweep.check_identity_e(report.e, "(e)", /*all_c=*/false);

  CsmCacheAccess::valid(csm) = report.csm_ok();
  return report;
}

AxiomReport verify_strong(const Csm& csm) {
  AxiomReport report;
  report.unit_adjoined = csm.domain().unit_adjoined();
  const Sweep sweep(csm);
  sweep.check_identity_e(report.estar, "(e*)", /*all_c=*/true);
  CsmCacheAccess::strong(csm) = report.strong_ok();
  return report;
}

AxiomReport verify_all(const Csm& csm) {
  AxiomReport report = verify_csm(csm);
  const AxiomReport strong = verify_strong(csm);
  report.estar = strong.estar;
  return report;
}

bool Csm::is_valid_csm() const {
  if (!valid_cache_) verify_csm(*this);
  return *valid_cache_;
}

bool Csm::is_strong_csm() const {
  if (!strong_cache_) verify_strong(*this);
  return *strong_cache_;
}

namespace {

Element reconstruct_raw(const Csm& csm, SMask u, SMask v) {
  if ((u & v) != 0) return D(csm, u, u);
  std::vector<Element> terms;
  for_each_submask(v, [&](SMask y) {
    if (y == 0) return;
    terms.push_back(D(csm, u | y, u | v));
  });
  const auto sum = big_oplus(csm.domain().algebra(), terms);
  if (!sum)
    throw axiom_breach("reconstruction sum over D(U∪Y, U∪V) is not orthogonal at U=" +
                       csm.domain().subset_str(u) + ", V=" + csm.domain().subset_str(v));
  return *sum;
}

}  // namespace

Element reconstruct_from_D(const Csm& csm, SMask u, SMask v) {
  if (!csm.is_strong_csm())
    throw contract_error("reconstruction from D requires a strong mapping; (e*) fails here");
  return reconstruct_raw(csm, u, v);
}

std::vector<PropertyCheck> strong_property_report(const Csm& csm) {
  std::vector<PropertyCheck> out;
  const CsmDomain& dom = csm.domain();
  const SMask full = dom.full_mask();
  const std::vector<Element> table = materialize(csm);
  const auto at = [&](SMask u, SMask v) -> const Element& { return table[table_index(dom, u, v)]; };
  const auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };

  {
    bool ok = true;
    std::string detail = "holds for all pairs";
    for (SMask u = 0; u <= full && ok; ++u)
      for (SMask v = 0; v <= full && ok; ++v) {
        if ((u & v) == 0) continue;
        if (!(at(u, v) == at(u, dom.unit_mask()))) {
          ok = false;
          detail = "fails at " + set_pair(dom, u, v);
        }
      }
    add("non-disjoint collapse: U∩V≠∅ ⇒ ⟨U|V⟩ = ⟨U|{1}⟩", ok, detail);
  }

  {
    bool ok = true;
    std::string detail = "holds for all U, c";
    for (SMask u = 0; u <= full && ok; ++u)
      for (unsigned ci = 0; ci < dom.size() && ok; ++ci) {
        const SMask cbit = SMask{1} << ci;
        if (!(at(u | cbit, dom.unit_mask()) == at(u, cbit))) {
          ok = false;
          detail = "fails at U=" + dom.subset_str(u) + ", c=" + dom.at(ci).str();
        }
      }
    add("adjoin-to-left identity: ⟨U∪{c}|{1}⟩ = ⟨U|{c}⟩", ok, detail);
  }

  {
    bool ok = true;
    std::string detail = "agrees on every pair";
    for (SMask u = 0; u <= full && ok; ++u)
      for (SMask v = 0; v <= full && ok; ++v) {
        try {
          if (!(reconstruct_raw(csm, u, v) == at(u, v))) {
            ok = false;
            detail = "differs at " + set_pair(dom, u, v);
          }
        } catch (const axiom_breach& e) {
          ok = false;
          detail = e.what();
        }
      }
    add("reconstruction from D agrees with direct evaluation", ok, detail);
  }

  {
    bool ok = true;
    std::string detail = "holds for all U1 ⊆ U2, V";
    for (SMask u2 = 0; u2 <= full && ok; ++u2)
      for_each_submask(u2, [&](SMask u1) {
        if (!ok) return;
        for (SMask v = 0; v <= full; ++v)
          if (!leq(at(u2, v), at(u1, v))) {
            ok = false;
            detail = "fails at U1=" + dom.subset_str(u1) + ", U2=" + dom.subset_str(u2) +
                     ", V=" + dom.subset_str(v);
            return;
          }
      });
    add("antitone in U: U1 ⊆ U2 ⇒ ⟨U1|V⟩ ≥ ⟨U2|V⟩", ok, detail);
  }

  {
    bool ok = true;
    std::string detail = "holds for all U";
    for (SMask u = 0; u <= full && ok; ++u)
      for (unsigned i = 0; i < dom.size() && ok; ++i) {
        if (!(u >> i & 1u)) continue;
        if (!leq(at(u, dom.unit_mask()), dom.at(i))) {
          ok = false;
          detail = "fails at U=" + dom.subset_str(u) + ", u=" + dom.at(i).str();
        }
      }
    add("⟨U|{1}⟩ is a lower bound of U", ok, detail);
  }

  {
    bool ok = true;
    std::string detail = "holds for all U, V";
    for (SMask u = 0; u <= full && ok; ++u)
      for (SMask v = 0; v <= full && ok; ++v)
        for (unsigned i = 0; i < dom.size(); ++i) {
          if (!(u >> i & 1u)) continue;
          if (!leq(at(u, v), dom.at(i))) {
            ok = false;
            detail = "fails at " + set_pair(dom, u, v) + ", u=" + dom.at(i).str();
            break;
          }
        }
    add("⟨U|V⟩ is a lower bound of U", ok, detail);
  }

  {
    bool ok = true;
    std::string detail = "holds for all V";
    for (SMask v = 0; v <= full && ok; ++v)
      for (unsigned i = 0; i < dom.size() && ok; ++i) {
        if (!(v >> i & 1u)) continue;
        if (!leq(dom.at(i), at(0, v))) {
          ok = false;
          detail = "fails at V=" + dom.subset_str(v) + ", v=" + dom.at(i).str();
        }
      }
    add("⟨∅|V⟩ is an upper bound of V", ok, detail);
  }

  return out;
}

}  // namespace coex
