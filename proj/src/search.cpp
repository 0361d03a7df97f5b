#include "coex/search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coex/csm_verify.hpp"

namespace coex {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;
  bool expired() const { return at && Clock::now() > *at; }
};

Deadline make_deadline(const SearchBudget& budget) {
  Deadline d;
  if (budget.time_limit) d.at = Clock::now() + *budget.time_limit;
  return d;
}

/// Table-search constraint: an (in)equality between up to four entries,
/// checked once all referenced entries are assigned.
struct Constraint {
  enum class Kind { Leq, DiffEq } kind = Kind::Leq;
  // Leq: value(lo) ≤ value(hi).
  // DiffEq: value(l1) ⊖ value(l2) == value(r1) ⊖ value(r2), both defined.
  std::uint32_t lo = 0, hi = 0;
  std::uint32_t l1 = 0, l2 = 0, r1 = 0, r2 = 0;
  const char* axiom = "";
};

struct TableSearch {
  const TableEffectAlgebra& alg;
  CsmDomain domain;
  unsigned n_elems;
  unsigned n_vars;  // 4^|S| table entries
  std::vector<std::uint32_t> order;       // variable index -> entry (U * 2^n + V)
  std::vector<std::uint32_t> depth_of;    // entry -> position in `order`
  std::vector<int> forced;                // entry -> forced element index or -1
  std::vector<std::vector<Constraint>> by_trigger;  // checked when this depth is assigned
  std::vector<int> value;                 // entry -> assigned element index or -1

  // precomputed algebra relations
  std::vector<char> le;                        // i*n+j: element i ≤ element j
  std::vector<std::optional<std::size_t>> diff;  // i*n+j: i ⊖ j when defined

  TableSearch(const std::shared_ptr<const TableEffectAlgebra>& a, CsmDomain dom)
      : alg(*a), domain(std::move(dom)) {
    n_elems = static_cast<unsigned>(alg.element_count());
    const unsigned n = domain.size();
    n_vars = 1u << (2 * n);
    value.assign(n_vars, -1);
    forced.assign(n_vars, -1);

    le.assign(static_cast<std::size_t>(n_elems) * n_elems, 0);
    diff.assign(static_cast<std::size_t>(n_elems) * n_elems, std::nullopt);
    for (unsigned i = 0; i < n_elems; ++i)
      for (unsigned j = 0; j < n_elems; ++j) {
        const Element ei = alg.element_at(i), ej = alg.element_at(j);
        le[i * n_elems + j] = alg.leq(ei, ej) ? 1 : 0;
        if (auto d = alg.ominus(ei, ej)) diff[i * n_elems + j] = d->index();
      }

    // assignment order: (|U| + |V|, U, V) increasing
    order.resize(n_vars);
    for (std::uint32_t e = 0; e < n_vars; ++e) order[e] = e;
    const auto full = domain.full_mask();
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
      const SMask ux = x >> n, vx = x & full, uy = y >> n, vy = y & full;
      const auto kx = std::tuple(mask_size(ux) + mask_size(vx), ux, vx);
      const auto ky = std::tuple(mask_size(uy) + mask_size(vy), uy, vy);
      return kx < ky;
    });
    depth_of.assign(n_vars, 0);
    for (std::uint32_t i = 0; i < n_vars; ++i) depth_of[order[i]] = i;
    by_trigger.assign(n_vars, {});
  }

  std::uint32_t entry(SMask u, SMask v) const { return (u << domain.size()) | v; }

  /// Returns false when the force conflicts with an earlier one, which
  /// proves nonexistence under the constraint set.
  bool force(std::uint32_t e, std::size_t element_index) {
    if (forced[e] >= 0 && forced[e] != static_cast<int>(element_index)) return false;
    forced[e] = static_cast<int>(element_index);
    return true;
  }

  void add(Constraint cons) {
    std::uint32_t trigger = 0;
    const auto consider = [&](std::uint32_t e) { trigger = std::max(trigger, depth_of[e]); };
    if (cons.kind == Constraint::Kind::Leq) {
      consider(cons.lo);
      consider(cons.hi);
    } else {
      consider(cons.l1);
      consider(cons.l2);
      consider(cons.r1);
      consider(cons.r2);
    }
    by_trigger[trigger].push_back(cons);
  }

  bool satisfied(const Constraint& cons) const {
    if (cons.kind == Constraint::Kind::Leq)
      return le[static_cast<std::size_t>(value[cons.lo]) * n_elems + value[cons.hi]] != 0;
    const auto& lhs = diff[static_cast<std::size_t>(value[cons.l1]) * n_elems + value[cons.l2]];
    const auto& rhs = diff[static_cast<std::size_t>(value[cons.r1]) * n_elems + value[cons.r2]];
    return lhs && rhs && *lhs == *rhs;
  }
};

/// Shared DFS over table entries with per-depth constraint checks.
SearchOutcome run_table_dfs(TableSearch& search, const SearchBudget& budget, std::uint64_t& nodes) {
  const Deadline deadline = make_deadline(budget);
  std::vector<std::uint32_t> choice(search.n_vars, 0);
  std::uint32_t depth = 0;
  while (true) {
    if (depth == search.n_vars) return SearchOutcome::Found;
    const std::uint32_t e = search.order[depth];
    bool advanced = false;
    for (std::uint32_t cand = choice[depth]; cand < search.n_elems; ++cand) {
      if (search.forced[e] >= 0 && cand != static_cast<std::uint32_t>(search.forced[e])) continue;
      ++nodes;
      if (nodes > budget.max_nodes) return SearchOutcome::BudgetOut;
      if ((nodes & 0xfff) == 0 && deadline.expired()) return SearchOutcome::BudgetOut;
      search.value[e] = static_cast<int>(cand);
      bool ok = true;
      for (const Constraint& cons : search.by_trigger[depth]) {
        if (!search.satisfied(cons)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        choice[depth] = cand + 1;
        ++depth;
        if (depth < search.n_vars) choice[depth] = 0;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    search.value[e] = -1;
    if (depth == 0) return SearchOutcome::Exhausted;
    --depth;
    search.value[search.order[depth]] = -1;
  }
}

CsmSearchResult run_csm_search(const std::shared_ptr<const TableEffectAlgebra>& algebra,
                               CsmDomain domain, bool strong, const SearchBudget& budget,
                               const WitnessMapping* extend) {
  const auto t0 = Clock::now();
  CsmSearchResult result;

  const auto validity = validate_effect_algebra(*algebra);
  if (!validity.valid())
    throw input_error("search needs a valid effect algebra: " + validity.summary());
  if (domain.size() > 4)
    throw input_error("table search supports |S| up to 4");

  TableSearch search(algebra, domain);
  const CsmDomain& dom = search.domain;
  const unsigned n = dom.size();
  const SMask full = dom.full_mask();
  const SMask unit = dom.unit_mask();

  bool consistent = true;
  // (c): ⟨U|∅⟩ = 0
  for (SMask u = 0; u <= full && consistent; ++u)
    consistent = search.force(search.entry(u, 0), algebra->zero_index());
  // (d): ⟨∅|{c}⟩ = c
  for (unsigned i = 0; i < n && consistent; ++i)
    consistent = search.force(search.entry(0, SMask{1} << i), dom.at(i).index());
  // derived from (c), (d), (e): ⟨{c}|{1}⟩ = c, sound to fix in every solution
  for (unsigned i = 0; i < n && consistent; ++i)
    consistent = search.force(search.entry(SMask{1} << i, unit), dom.at(i).index());
  // extension constraint: ⟨X|{1}⟩ = β(X)
  if (extend) {
    for (SMask x = 0; x <= full && consistent; ++x)
      consistent = search.force(search.entry(x, unit), extend->value(x).index());
  }
  if (!consistent) {
    result.outcome = SearchOutcome::Exhausted;
    result.note = "forced entries conflict; no table satisfies the constraints";
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    return result;
  }

  // (a) one-step inclusions V ⊆ V ∪ {d}; the general case follows by
  // transitivity of the order
  for (SMask u = 0; u <= full; ++u)
    for (SMask v = 0; v <= full; ++v)
      for (unsigned d = 0; d < n; ++d) {
        const SMask dbit = SMask{1} << d;
        if (v & dbit) continue;
        Constraint cons;
        cons.kind = Constraint::Kind::Leq;
        cons.lo = search.entry(u, v);
        cons.hi = search.entry(u, v | dbit);
        cons.axiom = "(a)";
        search.add(cons);
      }
  // (b)
  for (SMask u = 0; u <= full; ++u)
    for (SMask v = 0; v <= full; ++v) {
      if (v == unit) continue;
      Constraint cons;
      cons.kind = Constraint::Kind::Leq;
      cons.lo = search.entry(u, v);
      cons.hi = search.entry(u, unit);
      cons.axiom = "(b)";
      search.add(cons);
    }
  // (e), and (e*) when searching for a strong mapping
  std::set<std::array<std::uint32_t, 4>> seen;
  for (SMask u = 0; u <= full; ++u)
    for (SMask v = 0; v <= full; ++v)
      for (unsigned ci = 0; ci < n; ++ci) {
        const SMask cbit = SMask{1} << ci;
        if (!strong && ((u | v) & cbit)) continue;
        Constraint cons;
        cons.kind = Constraint::Kind::DiffEq;
        cons.l1 = search.entry(u | cbit, unit);
        cons.l2 = search.entry(u | cbit, v);
        cons.r1 = search.entry(u, v | cbit);
        cons.r2 = search.entry(u, v);
        cons.axiom = strong ? "(e*)" : "(e)";
        if (!seen.insert({cons.l1, cons.l2, cons.r1, cons.r2}).second) continue;
        search.add(cons);
      }

  result.outcome = run_table_dfs(search, budget, result.nodes);
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);

  switch (result.outcome) {
    case SearchOutcome::Found: {
      std::vector<Element> entries;
      entries.reserve(search.n_vars);
      for (SMask u = 0; u <= full; ++u)
        for (SMask v = 0; v <= full; ++v)
          entries.push_back(algebra->element_at(static_cast<std::size_t>(search.value[search.entry(u, v)])));
      CsmPtr csm = csm_table(dom, std::move(entries));
      const AxiomReport check = strong ? verify_all(*csm) : verify_csm(*csm);
      if (!check.csm_ok() || (strong && !check.strong_ok()))
        throw std::logic_error("search produced a table that fails re-verification: " + check.summary());
      result.csm = std::move(csm);
      result.note = "solution re-verified against the axioms";
      break;
    }
    case SearchOutcome::Exhausted:
      result.note = "search space exhausted; no table over this algebra satisfies the constraints";
      break;
    case SearchOutcome::BudgetOut:
      result.note = "budget exceeded; result inconclusive";
      break;
  }
  return result;
}

}  // namespace

std::string to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::Exhausted: return "exhausted";
    case SearchOutcome::BudgetOut: return "budget-out";
  }
  return "unknown";
}

CsmSearchResult search_csm(const std::shared_ptr<const TableEffectAlgebra>& algebra,
                           std::vector<Element> s, bool strong, const SearchBudget& budget) {
  if (!algebra) throw input_error("null algebra");
  CsmDomain domain = CsmDomain::make(algebra, std::move(s));
  return run_csm_search(algebra, std::move(domain), strong, budget, nullptr);
}

CsmSearchResult csm_extending_witness(const WitnessMapping& beta, const SearchBudget& budget) {
  auto algebra = std::dynamic_pointer_cast<const TableEffectAlgebra>(beta.domain().algebra_ptr());
  if (!algebra)
    throw input_error("extension search needs an explicit table algebra");
  if (!verify_witness(beta).ok())
    throw input_error("extension search needs a witness mapping that passes (A1)-(A3)");
  return run_csm_search(algebra, beta.domain(), /*strong=*/false, budget, &beta);
}

WitnessSearchResult search_witness(const std::shared_ptr<const TableEffectAlgebra>& algebra,
                                   std::vector<Element> s, const SearchBudget& budget) {
  const auto t0 = Clock::now();
  if (!algebra) throw input_error("null algebra");
  const auto validity = validate_effect_algebra(*algebra);
  if (!validity.valid())
    throw input_error("search needs a valid effect algebra: " + validity.summary());
  const IntervalStructure* group = algebra->interval();
  if (!group)
    throw input_error("witness search needs an interval embedding on the algebra");

  WitnessSearchResult result;
  CsmDomain dom = CsmDomain::make(algebra, std::move(s));
  if (dom.size() > 4) throw input_error("witness search supports |S| up to 4");
  const unsigned n = dom.size();
  const SMask full = dom.full_mask();
  const std::uint32_t n_vars = 1u << n;
  const unsigned n_elems = static_cast<unsigned>(algebra->element_count());

  // embeddings of every algebra element
  std::vector<GroupVector> coords;
  coords.reserve(n_elems);
  for (unsigned i = 0; i < n_elems; ++i) coords.push_back(group->to_group(algebra->element_at(i)));

  // assignment order: (|X|, X) increasing, so every interval [X, A] completes
  // exactly when A is assigned
  std::vector<std::uint32_t> order(n_vars);
  for (std::uint32_t x = 0; x < n_vars; ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::tuple(mask_size(a), a) < std::tuple(mask_size(b), b);
  });

  std::vector<int> forced(n_vars, -1);
  forced[0] = static_cast<int>(algebra->unit_index());  // (A1)
  bool consistent = true;
  for (unsigned i = 0; i < n && consistent; ++i) {       // (A2)
    const SMask single = SMask{1} << i;
    const int want = static_cast<int>(dom.at(i).index());
    if (forced[single] >= 0 && forced[single] != want)
      consistent = false;
    else
      forced[single] = want;
  }
  if (!consistent) {
    result.outcome = SearchOutcome::Exhausted;
    result.note = "forced values conflict";
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    return result;
  }

  std::vector<int> value(n_vars, -1);
  const Deadline deadline = make_deadline(budget);

  // D_β(X, A) over currently assigned values, in the ambient group
  const auto d_beta_assigned = [&](SMask x, SMask a) {
    GroupVector acc(group->group_dim(), Rational(0));
    for_each_submask(a & ~x, [&](SMask extra) {
      const GroupVector& term = coords[static_cast<std::size_t>(value[x | extra])];
      if (mask_size(extra) % 2 == 0)
        acc = gv_add(acc, term);
      else
        acc = gv_sub(acc, term);
    });
    return acc;
  };

  std::vector<std::uint32_t> choice(n_vars, 0);
  std::uint32_t depth = 0;
  SearchOutcome outcome = SearchOutcome::BudgetOut;
  while (true) {
    if (depth == n_vars) {
      outcome = SearchOutcome::Found;
      break;
    }
    const std::uint32_t a = order[depth];
    bool advanced = false;
    bool out_of_budget = false;
    for (std::uint32_t cand = choice[depth]; cand < n_elems; ++cand) {
      if (forced[a] >= 0 && cand != static_cast<std::uint32_t>(forced[a])) continue;
      ++result.nodes;
      if (result.nodes > budget.max_nodes || ((result.nodes & 0xfff) == 0 && deadline.expired())) {
        out_of_budget = true;
        break;
      }
      value[a] = static_cast<int>(cand);
      bool ok = true;
      for_each_submask(a, [&](SMask x) {
        if (ok && !gv_nonnegative(d_beta_assigned(x, a))) ok = false;
      });
      if (ok) {
        choice[depth] = cand + 1;
        ++depth;
        if (depth < n_vars) choice[depth] = 0;
        advanced = true;
        break;
      }
    }
    if (out_of_budget) {
      outcome = SearchOutcome::BudgetOut;
      break;
    }
    if (advanced) continue;
    value[a] = -1;
    if (depth == 0) {
      outcome = SearchOutcome::Exhausted;
      break;
    }
    --depth;
    value[order[depth]] = -1;
  }

  result.outcome = outcome;
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  switch (outcome) {
    case SearchOutcome::Found: {
      std::vector<Element> values;
      values.reserve(n_vars);
      for (SMask x = 0; x <= full; ++x)
        values.push_back(algebra->element_at(static_cast<std::size_t>(value[x])));
      WitnessMapping beta(dom, std::move(values));
      if (!verify_witness(beta).ok())
        throw std::logic_error("search produced a witness that fails re-verification");
      result.witness = std::move(beta);
      result.note = "witness re-verified against (A1)-(A3)";
      break;
    }
    case SearchOutcome::Exhausted:
      result.note = "search space exhausted; no witness mapping over this algebra";
      break;
    case SearchOutcome::BudgetOut:
      result.note = "budget exceeded; result inconclusive";
      break;
  }
  return result;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::uint64_t search_instance_hash(const TableEffectAlgebra& algebra,
                                   const std::vector<Element>& s, std::string_view query) {
  std::string text;
  for (std::size_t i = 0; i < algebra.element_count(); ++i) {
    text += algebra.id_of(i);
    text += ';';
  }
  for (std::size_t i = 0; i < algebra.element_count(); ++i)
    for (std::size_t j = 0; j < algebra.element_count(); ++j)
      if (auto k = algebra.sum_entry(i, j)) {
        text += std::to_string(i) + "+" + std::to_string(j) + "=" + std::to_string(*k) + ";";
      }
  text += "zero=" + std::to_string(algebra.zero_index()) + ";unit=" +
          std::to_string(algebra.unit_index()) + "|S=";
  for (const Element& e : s) {
    text += e.str();
    text += ',';
  }
  text += '|';
  text += query;
  return fnv1a64(text);
}

}  // namespace coex
