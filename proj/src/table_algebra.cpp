#include "coex/table_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace coex {

namespace {

std::string pair_str(const std::string& a, const std::string& b) {
  return "(" + a + ", " + b + ")";
}

}  // namespace

std::shared_ptr<TableEffectAlgebra> TableEffectAlgebra::create(TableAlgebraSpec spec) {
  auto alg = std::shared_ptr<TableEffectAlgebra>(new TableEffectAlgebra());
  alg->spec_ = spec;
  alg->ids_ = spec.elements;
  if (alg->ids_.empty()) throw input_error("table algebra needs at least one element");
  for (std::size_t i = 0; i < alg->ids_.size(); ++i) {
    if (!alg->index_.emplace(alg->ids_[i], i).second)
      throw input_error("duplicate element identifier \"" + alg->ids_[i] + "\"");
  }
  const auto resolve = [&](const std::string& id) -> std::size_t {
    auto it = alg->index_.find(id);
    if (it == alg->index_.end())
      throw input_error("dangling element identifier \"" + id + "\" in sum table");
    return it->second;
  };
  alg->zero_ = resolve(spec.zero);
  alg->unit_ = resolve(spec.unit);
  const std::size_t n = alg->ids_.size();
  alg->table_.assign(n * n, std::nullopt);
  for (const auto& row : spec.sums) {
    const std::size_t a = resolve(row[0]);
    const std::size_t b = resolve(row[1]);
    const std::size_t c = resolve(row[2]);
    auto& cell = alg->table_[a * n + b];
    if (cell && *cell != c)
      throw input_error("conflicting sum entries for " + pair_str(row[0], row[1]));
    cell = c;
  }
  if (!spec.embedding.empty()) {
    alg->coords_.resize(n);
    std::size_t dim = 0;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      auto it = spec.embedding.find(alg->ids_[i]);
      if (it == spec.embedding.end())
        throw input_error("interval embedding misses element \"" + alg->ids_[i] + "\"");
      if (first) {
        dim = it->second.size();
        first = false;
      } else if (it->second.size() != dim) {
        throw input_error("interval embedding dimensions differ");
      }
      alg->coords_[i] = it->second;
    }
    if (dim == 0) throw input_error("interval embedding must have positive dimension");
  }
  return alg;
}

std::optional<std::size_t> TableEffectAlgebra::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element TableEffectAlgebra::element(std::string_view id) const {
  auto i = index_of(id);
  if (!i) throw input_error("unknown element \"" + std::string(id) + "\" in " + name());
  return index_element(*i);
}

std::optional<std::size_t> TableEffectAlgebra::sum_entry(std::size_t a, std::size_t b) const {
  return table_.at(a * ids_.size() + b);
}

Element TableEffectAlgebra::element_at(std::size_t i) const {
  if (i >= ids_.size()) throw input_error("element index out of range");
  return index_element(i);
}

std::string TableEffectAlgebra::describe(const Element& a) const { return ids_.at(a.index()); }

std::string TableEffectAlgebra::name() const {
  return "table algebra (" + std::to_string(ids_.size()) + " elements)";
}

Element TableEffectAlgebra::zero_impl() const { return index_element(zero_); }
Element TableEffectAlgebra::unit_impl() const { return index_element(unit_); }

std::optional<Element> TableEffectAlgebra::oplus_impl(const Element& a, const Element& b) const {
  const auto c = sum_entry(a.index(), b.index());
  if (!c) return std::nullopt;
  return index_element(*c);
}

std::optional<Element> TableEffectAlgebra::ominus_impl(const Element& b, const Element& a) const {
  const std::size_t n = ids_.size();
  const std::size_t ai = a.index(), bi = b.index();
  for (std::size_t c = 0; c < n; ++c) {
    if (table_[ai * n + c] == bi) return index_element(c);
  }
  return std::nullopt;
}

bool TableEffectAlgebra::leq_impl(const Element& a, const Element& b) const {
  return ominus_impl(b, a).has_value();
}

bool TableEffectAlgebra::equal_impl(const Element& a, const Element& b) const {
  return a.index() == b.index();
}

const TableEffectAlgebra::LatticeTables& TableEffectAlgebra::lattice() const {
  if (lattice_cache_) return *lattice_cache_;
  const std::size_t n = ids_.size();
  // leq matrix from the raw table
  std::vector<char> le(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      le[a * n + b] = leq_impl(index_element(a), index_element(b)) ? 1 : 0;

  LatticeTables out;
  out.is_lattice = true;
  out.meet.assign(n * n, 0);
  out.join.assign(n * n, 0);
  for (std::size_t a = 0; a < n && out.is_lattice; ++a) {
    for (std::size_t b = 0; b < n && out.is_lattice; ++b) {
      // greatest lower bound: a maximum of the set of common lower bounds
      std::vector<std::size_t> lower, upper;
      for (std::size_t x = 0; x < n; ++x) {
        if (le[x * n + a] && le[x * n + b]) lower.push_back(x);
        if (le[a * n + x] && le[b * n + x]) upper.push_back(x);
      }
      auto pick_extreme = [&](const std::vector<std::size_t>& cands, bool greatest) -> std::optional<std::size_t> {
        for (std::size_t x : cands) {
          bool extreme = true;
          for (std::size_t y : cands) {
            const bool ok = greatest ? le[y * n + x] : le[x * n + y];
            if (!ok) {
              extreme = false;
              break;
            }
          }
          if (extreme) return x;
        }
        return std::nullopt;
      };
      const auto m = pick_extreme(lower, true);
      const auto j = pick_extreme(upper, false);
      if (!m || !j) {
        out.is_lattice = false;
        break;
      }
      out.meet[a * n + b] = *m;
      out.join[a * n + b] = *j;
    }
  }
  lattice_cache_ = std::move(out);
  return *lattice_cache_;
}

bool TableEffectAlgebra::lattice_ordered() const { return lattice().is_lattice; }

Element TableEffectAlgebra::meet_impl(const Element& a, const Element& b) const {
  return index_element(lattice().meet[a.index() * ids_.size() + b.index()]);
}

Element TableEffectAlgebra::join_impl(const Element& a, const Element& b) const {
  return index_element(lattice().join[a.index() * ids_.size() + b.index()]);
}

const IntervalStructure* TableEffectAlgebra::interval() const {
  return has_embedding() ? static_cast<const IntervalStructure*>(this) : nullptr;
}

std::size_t TableEffectAlgebra::group_dim() const {
  if (!has_embedding()) throw input_error(name() + " carries no interval embedding");
  return coords_.front().size();
}

GroupVector TableEffectAlgebra::to_group(const Element& a) const {
  check_owned(a);
  if (!has_embedding()) throw input_error(name() + " carries no interval embedding");
  return coords_.at(a.index());
}

std::optional<Element> TableEffectAlgebra::from_group(const GroupVector& v) const {
  if (!has_embedding()) throw input_error(name() + " carries no interval embedding");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] == v) return index_element(i);
  return std::nullopt;
}

std::string ValidationReport::summary() const {
  if (valid()) return "valid: (E1)-(E4), cancellativity and the derived partial order all hold";
  std::ostringstream out;
  out << violations.size() << " violation(s); first: [" << violations.front().axiom << "] "
      << violations.front().message;
  return out.str();
}

ValidationReport validate_effect_algebra(const TableEffectAlgebra& alg) {
  ValidationReport report;
  const std::size_t n = alg.element_count();
  const auto id = [&](std::size_t i) { return alg.id_of(i); };
  const auto sum = [&](std::size_t a, std::size_t b) { return alg.sum_entry(a, b); };
  auto add = [&](std::string axiom, std::string witness, std::string message) {
    report.violations.push_back({std::move(axiom), std::move(witness), std::move(message)});
  };

  // (E1) commutativity of the defined entries
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ab = sum(a, b);
      if (!ab) continue;
      const auto ba = sum(b, a);
      if (!ba)
        add("E1", pair_str(id(a), id(b)),
            id(a) + "+" + id(b) + " is defined but " + id(b) + "+" + id(a) + " is not");
      else if (*ab != *ba)
        add("E1", pair_str(id(a), id(b)),
            id(a) + "+" + id(b) + "=" + id(*ab) + " but " + id(b) + "+" + id(a) + "=" + id(*ba));
    }
  }

  // (E2) associativity wherever the left-nested side is defined
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ab = sum(a, b);
      if (!ab) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const auto abc = sum(*ab, c);
        if (!abc) continue;
        const auto bc = sum(b, c);
        const std::string witness = "(" + id(a) + ", " + id(b) + ", " + id(c) + ")";
        if (!bc) {
          add("E2", witness, id(b) + "+" + id(c) + " undefined although (" + id(a) + "+" + id(b) + ")+" + id(c) + " is defined");
          continue;
        }
        const auto a_bc = sum(a, *bc);
        if (!a_bc)
          add("E2", witness, id(a) + "+(" + id(b) + "+" + id(c) + ") undefined");
        else if (*a_bc != *abc)
          add("E2", witness, "the two associations differ: " + id(*abc) + " vs " + id(*a_bc));
      }
    }
  }

  // (E3) unique orthocomplement
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> comps;
    for (std::size_t x = 0; x < n; ++x)
      if (sum(a, x) == alg.unit_index()) comps.push_back(x);
    if (comps.empty())
      add("E3", id(a), "no x with " + id(a) + "+x=" + id(alg.unit_index()));
    else if (comps.size() > 1) {
      std::string list;
      for (auto c : comps) list += (list.empty() ? "" : ", ") + id(c);
      add("E3", id(a), "two or more complements for " + id(a) + ": " + list);
    }
  }

  // (E4) a+1 defined only for a=0
  for (std::size_t a = 0; a < n; ++a) {
    if (a != alg.zero_index() && sum(a, alg.unit_index()))
      add("E4", id(a), id(a) + "+" + id(alg.unit_index()) + " is defined although " + id(a) + " is not " + id(alg.zero_index()));
  }

  // cancellativity (derived, checked explicitly)
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ab = sum(a, b);
      if (!ab) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (sum(a, c) == ab)
          add("CANCEL", "(" + id(a) + ", " + id(b) + ", " + id(c) + ")",
              id(a) + "+" + id(b) + " = " + id(a) + "+" + id(c) + " = " + id(*ab) + " with " + id(b) + " != " + id(c));
      }
    }
  }

  // derived order: partial order with bottom zero and top unit
  std::vector<char> le(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool ok = false;
      for (std::size_t c = 0; c < n && !ok; ++c) ok = sum(a, c) == b;
      le[a * n + b] = ok ? 1 : 0;
    }
  for (std::size_t a = 0; a < n; ++a) {
    if (!le[a * n + a]) add("ORDER", id(a), "reflexivity fails: no c with " + id(a) + "+c=" + id(a));
    if (!le[alg.zero_index() * n + a]) add("ORDER", id(a), "bottom fails: " + id(alg.zero_index()) + " is not below " + id(a));
    if (!le[a * n + alg.unit_index()]) add("ORDER", id(a), "top fails: " + id(a) + " is not below " + id(alg.unit_index()));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && le[a * n + b] && le[b * n + a])
        add("ORDER", pair_str(id(a), id(b)), "antisymmetry fails between " + id(a) + " and " + id(b));
      if (!le[a * n + b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (le[b * n + c] && !le[a * n + c])
          add("ORDER", "(" + id(a) + ", " + id(b) + ", " + id(c) + ")", "transitivity fails");
    }

  return report;
}

std::shared_ptr<TableEffectAlgebra> powerset_algebra(unsigned atom_count) {
  if (atom_count == 0 || atom_count > 16) throw input_error("powerset algebra supports 1..16 atoms");
  const unsigned size = 1u << atom_count;
  TableAlgebraSpec spec;
  auto subset_name = [&](unsigned mask) -> std::string {
    if (mask == 0) return "0";
    if (mask == size - 1) return "1";
    std::string out;
    for (unsigned i = 0; i < atom_count; ++i)
      if (mask & (1u << i)) out += static_cast<char>('a' + i);
    return out;
  };
  for (unsigned m = 0; m < size; ++m) spec.elements.push_back(subset_name(m));
  spec.zero = subset_name(0);
  spec.unit = subset_name(size - 1);
  for (unsigned x = 0; x < size; ++x)
    for (unsigned y = 0; y < size; ++y)
      if ((x & y) == 0) spec.sums.push_back({subset_name(x), subset_name(y), subset_name(x | y)});
  for (unsigned m = 0; m < size; ++m) {
    GroupVector v(atom_count);
    for (unsigned i = 0; i < atom_count; ++i) v[i] = (m >> i) & 1u;
    spec.embedding[subset_name(m)] = std::move(v);
  }
  return TableEffectAlgebra::create(std::move(spec));
}

std::shared_ptr<TableEffectAlgebra> chain_algebra(unsigned order) {
  if (order == 0 || order > 64) throw input_error("chain algebra supports order 1..64");
  TableAlgebraSpec spec;
  auto step_name = [&](unsigned i) { return format_rational(Rational(i, order)); };
  for (unsigned i = 0; i <= order; ++i) spec.elements.push_back(step_name(i));
  spec.zero = step_name(0);
  spec.unit = step_name(order);
  for (unsigned i = 0; i <= order; ++i)
    for (unsigned j = 0; i + j <= order; ++j)
      spec.sums.push_back({step_name(i), step_name(j), step_name(i + j)});
  for (unsigned i = 0; i <= order; ++i) spec.embedding[step_name(i)] = {Rational(i, order)};
  return TableEffectAlgebra::create(std::move(spec));
}

std::shared_ptr<TableEffectAlgebra> mo2() {
  TableAlgebraSpec spec;
  spec.elements = {"0", "a", "a'", "b", "b'", "1"};
  spec.zero = "0";
  spec.unit = "1";
  for (const auto& x : spec.elements) {
    spec.sums.push_back({"0", x, x});
    if (x != "0") spec.sums.push_back({x, "0", x});
  }
  spec.sums.push_back({"a", "a'", "1"});
  spec.sums.push_back({"a'", "a", "1"});
  spec.sums.push_back({"b", "b'", "1"});
  spec.sums.push_back({"b'", "b", "1"});
  return TableEffectAlgebra::create(std::move(spec));
}

}  // namespace coex
