#include "coex/io.hpp"

#include <fstream>
#include <sstream>

namespace coex {

namespace {

Rational rational_from_json(const Json& doc) {
  if (doc.is_string()) return parse_rational(doc.get<std::string>());
  if (doc.is_number_integer()) return Rational(doc.get<long long>());
  throw input_error("expected a rational literal, got " + doc.dump());
}

GroupVector vector_from_json(const Json& doc) {
  if (!doc.is_array()) throw input_error("expected an array of rationals, got " + doc.dump());
  GroupVector out;
  for (const auto& item : doc) out.push_back(rational_from_json(item));
  return out;
}

Json vector_to_json(const GroupVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

SMask subset_from_json(const CsmDomain& domain, const Json& doc) {
  if (!doc.is_array()) throw input_error("expected a subset as an array of elements");
  SMask mask = 0;
  for (const auto& item : doc) {
    const Element e = parse_element(domain.algebra_ptr(), item);
    const auto idx = domain.index_of(e);
    if (!idx) throw input_error("subset member " + e.str() + " is not in S");
    mask |= SMask{1} << *idx;
  }
  return mask;
}

Json subset_to_json(const CsmDomain& domain, SMask mask) {
  Json out = Json::array();
  for (unsigned i = 0; i < domain.size(); ++i)
    if (mask >> i & 1u) out.push_back(element_to_json(domain.at(i)));
  return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw input_error("parse error in " + path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& value) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  out << value.dump(2) << '\n';
}

std::shared_ptr<EffectAlgebra> load_algebra(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind"))
    throw input_error("algebra description needs a \"kind\" field");
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "table") {
    TableAlgebraSpec spec;
    for (const auto& e : doc.at("elements")) spec.elements.push_back(e.get<std::string>());
    for (const auto& row : doc.at("sum")) {
      if (!row.is_array() || row.size() != 3)
        throw input_error("sum rows must be [a, b, c] triples");
      spec.sums.push_back({row[0].get<std::string>(), row[1].get<std::string>(),
                           row[2].get<std::string>()});
    }
    spec.zero = doc.at("zero").get<std::string>();
    spec.unit = doc.at("unit").get<std::string>();
    if (doc.contains("embedding")) {
      for (const auto& [key, value] : doc.at("embedding").items()) {
        if (value.is_array())
          spec.embedding[key] = vector_from_json(value);
        else
          spec.embedding[key] = {rational_from_json(value)};
      }
    }
    return TableEffectAlgebra::create(std::move(spec));
  }
  if (kind == "tuple") {
    return TupleEffectAlgebra::create(doc.at("dim").get<std::size_t>());
  }
  if (kind == "mv-chain-product") {
    std::vector<unsigned> orders;
    for (const auto& k : doc.at("orders")) orders.push_back(k.get<unsigned>());
    return MVChainProduct::create(std::move(orders));
  }
  throw input_error("unknown algebra kind \"" + kind + "\"");
}

Json algebra_to_json(const EffectAlgebra& algebra) {
  if (const auto* table = dynamic_cast<const TableEffectAlgebra*>(&algebra)) {
    Json out;
    out["kind"] = "table";
    out["elements"] = table->spec().elements;
    Json sums = Json::array();
    for (const auto& row : table->spec().sums) sums.push_back({row[0], row[1], row[2]});
    out["sum"] = std::move(sums);
    out["zero"] = table->spec().zero;
    out["unit"] = table->spec().unit;
    if (table->has_embedding()) {
      Json embedding;
      for (const auto& [key, value] : table->spec().embedding) embedding[key] = vector_to_json(value);
      out["embedding"] = std::move(embedding);
    }
    return out;
  }
  if (const auto* tuple = dynamic_cast<const TupleEffectAlgebra*>(&algebra)) {
    return Json{{"kind", "tuple"}, {"dim", tuple->dim()}};
  }
  if (const auto* chains = dynamic_cast<const MVChainProduct*>(&algebra)) {
    return Json{{"kind", "mv-chain-product"}, {"orders", chains->orders()}};
  }
  throw input_error("algebra kind cannot be serialized");
}

Element parse_element(const std::shared_ptr<const EffectAlgebra>& algebra, const Json& doc) {
  if (auto table = std::dynamic_pointer_cast<const TableEffectAlgebra>(algebra)) {
    if (!doc.is_string()) throw input_error("table elements are name strings, got " + doc.dump());
    return table->element(doc.get<std::string>());
  }
  if (auto tuple = std::dynamic_pointer_cast<const TupleEffectAlgebra>(algebra))
    return tuple->element(vector_from_json(doc));
  if (auto chains = std::dynamic_pointer_cast<const MVChainProduct>(algebra))
    return chains->element(vector_from_json(doc));
  throw input_error("cannot parse elements for " + algebra->name());
}

Json element_to_json(const Element& element) {
  if (element.holds_index()) return element.str();
  return vector_to_json(element.coords());
}

std::vector<Element> load_subset(const std::shared_ptr<const EffectAlgebra>& algebra,
                                 const Json& doc) {
  if (!doc.is_object() || !doc.contains("S"))
    throw input_error("subset file needs an \"S\" array");
  std::vector<Element> out;
  for (const auto& item : doc.at("S")) out.push_back(parse_element(algebra, item));
  return out;
}

CsmPtr load_csm(const Json& doc, const std::shared_ptr<const EffectAlgebra>& algebra,
                const std::optional<std::vector<Element>>& subset, unsigned cap) {
  if (!doc.is_object() || !doc.contains("kind"))
    throw input_error("mapping description needs a \"kind\" field");
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "join-meet" || kind == "product") {
    if (!subset) throw input_error("the " + kind + " mapping needs S from a subset file");
    CsmDomain domain = CsmDomain::make(algebra, *subset, cap);
    return kind == "join-meet" ? csm_joinmeet(std::move(domain)) : csm_product(std::move(domain));
  }
  if (kind == "table") {
    std::vector<Element> s;
    for (const auto& item : doc.at("S")) s.push_back(parse_element(algebra, item));
    if (subset) {
      const bool same =
          subset->size() == s.size() &&
          std::equal(s.begin(), s.end(), subset->begin(),
                     [](const Element& x, const Element& y) { return x == y; });
      if (!same) throw input_error("the table mapping carries an S that differs from the subset file");
    }
    CsmDomain domain = CsmDomain::make(algebra, std::move(s), cap);
    const std::size_t total = std::size_t{1} << (2 * domain.size());
    std::vector<std::optional<Element>> entries(total);
    for (const auto& row : doc.at("entries")) {
      const SMask u = subset_from_json(domain, row.at("U"));
      const SMask v = subset_from_json(domain, row.at("V"));
      const std::size_t idx = table_index(domain, u, v);
      if (entries[idx])
        throw input_error("duplicate table entry for U=" + domain.subset_str(u) + ", V=" +
                          domain.subset_str(v));
      entries[idx] = parse_element(algebra, row.at("value"));
    }
    std::vector<Element> values;
    values.reserve(total);
    for (SMask u = 0; u <= domain.full_mask(); ++u)
      for (SMask v = 0; v <= domain.full_mask(); ++v) {
        auto& cell = entries[table_index(domain, u, v)];
        if (!cell)
          throw input_error("table mapping has a hole at U=" + domain.subset_str(u) + ", V=" +
                            domain.subset_str(v));
        values.push_back(std::move(*cell));
      }
    return csm_table(std::move(domain), std::move(values));
  }
  throw input_error("unknown mapping kind \"" + kind + "\"");
}

Json csm_to_json(const Csm& csm) {
  const CsmDomain& domain = csm.domain();
  Json out;
  out["kind"] = "table";
  Json s = Json::array();
  for (const Element& e : domain.elements()) s.push_back(element_to_json(e));
  out["S"] = std::move(s);
  Json entries = Json::array();
  for (SMask u = 0; u <= domain.full_mask(); ++u)
    for (SMask v = 0; v <= domain.full_mask(); ++v) {
      entries.push_back(Json{{"U", subset_to_json(domain, u)},
                             {"V", subset_to_json(domain, v)},
                             {"value", element_to_json(csm.eval(u, v))}});
    }
  out["entries"] = std::move(entries);
  return out;
}

Observable load_observable(const Json& doc, const std::shared_ptr<const EffectAlgebra>& algebra) {
  if (!doc.is_object() || doc.value("kind", "") != "observable")
    throw input_error("observable file needs kind \"observable\"");
  std::vector<Element> atoms;
  for (const auto& item : doc.at("atom_values")) atoms.push_back(parse_element(algebra, item));
  if (doc.contains("atoms") && doc.at("atoms").get<std::size_t>() != atoms.size())
    throw input_error("the declared atom count differs from the atom_values length");
  return Observable(std::move(atoms));
}

Json observable_to_json(const Observable& alpha) {
  Json out;
  out["kind"] = "observable";
  out["atoms"] = alpha.atom_count();
  Json values = Json::array();
  for (const Element& a : alpha.atom_values()) values.push_back(element_to_json(a));
  out["atom_values"] = std::move(values);
  return out;
}

WitnessMapping load_witness(const Json& doc, const std::shared_ptr<const EffectAlgebra>& algebra,
                            unsigned cap) {
  if (!doc.is_object() || !doc.contains("S") || !doc.contains("values"))
    throw input_error("witness file needs \"S\" and \"values\"");
  std::vector<Element> s;
  for (const auto& item : doc.at("S")) s.push_back(parse_element(algebra, item));
  CsmDomain domain = CsmDomain::make(algebra, std::move(s), cap);
  const std::size_t total = std::size_t{1} << domain.size();
  std::vector<std::optional<Element>> slots(total);
  for (const auto& row : doc.at("values")) {
    const SMask x = subset_from_json(domain, row.at("X"));
    if (slots[x]) throw input_error("duplicate witness value for X=" + domain.subset_str(x));
    slots[x] = parse_element(algebra, row.at("value"));
  }
  std::vector<Element> values;
  values.reserve(total);
  for (SMask x = 0; x <= domain.full_mask(); ++x) {
    if (!slots[x]) throw input_error("witness file misses X=" + domain.subset_str(x));
    values.push_back(std::move(*slots[x]));
  }
  return WitnessMapping(std::move(domain), std::move(values));
}

Json witness_to_json(const WitnessMapping& beta) {
  const CsmDomain& domain = beta.domain();
  Json out;
  Json s = Json::array();
  for (const Element& e : domain.elements()) s.push_back(element_to_json(e));
  out["S"] = std::move(s);
  Json values = Json::array();
  for (SMask x = 0; x <= domain.full_mask(); ++x)
    values.push_back(Json{{"X", subset_to_json(domain, x)}, {"value", element_to_json(beta.value(x))}});
  out["values"] = std::move(values);
  return out;
}

Json family_to_json(const SubsetFamily& fam, const CsmDomain& domain) {
  Json out = Json::array();
  for (SMask x : family_members(fam)) {
    Json subset = Json::array();
    for (unsigned i = 0; i < domain.size(); ++i)
      if (x >> i & 1u) subset.push_back(element_to_json(domain.at(i)));
    out.push_back(std::move(subset));
  }
  return out;
}

Json certificate_to_json(const CoexistenceCertificate& cert) {
  Json out;
  out["S"] = cert.s_names;
  out["boolean_atoms"] = cert.boolean_atoms;
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses) {
    Json fam = Json::array();
    for (SMask x : family_members(w.family)) {
      Json subset = Json::array();
      for (unsigned i = 0; i < mask_size(w.family.ground); ++i)
        if (x >> i & 1u) subset.push_back(cert.s_names.at(i));
      fam.push_back(std::move(subset));
    }
    witnesses.push_back(Json{{"element", w.element.holds_index()
                                             ? Json(w.element.str())
                                             : vector_to_json(w.element.coords())},
                             {"family", std::move(fam)}});
  }
  out["witnesses"] = std::move(witnesses);
  out["checks"] = Json{{"decomposition", cert.decomposition_ok},
                       {"diagram", cert.diagram_ok},
                       {"observable", cert.observable_ok}};
  return out;
}

Json validation_report_to_json(const ValidationReport& report) {
  Json out;
  out["valid"] = report.valid();
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back(Json{{"axiom", v.axiom}, {"witness", v.witness}, {"message", v.message}});
  out["violations"] = std::move(violations);
  return out;
}

std::string validation_report_to_text(const ValidationReport& report) {
  std::ostringstream out;
  out << report.summary() << '\n';
  for (const auto& v : report.violations)
    out << "  [" << v.axiom << "] " << v.message << '\n';
  return out.str();
}

namespace {

Json violation_to_json(const CsmViolation& v, const CsmDomain& domain) {
  Json out;
  out["axiom"] = v.axiom;
  out["U"] = subset_to_json(domain, v.u);
  out["V"] = subset_to_json(domain, v.v);
  if (v.v2) out["V2"] = subset_to_json(domain, *v.v2);
  if (v.c) out["c"] = element_to_json(domain.at(*v.c));
  if (v.lhs) out["left"] = element_to_json(*v.lhs);
  if (v.rhs) out["right"] = element_to_json(*v.rhs);
  out["message"] = v.message;
  return out;
}

void status_to_json(Json& doc, const char* label, const AxiomStatus& status,
                    const CsmDomain& domain) {
  if (!status.checked) return;
  Json entry;
  entry["holds"] = status.holds();
  Json violations = Json::array();
  for (const auto& v : status.violations) violations.push_back(violation_to_json(v, domain));
  entry["violations"] = std::move(violations);
  doc[label] = std::move(entry);
}

}  // namespace

Json axiom_report_to_json(const AxiomReport& report, const CsmDomain& domain) {
  Json out;
  Json axioms;
  status_to_json(axioms, "a", report.a, domain);
  status_to_json(axioms, "b", report.b, domain);
  status_to_json(axioms, "c", report.c, domain);
  status_to_json(axioms, "d", report.d, domain);
  status_to_json(axioms, "e", report.e, domain);
  status_to_json(axioms, "e*", report.estar, domain);
  out["axioms"] = std::move(axioms);
  out["unit_adjoined"] = report.unit_adjoined;
  return out;
}

std::string axiom_report_to_text(const AxiomReport& report, const CsmDomain&) {
  std::ostringstream out;
  const std::pair<const char*, const AxiomStatus*> entries[] = {
      {"(a)", &report.a}, {"(b)", &report.b}, {"(c)", &report.c},
      {"(d)", &report.d}, {"(e)", &report.e}, {"(e*)", &report.estar}};
  for (const auto& [label, status] : entries) {
    if (!status->checked) continue;
    if (status->holds()) {
      out << label << " holds\n";
    } else {
      out << label << " VIOLATED (" << status->violations.size() << " instance(s))\n";
      std::size_t shown = 0;
      for (const auto& v : status->violations) {
        out << "    " << v.message << '\n';
        if (++shown >= 5) {
          if (status->violations.size() > shown)
            out << "    ... and " << status->violations.size() - shown << " more\n";
          break;
        }
      }
    }
  }
  if (report.unit_adjoined) out << "note: 1 was adjoined to S\n";
  return out.str();
}

Json witness_report_to_json(const WitnessReport& report) {
  Json out;
  out["ok"] = report.ok();
  out["pairs_checked"] = report.pairs_checked;
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back(Json{{"axiom", v.axiom}, {"message", v.message}});
  out["violations"] = std::move(violations);
  return out;
}

Json search_log_record(std::uint64_t instance, std::string_view query, SearchOutcome outcome,
                       std::uint64_t nodes, std::chrono::milliseconds elapsed) {
  std::ostringstream hex;
  hex << std::hex << instance;
  return Json{{"instance", hex.str()},
              {"query", std::string(query)},
              {"outcome", to_string(outcome)},
              {"nodes", nodes},
              {"elapsed_ms", elapsed.count()}};
}

void append_jsonl(const std::string& path, const Json& record) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw input_error("cannot write " + path);
  out << record.dump() << '\n';
}

}  // namespace coex
