#pragma once

#include <string>

#include <json.hpp>

#include "coex/coexistence.hpp"
#include "coex/csm.hpp"
#include "coex/csm_verify.hpp"
#include "coex/interval_algebra.hpp"
#include "coex/mv_check.hpp"
#include "coex/observable.hpp"
#include "coex/search.hpp"
#include "coex/table_algebra.hpp"
#include "coex/witness.hpp"

namespace coex {

using Json = nlohmann::json;

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& value);

/// {"kind":"table", ...} | {"kind":"tuple","dim":n} |
/// {"kind":"mv-chain-product","orders":[...]}. Rationals are strings "p/q".
std::shared_ptr<EffectAlgebra> load_algebra(const Json& doc);
Json algebra_to_json(const EffectAlgebra& algebra);

/// Table elements are name strings; interval elements are arrays of rational
/// strings.
Element parse_element(const std::shared_ptr<const EffectAlgebra>& algebra, const Json& doc);
Json element_to_json(const Element& element);

/// {"S":[element, ...]}
std::vector<Element> load_subset(const std::shared_ptr<const EffectAlgebra>& algebra, const Json& doc);

/// {"kind":"join-meet"} | {"kind":"product"} | {"kind":"table","S":[...],
/// "entries":[{"U":[...],"V":[...],"value":...},...]} with entries total over
/// Fin(S) x Fin(S). For the closed forms, S comes from `subset`; a table file
/// carries its own S, which must agree with `subset` when both are given.
CsmPtr load_csm(const Json& doc, const std::shared_ptr<const EffectAlgebra>& algebra,
                const std::optional<std::vector<Element>>& subset, unsigned cap = kDefaultSCap);
Json csm_to_json(const Csm& csm);

/// {"kind":"observable","atoms":n,"atom_values":[element,...]}
Observable load_observable(const Json& doc, const std::shared_ptr<const EffectAlgebra>& algebra);
Json observable_to_json(const Observable& alpha);

/// {"S":[...],"values":[{"X":[...],"value":...},...]} total over Fin(S).
WitnessMapping load_witness(const Json& doc, const std::shared_ptr<const EffectAlgebra>& algebra,
                            unsigned cap = kDefaultSCap);
Json witness_to_json(const WitnessMapping& beta);

Json certificate_to_json(const CoexistenceCertificate& cert);
Json family_to_json(const SubsetFamily& fam, const CsmDomain& domain);

Json validation_report_to_json(const ValidationReport& report);
std::string validation_report_to_text(const ValidationReport& report);
Json axiom_report_to_json(const AxiomReport& report, const CsmDomain& domain);
std::string axiom_report_to_text(const AxiomReport& report, const CsmDomain& domain);
Json witness_report_to_json(const WitnessReport& report);

Json search_log_record(std::uint64_t instance, std::string_view query, SearchOutcome outcome,
                       std::uint64_t nodes, std::chrono::milliseconds elapsed);
void append_jsonl(const std::string& path, const Json& record);

}  // namespace coex
