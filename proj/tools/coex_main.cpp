// coex: exact verification of compatibility support mappings, observables
// and witness mappings on small effect algebras.
//
// Exit codes: 0 success / all checks hold (a search found an object),
//             1 verified violation (or a search exhausted its space),
//             2 input error,
//             3 inconclusive (search budget exceeded).

#include <CLI11.hpp>

#include <functional>
#include <iostream>

#include "coex/io.hpp"

namespace {

using namespace coex;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kInconclusive = 3;

struct CommonOpts {
  std::string algebra_path;
  std::string subset_path;
  std::string csm_path;
  std::string observable_path;
  std::string witness_path;
  std::string out_path;
  std::string format = "text";
  unsigned max_s = kDefaultSCap;
  std::uint64_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget_nodes = 50'000'000;
  bool strong = false;
  bool mv = false;
  bool sweep = false;
  bool witness_mode = false;
  std::string extend_path;
};

void emit(const CommonOpts& opts, const Json& doc, const std::string& text) {
  if (opts.format == "json") {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text;
  }
  if (!opts.out_path.empty()) save_json_file(opts.out_path, doc);
}

std::shared_ptr<EffectAlgebra> load_algebra_arg(const CommonOpts& opts) {
  return load_algebra(load_json_file(opts.algebra_path));
}

std::optional<std::vector<Element>> load_subset_arg(const CommonOpts& opts,
                                                    const std::shared_ptr<EffectAlgebra>& alg) {
  if (opts.subset_path.empty()) return std::nullopt;
  return load_subset(alg, load_json_file(opts.subset_path));
}

int cmd_validate(const CommonOpts& opts) {
  auto alg = load_algebra_arg(opts);
  Json doc;
  std::string text;
  bool ok = true;
  if (auto table = std::dynamic_pointer_cast<TableEffectAlgebra>(alg)) {
    const ValidationReport report = validate_effect_algebra(*table);
    doc = validation_report_to_json(report);
    text = validation_report_to_text(report);
    ok = report.valid();
  } else {
    doc["valid"] = true;
    doc["violations"] = Json::array();
    text = alg->name() + " is valid by construction\n";
  }
  if (opts.mv) {
    if (ok) {
      const MvCheckResult mv = is_mv_effect_algebra(alg);
      doc["mv"] = Json{{"is_mv", mv.is_mv}, {"message", mv.message}};
      text += mv.message + "\n";
      ok = ok && mv.is_mv;
    } else {
      text += "MV check skipped: the table fails the effect algebra axioms\n";
    }
  }
  emit(opts, doc, text);
  return ok ? kOk : kViolation;
}

int cmd_verify_csm(const CommonOpts& opts) {
  auto alg = load_algebra_arg(opts);
  const auto subset = load_subset_arg(opts, alg);
  CsmPtr csm = load_csm(load_json_file(opts.csm_path), alg, subset, opts.max_s);
  const AxiomReport report = opts.strong ? verify_all(*csm) : verify_csm(*csm);
  const bool ok = report.csm_ok() && (!opts.strong || report.strong_ok());
  emit(opts, axiom_report_to_json(report, csm->domain()),
       axiom_report_to_text(report, csm->domain()));
  return ok ? kOk : kViolation;
}

int cmd_coexist(const CommonOpts& opts) {
  auto alg = load_algebra_arg(opts);
  const auto subset = load_subset_arg(opts, alg);
  CsmPtr csm = load_csm(load_json_file(opts.csm_path), alg, subset, opts.max_s);
  const AxiomReport report = verify_csm(*csm);
  if (!report.csm_ok()) {
    std::cout << "the mapping fails its conditions, no observable is built:\n"
              << axiom_report_to_text(report, csm->domain());
    return kViolation;
  }
  try {
    const AlphaS built = build_alpha_S(*csm, VerifyMode::Auto, opts.samples, opts.seed);
    Json cert = certificate_to_json(built.certificate);
    cert["observable_file"] = observable_to_json(built.observable);
    std::string text = "coexistence certificate: |S| = " + std::to_string(csm->domain().size()) +
                       ", Boolean algebra with " + std::to_string(built.certificate.boolean_atoms) +
                       " atoms, all checks hold\n";
    emit(opts, cert, text);
    return kOk;
  } catch (const axiom_breach& e) {
    std::cout << "construction aborted: " << e.what() << '\n';
    return kViolation;
  }
}

int cmd_reverse(const CommonOpts& opts) {
  auto alg = load_algebra_arg(opts);
  const auto subset = load_subset_arg(opts, alg);
  if (!subset) throw input_error("reverse needs --subset");
  const Observable alpha = load_observable(load_json_file(opts.observable_path), alg);
  const auto obs_check = verify_observable(alpha, VerifyMode::Auto, opts.samples, opts.seed);
  if (!obs_check.ok) {
    std::cout << "the observable fails its definition: " << obs_check.detail << '\n';
    return kViolation;
  }
  const CsmDomain domain = CsmDomain::make(alg, *subset, opts.max_s);

  if (opts.sweep) {
    if (alpha.domain_size() > 16)
      throw input_error("--sweep enumerates every preimage choice and needs |B| <= 16");
    std::vector<std::vector<std::uint64_t>> pre;
    for (unsigned i = 0; i < domain.size(); ++i) {
      pre.push_back(preimages_of(alpha, domain.at(i)));
      if (pre.back().empty())
        throw input_error("element not in range of the observable: " + domain.at(i).str());
    }
    std::vector<std::uint64_t> picks(domain.size(), 0);
    std::uint64_t combos = 0, strong_count = 0;
    std::function<void(unsigned)> walk = [&](unsigned i) {
      if (i == domain.size()) {
        ++combos;
        auto csm = csm_from_observable(alpha, domain, picks);
        if (verify_strong(*csm).strong_ok()) ++strong_count;
        return;
      }
      for (std::uint64_t p : pre[i]) {
        picks[i] = p;
        walk(i + 1);
      }
    };
    walk(0);
    std::cout << "swept " << combos << " preimage choices, " << strong_count
              << " produced a strong mapping\n";
    if (strong_count != combos) return kViolation;
  }

  CsmPtr csm = csm_from_observable(alpha, domain);
  const AxiomReport report = verify_all(*csm);
  const bool ok = report.csm_ok() && report.strong_ok();
  std::string text = std::string("reverse construction: ") +
                     (ok ? "strong mapping produced and re-verified\n"
                         : "the produced mapping fails re-verification\n") +
                     axiom_report_to_text(report, csm->domain());
  emit(opts, csm_to_json(*csm), text);
  return ok ? kOk : kViolation;
}

int cmd_witness(const CommonOpts& opts) {
  auto alg = load_algebra_arg(opts);
  const auto subset = load_subset_arg(opts, alg);
  CsmPtr csm = load_csm(load_json_file(opts.csm_path), alg, subset, opts.max_s);
  const AxiomReport report = verify_csm(*csm);
  if (!report.csm_ok()) {
    std::cout << "the mapping fails its conditions:\n"
              << axiom_report_to_text(report, csm->domain());
    return kViolation;
  }
  const WitnessMapping beta =
      opts.witness_path.empty()
          ? witness_from_csm(*csm)
          : load_witness(load_json_file(opts.witness_path), alg, opts.max_s);
  const WitnessReport wreport = verify_witness(beta);
  const DEqualityCheck deq = check_D_equality(*csm, beta);
  Json doc;
  doc["witness"] = witness_to_json(beta);
  doc["report"] = witness_report_to_json(wreport);
  doc["d_equality"] = Json{{"ok", deq.ok}, {"detail", deq.detail}};
  std::string text = wreport.summary() + "\n" + deq.detail + "\n";
  emit(opts, doc, text);
  return (wreport.ok() && deq.ok) ? kOk : kViolation;
}

int cmd_search(const CommonOpts& opts) {
  auto alg_any = load_algebra_arg(opts);
  auto alg = std::dynamic_pointer_cast<TableEffectAlgebra>(alg_any);
  if (!alg) throw input_error("search runs over explicit table algebras only");
  const auto subset = load_subset_arg(opts, alg_any);

  SearchBudget budget;
  budget.max_nodes = opts.budget_nodes;

  std::string query;
  Json payload;
  SearchOutcome outcome;
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};

  if (!opts.extend_path.empty()) {
    query = "extend";
    const WitnessMapping beta = load_witness(load_json_file(opts.extend_path), alg_any, opts.max_s);
    const auto result = csm_extending_witness(beta, budget);
    outcome = result.outcome;
    nodes = result.nodes;
    elapsed = result.elapsed;
    if (result.csm) payload = csm_to_json(*result.csm);
  } else if (opts.witness_mode) {
    query = "witness";
    if (!subset) throw input_error("search needs --subset");
    const auto result = search_witness(alg, *subset, budget);
    outcome = result.outcome;
    nodes = result.nodes;
    elapsed = result.elapsed;
    if (result.witness) payload = witness_to_json(*result.witness);
  } else {
    query = opts.strong ? "csm-strong" : "csm";
    if (!subset) throw input_error("search needs --subset");
    const auto result = search_csm(alg, *subset, opts.strong, budget);
    outcome = result.outcome;
    nodes = result.nodes;
    elapsed = result.elapsed;
    if (result.csm) payload = csm_to_json(*result.csm);
  }

  const std::uint64_t instance =
      search_instance_hash(*alg, subset ? *subset : std::vector<Element>{}, query);
  Json record = search_log_record(instance, query, outcome, nodes, elapsed);
  if (!payload.is_null()) record["object"] = payload;
  if (!opts.out_path.empty()) append_jsonl(opts.out_path, record);
  std::cout << "search " << query << ": " << to_string(outcome) << " (" << nodes << " nodes, "
            << elapsed.count() << " ms)\n";
  if (opts.format == "json") std::cout << record.dump(2) << '\n';

  switch (outcome) {
    case SearchOutcome::Found: return kOk;
    case SearchOutcome::Exhausted: return kViolation;
    case SearchOutcome::BudgetOut: return kInconclusive;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for compatibility support mappings on effect algebras"};
  app.require_subcommand(1);
  CommonOpts opts;

  const auto add_common = [&](CLI::App* cmd, bool needs_algebra = true) {
    if (needs_algebra) cmd->add_option("--algebra", opts.algebra_path, "algebra JSON file")->required();
    cmd->add_option("--out", opts.out_path, "write the JSON result here");
    cmd->add_option("--format", opts.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-s", opts.max_s, "cap on |S|");
    cmd->add_option("--samples", opts.samples, "sample count for non-exhaustive checks");
    cmd->add_option("--seed", opts.seed, "seed for sampled checks");
  };

  auto* validate = app.add_subcommand("validate", "check the effect algebra axioms of a table");
  add_common(validate);
  validate->add_flag("--mv", opts.mv, "also decide the MV property");

  auto* verify = app.add_subcommand("verify-csm", "check conditions (a)-(e) and optionally (e*)");
  add_common(verify);
  verify->add_option("--subset", opts.subset_path, "subset JSON file");
  verify->add_option("--csm", opts.csm_path, "mapping JSON file")->required();
  verify->add_flag("--strong", opts.strong, "also check (e*)");

  auto* coexist = app.add_subcommand("coexist", "build the limit observable and a certificate");
  add_common(coexist);
  coexist->add_option("--subset", opts.subset_path, "subset JSON file");
  coexist->add_option("--csm", opts.csm_path, "mapping JSON file")->required();

  auto* reverse = app.add_subcommand("reverse", "build a strong mapping from an observable");
  add_common(reverse);
  reverse->add_option("--observable", opts.observable_path, "observable JSON file")->required();
  reverse->add_option("--subset", opts.subset_path, "subset JSON file")->required();
  reverse->add_flag("--sweep", opts.sweep, "try every preimage choice (|B| <= 16)");

  auto* witness = app.add_subcommand("witness", "derive and check the witness mapping of a mapping");
  add_common(witness);
  witness->add_option("--subset", opts.subset_path, "subset JSON file");
  witness->add_option("--csm", opts.csm_path, "mapping JSON file")->required();
  witness->add_option("--witness", opts.witness_path, "check this witness file instead of deriving");

  auto* search = app.add_subcommand("search", "backtracking search over small table algebras");
  add_common(search);
  search->add_option("--subset", opts.subset_path, "subset JSON file");
  search->add_flag("--strong", opts.strong, "require (e*)");
  search->add_flag("--witness", opts.witness_mode, "search for a witness mapping instead");
  search->add_option("--extend", opts.extend_path, "witness JSON file to extend to a mapping");
  search->add_option("--budget-nodes", opts.budget_nodes, "node budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(opts);
    if (verify->parsed()) return cmd_verify_csm(opts);
    if (coexist->parsed()) return cmd_coexist(opts);
    if (reverse->parsed()) return cmd_reverse(opts);
    if (witness->parsed()) return cmd_witness(opts);
    if (search->parsed()) return cmd_search(opts);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const contract_error& e) {
    std::cerr << "contract error: " << e.what() << '\n';
    return kInputError;
  } catch (const axiom_breach& e) {
    std::cerr << "axiom breach: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
