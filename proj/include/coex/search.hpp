#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "coex/csm.hpp"
#include "coex/table_algebra.hpp"
#include "coex/witness.hpp"

namespace coex {

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
};

/// `Exhausted` is a proof of nonexistence over tables valued in the given
/// algebra; running out of budget is reported separately and never conflated
/// with exhaustion.
enum class SearchOutcome { Found, Exhausted, BudgetOut };

std::string to_string(SearchOutcome outcome);

struct CsmSearchResult {
  SearchOutcome outcome = SearchOutcome::BudgetOut;
  CsmPtr csm;  // set when Found; re-verified before being returned
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
  std::string note;
};

/// Backtracking search for a table of values ⟨U|V⟩ satisfying (a)-(e), and
/// (e*) when `strong` is set. Entries are assigned in increasing
/// (|U|+|V|, masks) order; values forced by (c), (d) and the derived
/// identity ⟨{c}|{1}⟩ = c are fixed up front, and every constraint is
/// checked as soon as its last entry is assigned. Deterministic given the
/// budget.
CsmSearchResult search_csm(const std::shared_ptr<const TableEffectAlgebra>& algebra,
                           std::vector<Element> s, bool strong, const SearchBudget& budget = {});

struct WitnessSearchResult {
  SearchOutcome outcome = SearchOutcome::BudgetOut;
  std::optional<WitnessMapping> witness;
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
  std::string note;
};

/// Backtracking search over the 2^|S| values of β with (A1), (A2) forced and
/// every D_β(X,A) ≥ 0 instance checked as soon as its interval is assigned.
/// The algebra must carry an interval embedding.
WitnessSearchResult search_witness(const std::shared_ptr<const TableEffectAlgebra>& algebra,
                                   std::vector<Element> s, const SearchBudget& budget = {});

/// Searches for a mapping extending a verified witness via ⟨X|{1}⟩ = β(X).
CsmSearchResult csm_extending_witness(const WitnessMapping& beta, const SearchBudget& budget = {});

/// Stable 64-bit content hash used to key search-log records.
std::uint64_t fnv1a64(std::string_view text);

/// Canonical instance key: the algebra table, the index set and the query.
std::uint64_t search_instance_hash(const TableEffectAlgebra& algebra,
                                   const std::vector<Element>& s, std::string_view query);

}  // namespace coex
