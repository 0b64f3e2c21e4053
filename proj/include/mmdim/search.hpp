// search.hpp -- exhaustive minimum-size strategy search for small instances

#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmdim/core.hpp"

namespace mmdim {

/// Key of a strategy's question set modulo per-peg color relabelings and
/// swaps of pegs with equal color counts. Question order is ignored.
struct CanonicalKey
{
    std::array<int, kPegs> counts{}; ///< sorted color counts
    std::vector<std::uint32_t> code; ///< one packed relabeled triple per question

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Exact: the lexicographically least encoding over all question orders,
/// color relabelings and admissible peg swaps.
CanonicalKey canonical_key(const Strategy& strategy);

struct SearchBudget
{
    std::chrono::milliseconds time_limit{60'000};
    std::uint64_t node_limit = 100'000'000;
    int threads = 1;
    /// Per-branch cap on remembered canonical keys; beyond it duplicates are
    /// simply explored again.
    std::size_t dedup_limit = 4'000'000;
};

enum class SearchStatus { FoundWitness, ExhaustedNone, BudgetExceeded };

const char* to_string(SearchStatus s);

struct SearchOutcome
{
    SearchStatus status = SearchStatus::ExhaustedNone;
    int size = 0; ///< k searched, or the minimum found by min_feasible_size
    std::optional<Strategy> witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
    /// min_feasible_size only: largest k proved infeasible, or -1.
    int last_exhausted = -1;
};

/// Is there a feasible strategy with exactly k questions? Params in any peg
/// order; the witness is in the caller's order. Throws std::invalid_argument
/// for k < 0.
///
/// The search fans out over the distinct two-question prefixes. A witness
/// from the lowest-numbered successful prefix wins and nodes_explored counts
/// only prefixes up to it, so the result does not depend on `threads`
/// unless a budget runs out.
SearchOutcome exists_feasible(const Params& params, int k, const SearchBudget& budget = {});

/// Smallest k with a feasible strategy, deepening from lower_bound(params).
/// At upper_bound(params) the constructed strategy is returned without
/// searching.
SearchOutcome min_feasible_size(const Params& params, const SearchBudget& budget = {});

} // namespace mmdim
