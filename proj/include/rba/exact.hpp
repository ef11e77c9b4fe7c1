#pragma once

#include <functional>
#include <optional>

#include "rba/certificate.hpp"
#include "rba/instance.hpp"

namespace rba {

struct SearchConfig {
    std::optional<VertexId> required_root;
    std::optional<int> target_size;                // arcs; default n-1 (spanning)
    std::optional<long long> node_budget;          // search-tree nodes
    std::optional<double> time_budget_seconds;
};

struct SearchStats {
    long long nodes = 0;
};

// Exhaustive backtracking search for a rainbow arborescence of the target
// size.  Grows the spanned set from each candidate root and branches on
// (unused color, arc from spanned tail to unspanned head) in the global
// arc order, so identical inputs and budgets yield identical certificates.
// Failed (spanned, used-colors) states are memoized; feasibility of a state
// depends on nothing else, which keeps the search exact.
//
// Returns a certificate passing check_certificate under cfg, or nullopt
// after provably exhausting the space.  Budget exhaustion throws
// BudgetExhausted — "unknown" is never reported as "no solution".
std::optional<RainbowCertificate> find_rainbow(const ColoredInstance& inst,
                                               const SearchConfig& cfg = {},
                                               SearchStats* stats = nullptr);

// Visits every rainbow spanning arborescence (as an arc set) exactly once,
// choosing one arc or none per color in increasing color order with
// in-degree and cycle pruning.  visit may be empty; returning false stops
// the enumeration early.  Returns the number of certificates visited.
long long enumerate_rainbow_spanning(
    const ColoredInstance& inst,
    std::optional<VertexId> required_root = std::nullopt,
    const std::function<bool(const RainbowCertificate&)>& visit = {},
    std::optional<long long> step_budget = std::nullopt);

// Exact number of distinct rainbow spanning arborescences.  Intended for
// n ≤ 8; throws BudgetExhausted beyond step_budget.
long long count_rainbow_spanning(const ColoredInstance& inst,
                                 std::optional<long long> step_budget = std::nullopt);

// All n^{n-1} labeled spanning arborescences on [1..n], ordered by root and
// then lexicographically by parent vector.  Requires 2 ≤ n ≤ 5.
std::vector<Arborescence> enumerate_arborescences(int n);

}  // namespace rba
