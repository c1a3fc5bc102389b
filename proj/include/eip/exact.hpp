#pragma once

#include <cstdint>
#include <vector>

#include "eip/delta.hpp"
#include "eip/graph.hpp"

namespace eip {

// Caps for the exhaustive solvers.  Exceeding a cap raises capacity_error.
struct ExactLimits {
    std::size_t profile_max_n = 24;  // subset sweep
    std::size_t order_max_n = 20;    // nested-order chain search
};

// I(m) for m = 0..n: the maximum number of inner edges over all m-subsets.
struct EipProfile {
    std::size_t n = 0;
    std::vector<std::uint64_t> inner_max;  // size n+1, inner_max[0] == 0
};

// Exact maximum over all m-subsets, by subset search with branch-and-bound
// (bound: current edges + complete-graph completion on the remaining picks).
std::uint64_t max_inner_edges(const Graph& g, std::size_t m, const ExactLimits& limits = {});

// One exhaustive sweep shares work across all sizes.
EipProfile eip_profile(const Graph& g, const ExactLimits& limits = {});

DeltaSequence delta_from_profile(const EipProfile& profile);
DeltaSequence delta_from_graph(const Graph& g, const ExactLimits& limits = {});

struct OrderSearchResult {
    bool found = false;
    std::vector<std::size_t> order;  // permutation of 0..n-1 when found
};

// Depth-first search over chains of optimal sets, memoizing visited sets.
// The search is exhaustive, so found == false is a proof at this size.
OrderSearchResult find_nested_order(const Graph& g, const ExactLimits& limits = {});

// For a k-regular graph: checks I(n-m) == I(m) + k*n/2 - k*m for all m,
// the edge-count consequence of complement duality of optimal sets.
bool complement_duality_check(const Graph& g, const ExactLimits& limits = {});

} // namespace eip
