#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "eip/delta.hpp"
#include "eip/exact.hpp"
#include "eip/graph.hpp"

namespace eip {

// A graph together with a vertex order whose every prefix is an optimal set.
// order_verified is true when the prefixes were re-checked exhaustively;
// above the search cap the order is carried as asserted by construction and
// the flag stays false.
struct OrderedGraph {
    Graph graph;
    std::vector<std::size_t> order;
    EipProfile profile;          // I(m) of the prefixes (== exact optimum when verified)
    bool order_verified = false;
};

// Wraps a graph with a claimed order; verifies prefix optimality when the
// graph fits the exhaustive cap, otherwise records prefix counts unverified.
OrderedGraph make_ordered_graph(Graph g, std::vector<std::size_t> order,
                                const ExactLimits& limits = {});

// Finds an order by exhaustive chain search; throws input_error if none exists.
OrderedGraph ordered_by_search(const Graph& g, const ExactLimits& limits = {});

DeltaSequence delta_of(const OrderedGraph& og);

// Subgraph induced by the first `size` vertices of the parent's order, with
// the inherited order.
struct Partial {
    Graph parent_graph;
    std::vector<std::size_t> parent_order;
    std::size_t size = 0;
    OrderedGraph graph;
};

Partial partial_graph(const OrderedGraph& og, std::size_t size, const ExactLimits& limits = {});

// Iterated join of partials of one common parent (sizes nonincreasing).  The
// composed order interleaves by (monotonic segment, partial index, inner
// position) and is re-verified when the total size fits the cap.
OrderedGraph compose_ordered(const std::vector<Partial>& partials,
                             const ExactLimits& limits = {});

// Disjoint union of s cliques of size i, composed p/i times; the result's
// increment sequence is hspi_delta(params).  Requires i | p.
OrderedGraph realize_hspi(const HspiParams& params, const ExactLimits& limits = {});

// For each monotonic set: (a) it induces a clique; (b) each member has exactly
// delta(segment start) neighbors among all earlier monotonic sets; (c) members
// of later sets never beat that count against the same earlier sets.
bool verify_monotonic_structure(const OrderedGraph& og, const ExactLimits& limits = {});

// Graph JSON plus an "order" integer array.
nlohmann::json ordered_graph_json(const OrderedGraph& og);

} // namespace eip
