#include "eip/compose.hpp"

#include <algorithm>
#include <numeric>

#include "eip/catalog.hpp"

namespace eip {

namespace {

bool is_permutation_of_vertices(const std::vector<std::size_t>& order, std::size_t n) {
    if (order.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (std::size_t v : order) {
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

EipProfile prefix_profile(const Graph& g, const std::vector<std::size_t>& order) {
    EipProfile profile;
    profile.n = g.size();
    profile.inner_max.assign(g.size() + 1, 0);
    VertexSet prefix(g.size());
    std::uint64_t edges = 0;
    for (std::size_t m = 0; m < order.size(); ++m) {
        edges += g.neighbors(order[m]).count_and(prefix);
        prefix.set(order[m]);
        profile.inner_max[m + 1] = edges;
    }
    return profile;
}

} // namespace

OrderedGraph make_ordered_graph(Graph g, std::vector<std::size_t> order,
                                const ExactLimits& limits) {
    if (!is_permutation_of_vertices(order, g.size()))
        throw input_error("order must be a permutation of the graph's vertices");
    OrderedGraph og;
    og.profile = prefix_profile(g, order);
    og.graph = std::move(g);
    og.order = std::move(order);
    if (og.graph.size() <= limits.order_max_n) {
        EipProfile exact = eip_profile(og.graph, limits);
        for (std::size_t m = 0; m <= og.graph.size(); ++m)
            if (exact.inner_max[m] != og.profile.inner_max[m])
                throw input_error("order prefix of size " + std::to_string(m) +
                                  " is not an optimal set (" +
                                  std::to_string(og.profile.inner_max[m]) + " < " +
                                  std::to_string(exact.inner_max[m]) + " edges)");
        og.order_verified = true;
    }
    return og;
}

OrderedGraph ordered_by_search(const Graph& g, const ExactLimits& limits) {
    OrderSearchResult res = find_nested_order(g, limits);
    if (!res.found) throw input_error("graph admits no nested order");
    return make_ordered_graph(g, std::move(res.order), limits);
}

DeltaSequence delta_of(const OrderedGraph& og) {
    return delta_from_profile(og.profile);
}

Partial partial_graph(const OrderedGraph& og, std::size_t size, const ExactLimits& limits) {
    if (size < 1 || size > og.graph.size())
        throw input_error("partial size must be between 1 and the parent size");
    Graph sub(size);
    // position of each chosen vertex within the prefix
    std::vector<std::size_t> pos(og.graph.size(), static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < size; ++k) pos[og.order[k]] = k;
    for (std::size_t k = 0; k < size; ++k) {
        og.graph.neighbors(og.order[k]).for_each([&](std::size_t u) {
            if (pos[u] != static_cast<std::size_t>(-1) && pos[u] > k) sub.add_edge(k, pos[u]);
        });
    }
    std::vector<std::size_t> identity(size);
    std::iota(identity.begin(), identity.end(), std::size_t{0});

    Partial part;
    part.parent_graph = og.graph;
    part.parent_order = og.order;
    part.size = size;
    part.graph = make_ordered_graph(std::move(sub), std::move(identity), limits);
    return part;
}

OrderedGraph compose_ordered(const std::vector<Partial>& partials, const ExactLimits& limits) {
    if (partials.empty()) throw input_error("composition needs at least one partial");
    for (std::size_t j = 1; j < partials.size(); ++j) {
        if (partials[j].parent_graph != partials[0].parent_graph ||
            partials[j].parent_order != partials[0].parent_order)
            throw input_error("composition requires partials of one common parent");
        if (partials[j].size > partials[j - 1].size)
            throw input_error("composition requires nonincreasing partial sizes");
    }

    std::size_t total = 0;
    for (const auto& part : partials) total += part.size;
    Graph composed(total);

    std::vector<std::size_t> offset(partials.size(), 0);
    for (std::size_t j = 1; j < partials.size(); ++j)
        offset[j] = offset[j - 1] + partials[j - 1].size;

    for (std::size_t j = 0; j < partials.size(); ++j) {
        const Graph& sub = partials[j].graph.graph;
        for (std::size_t u = 0; u < sub.size(); ++u)
            sub.neighbors(u).for_each([&](std::size_t v) {
                if (v > u) composed.add_edge(offset[j] + u, offset[j] + v);
            });
        for (std::size_t k = j + 1; k < partials.size(); ++k)
            for (std::size_t u = 0; u < partials[j].size; ++u)
                for (std::size_t v = 0; v < partials[k].size; ++v)
                    composed.add_edge(offset[j] + u, offset[k] + v);
    }

    // Sort key: (monotonic segment within own partial, partial index, position).
    struct Entry {
        std::size_t segment, partial, position;
    };
    std::vector<Entry> entries;
    entries.reserve(total);
    for (std::size_t j = 0; j < partials.size(); ++j) {
        SegmentDecomposition seg = monotonic_segments(delta_of(partials[j].graph));
        for (std::size_t k = 0; k < partials[j].size; ++k)
            entries.push_back({segment_index_of(seg, k), j, k});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.segment != b.segment) return a.segment < b.segment;
        if (a.partial != b.partial) return a.partial < b.partial;
        return a.position < b.position;
    });
    std::vector<std::size_t> order;
    order.reserve(total);
    for (const Entry& e : entries)
        order.push_back(offset[e.partial] + partials[e.partial].graph.order[e.position]);

    return make_ordered_graph(std::move(composed), std::move(order), limits);
}

OrderedGraph realize_hspi(const HspiParams& params, const ExactLimits& limits) {
    if (params.p % params.i != 0)
        throw input_error("this realization requires i to divide p (composition of p/i copies)");
    Graph cliques = make_clique_union(params.s, params.i);
    std::vector<std::size_t> identity(cliques.size());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    // Clique-by-clique order; optimal for a disjoint union of equal cliques.
    OrderedGraph base = make_ordered_graph(std::move(cliques), std::move(identity), limits);

    std::vector<Partial> copies(params.p / params.i, partial_graph(base, base.graph.size(), limits));
    OrderedGraph composed = compose_ordered(copies, limits);

    if (composed.order_verified && delta_of(composed) != hspi_delta(params))
        throw std::logic_error("composition produced an unexpected increment sequence");
    return composed;
}

bool verify_monotonic_structure(const OrderedGraph& og, const ExactLimits& limits) {
    if (og.graph.size() > limits.order_max_n)
        throw capacity_error("monotonic structure verification capped at " +
                             std::to_string(limits.order_max_n) + " vertices");
    DeltaSequence d = delta_of(og);
    SegmentDecomposition seg = monotonic_segments(d);
    std::size_t n = og.graph.size();

    std::vector<VertexSet> sets;
    for (auto [a, b] : seg.segments) {
        VertexSet s(n);
        for (std::size_t k = a; k <= b; ++k) s.set(og.order[k]);
        sets.push_back(std::move(s));
    }

    VertexSet earlier(n);
    for (std::size_t idx = 0; idx < sets.size(); ++idx) {
        auto [a, b] = seg.segments[idx];
        // (a) the monotonic set induces a clique
        auto members = sets[idx].members();
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y)
                if (!og.graph.has_edge(members[x], members[y])) return false;
        // (b) each member sees exactly d[a] vertices among the earlier sets
        std::size_t expected = static_cast<std::size_t>(d[a]);
        for (std::size_t v : members)
            if (og.graph.neighbors(v).count_and(earlier) != expected) return false;
        // (c) members of later sets never see more of the earlier sets
        for (std::size_t later = idx + 1; later < sets.size(); ++later) {
            bool ok = true;
            sets[later].for_each([&](std::size_t v) {
                if (og.graph.neighbors(v).count_and(earlier) > expected) ok = false;
            });
            if (!ok) return false;
        }
        earlier |= sets[idx];
    }
    return true;
}

nlohmann::json ordered_graph_json(const OrderedGraph& og) {
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t u = 0; u < og.graph.size(); ++u)
        og.graph.neighbors(u).for_each([&](std::size_t v) {
            if (v > u) edges.push_back({u, v});
        });
    return nlohmann::json{{"n", og.graph.size()},
                          {"edges", std::move(edges)},
                          {"order", og.order},
                          {"order_verified", og.order_verified}};
}

} // namespace eip
