#include "eip/exact.hpp"

#include <algorithm>
#include <bit>

namespace eip {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v)
        g.neighbors(v).for_each([&](std::size_t u) { adj[v] |= std::uint32_t{1} << u; });
    return adj;
}

void check_profile_capacity(const Graph& g, const ExactLimits& limits) {
    if (g.size() > limits.profile_max_n || g.size() > 31)
        throw capacity_error(
            "graph on " + std::to_string(g.size()) + " vertices exceeds the exhaustive cap of " +
            std::to_string(std::min<std::size_t>(limits.profile_max_n, 31)) +
            "; for squares of ordered graphs use the downset engine instead");
}

struct ProfileSweep {
    const std::vector<std::uint32_t>& adj;
    std::size_t n;
    std::vector<std::uint64_t>& best;  // best[k] over all k-subsets seen so far

    // Extends the current set by vertices above `last` only, so every subset
    // is visited exactly once.  A subtree is skipped when the completion
    // bound cannot improve best[k+j] for any feasible j.
    void expand(std::size_t last, std::uint32_t mask, std::uint64_t edges, std::size_t k) {
        bool useful = false;
        std::size_t remaining = n - (last + 1);
        for (std::size_t j = 1; j <= remaining; ++j) {
            std::uint64_t bound = edges + static_cast<std::uint64_t>(j) * (j - 1) / 2 +
                                  static_cast<std::uint64_t>(j) * k;
            if (bound > best[k + j]) {
                useful = true;
                break;
            }
        }
        if (!useful) return;
        for (std::size_t v = last + 1; v < n; ++v) {
            std::uint32_t bit = std::uint32_t{1} << v;
            std::uint64_t e2 = edges + static_cast<std::uint64_t>(std::popcount(adj[v] & mask));
            if (e2 > best[k + 1]) best[k + 1] = e2;
            expand(v, mask | bit, e2, k + 1);
        }
    }
};

} // namespace

EipProfile eip_profile(const Graph& g, const ExactLimits& limits) {
    check_profile_capacity(g, limits);
    std::size_t n = g.size();
    auto adj = adjacency_masks(g);
    std::vector<std::uint64_t> best(n + 1, 0);
    ProfileSweep sweep{adj, n, best};
    sweep.expand(static_cast<std::size_t>(-1), 0, 0, 0);
    return EipProfile{n, std::move(best)};
}

std::uint64_t max_inner_edges(const Graph& g, std::size_t m, const ExactLimits& limits) {
    check_profile_capacity(g, limits);
    if (m > g.size())
        throw input_error("subset size " + std::to_string(m) + " exceeds vertex count");
    if (m < 2) return 0;
    std::size_t n = g.size();
    auto adj = adjacency_masks(g);
    std::uint64_t best = 0;

    // Fixed-size variant of the sweep: only chains that can still reach m.
    struct Rec {
        const std::vector<std::uint32_t>& adj;
        std::size_t n, m;
        std::uint64_t& best;

        void expand(std::size_t last, std::uint32_t mask, std::uint64_t edges, std::size_t k) {
            if (k == m) {
                if (edges > best) best = edges;
                return;
            }
            std::size_t j = m - k;
            std::uint64_t bound = edges + static_cast<std::uint64_t>(j) * (j - 1) / 2 +
                                  static_cast<std::uint64_t>(j) * k;
            if (bound <= best) return;
            for (std::size_t v = last + 1; v + (m - k) <= n; ++v) {
                std::uint64_t e2 =
                    edges + static_cast<std::uint64_t>(std::popcount(adj[v] & mask));
                expand(v, mask | (std::uint32_t{1} << v), e2, k + 1);
            }
        }
    };
    Rec{adj, n, m, best}.expand(static_cast<std::size_t>(-1), 0, 0, 0);
    return best;
}

DeltaSequence delta_from_profile(const EipProfile& profile) {
    std::vector<int> v(profile.n);
    for (std::size_t m = 1; m <= profile.n; ++m)
        v[m - 1] = static_cast<int>(profile.inner_max[m] - profile.inner_max[m - 1]);
    return DeltaSequence(std::move(v));
}

DeltaSequence delta_from_graph(const Graph& g, const ExactLimits& limits) {
    return delta_from_profile(eip_profile(g, limits));
}

OrderSearchResult find_nested_order(const Graph& g, const ExactLimits& limits) {
    if (g.size() > limits.order_max_n || g.size() > 31)
        throw capacity_error("nested-order search capped at " +
                             std::to_string(std::min<std::size_t>(limits.order_max_n, 31)) +
                             " vertices, got " + std::to_string(g.size()));
    std::size_t n = g.size();
    EipProfile profile = eip_profile(g, limits);
    auto adj = adjacency_masks(g);

    std::vector<std::uint64_t> visited((std::size_t{1} << n) / 64 + 1, 0);
    auto mark = [&](std::uint32_t mask) {
        visited[mask >> 6] |= std::uint64_t{1} << (mask & 63);
    };
    auto seen = [&](std::uint32_t mask) {
        return (visited[mask >> 6] >> (mask & 63)) & 1u;
    };

    OrderSearchResult result;
    result.order.reserve(n);

    struct Rec {
        std::size_t n;
        const std::vector<std::uint32_t>& adj;
        const std::vector<std::uint64_t>& best;
        decltype(mark)& mark_fn;
        decltype(seen)& seen_fn;
        std::vector<std::size_t>& order;

        bool grow(std::uint32_t mask, std::uint64_t edges, std::size_t k) {
            if (k == n) return true;
            for (std::size_t v = 0; v < n; ++v) {
                std::uint32_t bit = std::uint32_t{1} << v;
                if (mask & bit) continue;
                std::uint64_t e2 =
                    edges + static_cast<std::uint64_t>(std::popcount(adj[v] & mask));
                if (e2 != best[k + 1]) continue;
                std::uint32_t m2 = mask | bit;
                if (seen_fn(m2)) continue;
                mark_fn(m2);
                order.push_back(v);
                if (grow(m2, e2, k + 1)) return true;
                order.pop_back();
            }
            return false;
        }
    };
    Rec rec{n, adj, profile.inner_max, mark, seen, result.order};
    result.found = rec.grow(0, 0, 0);
    if (!result.found) result.order.clear();
    return result;
}

bool complement_duality_check(const Graph& g, const ExactLimits& limits) {
    auto k = g.regular_degree();
    if (!k) throw input_error("complement duality check requires a regular graph");
    EipProfile profile = eip_profile(g, limits);
    std::size_t n = g.size();
    std::int64_t total = static_cast<std::int64_t>(g.edge_count());  // k*n/2
    for (std::size_t m = 0; m <= n; ++m) {
        std::int64_t lhs = static_cast<std::int64_t>(profile.inner_max[n - m]);
        std::int64_t rhs = static_cast<std::int64_t>(profile.inner_max[m]) + total -
                           static_cast<std::int64_t>(*k) * static_cast<std::int64_t>(m);
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace eip
