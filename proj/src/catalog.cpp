#include "eip/catalog.hpp"

#include <array>
#include <utility>

#include "eip/compose.hpp"
#include "eip/errors.hpp"

namespace eip {

Graph make_complete(std::size_t p) {
    Graph g(p);
    for (std::size_t u = 0; u < p; ++u)
        for (std::size_t v = u + 1; v < p; ++v) g.add_edge(u, v);
    return g;
}

Graph make_cycle(std::size_t p) {
    if (p < 3) throw input_error("cycle requires p >= 3");
    Graph g(p);
    for (std::size_t v = 0; v < p; ++v) g.add_edge(v, (v + 1) % p);
    return g;
}

Graph make_path(std::size_t p) {
    Graph g(p);
    for (std::size_t v = 0; v + 1 < p; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_hypercube(std::size_t d) {
    if (d > 15) throw input_error("hypercube dimension capped at 15");
    std::size_t n = std::size_t{1} << d;
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t b = 0; b < d; ++b) {
            std::size_t v = u ^ (std::size_t{1} << b);
            if (v > u) g.add_edge(u, v);
        }
    return g;
}

Graph make_complete_bipartite(std::size_t p) {
    if (p < 1) throw input_error("complete bipartite requires p >= 1");
    Graph g(2 * p);
    for (std::size_t u = 0; u < p; ++u)
        for (std::size_t v = 0; v < p; ++v) g.add_edge(u, p + v);
    return g;
}

Graph make_complete_multipartite(std::size_t t, std::size_t p) {
    if (t < 1 || p < 1) throw input_error("complete multipartite requires t >= 1 and p >= 1");
    if (t > kMaxVertices / p) throw input_error("complete multipartite size overflows the cap");
    std::size_t n = t * p;
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (u / p != v / p) g.add_edge(u, v);
    return g;
}

Graph make_petersen() {
    Graph g(10);
    for (std::size_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);              // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);      // inner pentagram
        g.add_edge(i, 5 + i);                    // spokes
    }
    return g;
}

Graph make_clique_union(std::size_t s, std::size_t i) {
    if (s < 1 || i < 1) throw input_error("clique union requires s >= 1 and i >= 1");
    if (s > kMaxVertices / i) throw input_error("clique union size overflows the cap");
    Graph g(s * i);
    for (std::size_t c = 0; c < s; ++c)
        for (std::size_t u = 0; u < i; ++u)
            for (std::size_t v = u + 1; v < i; ++v) g.add_edge(c * i + u, c * i + v);
    return g;
}

Graph make_complete_bipartite_minus_matchings(std::size_t p, std::size_t s) {
    if (s > p) throw input_error("cannot remove more than p matchings from K_{p,p}");
    Graph g(2 * p);
    for (std::size_t u = 0; u < p; ++u)
        for (std::size_t v = 0; v < p; ++v) {
            // matching k pairs j with p + (j+k) mod p
            std::size_t k = (v + p - u) % p;
            if (k >= s) g.add_edge(u, p + v);
        }
    return g;
}

namespace {

using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

// Fixed removal sets for K_10 - 3M and K_10 - 4M.  Outside s <= p/4 the
// increment sequence of K_p - sM depends on which disjoint matchings are
// removed; these sets are the ones whose removal reproduces the published
// length-10 classification rows.  The 3M union is a triangular prism on
// 0..5 plus a K_4 on 6..9; the 4M union is the circulant with steps {1,2}.
const std::array<Matching, 3> k10_minus_3m_matchings = {{
    {{0, 1}, {2, 5}, {3, 4}, {6, 7}, {8, 9}},
    {{0, 2}, {1, 4}, {3, 5}, {6, 8}, {7, 9}},
    {{0, 3}, {1, 2}, {4, 5}, {6, 9}, {7, 8}},
}};

const std::array<Matching, 4> k10_minus_4m_matchings = {{
    {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}},
    {{0, 2}, {1, 9}, {3, 4}, {5, 6}, {7, 8}},
    {{0, 8}, {1, 2}, {3, 5}, {4, 6}, {7, 9}},
    {{0, 9}, {1, 3}, {2, 4}, {5, 7}, {6, 8}},
}};

Graph clique_minus_matching_list(std::size_t p, const std::vector<Matching>& matchings) {
    Graph g = make_complete(p);
    Graph removed(p);
    for (const auto& matching : matchings)
        for (auto [u, v] : matching) {
            if (removed.has_edge(u, v))
                throw input_error("matchings to remove are not edge-disjoint");
            removed.add_edge(u, v);
        }
    Graph out(p);
    for (std::size_t u = 0; u < p; ++u)
        for (std::size_t v = u + 1; v < p; ++v)
            if (!removed.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

} // namespace

Graph make_clique_minus_matchings(std::size_t p, std::size_t s) {
    if (p < 2 || p % 2 != 0)
        throw input_error("K_p - sM requires even p (perfect matchings must exist)");
    if (s < 1 || s > p - 1)
        throw input_error("K_p - sM requires 1 <= s <= p-1");
    std::vector<Matching> chosen;
    if (p == 10 && s == 3) {
        chosen.assign(k10_minus_3m_matchings.begin(), k10_minus_3m_matchings.end());
    } else if (p == 10 && s == 4) {
        chosen.assign(k10_minus_4m_matchings.begin(), k10_minus_4m_matchings.end());
    } else {
        OneFactorization f = round_robin_one_factorization(p);
        for (std::size_t k = 0; k < s; ++k) chosen.push_back(f.matchings[k]);
    }
    return clique_minus_matching_list(p, chosen);
}

Graph make_clique_minus_cycle(std::size_t p) {
    if (p < 3) throw input_error("K_p - C_p requires p >= 3");
    Graph g(p);
    for (std::size_t u = 0; u < p; ++u)
        for (std::size_t v = u + 1; v < p; ++v) {
            std::size_t diff = v - u;
            if (diff != 1 && diff != p - 1) g.add_edge(u, v);
        }
    return g;
}

Graph make_clique_minus_two_cycles(std::size_t p) {
    if (p < 5) throw input_error("K_p - 2C_p requires p >= 5");
    Graph g(p);
    for (std::size_t u = 0; u < p; ++u)
        for (std::size_t v = u + 1; v < p; ++v) {
            std::size_t diff = v - u;
            if (diff != 1 && diff != p - 1 && diff != 2 && diff != p - 2) g.add_edge(u, v);
        }
    return g;
}

Graph make_hspi_graph(std::size_t s, std::size_t p, std::size_t i) {
    return realize_hspi(HspiParams(s, p, i)).graph;
}

} // namespace eip
