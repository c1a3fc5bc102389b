#include "eip/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace eip {

Graph::Graph(std::size_t n) : n_(n) {
    if (n == 0) throw input_error("graph must have at least one vertex");
    if (n > kMaxVertices)
        throw input_error("graph size " + std::to_string(n) + " exceeds the construction cap of " +
                          std::to_string(kMaxVertices) + " vertices");
    adj_.assign(n, VertexSet(n));
}

void Graph::check_vertex(std::size_t v) const {
    if (v >= n_)
        throw input_error("vertex " + std::to_string(v) + " out of range for graph on " +
                          std::to_string(n_) + " vertices");
}

const VertexSet& Graph::neighbors(std::size_t v) const {
    check_vertex(v);
    return adj_[v];
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
}

std::size_t Graph::degree(std::size_t v) const {
    check_vertex(v);
    return adj_[v].count();
}

std::uint64_t Graph::edge_count() const {
    std::uint64_t twice = 0;
    for (std::size_t v = 0; v < n_; ++v) twice += adj_[v].count();
    return twice / 2;
}

std::optional<std::size_t> Graph::regular_degree() const {
    if (n_ == 0) return std::nullopt;
    std::size_t d = adj_[0].count();
    for (std::size_t v = 1; v < n_; ++v)
        if (adj_[v].count() != d) return std::nullopt;
    return d;
}

std::uint64_t inner_edge_count(const Graph& g, const VertexSet& a) {
    if (a.universe() != g.size())
        throw input_error("vertex set universe does not match graph size");
    std::uint64_t twice = 0;
    a.for_each([&](std::size_t v) { twice += g.neighbors(v).count_and(a); });
    return twice / 2;
}

std::uint64_t cross_edge_count(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.universe() != g.size() || b.universe() != g.size())
        throw input_error("vertex set universe does not match graph size");
    std::uint64_t c = 0;
    a.for_each([&](std::size_t u) { c += g.neighbors(u).count_and(b); });
    return c;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    std::size_t ng = g.size(), nh = h.size();
    if (ng > kMaxVertices / nh)
        throw input_error("cartesian product size overflows the construction cap");
    Graph out(ng * nh);
    for (std::size_t x = 0; x < ng; ++x) {
        for (std::size_t y = 0; y < nh; ++y) {
            std::size_t base = x * nh + y;
            h.neighbors(y).for_each([&](std::size_t v) {
                if (v > y) out.add_edge(base, x * nh + v);
            });
            g.neighbors(x).for_each([&](std::size_t u) {
                if (u > x) out.add_edge(base, u * nh + y);
            });
        }
    }
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::size_t ng = g.size(), nh = h.size();
    if (ng + nh > kMaxVertices)
        throw input_error("disjoint union size overflows the construction cap");
    Graph out(ng + nh);
    for (std::size_t u = 0; u < ng; ++u)
        g.neighbors(u).for_each([&](std::size_t v) {
            if (v > u) out.add_edge(u, v);
        });
    for (std::size_t u = 0; u < nh; ++u)
        h.neighbors(u).for_each([&](std::size_t v) {
            if (v > u) out.add_edge(ng + u, ng + v);
        });
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = 0; v < h.size(); ++v) out.add_edge(u, g.size() + v);
    return out;
}

Graph complement(const Graph& g) {
    Graph out(g.size());
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

OneFactorization round_robin_one_factorization(std::size_t p) {
    if (p < 2 || p % 2 != 0)
        throw input_error("one-factorization requires an even vertex count, got " +
                          std::to_string(p));
    OneFactorization f;
    std::size_t m = p - 1;
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<std::pair<std::size_t, std::size_t>> matching;
        matching.emplace_back(std::min(r, p - 1), std::max(r, p - 1));
        for (std::size_t k = 1; k <= (p - 2) / 2; ++k) {
            std::size_t a = (r + m - k) % m;
            std::size_t b = (r + k) % m;
            matching.emplace_back(std::min(a, b), std::max(a, b));
        }
        f.matchings.push_back(std::move(matching));
    }
    return f;
}

Graph read_graph_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw input_error(R"(graph JSON must be {"n": <int>, "edges": [[u,v], ...]})");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw input_error("graph JSON: \"n\" must be a positive integer");
    std::size_t n = j["n"].get<std::size_t>();
    Graph g(n);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw input_error("graph JSON: each edge must be a pair of integers");
        long long u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || v < 0 || !(u < v) || static_cast<std::size_t>(v) >= n)
            throw input_error("graph JSON: edge [" + std::to_string(u) + "," + std::to_string(v) +
                              "] violates 0 <= u < v < n");
        if (g.has_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v)))
            throw input_error("graph JSON: duplicate edge [" + std::to_string(u) + "," +
                              std::to_string(v) + "]");
        g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    return g;
}

Graph read_graph_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return read_graph_json(in);
}

void write_graph_json(const Graph& g, std::ostream& out) {
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t u = 0; u < g.size(); ++u)
        g.neighbors(u).for_each([&](std::size_t v) {
            if (v > u) edges.push_back({u, v});
        });
    nlohmann::json j{{"n", g.size()}, {"edges", std::move(edges)}};
    out << j.dump(2) << '\n';
}

} // namespace eip
