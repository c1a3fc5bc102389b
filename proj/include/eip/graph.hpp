#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eip/vertex_set.hpp"

namespace eip {

// Construction guard against parameter typos; far above anything solvable here.
inline constexpr std::size_t kMaxVertices = 1u << 16;

// Undirected simple graph: vertex count plus one neighbor bit set per vertex.
// No self-loops; adjacency is kept symmetric by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t size() const { return n_; }
    const VertexSet& neighbors(std::size_t v) const;

    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;
    std::size_t degree(std::size_t v) const;
    std::uint64_t edge_count() const;

    // Degree if all vertices share one, otherwise nullopt.
    std::optional<std::size_t> regular_degree() const;
    bool is_regular() const { return regular_degree().has_value(); }

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    bool operator==(const Graph&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<VertexSet> adj_;

    void check_vertex(std::size_t v) const;
};

// Unordered pairs {u,v} in E with both endpoints in a.
std::uint64_t inner_edge_count(const Graph& g, const VertexSet& a);

// Ordered pairs (u,v) in E with u in a, v in b.  For a == b this is twice
// inner_edge_count(g, a) since each inner edge is counted in both directions.
std::uint64_t cross_edge_count(const Graph& g, const VertexSet& a, const VertexSet& b);

// Vertex (x,y) of the product maps to index x*|V_h| + y, so the lexicographic
// order on coordinate pairs equals the natural order on indices.
Graph cartesian_product(const Graph& g, const Graph& h);

// Disjoint union plus every cross edge (h's vertices are shifted by |V_g|).
Graph join(const Graph& g, const Graph& h);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

// p-1 pairwise edge-disjoint perfect matchings of K_p, p even.
struct OneFactorization {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> matchings;
};

// Circle method: vertex p-1 fixed, the others rotate through p-1 rounds.
OneFactorization round_robin_one_factorization(std::size_t p);

// Graph file format: {"n": <int>, "edges": [[u,v], ...]} with 0 <= u < v < n.
// Duplicate edges are rejected.
Graph read_graph_json(std::istream& in);
Graph read_graph_json_file(const std::string& path);
void write_graph_json(const Graph& g, std::ostream& out);

} // namespace eip
