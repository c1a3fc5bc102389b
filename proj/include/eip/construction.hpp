#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eip/graph.hpp"

namespace eip {

// Abstract syntax for graph construction expressions, e.g.
//   prod(K(3),K(3))     complement(union(C(5),C(5)))     KmM(10,3)
// Atoms take integer parameters; prod/join/union take >= 2 subexpressions,
// complement exactly one.
struct ConstructionExpr {
    std::string head;
    std::vector<long long> params;        // atom parameters
    std::vector<ConstructionExpr> args;   // combinator arguments

    bool operator==(const ConstructionExpr&) const = default;
};

// Recursive descent, whitespace-insensitive; errors carry the byte offset.
ConstructionExpr parse_construction(std::string_view text);

// Canonical form; parsing the result yields an identical tree.
std::string to_string(const ConstructionExpr& expr);

Graph build_graph(const ConstructionExpr& expr);

// Convenience: file path (graph JSON) if such a file exists, else expression.
Graph graph_from_file_or_expr(const std::string& spec);

} // namespace eip
