#pragma once

#include <cstddef>

#include "eip/graph.hpp"

namespace eip {

Graph make_complete(std::size_t p);                 // K_p
Graph make_cycle(std::size_t p);                    // C_p, p >= 3
Graph make_path(std::size_t p);                     // path on p vertices
Graph make_hypercube(std::size_t d);                // Q_d, 2^d vertices
Graph make_complete_bipartite(std::size_t p);       // K_{p,p}
Graph make_complete_multipartite(std::size_t t, std::size_t p);  // t parts of size p
Graph make_petersen();
Graph make_clique_union(std::size_t s, std::size_t i);  // s disjoint K_i

// K_{p,p} minus the first s shift matchings {j, p + (j+k) mod p}, k < s.
Graph make_complete_bipartite_minus_matchings(std::size_t p, std::size_t s);

// K_p minus s pairwise disjoint perfect matchings (p even, s <= p-1).
// Default removal: the first s rounds of the round-robin factorization.
// p == 10, s in {3,4} use fixed matching sets instead: there the resulting
// increment sequence depends on which matchings are removed, and these sets
// reproduce the published classification data (see the matching lists in
// catalog.cpp).  Every removal set consists of disjoint perfect matchings.
Graph make_clique_minus_matchings(std::size_t p, std::size_t s);

// K_p minus the Hamiltonian cycle v -> v+1 (mod p), p >= 3.
Graph make_clique_minus_cycle(std::size_t p);

// K_p minus the two edge-disjoint circulant cycles with steps 1 and 2, p >= 5.
Graph make_clique_minus_two_cycles(std::size_t p);

// Composition realization of the H family; requires i | p.  Declared here so
// the expression builder can reach it; implemented via the composition module.
Graph make_hspi_graph(std::size_t s, std::size_t p, std::size_t i);

} // namespace eip
