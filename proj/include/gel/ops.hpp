#pragma once

#include <cstddef>

#include "gel/charpoly.hpp"
#include "gel/graph.hpp"

namespace gel {

// All composite constructions lay their vertices out deterministically so the
// resulting adjacency matrices are reproducible byte for byte. Each checks the
// result order against max_order() before allocating.

/// Tensor product; vertex (u, v) gets index u * h.order() + v.
Graph kronecker(const Graph& g, const Graph& h);

/// Vertices of g first, then h, plus every cross edge.
Graph join(const Graph& g, const Graph& h);

/// Characteristic polynomial of the join of two regular graphs, assembled from
/// the operands' own polynomials:
///   phi(g) phi(h) [(x - r1)(x - r2) - n1 n2] / [(x - r1)(x - r2)].
/// Throws Error{RegularityViolation} if either operand is not regular.
CharPoly join_charpoly_regular(const Graph& g, const Graph& h);

/// m-splitting: block b in 1..m holds the twins of the original vertices;
/// twin (b, v) is adjacent to every original neighbour of v. Twins are
/// pairwise non-adjacent.
Graph splitting(const Graph& g, std::size_t m);

/// m-shadow, adjacency J_m (x) A(G): copy c, vertex v sits at c * p + v.
Graph shadow(const Graph& g, std::size_t m);

/// Duplicate graph, adjacency [[0, A], [A, 0]]; vertex i pairs with i + p.
Graph duplicate(const Graph& g);

/// m-fold iterate of duplicate(); m = 0 returns g.
Graph duplicate_iter(const Graph& g, std::size_t m);

/// K_{r,s} x g.
Graph bipartite_kronecker(std::size_t r, std::size_t s, const Graph& g);

}  // namespace gel
