#pragma once

#include <cstddef>

#include "gel/graph.hpp"
#include "gel/limits.hpp"

namespace gel {

struct IsomorphismOptions {
  std::size_t max_order = kDefaultIsomorphismCap;
  std::size_t node_budget = kDefaultIsomorphismNodeBudget;
};

/// Exact isomorphism test by backtracking over vertex classes refined by
/// degree and neighbour-degree multiset. Throws Error{Undecidable} when either
/// graph exceeds options.max_order or the search exhausts its node budget.
bool is_isomorphic(const Graph& g, const Graph& h, const IsomorphismOptions& options = {});

}  // namespace gel
