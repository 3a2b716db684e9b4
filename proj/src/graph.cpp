#include "gel/graph.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <string>

#include "gel/error.hpp"
#include "gel/limits.hpp"

namespace gel {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::InvalidGraph: return "invalid-graph";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::RegularityViolation: return "regularity-violation";
    case ErrorKind::NumericFailure: return "numeric-failure";
    case ErrorKind::Undecidable: return "undecidable";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

namespace {
std::atomic<std::size_t> g_max_order{kDefaultMaxOrder};
std::atomic<std::size_t> g_max_charpoly_order{kDefaultMaxCharPolyOrder};
}  // namespace

std::size_t max_order() noexcept { return g_max_order.load(std::memory_order_relaxed); }
void set_max_order(std::size_t order) noexcept {
  g_max_order.store(order, std::memory_order_relaxed);
}
std::size_t max_charpoly_order() noexcept {
  return g_max_charpoly_order.load(std::memory_order_relaxed);
}
void set_max_charpoly_order(std::size_t order) noexcept {
  g_max_charpoly_order.store(order, std::memory_order_relaxed);
}

void check_capacity(std::size_t order, std::string_view what) {
  if (order > max_order()) {
    throw Error(ErrorKind::Capacity, std::string(what) + ": order " + std::to_string(order) +
                                         " exceeds the limit of " +
                                         std::to_string(max_order()) + " vertices");
  }
}

std::size_t checked_product_order(std::size_t a, std::size_t b, std::string_view what) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    throw Error(ErrorKind::Capacity, std::string(what) + ": order overflows");
  }
  check_capacity(a * b, what);
  return a * b;
}

Graph Graph::from_adjacency(std::size_t order, std::vector<std::uint8_t> adjacency,
                            std::string label) {
  if (order == 0) throw Error(ErrorKind::InvalidOrder, "graph must have at least one vertex");
  if (adjacency.size() != order * order) {
    throw Error(ErrorKind::InvalidGraph, "adjacency size does not match order");
  }
  for (std::size_t i = 0; i < order; ++i) {
    if (adjacency[i * order + i] != 0) {
      throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(i));
    }
    for (std::size_t j = 0; j < order; ++j) {
      const auto a = adjacency[i * order + j];
      if (a > 1) throw Error(ErrorKind::InvalidGraph, "adjacency entries must be 0 or 1");
      if (a != adjacency[j * order + i]) {
        throw Error(ErrorKind::InvalidGraph, "adjacency is not symmetric");
      }
    }
  }
  return Graph(order, std::move(adjacency), std::move(label));
}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges, std::string label) {
  if (order == 0) throw Error(ErrorKind::InvalidOrder, "graph must have at least one vertex");
  std::vector<std::uint8_t> adj(order * order, 0);
  for (auto [i, j] : edges) {
    if (i >= order || j >= order) {
      throw Error(ErrorKind::InvalidGraph, "edge endpoint out of range");
    }
    if (i == j) throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(i));
    adj[i * order + j] = adj[j * order + i] = 1;
  }
  return Graph(order, std::move(adj), std::move(label));
}

Graph Graph::with_label(std::string label) const {
  return Graph(order_, adjacency_, std::move(label));
}

std::size_t Graph::degree(std::size_t v) const noexcept {
  auto r = row(v);
  return static_cast<std::size_t>(std::count(r.begin(), r.end(), std::uint8_t{1}));
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order_);
  for (std::size_t v = 0; v < order_; ++v) out[v] = degree(v);
  return out;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t Graph::edge_count() const noexcept {
  return static_cast<std::size_t>(
             std::count(adjacency_.begin(), adjacency_.end(), std::uint8_t{1})) /
         2;
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> Graph::neighbors() const {
  std::vector<std::vector<std::size_t>> out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      if (adjacent(i, j)) out[i].push_back(j);
    }
  }
  return out;
}

std::optional<std::size_t> Graph::regular_degree() const noexcept {
  const std::size_t d = degree(0);
  for (std::size_t v = 1; v < order_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

bool Graph::is_connected() const {
  std::vector<char> seen(order_, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < order_; ++w) {
      if (adjacent(v, w) && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order_;
}

namespace {

std::vector<std::uint8_t> zeros(std::size_t p) { return std::vector<std::uint8_t>(p * p, 0); }

void require_order(std::size_t p, std::size_t min, const char* what) {
  if (p < min) {
    throw Error(ErrorKind::InvalidOrder, std::string(what) + " needs at least " +
                                             std::to_string(min) + " vertices, got " +
                                             std::to_string(p));
  }
}

}  // namespace

Graph complete(std::size_t p) {
  require_order(p, 1, "K(p)");
  check_capacity(p, "K(p)");
  auto adj = std::vector<std::uint8_t>(p * p, 1);
  for (std::size_t i = 0; i < p; ++i) adj[i * p + i] = 0;
  return Graph::from_adjacency(p, std::move(adj), "K(" + std::to_string(p) + ")");
}

Graph empty(std::size_t n) {
  require_order(n, 1, "E(n)");
  check_capacity(n, "E(n)");
  return Graph::from_adjacency(n, zeros(n), "E(" + std::to_string(n) + ")");
}

Graph cycle(std::size_t p) {
  require_order(p, 3, "C(p)");
  check_capacity(p, "C(p)");
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < p; ++i) edges.emplace_back(i, (i + 1) % p);
  return Graph::from_edges(p, edges, "C(" + std::to_string(p) + ")");
}

Graph path(std::size_t m) {
  require_order(m, 1, "P(m)");
  check_capacity(m, "P(m)");
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(m, edges, "P(" + std::to_string(m) + ")");
}

Graph complete_bipartite(std::size_t r, std::size_t s) {
  require_order(r, 1, "KB(r,s) part r");
  require_order(s, 1, "KB(r,s) part s");
  check_capacity(r + s, "KB(r,s)");
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) edges.emplace_back(i, r + j);
  }
  return Graph::from_edges(r + s, edges,
                           "KB(" + std::to_string(r) + "," + std::to_string(s) + ")");
}

Graph superpath(const SuperpathSpec& spec) {
  if (spec.parts.empty()) throw Error(ErrorKind::InvalidSpec, "superpath needs at least one block");
  if (std::find(spec.parts.begin(), spec.parts.end(), 0u) != spec.parts.end()) {
    throw Error(ErrorKind::InvalidSpec, "superpath blocks must be non-empty");
  }
  const std::size_t p = std::accumulate(spec.parts.begin(), spec.parts.end(), std::size_t{0});
  check_capacity(p, "SP(...)");

  std::vector<std::size_t> start(spec.parts.size());
  std::exclusive_scan(spec.parts.begin(), spec.parts.end(), start.begin(), std::size_t{0});
  std::vector<Graph::Edge> edges;
  for (std::size_t b = 0; b + 1 < spec.parts.size(); ++b) {
    for (std::size_t u = 0; u < spec.parts[b]; ++u) {
      for (std::size_t w = 0; w < spec.parts[b + 1]; ++w) {
        edges.emplace_back(start[b] + u, start[b + 1] + w);
      }
    }
  }
  std::string label = "SP(";
  for (std::size_t b = 0; b < spec.parts.size(); ++b) {
    if (b) label += ',';
    label += std::to_string(spec.parts[b]);
  }
  label += ')';
  return Graph::from_edges(p, edges, std::move(label));
}

SuperpathSpec canonical_superpath_spec(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::InvalidSpec, "CSP(m) needs m >= 1");
  SuperpathSpec spec;
  spec.parts.resize(2 * m);
  // 1-based position j in the left half: odd j counts down from m, even j counts up from 1.
  for (std::size_t j = 1; j <= m; ++j) {
    spec.parts[j - 1] = (j % 2 == 1) ? m - (j - 1) / 2 : j / 2;
    spec.parts[2 * m - j] = spec.parts[j - 1];
  }
  return spec;
}

Graph canonical_superpath(std::size_t m) {
  return superpath(canonical_superpath_spec(m)).with_label("CSP(" + std::to_string(m) + ")");
}

Graph complement(const Graph& g) {
  const auto p = g.order();
  auto adj = zeros(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (i != j && !g.adjacent(i, j)) adj[i * p + j] = 1;
    }
  }
  return Graph::from_adjacency(p, std::move(adj), "comp(" + g.label() + ")");
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto p = g.order() + h.order();
  check_capacity(p, "union");
  auto adj = zeros(p);
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) adj[i * p + j] = g.adjacent(i, j);
  }
  const auto off = g.order();
  for (std::size_t i = 0; i < h.order(); ++i) {
    for (std::size_t j = 0; j < h.order(); ++j) adj[(off + i) * p + off + j] = h.adjacent(i, j);
  }
  return Graph::from_adjacency(p, std::move(adj), "union(" + g.label() + "," + h.label() + ")");
}

}  // namespace gel
