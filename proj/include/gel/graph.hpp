#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gel {

/// Simple undirected graph stored as a dense 0/1 adjacency matrix.
///
/// Values are immutable once built. Every constructor validates symmetry,
/// the zero diagonal and order >= 1, so any Graph in hand satisfies them.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Row-major p*p matrix of 0/1 entries.
  static Graph from_adjacency(std::size_t order, std::vector<std::uint8_t> adjacency,
                              std::string label = {});
  static Graph from_edges(std::size_t order, std::span<const Edge> edges,
                          std::string label = {});

  std::size_t order() const noexcept { return order_; }
  const std::string& label() const noexcept { return label_; }
  Graph with_label(std::string label) const;

  bool adjacent(std::size_t i, std::size_t j) const noexcept {
    return adjacency_[i * order_ + j] != 0;
  }
  std::span<const std::uint8_t> row(std::size_t i) const noexcept {
    return {adjacency_.data() + i * order_, order_};
  }
  const std::vector<std::uint8_t>& adjacency() const noexcept { return adjacency_; }

  std::size_t degree(std::size_t v) const noexcept;
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const noexcept;
  std::size_t edge_count() const noexcept;
  std::vector<Edge> edges() const;
  std::vector<std::vector<std::size_t>> neighbors() const;

  /// Common degree when every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const noexcept;
  bool is_connected() const;
  bool is_edgeless() const noexcept { return edge_count() == 0; }

  /// Structural equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.order_ == b.order_ && a.adjacency_ == b.adjacency_;
  }

 private:
  Graph(std::size_t order, std::vector<std::uint8_t> adjacency, std::string label)
      : order_(order), adjacency_(std::move(adjacency)), label_(std::move(label)) {}

  std::size_t order_;
  std::vector<std::uint8_t> adjacency_;
  std::string label_;
};

/// Block sizes of a superpath, left to right along the underlying path.
struct SuperpathSpec {
  std::vector<std::size_t> parts;
};

Graph complete(std::size_t p);
Graph empty(std::size_t n);
Graph cycle(std::size_t p);
Graph path(std::size_t m);
Graph complete_bipartite(std::size_t r, std::size_t s);
Graph superpath(const SuperpathSpec& spec);

// SP(m, 1, m-1, 2, ..., 2, m-1, 1, m): length 2m, palindromic, order m(m+1).
SuperpathSpec canonical_superpath_spec(std::size_t m);
Graph canonical_superpath(std::size_t m);

Graph complement(const Graph& g);
/// Block diagonal: vertices of g first, then h.
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace gel
