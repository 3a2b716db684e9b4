#include "gel/isomorphism.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "gel/error.hpp"

namespace gel {

namespace {

// Degree followed by the sorted degrees of the neighbours.
using Signature = std::vector<std::size_t>;

std::vector<Signature> signatures(const Graph& g) {
  const auto deg = g.degrees();
  std::vector<Signature> out(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    Signature s;
    for (std::size_t w = 0; w < g.order(); ++w) {
      if (g.adjacent(v, w)) s.push_back(deg[w]);
    }
    std::sort(s.begin(), s.end());
    s.insert(s.begin(), deg[v]);
    out[v] = std::move(s);
  }
  return out;
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, std::size_t budget)
      : g_(g), h_(h), budget_(budget), sig_g_(signatures(g)), sig_h_(signatures(h)),
        map_(g.order(), kUnmapped), used_(h.order(), 0) {
    order_vertices();
  }

  bool signatures_compatible() const {
    auto a = sig_g_;
    auto b = sig_h_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool search(std::size_t depth) {
    if (depth == sequence_.size()) return true;
    if (++nodes_ > budget_) {
      throw Error(ErrorKind::Undecidable,
                  "isomorphism search exceeded " + std::to_string(budget_) + " nodes");
    }
    const auto v = sequence_[depth];
    for (std::size_t w = 0; w < h_.order(); ++w) {
      if (used_[w] || sig_h_[w] != sig_g_[v] || !consistent(v, w, depth)) continue;
      map_[v] = w;
      used_[w] = 1;
      if (search(depth + 1)) return true;
      used_[w] = 0;
      map_[v] = kUnmapped;
    }
    return false;
  }

 private:
  static constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

  bool consistent(std::size_t v, std::size_t w, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const auto u = sequence_[k];
      if (g_.adjacent(u, v) != h_.adjacent(map_[u], w)) return false;
    }
    return true;
  }

  // Greedy ordering: prefer vertices with many already-placed neighbours,
  // then higher degree, so adjacency constraints bite early.
  void order_vertices() {
    const auto n = g_.order();
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n || links[v] > links[best] ||
            (links[v] == links[best] && g_.degree(v) > g_.degree(best))) {
          best = v;
        }
      }
      placed[best] = 1;
      sequence_.push_back(best);
      for (std::size_t w = 0; w < n; ++w) {
        if (g_.adjacent(best, w)) ++links[w];
      }
    }
  }

  const Graph& g_;
  const Graph& h_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<Signature> sig_g_;
  std::vector<Signature> sig_h_;
  std::vector<std::size_t> map_;
  std::vector<char> used_;
  std::vector<std::size_t> sequence_;
};

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h, const IsomorphismOptions& options) {
  if (g.order() > options.max_order || h.order() > options.max_order) {
    throw Error(ErrorKind::Undecidable, "isomorphism check limited to order " +
                                            std::to_string(options.max_order));
  }
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  Matcher matcher(g, h, options.node_budget);
  if (!matcher.signatures_compatible()) return false;
  return matcher.search(0);
}

}  // namespace gel
