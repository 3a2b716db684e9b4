#include "gel/ops.hpp"

#include <string>
#include <vector>

#include "gel/error.hpp"
#include "gel/limits.hpp"

namespace gel {

namespace {

void require_positive(std::size_t m, const char* what) {
  if (m == 0) throw Error(ErrorKind::InvalidSpec, std::string(what) + " needs m >= 1");
}

}  // namespace

Graph kronecker(const Graph& g, const Graph& h) {
  const auto p = g.order();
  const auto q = h.order();
  const auto n = checked_product_order(p, q, "kron");
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t u1 = 0; u1 < p; ++u1) {
    for (std::size_t u2 = 0; u2 < p; ++u2) {
      if (!g.adjacent(u1, u2)) continue;
      for (std::size_t v1 = 0; v1 < q; ++v1) {
        const auto r = h.row(v1);
        std::uint8_t* dst = &adj[(u1 * q + v1) * n + u2 * q];
        for (std::size_t v2 = 0; v2 < q; ++v2) dst[v2] = r[v2];
      }
    }
  }
  return Graph::from_adjacency(n, std::move(adj), "kron(" + g.label() + "," + h.label() + ")");
}

Graph join(const Graph& g, const Graph& h) {
  const auto p = g.order();
  const auto n = p + h.order();
  check_capacity(n, "join");
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool gi = i < p;
      const bool gj = j < p;
      if (gi && gj) {
        adj[i * n + j] = g.adjacent(i, j);
      } else if (!gi && !gj) {
        adj[i * n + j] = h.adjacent(i - p, j - p);
      } else {
        adj[i * n + j] = 1;
      }
    }
  }
  return Graph::from_adjacency(n, std::move(adj), "join(" + g.label() + "," + h.label() + ")");
}

CharPoly join_charpoly_regular(const Graph& g, const Graph& h) {
  const auto r1 = g.regular_degree();
  const auto r2 = h.regular_degree();
  if (!r1 || !r2) {
    throw Error(ErrorKind::RegularityViolation,
                std::string("join_charpoly_regular: operand ") + (!r1 ? "g" : "h") +
                    " is not regular");
  }
  const auto lin1 = CharPoly::linear(BigInt(*r1));
  const auto lin2 = CharPoly::linear(BigInt(*r2));
  const auto quad = lin1 * lin2;
  const auto cross = CharPoly({BigInt(g.order()) * BigInt(h.order())});
  // The regular degree is a root of each component polynomial, so dividing
  // before multiplying keeps everything exact.
  return char_poly(g).divide_exact(lin1) * char_poly(h).divide_exact(lin2) * (quad - cross);
}

Graph splitting(const Graph& g, std::size_t m) {
  require_positive(m, "spl");
  const auto p = g.order();
  const auto n = checked_product_order(m + 1, p, "spl");
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (!g.adjacent(i, j)) continue;
      adj[i * n + j] = 1;
      for (std::size_t b = 1; b <= m; ++b) {
        adj[(b * p + i) * n + j] = 1;
        adj[i * n + b * p + j] = 1;
      }
    }
  }
  return Graph::from_adjacency(n, std::move(adj),
                               "spl(" + g.label() + "," + std::to_string(m) + ")");
}

Graph shadow(const Graph& g, std::size_t m) {
  require_positive(m, "shadow");
  const auto p = g.order();
  const auto n = checked_product_order(m, p, "shadow");
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < p; ++i) {
        const auto r = g.row(i);
        std::uint8_t* dst = &adj[(a * p + i) * n + b * p];
        for (std::size_t j = 0; j < p; ++j) dst[j] = r[j];
      }
    }
  }
  return Graph::from_adjacency(n, std::move(adj),
                               "shadow(" + g.label() + "," + std::to_string(m) + ")");
}

Graph duplicate(const Graph& g) {
  const auto p = g.order();
  const auto n = checked_product_order(2, p, "dup");
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (!g.adjacent(i, j)) continue;
      adj[i * n + p + j] = 1;
      adj[(p + i) * n + j] = 1;
    }
  }
  return Graph::from_adjacency(n, std::move(adj), "dup(" + g.label() + ")");
}

Graph duplicate_iter(const Graph& g, std::size_t m) {
  std::size_t order = g.order();
  for (std::size_t k = 0; k < m; ++k) order = checked_product_order(2, order, "dup");
  Graph out = g;
  for (std::size_t k = 0; k < m; ++k) out = duplicate(out);
  if (m <= 1) return out;
  return out.with_label("dup(" + g.label() + "," + std::to_string(m) + ")");
}

Graph bipartite_kronecker(std::size_t r, std::size_t s, const Graph& g) {
  return kronecker(complete_bipartite(r, s), g);
}

}  // namespace gel
