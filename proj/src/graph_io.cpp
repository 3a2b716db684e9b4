#include "gel/graph_io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "gel/error.hpp"
#include "gel/limits.hpp"

namespace gel {

namespace {

constexpr int kBias = 63;

void put_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  }
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) {
    throw Error(ErrorKind::Parse, std::string("graph6: byte '") + c + "' outside 63..126");
  }
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const auto n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Error(ErrorKind::Parse, "graph6: empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() > 1 && text[1] != '~') {
    if (text.size() < 4) throw Error(ErrorKind::Parse, "graph6: truncated size header");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | static_cast<std::size_t>(sextet(text[pos]));
  } else {
    if (text.size() < 8) throw Error(ErrorKind::Parse, "graph6: truncated size header");
    for (pos = 2; pos < 8; ++pos) n = (n << 6) | static_cast<std::size_t>(sextet(text[pos]));
  }
  if (n == 0) throw Error(ErrorKind::InvalidOrder, "graph6: graph with no vertices");
  check_capacity(n, "graph6");

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw Error(ErrorKind::Parse, "graph6: expected " + std::to_string(bytes) +
                                      " data bytes for order " + std::to_string(n) + ", got " +
                                      std::to_string(text.size() - pos));
  }
  std::vector<std::uint8_t> adj(n * n, 0);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) adj[i * n + j] = adj[j * n + i] = 1;
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((sextet(text[pos + k / 6]) >> (5 - k % 6)) & 1) {
      throw Error(ErrorKind::Parse, "graph6: non-zero padding bits");
    }
  }
  return Graph::from_adjacency(n, std::move(adj), "g6:" + std::string(text));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [i, j] : edges) out << i << ' ' << j << '\n';
  return out.str();
}

Graph from_edge_list(std::istream& in) {
  long long p = -1;
  long long q = -1;
  if (!(in >> p >> q) || p < 0 || q < 0) {
    throw Error(ErrorKind::Parse, "edge list: expected header 'p q'");
  }
  if (p == 0) throw Error(ErrorKind::InvalidOrder, "edge list: graph with no vertices");
  check_capacity(static_cast<std::size_t>(p), "edge list");
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(q));
  for (long long e = 0; e < q; ++e) {
    long long i = -1;
    long long j = -1;
    if (!(in >> i >> j)) {
      throw Error(ErrorKind::Parse, "edge list: expected " + std::to_string(q) +
                                        " edges, read " + std::to_string(e));
    }
    if (i < 0 || j < 0 || i >= j || j >= p) {
      throw Error(ErrorKind::Parse, "edge list: edge " + std::to_string(i) + " " +
                                        std::to_string(j) + " must satisfy 0 <= i < j < p");
    }
    edges.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  const auto n = static_cast<std::size_t>(p);
  const auto g = Graph::from_edges(n, edges);
  if (g.edge_count() != edges.size()) throw Error(ErrorKind::Parse, "edge list: repeated edge");
  return g;
}

Graph read_graph_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + file.string());
  std::string first;
  in >> first;
  const bool numeric = !first.empty() && std::isdigit(static_cast<unsigned char>(first[0]));
  in.clear();
  in.seekg(0);
  Graph g = numeric ? from_edge_list(in) : from_graph6(first);
  return g.with_label("file:" + file.string());
}

}  // namespace gel
