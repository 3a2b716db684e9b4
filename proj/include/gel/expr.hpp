#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gel/error.hpp"
#include "gel/graph.hpp"

namespace gel {

// Grammar:
//   expr  := name '(' args ')' | 'g6:' <graph6 bytes> | 'file:' <path>
//   args  := item (',' item)*
//   item  := expr | integer
// Atoms:     K(p) C(p) P(m) KB(r,s) E(n) SP(a1,...,ak) CSP(m)
// Operators: kron(G,H) join(G,H) union(G,H) comp(G) spl(G,m) shadow(G,m)
//            dup(G) dup(G,m)
struct GraphExpr {
  enum class Kind {
    Complete,
    Cycle,
    Path,
    CompleteBipartite,
    Empty,
    Superpath,
    CanonicalSuperpath,
    Graph6,
    File,
    Kronecker,
    Join,
    Union,
    Complement,
    Splitting,
    Shadow,
    Duplicate,
  };

  Kind kind = Kind::Complete;
  std::vector<std::size_t> params;
  std::vector<GraphExpr> operands;
  std::string text;  // graph6 payload or file path
  std::size_t position = 0;

  /// Canonical source text, e.g. "join(C(4),E(12))".
  std::string to_string() const;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& message);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

GraphExpr parse_expr(std::string_view text);
Graph evaluate(const GraphExpr& expr);
/// parse_expr then evaluate; the result is labelled with the canonical text.
Graph build_graph(std::string_view text);

}  // namespace gel
