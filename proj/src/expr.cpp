#include "gel/expr.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "gel/graph_io.hpp"
#include "gel/ops.hpp"

namespace gel {

namespace {

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

struct Signature {
  GraphExpr::Kind kind;
  std::size_t graphs;      // leading graph operands
  std::size_t min_params;  // trailing integer parameters
  std::size_t max_params;
};

const std::map<std::string, Signature, std::less<>>& signatures() {
  using K = GraphExpr::Kind;
  static const std::map<std::string, Signature, std::less<>> table = {
      {"K", {K::Complete, 0, 1, 1}},
      {"C", {K::Cycle, 0, 1, 1}},
      {"P", {K::Path, 0, 1, 1}},
      {"KB", {K::CompleteBipartite, 0, 2, 2}},
      {"E", {K::Empty, 0, 1, 1}},
      {"SP", {K::Superpath, 0, 1, static_cast<std::size_t>(-1)}},
      {"CSP", {K::CanonicalSuperpath, 0, 1, 1}},
      {"kron", {K::Kronecker, 2, 0, 0}},
      {"join", {K::Join, 2, 0, 0}},
      {"union", {K::Union, 2, 0, 0}},
      {"comp", {K::Complement, 1, 0, 0}},
      {"spl", {K::Splitting, 1, 1, 1}},
      {"shadow", {K::Shadow, 1, 1, 1}},
      {"dup", {K::Duplicate, 1, 0, 1}},
  };
  return table;
}

const char* name_of(GraphExpr::Kind kind) {
  for (const auto& [name, sig] : signatures()) {
    if (sig.kind == kind) return name.c_str();
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GraphExpr parse() {
    auto e = expr();
    skip_space();
    if (pos_ != text_.size()) fail({"end of input"}, "trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) {
    std::string msg = "parse error at position " + std::to_string(pos_) + ": " + what;
    if (!expected.empty()) msg += " (expected " + join_list(expected) + ")";
    throw ParseError(pos_, std::move(expected), msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail({std::string("'") + c + "'"}, "unexpected input");
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  // Raw payload up to a delimiter.
  std::string raw() {
    const auto start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_integer() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::size_t integer() {
    skip_space();
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc{}) fail({"integer"}, "bad integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  static std::vector<std::string> atom_names() {
    std::vector<std::string> names;
    for (const auto& [name, sig] : signatures()) names.push_back(name);
    names.push_back("g6:");
    names.push_back("file:");
    return names;
  }

  GraphExpr expr() {
    skip_space();
    const auto start = pos_;
    const auto name = identifier();
    if (name.empty()) fail(atom_names(), "expected a graph expression");

    if ((name == "g6" || name == "file") && pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      GraphExpr e;
      e.kind = name == "g6" ? GraphExpr::Kind::Graph6 : GraphExpr::Kind::File;
      e.position = start;
      e.text = raw();
      if (e.text.empty()) fail({name == "g6" ? "graph6 string" : "path"}, "empty payload");
      return e;
    }

    const auto it = signatures().find(name);
    if (it == signatures().end()) {
      pos_ = start;
      fail(atom_names(), "unknown atom or operator '" + name + "'");
    }
    const auto sig = it->second;
    GraphExpr e;
    e.kind = sig.kind;
    e.position = start;

    expect('(');
    std::size_t items = 0;
    while (true) {
      if (items > 0) {
        if (peek(')')) break;
        if (!peek(',')) fail({"','", "')'"}, "unexpected input");
        ++pos_;
      }
      if (items < sig.graphs) {
        if (at_integer()) fail({"graph expression"}, name + ": operand " + std::to_string(items + 1) + " must be a graph");
        e.operands.push_back(expr());
      } else {
        if (!at_integer()) {
          if (e.params.size() >= sig.min_params) fail({"')'"}, name + ": too many arguments");
          fail({"integer"}, name + ": expected an integer parameter");
        }
        if (e.params.size() == sig.max_params) fail({"')'"}, name + ": too many arguments");
        e.params.push_back(integer());
      }
      ++items;
    }
    if (e.operands.size() < sig.graphs || e.params.size() < sig.min_params) {
      fail({"','"}, name + ": too few arguments");
    }
    expect(')');
    validate(name, e, start);
    return e;
  }

  void validate(const std::string& name, const GraphExpr& e, std::size_t start) {
    auto bad = [&](const std::string& why) {
      pos_ = start;
      fail({}, name + ": " + why);
    };
    using K = GraphExpr::Kind;
    switch (e.kind) {
      case K::Complete:
      case K::Path:
      case K::Empty:
      case K::CanonicalSuperpath:
        if (e.params[0] < 1) bad("order must be at least 1");
        break;
      case K::Cycle:
        if (e.params[0] < 3) bad("cycle needs at least 3 vertices");
        break;
      case K::CompleteBipartite:
      case K::Superpath:
        for (auto v : e.params) {
          if (v < 1) bad("part sizes must be at least 1");
        }
        break;
      case K::Splitting:
      case K::Shadow:
        if (e.params[0] < 1) bad("m must be at least 1");
        break;
      default:
        break;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& message)
    : Error(ErrorKind::Parse, message), position_(position), expected_(std::move(expected)) {}

std::string GraphExpr::to_string() const {
  if (kind == Kind::Graph6) return "g6:" + text;
  if (kind == Kind::File) return "file:" + text;
  std::string out = name_of(kind);
  out += '(';
  bool first = true;
  for (const auto& o : operands) {
    if (!first) out += ',';
    out += o.to_string();
    first = false;
  }
  for (auto p : params) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  out += ')';
  return out;
}

GraphExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

Graph evaluate(const GraphExpr& e) {
  using K = GraphExpr::Kind;
  Graph g = [&]() -> Graph {
    switch (e.kind) {
      case K::Complete: return complete(e.params[0]);
      case K::Cycle: return cycle(e.params[0]);
      case K::Path: return path(e.params[0]);
      case K::CompleteBipartite: return complete_bipartite(e.params[0], e.params[1]);
      case K::Empty: return empty(e.params[0]);
      case K::Superpath: return superpath({e.params});
      case K::CanonicalSuperpath: return canonical_superpath(e.params[0]);
      case K::Graph6: return from_graph6(e.text);
      case K::File: return read_graph_file(e.text);
      case K::Kronecker: return kronecker(evaluate(e.operands[0]), evaluate(e.operands[1]));
      case K::Join: return join(evaluate(e.operands[0]), evaluate(e.operands[1]));
      case K::Union: return disjoint_union(evaluate(e.operands[0]), evaluate(e.operands[1]));
      case K::Complement: return complement(evaluate(e.operands[0]));
      case K::Splitting: return splitting(evaluate(e.operands[0]), e.params[0]);
      case K::Shadow: return shadow(evaluate(e.operands[0]), e.params[0]);
      case K::Duplicate:
        return e.params.empty() ? duplicate(evaluate(e.operands[0]))
                                : duplicate_iter(evaluate(e.operands[0]), e.params[0]);
    }
    throw Error(ErrorKind::InvalidSpec, "unhandled expression kind");
  }();
  return g.with_label(e.to_string());
}

Graph build_graph(std::string_view text) { return evaluate(parse_expr(text)); }

}  // namespace gel
