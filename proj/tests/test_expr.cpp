#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>

#include "corpus.hpp"
#include "gel/expr.hpp"
#include "gel/graph_io.hpp"
#include "gel/ops.hpp"

using namespace gel;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return ParseError(0, {}, "");
}

bool expects(const ParseError& e, const std::string& token) {
  return std::find(e.expected().begin(), e.expected().end(), token) != e.expected().end();
}

}  // namespace

TEST(Expr, Atoms) {
  EXPECT_EQ(build_graph("K(4)"), complete(4));
  EXPECT_EQ(build_graph("C(5)"), cycle(5));
  EXPECT_EQ(build_graph("P(3)"), path(3));
  EXPECT_EQ(build_graph("KB(2,3)"), complete_bipartite(2, 3));
  EXPECT_EQ(build_graph("E(4)"), empty(4));
  EXPECT_EQ(build_graph("SP(2,1,1,2)"), superpath({{2, 1, 1, 2}}));
  EXPECT_EQ(build_graph("CSP(3)"), canonical_superpath(3));
  EXPECT_EQ(build_graph("g6:C~"), complete(4));
}

TEST(Expr, Operators) {
  EXPECT_EQ(build_graph("join(C(4), E(12))"), join(cycle(4), empty(12)));
  EXPECT_EQ(build_graph("kron(K(2),K(3))"), kronecker(complete(2), complete(3)));
  EXPECT_EQ(build_graph("union(C(4),K(1))"), disjoint_union(cycle(4), complete(1)));
  EXPECT_EQ(build_graph("comp(C(5))"), complement(cycle(5)));
  EXPECT_EQ(build_graph("spl(C(4),2)"), splitting(cycle(4), 2));
  EXPECT_EQ(build_graph("shadow(C(4),3)"), shadow(cycle(4), 3));
  EXPECT_EQ(build_graph("dup(K(2))"), duplicate(complete(2)));
  EXPECT_EQ(build_graph("dup(K(2),2)"), duplicate_iter(complete(2), 2));
  EXPECT_EQ(build_graph("shadow(dup(C(4)),2)"), shadow(duplicate(cycle(4)), 2));
}

TEST(Expr, LabelIsCanonicalText) {
  EXPECT_EQ(build_graph("join( C(4) , E(12) )").label(), "join(C(4),E(12))");
}

TEST(Expr, RoundTrip) {
  for (const auto& text : testing_corpus::expressions()) {
    const auto e = parse_expr(text);
    const auto again = parse_expr(e.to_string());
    EXPECT_EQ(again.to_string(), e.to_string());
    EXPECT_EQ(evaluate(again), evaluate(e)) << text;
  }
}

TEST(Expr, FileAtom) {
  const auto path = ::testing::TempDir() + "gel_expr_atom.g6";
  {
    std::ofstream out(path);
    out << to_graph6(cycle(6)) << '\n';
  }
  EXPECT_EQ(build_graph("file:" + path), cycle(6));
}

TEST(Expr, Errors) {
  const auto unknown = parse_failure("Q(3)");
  EXPECT_EQ(unknown.position(), 0u);
  EXPECT_TRUE(expects(unknown, "K"));
  EXPECT_EQ(unknown.kind(), ErrorKind::Parse);

  const auto missing_paren = parse_failure("join(K(2) E(3))");
  EXPECT_EQ(missing_paren.position(), 10u);
  EXPECT_TRUE(expects(missing_paren, "','"));

  const auto graph_for_int = parse_failure("shadow(C(4),K(2))");
  EXPECT_TRUE(expects(graph_for_int, "integer"));

  const auto int_for_graph = parse_failure("kron(3,K(2))");
  EXPECT_TRUE(expects(int_for_graph, "graph expression"));

  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("K(3) extra"), ParseError);
  EXPECT_THROW(parse_expr("K(3,4)"), ParseError);
  EXPECT_THROW(parse_expr("KB(3)"), ParseError);
  EXPECT_THROW(parse_expr("g6:"), ParseError);
}

TEST(Expr, InvalidParametersAreRejected) {
  for (const char* text : {"C(2)", "K(0)", "spl(C(4),0)", "shadow(C(4),0)", "SP(0,1)"}) {
    EXPECT_THROW(build_graph(text), Error) << text;
  }
}
