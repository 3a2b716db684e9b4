#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "gel/error.hpp"
#include "gel/limits.hpp"
#include "gel/ops.hpp"
#include "gel/spectral.hpp"

using namespace gel;

namespace {

void expect_spectrum(const Graph& g, std::vector<double> expected, double tol = 1e-9) {
  std::sort(expected.begin(), expected.end(), std::greater<>());
  const auto got = spectrum(g).eigenvalues;
  ASSERT_EQ(got.size(), expected.size()) << g.label();
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expected[i], tol) << g.label();
}

void expect_rel(double got, double expected, const std::string& what) {
  if (expected == 0.0) {
    EXPECT_NEAR(got, 0.0, 1e-9) << what;
  } else {
    EXPECT_LE(std::fabs(got - expected), 1e-8 * std::fabs(expected)) << what;
  }
}

std::vector<Graph> family() {
  return {complete(2), complete(3), complete(4), cycle(4), cycle(5), path(3), path(4),
          complete_bipartite(1, 3), complete_bipartite(2, 3), superpath({{2, 1, 1, 2}}), empty(2)};
}

}  // namespace

TEST(Kronecker, Examples) {
  const auto g = kronecker(complete_bipartite(2, 2), complete_bipartite(1, 3));
  EXPECT_EQ(g.order(), 16u);
  EXPECT_NEAR(energy(g), 8.0 * std::sqrt(3.0), 1e-9);
  EXPECT_NEAR(energy(g), 13.8564, 1e-4);

  const auto k1 = kronecker(complete(1), cycle(5));
  EXPECT_EQ(k1, empty(5));

  // Hand product of [[0,1],[1,0]] with itself: edges 0-3 and 1-2.
  const auto kk = kronecker(complete(2), complete(2));
  EXPECT_TRUE(kk.adjacent(0, 3));
  EXPECT_TRUE(kk.adjacent(1, 2));
  EXPECT_EQ(kk.edge_count(), 2u);
  expect_spectrum(kk, {1, 1, -1, -1});
}

TEST(Kronecker, VertexIndexing) {
  const auto g = path(3);
  const auto h = complete(2);
  const auto k = kronecker(g, h);
  for (std::size_t u1 = 0; u1 < 3; ++u1)
    for (std::size_t v1 = 0; v1 < 2; ++v1)
      for (std::size_t u2 = 0; u2 < 3; ++u2)
        for (std::size_t v2 = 0; v2 < 2; ++v2)
          EXPECT_EQ(k.adjacent(u1 * 2 + v1, u2 * 2 + v2), g.adjacent(u1, u2) && h.adjacent(v1, v2));
}

TEST(Join, Examples) {
  expect_spectrum(join(cycle(4), empty(12)), {8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -6});
  expect_spectrum(join(complete(2), empty(6)), {4, 0, 0, 0, 0, 0, -1, -3});
  EXPECT_EQ(join(empty(1), empty(1)), complete(2));
  const auto j = join(path(3), empty(2));
  EXPECT_TRUE(j.adjacent(0, 3));
  EXPECT_TRUE(j.adjacent(2, 4));
  EXPECT_FALSE(j.adjacent(3, 4));
}

TEST(JoinCharPoly, MatchesDirectPolynomial) {
  const std::vector<Graph> regular = {complete(1), complete(2), complete(3), cycle(4), cycle(5),
                                      empty(3),    empty(6),    empty(12),   complete_bipartite(2, 2),
                                      complete_bipartite(3, 3)};
  for (const auto& g : regular) {
    for (const auto& h : regular) {
      EXPECT_EQ(join_charpoly_regular(g, h), char_poly(join(g, h))) << g.label() << " v " << h.label();
    }
  }
  EXPECT_EQ(join_charpoly_regular(complete(1), complete(1)).to_string(), "x^2 - 1");
}

TEST(JoinCharPoly, RootsMatchSpectrum) {
  const auto poly = join_charpoly_regular(cycle(4), empty(12));
  for (double root : {8.0, 0.0, -2.0, -6.0}) EXPECT_EQ(poly.evaluate(BigInt(static_cast<int>(root))), 0);
  const auto s = integer_spectrum(join(complete(2), empty(6)));
  ASSERT_TRUE(s);
  const auto poly2 = join_charpoly_regular(complete(2), empty(6));
  EXPECT_EQ(factor_integer_roots(poly2, {4, 0, -1, -3}), s);
}

TEST(JoinCharPoly, RejectsIrregularOperands) {
  try {
    join_charpoly_regular(path(3), cycle(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RegularityViolation);
  }
}

TEST(Splitting, Examples) {
  const auto s = splitting(cycle(4), 2);
  EXPECT_EQ(s.order(), 12u);
  EXPECT_NEAR(energy(s), 12.0, 1e-9);
  EXPECT_NEAR(energy(splitting(complete(2), 1)), 2.0 * std::sqrt(5.0), 1e-9);
  EXPECT_TRUE(splitting(empty(3), 4).is_edgeless());
  EXPECT_THROW(splitting(cycle(4), 0), Error);
}

TEST(Splitting, BlockMatrix) {
  const auto g = path(3);
  const std::size_t m = 3;
  const auto s = splitting(g, m);
  const std::size_t p = g.order();
  for (std::size_t bi = 0; bi <= m; ++bi)
    for (std::size_t bj = 0; bj <= m; ++bj)
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
          const bool expected = (bi == 0 || bj == 0) && g.adjacent(i, j);
          EXPECT_EQ(s.adjacent(bi * p + i, bj * p + j), expected);
        }
}

TEST(Shadow, Examples) {
  const auto d = shadow(cycle(4), 3);
  EXPECT_EQ(d.order(), 12u);
  EXPECT_NEAR(energy(d), 12.0, 1e-9);
  EXPECT_EQ(shadow(cycle(5), 1), cycle(5));
  // J2 has eigenvalues {2, 0}; times {1, -1}.
  expect_spectrum(shadow(complete(2), 2), {2, 0, 0, -2});
  EXPECT_THROW(shadow(cycle(4), 0), Error);
}

TEST(Duplicate, Examples) {
  const auto d = duplicate(complete(2));
  EXPECT_NEAR(energy(d), 4.0, 1e-9);
  expect_spectrum(d, {1, 1, -1, -1});
  EXPECT_EQ(duplicate(empty(3)), empty(6));
  expect_spectrum(duplicate(cycle(4)), {2, 2, 0, 0, 0, 0, -2, -2});
  // Vertex i pairs with i + p, never adjacent to its own twin.
  const auto dc = duplicate(cycle(5));
  for (std::size_t i = 0; i < 5; ++i) EXPECT_FALSE(dc.adjacent(i, i + 5));
  EXPECT_TRUE(dc.adjacent(0, 6));
}

TEST(Duplicate, Iterated) {
  EXPECT_EQ(duplicate_iter(cycle(4), 0), cycle(4));
  EXPECT_EQ(duplicate_iter(cycle(4), 1), duplicate(cycle(4)));
  const auto d2 = duplicate_iter(complete(2), 2);
  EXPECT_EQ(d2.order(), 8u);
  EXPECT_NEAR(energy(d2), 8.0, 1e-9);
  for (std::size_t m = 0; m <= 4; ++m) {
    const auto d = duplicate_iter(path(3), m);
    EXPECT_EQ(d.order(), (std::size_t{1} << m) * 3);
    EXPECT_EQ(d.edge_count(), (std::size_t{1} << m) * 2);
  }
}

TEST(Capacity, ProductsRespectLimit) {
  const auto saved = max_order();
  set_max_order(64);
  EXPECT_NO_THROW(kronecker(cycle(8), cycle(8)));
  for (auto f : std::vector<std::function<void()>>{
           [] { kronecker(cycle(8), cycle(9)); }, [] { shadow(cycle(8), 9); },
           [] { splitting(cycle(8), 8); }, [] { duplicate_iter(cycle(5), 4); },
           [] { join(cycle(40), cycle(25)); }}) {
    try {
      f();
      ADD_FAILURE() << "expected capacity error";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Capacity);
    }
  }
  set_max_order(saved);
  EXPECT_EQ(max_order(), kDefaultMaxOrder);
}

TEST(EnergyLaws, KroneckerIsProduct) {
  for (const auto& g : family())
    for (const auto& h : family())
      expect_rel(energy(kronecker(g, h)), energy(g) * energy(h), g.label() + " x " + h.label());
}

TEST(EnergyLaws, ShadowScalesByM) {
  for (const auto& g : family())
    for (std::size_t m = 1; m <= 5; ++m) expect_rel(energy(shadow(g, m)), m * energy(g), g.label());
}

TEST(EnergyLaws, SplittingScalesBySqrt) {
  for (const auto& g : family())
    for (std::size_t m = 1; m <= 5; ++m)
      expect_rel(energy(splitting(g, m)), std::sqrt(1.0 + 4.0 * m) * energy(g), g.label());
}

TEST(EnergyLaws, DuplicateSpectrumIsSymmetrised) {
  for (const auto& g : family()) {
    auto expected = spectrum(g).eigenvalues;
    const auto n = expected.size();
    for (std::size_t i = 0; i < n; ++i) expected.push_back(-expected[i]);
    expect_spectrum(duplicate(g), expected);
    expect_rel(energy(duplicate(g)), 2.0 * energy(g), g.label());
  }
}

TEST(EnergyLaws, KroneckerEigenvalueProducts) {
  for (const auto& g : family()) {
    for (const auto& h : family()) {
      std::vector<double> products;
      for (double a : spectrum(g).eigenvalues)
        for (double b : spectrum(h).eigenvalues) products.push_back(a * b);
      expect_spectrum(kronecker(g, h), products, 1e-8);
    }
  }
}

TEST(EnergyLaws, DuplicateIsKroneckerWithK2) {
  for (const auto& g : family()) {
    EXPECT_EQ(char_poly(duplicate(g)), char_poly(kronecker(g, complete(2)))) << g.label();
  }
}

TEST(Convenience, BipartiteKronecker) {
  EXPECT_EQ(bipartite_kronecker(1, 3, complete(4)), kronecker(complete_bipartite(1, 3), complete(4)));
}
