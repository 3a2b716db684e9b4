#pragma once

// Test-only reference routes, independent of the library's Faddeev-LeVerrier
// and Jacobi code paths.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <vector>

#include "gel/graph.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using RatPoly = std::vector<cpp_rational>;  // ascending powers

// Fraction-free Gaussian elimination.
inline cpp_int bareiss_det(std::vector<std::vector<cpp_int>> m) {
  const std::size_t n = m.size();
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// det(xI - A) sampled at x = 0..p and interpolated (Newton form, exact rationals).
inline std::vector<cpp_int> charpoly_by_interpolation(const gel::Graph& g) {
  const std::size_t p = g.order();
  std::vector<cpp_rational> values(p + 1);
  for (std::size_t x = 0; x <= p; ++x) {
    std::vector<std::vector<cpp_int>> m(p, std::vector<cpp_int>(p));
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) m[i][j] = (i == j ? cpp_int(x) : 0) - (g.adjacent(i, j) ? 1 : 0);
    }
    values[x] = bareiss_det(m);
  }
  // Divided differences on nodes 0..p.
  std::vector<cpp_rational> dd = values;
  for (std::size_t level = 1; level <= p; ++level) {
    for (std::size_t i = p; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / cpp_rational(static_cast<long long>(level));
      if (i == level) break;
    }
  }
  // Expand sum dd[k] * prod_{j<k} (x - j).
  RatPoly result(p + 1, 0);
  RatPoly basis{1};
  for (std::size_t k = 0; k <= p; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) result[i] += dd[k] * basis[i];
    RatPoly next(basis.size() + 1, 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= basis[i] * static_cast<long long>(k);
    }
    basis = std::move(next);
  }
  std::vector<cpp_int> out;
  for (const auto& c : result) out.push_back(boost::multiprecision::numerator(c));
  return out;
}

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline cpp_rational eval(const RatPoly& p, const cpp_rational& x) {
  cpp_rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long long>(k));
  trim(d);
  return d;
}

// Quotient and remainder.
inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  RatPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = a[k + b.size() - 1] / b.back();
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline RatPoly monic(RatPoly p) {
  trim(p);
  const auto lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Yun's square-free factorisation: factors[i] has multiplicity i + 1.
inline std::vector<RatPoly> squarefree_factors(const RatPoly& f) {
  std::vector<RatPoly> out;
  const auto df = derivative(f);
  if (df.empty()) return out;
  auto a0 = gcd(f, df);
  auto b = divmod(f, a0).first;
  auto c = divmod(df, a0).first;
  auto d = sub(c, derivative(b));
  while (b.size() > 1) {
    auto a = gcd(b, d);
    out.push_back(a);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = sub(c, derivative(b));
  }
  return out;
}

inline int sign(const cpp_rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Real roots of a square-free polynomial by Sturm isolation plus bisection.
inline std::vector<double> squarefree_roots(const RatPoly& s, double width = 1e-13) {
  std::vector<double> roots;
  if (s.size() <= 1) return roots;
  std::vector<RatPoly> chain{s, derivative(s)};
  while (chain.back().size() > 1) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(r);
  }
  const cpp_rational nudge = cpp_rational(1) / (cpp_int(1) << 80);
  auto variations = [&](cpp_rational x) {
    if (eval(s, x) == 0) x += nudge;
    int count = 0;
    int last = 0;
    for (const auto& p : chain) {
      const int sg = sign(eval(p, x));
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  };
  cpp_rational bound = 1;
  for (const auto& c : s) {
    cpp_rational r = c / s.back();
    if (r < 0) r = -r;
    r += 1;
    if (r > bound) bound = r;
  }
  std::function<void(cpp_rational, cpp_rational)> isolate = [&](cpp_rational lo, cpp_rational hi) {
    const int n = variations(lo) - variations(hi);
    if (n == 0) return;
    if (n == 1) {
      // One root in (lo, hi]; bisect on the sign of s.
      const int s_hi = sign(eval(s, hi));
      if (s_hi == 0) {
        roots.push_back(static_cast<double>(hi));
        return;
      }
      while (static_cast<double>(hi - lo) > width) {
        const cpp_rational mid = (lo + hi) / 2;
        const int sm = sign(eval(s, mid));
        if (sm == 0) {
          lo = hi = mid;
          break;
        }
        (sm == s_hi ? hi : lo) = mid;
      }
      roots.push_back(static_cast<double>((lo + hi) / 2));
      return;
    }
    const cpp_rational mid = (lo + hi) / 2;
    isolate(lo, mid);
    isolate(mid, hi);
  };
  isolate(-bound - cpp_rational(1, 3), bound + cpp_rational(1, 7));
  return roots;
}

// All real roots with multiplicity, descending.
inline std::vector<double> real_roots(const std::vector<cpp_int>& ascending) {
  RatPoly f;
  for (const auto& c : ascending) f.push_back(cpp_rational(c));
  trim(f);
  std::vector<double> out;
  if (f.size() == 2) {
    out.push_back(static_cast<double>(-f[0] / f[1]));
    return out;
  }
  const auto factors = squarefree_factors(f);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (double r : squarefree_roots(factors[i])) out.insert(out.end(), i + 1, r);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace oracle
