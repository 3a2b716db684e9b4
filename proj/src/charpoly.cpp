#include "gel/charpoly.hpp"

#include <cstdint>
#include <optional>

#include "gel/error.hpp"
#include "gel/limits.hpp"

namespace gel {

CharPoly::CharPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

void CharPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

CharPoly CharPoly::monomial(std::size_t power) {
  std::vector<BigInt> c(power + 1, 0);
  c[power] = 1;
  return CharPoly(std::move(c));
}

CharPoly CharPoly::linear(const BigInt& root) { return CharPoly({-root, 1}); }

const BigInt& CharPoly::coeff(std::size_t k) const {
  static const BigInt kZero = 0;
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

BigInt CharPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double CharPoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->convert_to<double>();
  }
  return acc;
}

CharPoly CharPoly::divide_linear(const BigInt& root, BigInt& remainder) const {
  if (coeffs_.empty()) {
    remainder = 0;
    return {};
  }
  std::vector<BigInt> q(coeffs_.size() - 1);
  BigInt carry = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    carry = carry * root + coeffs_[k];
    if (k > 0) q[k - 1] = carry;
  }
  remainder = carry;
  return CharPoly(std::move(q));
}

CharPoly CharPoly::divide_exact(const CharPoly& d) const {
  if (d.is_zero() || d.coeffs_.back() != 1) {
    throw Error(ErrorKind::InvalidSpec, "divide_exact needs a monic divisor");
  }
  if (is_zero()) return {};
  if (degree() < d.degree()) throw Error(ErrorKind::NumericFailure, "inexact polynomial division");
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> q(degree() - d.degree() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt lead = rem[k + d.degree()];
    q[k] = lead;
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= d.degree(); ++i) rem[k + i] -= lead * d.coeffs_[i];
  }
  for (const auto& r : rem) {
    if (r != 0) throw Error(ErrorKind::NumericFailure, "inexact polynomial division");
  }
  return CharPoly(std::move(q));
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CharPoly(std::move(c));
}

CharPoly operator-(const CharPoly& a, const CharPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return CharPoly(std::move(c));
}

std::string CharPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

std::vector<std::string> CharPoly::decimal_coeffs() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

namespace {

bool add_into(std::int64_t& acc, std::int64_t v) { return !__builtin_add_overflow(acc, v, &acc); }
bool add_into(BigInt& acc, const BigInt& v) {
  acc += v;
  return true;
}
bool sub_into(std::int64_t& acc, std::int64_t v) { return !__builtin_sub_overflow(acc, v, &acc); }
bool sub_into(BigInt& acc, const BigInt& v) {
  acc -= v;
  return true;
}

// Faddeev-LeVerrier over integer type T. A is 0/1, so A*M reduces to summing
// neighbour rows. Returns nullopt when T overflows.
template <class T>
std::optional<std::vector<T>> faddeev_leverrier(
    std::size_t n, const std::vector<std::vector<std::size_t>>& nbrs) {
  std::vector<T> c(n + 1, T(0));
  c[n] = 1;
  std::vector<T> m(n * n, T(0));
  std::vector<T> am(n * n, T(0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I, with am holding A M_{k-1}.
    for (std::size_t i = 0; i < n; ++i) {
      if (!add_into(am[i * n + i], c[n - k + 1])) return std::nullopt;
    }
    m.swap(am);
    // am = A M_k; trace(A M_k) feeds c_{n-k}.
    T trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      T* out = &am[i * n];
      for (std::size_t j = 0; j < n; ++j) out[j] = 0;
      for (std::size_t w : nbrs[i]) {
        const T* src = &m[w * n];
        for (std::size_t j = 0; j < n; ++j) {
          if (!add_into(out[j], src[j])) return std::nullopt;
        }
      }
      if (!add_into(trace, out[i])) return std::nullopt;
    }
    // trace(A M_k) is divisible by k.
    T quotient = trace / static_cast<T>(k);
    c[n - k] = 0;
    if (!sub_into(c[n - k], quotient)) return std::nullopt;
  }
  return c;
}

}  // namespace

CharPoly char_poly(const Graph& g) {
  const auto n = g.order();
  if (n > max_charpoly_order()) {
    throw Error(ErrorKind::Capacity, "characteristic polynomial disabled above order " +
                                         std::to_string(max_charpoly_order()) + " (got " +
                                         std::to_string(n) + ")");
  }
  const auto nbrs = g.neighbors();
  if (auto small = faddeev_leverrier<std::int64_t>(n, nbrs)) {
    std::vector<BigInt> c(small->begin(), small->end());
    return CharPoly(std::move(c));
  }
  return CharPoly(*faddeev_leverrier<BigInt>(n, nbrs));
}

}  // namespace gel
