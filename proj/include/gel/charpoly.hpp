#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "gel/graph.hpp"

namespace gel {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial with coefficients in ascending powers of x:
/// coeffs[k] multiplies x^k. The zero polynomial has no coefficients.
class CharPoly {
 public:
  CharPoly() = default;
  explicit CharPoly(std::vector<BigInt> ascending);

  static CharPoly monomial(std::size_t power);
  /// x - root
  static CharPoly linear(const BigInt& root);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const BigInt& coeff(std::size_t k) const;

  BigInt evaluate(const BigInt& x) const;
  double evaluate(double x) const;

  /// Exact division by a monic divisor; throws if the remainder is non-zero.
  CharPoly divide_exact(const CharPoly& monic_divisor) const;
  /// Synthetic division by (x - root); returns the quotient and sets `remainder`.
  CharPoly divide_linear(const BigInt& root, BigInt& remainder) const;

  friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
  friend CharPoly operator-(const CharPoly& a, const CharPoly& b);
  friend bool operator==(const CharPoly& a, const CharPoly& b) = default;

  /// e.g. "x^4 - 4x^2"
  std::string to_string() const;
  std::vector<std::string> decimal_coeffs() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// det(xI - A) by the Faddeev-LeVerrier recurrence in exact integer arithmetic.
/// Throws Error{Capacity} above max_charpoly_order().
CharPoly char_poly(const Graph& g);

}  // namespace gel
