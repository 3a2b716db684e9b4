#include "gel/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gel {

namespace {
constexpr double kIntegerSlack = 1e-6;
}

std::vector<EigenGroup> cluster_eigenvalues(const std::vector<double>& values, double gap) {
  std::vector<EigenGroup> groups;
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || values[i - 1] - values[i] > gap) {
      if (!groups.empty()) groups.back().value = sum / groups.back().multiplicity;
      groups.push_back({values[i], 0});
      sum = 0.0;
    }
    sum += values[i];
    ++groups.back().multiplicity;
  }
  if (!groups.empty()) groups.back().value = sum / groups.back().multiplicity;
  return groups;
}

Spectrum spectrum(const Graph& g, const JacobiOptions& options) {
  std::vector<double> a(g.adjacency().begin(), g.adjacency().end());
  auto result = jacobi_eigenvalues(std::move(a), g.order(), options);
  Spectrum s;
  s.eigenvalues = std::move(result.eigenvalues);
  s.groups = cluster_eigenvalues(s.eigenvalues);
  return s;
}

double energy(const Spectrum& s) {
  return std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0,
                         [](double acc, double v) { return acc + std::fabs(v); });
}

double energy(const Graph& g) { return energy(spectrum(g)); }

std::optional<IntegerSpectrum> factor_integer_roots(const CharPoly& poly,
                                                    const std::vector<double>& candidates) {
  std::vector<std::int64_t> roots;
  for (double v : candidates) roots.push_back(std::llround(v));
  std::sort(roots.begin(), roots.end(), std::greater<>());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  IntegerSpectrum out;
  CharPoly rest = poly;
  for (auto r : roots) {
    std::size_t mult = 0;
    while (rest.degree() > 0) {
      BigInt rem;
      CharPoly q = rest.divide_linear(BigInt(r), rem);
      if (rem != 0) break;
      rest = std::move(q);
      ++mult;
    }
    if (mult > 0) out.push_back({r, mult});
  }
  if (rest.degree() != 0) return std::nullopt;
  return out;
}

std::optional<IntegerSpectrum> integer_spectrum(const Graph& g, const Spectrum& numeric) {
  for (double v : numeric.eigenvalues) {
    if (std::fabs(v - std::round(v)) > kIntegerSlack) return std::nullopt;
  }
  return factor_integer_roots(char_poly(g), numeric.eigenvalues);
}

std::optional<IntegerSpectrum> integer_spectrum(const Graph& g) {
  return integer_spectrum(g, spectrum(g));
}

bool is_integral(const Graph& g) { return integer_spectrum(g).has_value(); }

bool cospectral(const Graph& g, const Graph& h) {
  return g.order() == h.order() && char_poly(g) == char_poly(h);
}

std::int64_t integer_energy(const IntegerSpectrum& s) {
  std::int64_t total = 0;
  for (const auto& e : s) total += (e.value < 0 ? -e.value : e.value) * static_cast<std::int64_t>(e.multiplicity);
  return total;
}

std::optional<std::int64_t> energy_closed_form(const Graph& g) {
  auto s = integer_spectrum(g);
  if (!s) return std::nullopt;
  return integer_energy(*s);
}

}  // namespace gel
