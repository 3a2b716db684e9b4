#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gel/charpoly.hpp"
#include "gel/graph.hpp"
#include "gel/jacobi.hpp"

namespace gel {

/// Eigenvalues closer than this are reported as one value with multiplicity.
inline constexpr double kClusterGap = 1e-7;

struct EigenGroup {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // descending, with repetition
  std::vector<EigenGroup> groups;   // descending distinct values

  std::size_t size() const noexcept { return eigenvalues.size(); }
};

struct IntegerEigenvalue {
  std::int64_t value = 0;
  std::size_t multiplicity = 0;
  friend bool operator==(const IntegerEigenvalue&, const IntegerEigenvalue&) = default;
};

/// Exact spectrum of an integral graph, descending distinct values.
using IntegerSpectrum = std::vector<IntegerEigenvalue>;

std::vector<EigenGroup> cluster_eigenvalues(const std::vector<double>& descending,
                                            double gap = kClusterGap);

Spectrum spectrum(const Graph& g, const JacobiOptions& options = {});

/// Sum of absolute eigenvalues.
double energy(const Graph& g);
double energy(const Spectrum& s);

/// Splits the characteristic polynomial over the integers by synthetic
/// division at the rounded numeric eigenvalues. Returns nullopt when some
/// factor is left over. A numeric eigenvalue further than 1e-6 from every
/// integer rejects early without touching the polynomial; a positive answer is
/// always backed by exact division.
std::optional<IntegerSpectrum> integer_spectrum(const Graph& g, const Spectrum& numeric);
std::optional<IntegerSpectrum> integer_spectrum(const Graph& g);
std::optional<IntegerSpectrum> factor_integer_roots(const CharPoly& poly,
                                                    const std::vector<double>& candidates);

bool is_integral(const Graph& g);

/// Same order and identical characteristic polynomials.
bool cospectral(const Graph& g, const Graph& h);

std::int64_t integer_energy(const IntegerSpectrum& s);
/// Exact energy when the graph is integral.
std::optional<std::int64_t> energy_closed_form(const Graph& g);

}  // namespace gel
