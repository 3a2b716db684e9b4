#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "gel/graph.hpp"
#include "gel/isomorphism.hpp"
#include "gel/spectral.hpp"

namespace gel {

/// Relative tolerance for energy equalities that cannot be settled exactly.
inline constexpr double kEnergyRelTol = 1e-8;

/// How an energy comparison was settled.
enum class Comparison { Exact, Numeric };
const char* to_string(Comparison c) noexcept;

struct EnergyReport {
  std::size_t order = 0;
  double energy = 0.0;
  std::optional<std::int64_t> energy_exact;  // present iff the graph is integral
  bool hypoenergetic = false;                // energy < order
  bool orderenergetic = false;               // energy == order
  bool nonhypoenergetic = false;             // energy >= order
  bool hyperenergetic = false;               // energy > 2(order - 1)
  std::optional<bool> integral;              // nullopt: above the char-poly cap
  Comparison comparison = Comparison::Numeric;
  Spectrum spectrum;
  std::optional<IntegerSpectrum> exact_spectrum;
};

struct ClassifyOptions {
  double rel_tol = kEnergyRelTol;
  IsomorphismOptions isomorphism;
};

/// True when |a - b| <= rel_tol * max(|a|, |b|).
bool nearly_equal(double a, double b, double rel_tol = kEnergyRelTol) noexcept;

EnergyReport classify_energy(const Graph& g, const ClassifyOptions& options = {});

/// Equality of two energies: exact when both graphs are integral.
struct EnergyMatch {
  bool equal = false;
  Comparison comparison = Comparison::Numeric;
};
EnergyMatch compare_energies(const EnergyReport& a, const EnergyReport& b,
                             double rel_tol = kEnergyRelTol);

enum class PairVerdict {
  Equienergetic,
  Equiorderenergetic,
  Equihypoenergetic,
  NotEquienergetic,
  UndecidedIsomorphism,
};
const char* to_string(PairVerdict v) noexcept;

struct PairCertificate {
  bool same_order = false;
  EnergyReport first;
  EnergyReport second;
  bool energies_equal = false;
  Comparison energy_comparison = Comparison::Numeric;
  bool cospectral = false;
  Comparison cospectral_comparison = Comparison::Exact;
  std::optional<bool> isomorphic;  // absent when the search could not decide
  PairVerdict verdict = PairVerdict::NotEquienergetic;

  /// Any of the three equienergetic verdicts.
  bool equienergetic() const noexcept {
    return verdict == PairVerdict::Equienergetic || verdict == PairVerdict::Equiorderenergetic ||
           verdict == PairVerdict::Equihypoenergetic;
  }
};

PairCertificate certify_pair(const Graph& g, const Graph& h, const ClassifyOptions& options = {});

}  // namespace gel
