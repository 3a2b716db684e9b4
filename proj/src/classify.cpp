#include "gel/classify.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <utility>

#include "gel/error.hpp"

namespace gel {

const char* to_string(Comparison c) noexcept {
  return c == Comparison::Exact ? "exact" : "numeric";
}

const char* to_string(PairVerdict v) noexcept {
  switch (v) {
    case PairVerdict::Equienergetic: return "equienergetic";
    case PairVerdict::Equiorderenergetic: return "equiorderenergetic";
    case PairVerdict::Equihypoenergetic: return "equihypoenergetic";
    case PairVerdict::NotEquienergetic: return "not-equienergetic";
    case PairVerdict::UndecidedIsomorphism: return "undecided-isomorphism";
  }
  return "unknown";
}

bool nearly_equal(double a, double b, double rel_tol) noexcept {
  return std::fabs(a - b) <= rel_tol * std::max(std::fabs(a), std::fabs(b));
}

EnergyReport classify_energy(const Graph& g, const ClassifyOptions& options) {
  EnergyReport r;
  r.order = g.order();
  r.spectrum = spectrum(g);
  r.energy = energy(r.spectrum);
  try {
    r.exact_spectrum = integer_spectrum(g, r.spectrum);
    r.integral = r.exact_spectrum.has_value();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Capacity) throw;
  }

  const auto p = static_cast<std::int64_t>(r.order);
  const std::int64_t complete_energy = 2 * (p - 1);
  if (r.exact_spectrum) {
    const auto e = integer_energy(*r.exact_spectrum);
    r.energy_exact = e;
    r.comparison = Comparison::Exact;
    r.hypoenergetic = e < p;
    r.orderenergetic = e == p;
    r.hyperenergetic = e > complete_energy;
  } else {
    const double order = static_cast<double>(p);
    r.comparison = Comparison::Numeric;
    r.orderenergetic = nearly_equal(r.energy, order, options.rel_tol);
    r.hypoenergetic = !r.orderenergetic && r.energy < order;
    r.hyperenergetic = r.energy > static_cast<double>(complete_energy) &&
                       !nearly_equal(r.energy, static_cast<double>(complete_energy), options.rel_tol);
  }
  r.nonhypoenergetic = !r.hypoenergetic;
  return r;
}

EnergyMatch compare_energies(const EnergyReport& a, const EnergyReport& b, double rel_tol) {
  if (a.energy_exact && b.energy_exact) return {*a.energy_exact == *b.energy_exact, Comparison::Exact};
  return {nearly_equal(a.energy, b.energy, rel_tol), Comparison::Numeric};
}

namespace {

// Exact when both polynomials fit under the char-poly cap, else eigenvalue by
// eigenvalue at the energy tolerance.
std::pair<bool, Comparison> compare_spectra(const Graph& g, const Graph& h,
                                            const EnergyReport& a, const EnergyReport& b,
                                            double rel_tol) {
  if (g.order() != h.order()) return {false, Comparison::Exact};
  try {
    return {cospectral(g, h), Comparison::Exact};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Capacity) throw;
  }
  const auto& x = a.spectrum.eigenvalues;
  const auto& y = b.spectrum.eigenvalues;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::fabs(x[i] - y[i]) > rel_tol * std::max(1.0, std::fabs(x[i]))) {
      return {false, Comparison::Numeric};
    }
  }
  return {true, Comparison::Numeric};
}

}  // namespace

PairCertificate certify_pair(const Graph& g, const Graph& h, const ClassifyOptions& options) {
  PairCertificate c;
  c.same_order = g.order() == h.order();
  c.first = classify_energy(g, options);
  c.second = classify_energy(h, options);
  const auto match = compare_energies(c.first, c.second, options.rel_tol);
  c.energies_equal = match.equal;
  c.energy_comparison = match.comparison;
  std::tie(c.cospectral, c.cospectral_comparison) =
      compare_spectra(g, h, c.first, c.second, options.rel_tol);

  if (!c.cospectral) {
    c.isomorphic = false;
  } else {
    try {
      c.isomorphic = is_isomorphic(g, h, options.isomorphism);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Undecidable) throw;
    }
  }

  if (!c.same_order || !c.energies_equal || c.isomorphic.value_or(false)) {
    c.verdict = PairVerdict::NotEquienergetic;
  } else if (!c.isomorphic.has_value()) {
    c.verdict = PairVerdict::UndecidedIsomorphism;
  } else if (c.first.orderenergetic && c.second.orderenergetic) {
    c.verdict = PairVerdict::Equiorderenergetic;
  } else if (c.first.hypoenergetic && c.second.hypoenergetic) {
    c.verdict = PairVerdict::Equihypoenergetic;
  } else {
    c.verdict = PairVerdict::Equienergetic;
  }
  return c;
}

}  // namespace gel
