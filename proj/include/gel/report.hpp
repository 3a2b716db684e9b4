#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gel/charpoly.hpp"
#include "gel/classify.hpp"
#include "gel/spectral.hpp"

namespace gel {

struct TheoremVerdict;
using ordered_json = nlohmann::ordered_json;

/// Ten significant digits; values within 1e-9 of an integer print as that integer.
std::string format_number(double value);

ordered_json to_json(const Spectrum& s);
ordered_json to_json(const IntegerSpectrum& s);
/// Coefficients in ascending powers, as decimal strings.
ordered_json to_json(const CharPoly& p);
ordered_json to_json(const EnergyReport& r);
ordered_json to_json(const PairCertificate& c);
ordered_json to_json(const TheoremVerdict& v);

/// "order,energy,hypoenergetic,orderenergetic,nonhypoenergetic,hyperenergetic,integral"
std::string csv_header();
std::string csv_row(const EnergyReport& r);

/// Theorem id | instances | passes | failures
std::string markdown_summary(const std::vector<TheoremVerdict>& verdicts);

}  // namespace gel
