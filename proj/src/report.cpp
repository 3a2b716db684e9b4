#include "gel/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "gel/harness.hpp"

namespace gel {

std::string format_number(double value) {
  const double rounded = std::round(value);
  if (std::fabs(value - rounded) <= 1e-9 * std::max(1.0, std::fabs(value)) &&
      std::fabs(rounded) < 1e15) {
    return std::to_string(static_cast<long long>(rounded));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

namespace {
ordered_json exact_or_numeric(const EnergyReport& r) {
  if (r.energy_exact) return *r.energy_exact;
  return r.energy;
}
ordered_json optional_bool(const std::optional<bool>& b) {
  return b ? ordered_json(*b) : ordered_json(nullptr);
}
}  // namespace

ordered_json to_json(const Spectrum& s) {
  ordered_json j;
  j["eigenvalues"] = s.eigenvalues;
  ordered_json groups = ordered_json::array();
  for (const auto& g : s.groups) groups.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
  j["groups"] = std::move(groups);
  return j;
}

ordered_json to_json(const IntegerSpectrum& s) {
  ordered_json groups = ordered_json::array();
  for (const auto& g : s) groups.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
  return groups;
}

ordered_json to_json(const CharPoly& p) {
  ordered_json j;
  j["degree"] = p.degree();
  j["coeffs"] = p.decimal_coeffs();
  return j;
}

ordered_json to_json(const EnergyReport& r) {
  ordered_json j;
  j["order"] = r.order;
  j["energy"] = exact_or_numeric(r);
  j["comparison"] = to_string(r.comparison);
  j["hypoenergetic"] = r.hypoenergetic;
  j["orderenergetic"] = r.orderenergetic;
  j["nonhypoenergetic"] = r.nonhypoenergetic;
  j["hyperenergetic"] = r.hyperenergetic;
  j["integral"] = optional_bool(r.integral);
  j["tolerance"] = kEnergyRelTol;
  return j;
}

ordered_json to_json(const PairCertificate& c) {
  ordered_json j;
  j["same_order"] = c.same_order;
  j["orders"] = {c.first.order, c.second.order};
  j["energies"] = {exact_or_numeric(c.first), exact_or_numeric(c.second)};
  j["energy_comparison"] = to_string(c.energy_comparison);
  j["cospectral"] = c.cospectral;
  j["cospectral_comparison"] = to_string(c.cospectral_comparison);
  j["isomorphic"] = optional_bool(c.isomorphic);
  j["verdict"] = to_string(c.verdict);
  return j;
}

ordered_json to_json(const TheoremVerdict& v) {
  ordered_json j;
  j["theorem_id"] = v.theorem_id;
  j["instance"] = v.instance;
  j["expected"] = v.expected;
  j["observed"] = v.observed;
  j["pass"] = v.pass;
  j["qualifier"] = v.qualifier;
  j["witness"] = v.witness;
  return j;
}

std::string csv_header() {
  return "order,energy,hypoenergetic,orderenergetic,nonhypoenergetic,hyperenergetic,integral";
}

std::string csv_row(const EnergyReport& r) {
  auto flag = [](bool b) { return b ? "1" : "0"; };
  std::ostringstream out;
  out << r.order << ','
      << (r.energy_exact ? std::to_string(*r.energy_exact) : format_number(r.energy)) << ','
      << flag(r.hypoenergetic) << ',' << flag(r.orderenergetic) << ','
      << flag(r.nonhypoenergetic) << ',' << flag(r.hyperenergetic) << ','
      << (r.integral ? flag(*r.integral) : "");
  return out.str();
}

std::string markdown_summary(const std::vector<TheoremVerdict>& verdicts) {
  struct Tally {
    std::size_t runs = 0;
    std::size_t passes = 0;
  };
  std::map<std::string, Tally> tally;
  for (const auto& v : verdicts) {
    auto& t = tally[v.theorem_id];
    ++t.runs;
    if (v.pass) ++t.passes;
  }
  std::ostringstream out;
  out << "| theorem | instances | passes | failures |\n";
  out << "|---|---|---|---|\n";
  for (const auto& [id, t] : tally) {
    out << "| " << id << " | " << t.runs << " | " << t.passes << " | " << t.runs - t.passes
        << " |\n";
  }
  return out.str();
}

}  // namespace gel
