#include "gel/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "gel/classify.hpp"
#include "gel/enumerate.hpp"
#include "gel/error.hpp"
#include "gel/expr.hpp"
#include "gel/graph_io.hpp"
#include "gel/harness.hpp"
#include "gel/limits.hpp"
#include "gel/report.hpp"
#include "gel/spectral.hpp"

namespace gel {

namespace {

class VerificationFailed : public std::runtime_error {
 public:
  VerificationFailed() : std::runtime_error("verification failed") {}
};

// Verifier parameters collected from --seed/--n/... and --param k=v.
class Params {
 public:
  void set(const std::string& key, const std::string& value) { values_[key] = value; }

  void absorb(const std::vector<std::string>& pairs) {
    for (const auto& kv : pairs) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw Error(ErrorKind::Parse, "--param expects key=value, got '" + kv + "'");
      }
      values_[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }
  Graph graph(const std::string& key, const std::string& fallback) const {
    return build_graph(text(key, fallback));
  }
  IntRange range(const std::string& key, const std::string& fallback) const {
    return IntRange::parse(text(key, fallback));
  }

 private:
  std::map<std::string, std::string> values_;
};

using Verifier = std::function<std::vector<TheoremVerdict>(const Params&)>;

const std::map<std::string, Verifier>& verifiers() {
  static const std::map<std::string, Verifier> table = {
      {std::string(kShadowOrderenergetic),
       [](const Params& p) {
         return verify_shadow_orderenergetic(p.graph("seed", "C(4)"), p.range("m", "1..5"));
       }},
      {std::string(kJoinEmpty),
       [](const Params& p) {
         return verify_join_empty(p.graph("seed", "C(4)"), p.range("n", "1..40"));
       }},
      {std::string(kSplittingOrderenergetic),
       [](const Params& p) {
         return std::vector<TheoremVerdict>{verify_spl2(p.graph("seed", "C(4)"))};
       }},
      {std::string(kSuperpath),
       [](const Params& p) { return verify_superpath(p.range("m", "1..6")); }},
      {std::string(kHypoClosure),
       [](const Params& p) {
         const auto g = p.graph("g", p.text("seed", "KB(1,3)"));
         const auto h = p.graph("h", p.text("other", "KB(1,2)"));
         HypoOperation op{parse_hypo_op(p.text("op", "kron-hypo-hypo")),
                          IntRange::parse(p.text("m", "3")).first};
         return std::vector<TheoremVerdict>{verify_hypo_closure(g, h, op)};
       }},
      {std::string(kCompleteStar),
       [](const Params& p) {
         return verify_complete_star(p.range("p", "2..10"), p.range("m", "2..20"));
       }},
      {std::string(kEquienergeticFamily),
       [](const Params& p) {
         return verify_equienergetic_family(p.graph("seed", "K(2)"), p.range("m", "1..3"));
       }},
      {std::string(kSmallGraphObservations),
       [](const Params& p) {
         return verify_small_graph_observations(p.range("n", "6").first);
       }},
  };
  return table;
}

// Theorem-number aliases accepted by `verify`.
const std::map<std::string, std::string>& verifier_aliases() {
  static const std::map<std::string, std::string> table = {
      {"thm-3.1", std::string(kShadowOrderenergetic)},
      {"thm-3.2", std::string(kJoinEmpty)},
      {"thm-3.3", std::string(kSplittingOrderenergetic)},
      {"thm-3.4", std::string(kSuperpath)},
      {"cor-3.5", std::string(kSuperpath)},
      {"cor-3.6", std::string(kSuperpath)},
      {"prop-4.1", std::string(kHypoClosure)},
      {"prop-4.2", std::string(kHypoClosure)},
      {"prop-4.3", std::string(kHypoClosure)},
      {"prop-4.5", std::string(kHypoClosure)},
      {"thm-4.6", std::string(kCompleteStar)},
      {"rem-4.7", std::string(kCompleteStar)},
      {"prop-5.1", std::string(kEquienergeticFamily)},
      {"prop-5.2", std::string(kEquienergeticFamily)},
      {"prop-5.3", std::string(kEquienergeticFamily)},
      {"prop-5.4", std::string(kEquienergeticFamily)},
      {"prop-5.5", std::string(kEquienergeticFamily)},
      {"prop-5.6", std::string(kEquienergeticFamily)},
      {"obs-1", std::string(kSmallGraphObservations)},
      {"obs-2", std::string(kSmallGraphObservations)},
  };
  return table;
}

std::string spectrum_text(const Spectrum& s) {
  std::ostringstream out;
  for (const auto& g : s.groups) {
    out << format_number(g.value);
    if (g.multiplicity > 1) out << '^' << g.multiplicity;
    out << ' ';
  }
  std::string text = out.str();
  if (!text.empty()) text.pop_back();
  return text;
}

std::string integer_spectrum_text(const IntegerSpectrum& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ' ';
    out << s[i].value;
    if (s[i].multiplicity > 1) out << '^' << s[i].multiplicity;
  }
  return out.str();
}

std::string energy_text(const EnergyReport& r) {
  return r.energy_exact ? std::to_string(*r.energy_exact) : format_number(r.energy);
}

std::string flags_text(const EnergyReport& r) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ' ';
    out += name;
  };
  add(r.hypoenergetic, "hypoenergetic");
  add(r.orderenergetic, "orderenergetic");
  add(r.nonhypoenergetic, "nonhypoenergetic");
  add(r.hyperenergetic, "hyperenergetic");
  if (r.integral.has_value()) {
    add(true, *r.integral ? "integral" : "non-integral");
  } else {
    add(true, "integrality-undecided");
  }
  return out;
}

void apply_environment() {
  if (const char* env = std::getenv("GEL_MAX_ORDER")) {
    std::size_t v = 0;
    const std::string s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0) {
      throw Error(ErrorKind::Parse, "GEL_MAX_ORDER must be a positive integer, got '" + s + "'");
    }
    set_max_order(v);
  } else {
    set_max_order(kDefaultMaxOrder);
  }
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
  CommandResult result;
  std::ostringstream out;
  std::ostringstream err;

  CLI::App app{"Graph energy toolkit: spectra, energy classes and verified constructions", "gel"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  std::string expr_a;
  std::string expr_b;

  auto* build = app.add_subcommand("build", "Build a graph and print it");
  std::string build_format = "g6";
  build->add_option("expr", expr_a, "Graph expression")->required();
  build->add_option("--out", build_format, "Output format")
      ->check(CLI::IsMember({"g6", "edgelist"}));

  auto* spec_cmd = app.add_subcommand("spectrum", "Adjacency spectrum");
  bool exact = false;
  spec_cmd->add_option("expr", expr_a, "Graph expression")->required();
  spec_cmd->add_flag("--exact", exact, "Exact integer spectrum and characteristic polynomial");

  auto* energy_cmd = app.add_subcommand("energy", "Graph energy");
  energy_cmd->add_option("expr", expr_a, "Graph expression")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Energy classification");
  bool csv = false;
  classify_cmd->add_option("expr", expr_a, "Graph expression")->required();
  classify_cmd->add_flag("--csv", csv, "One CSV row with header");

  auto* pair_cmd = app.add_subcommand("pair", "Certify a pair of graphs");
  pair_cmd->add_option("first", expr_a, "Graph expression")->required();
  pair_cmd->add_option("second", expr_b, "Graph expression")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem verifier");
  std::string theorem;
  std::vector<std::string> param_pairs;
  std::map<std::string, std::string> named;
  verify_cmd->add_option("theorem", theorem, "Verifier id, alias, or 'all'")->required();
  verify_cmd->add_option("--param", param_pairs, "key=value parameter")->take_all();
  for (const char* key : {"seed", "other", "op", "m", "n", "p"}) {
    verify_cmd->add_option(std::string("--") + key, named[key], std::string("Parameter ") + key);
  }

  auto* enum_cmd = app.add_subcommand("enumerate", "Exhaustive small-graph sweep");
  std::size_t enum_n = 0;
  std::string enum_flag;
  enum_cmd->add_option("--n", enum_n, "Number of vertices (<= 7)")->required();
  enum_cmd->add_option("--flag", enum_flag, "orderenergetic | hypoenergetic | equienergetic")
      ->required();

  for (auto* sub : {build, spec_cmd, energy_cmd, classify_cmd, pair_cmd, verify_cmd, enum_cmd}) {
    sub->fallthrough();
  }

  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.status = code == 0 ? kExitOk : kExitUsage;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    apply_environment();
    if (build->parsed()) {
      const auto g = build_graph(expr_a);
      if (json) {
        ordered_json j;
        j["label"] = g.label();
        j["order"] = g.order();
        j["size"] = g.edge_count();
        j["graph6"] = to_graph6(g);
        out << j.dump() << '\n';
      } else if (build_format == "edgelist") {
        out << to_edge_list(g);
      } else {
        out << to_graph6(g) << '\n';
      }
    } else if (spec_cmd->parsed()) {
      const auto g = build_graph(expr_a);
      const auto s = spectrum(g);
      std::optional<IntegerSpectrum> exact_s;
      std::optional<CharPoly> poly;
      if (exact) {
        poly = char_poly(g);
        exact_s = integer_spectrum(g, s);
      }
      if (json) {
        ordered_json j;
        j["label"] = g.label();
        j["spectrum"] = to_json(s);
        if (exact) {
          j["char_poly"] = to_json(*poly);
          j["exact_spectrum"] = exact_s ? to_json(*exact_s) : ordered_json(nullptr);
        }
        out << j.dump() << '\n';
      } else if (exact) {
        out << "char_poly: " << poly->to_string() << '\n';
        out << "spectrum: " << (exact_s ? integer_spectrum_text(*exact_s) : "not integral")
            << '\n';
      } else {
        out << spectrum_text(s) << '\n';
      }
    } else if (energy_cmd->parsed()) {
      const auto r = classify_energy(build_graph(expr_a));
      if (json) {
        ordered_json j;
        j["energy"] = r.energy_exact ? ordered_json(*r.energy_exact) : ordered_json(r.energy);
        j["comparison"] = to_string(r.comparison);
        out << j.dump() << '\n';
      } else {
        out << energy_text(r) << '\n';
      }
    } else if (classify_cmd->parsed()) {
      const auto g = build_graph(expr_a);
      const auto r = classify_energy(g);
      if (json) {
        auto j = to_json(r);
        out << j.dump() << '\n';
      } else if (csv) {
        out << csv_header() << '\n' << csv_row(r) << '\n';
      } else {
        out << "graph: " << g.label() << '\n';
        out << "order: " << r.order << '\n';
        out << "energy: " << energy_text(r) << " (" << to_string(r.comparison) << ")\n";
        out << "flags: " << flags_text(r) << '\n';
      }
    } else if (pair_cmd->parsed()) {
      const auto c = certify_pair(build_graph(expr_a), build_graph(expr_b));
      if (json) {
        out << to_json(c).dump() << '\n';
      } else {
        out << "orders: " << c.first.order << ' ' << c.second.order << '\n';
        out << "energies: " << energy_text(c.first) << ' ' << energy_text(c.second) << " ("
            << to_string(c.energy_comparison) << ")\n";
        out << "cospectral: " << (c.cospectral ? "yes" : "no") << '\n';
        out << "isomorphic: "
            << (c.isomorphic ? (*c.isomorphic ? "yes" : "no") : "undecided") << '\n';
        out << "verdict: " << to_string(c.verdict) << '\n';
      }
    } else if (verify_cmd->parsed()) {
      Params params;
      for (const auto& [key, value] : named) {
        if (!value.empty()) params.set(key, value);
      }
      params.absorb(param_pairs);
      std::vector<std::string> ids;
      if (theorem == "all") {
        for (const auto& [id, fn] : verifiers()) ids.push_back(id);
      } else {
        auto alias = verifier_aliases().find(theorem);
        ids.push_back(alias == verifier_aliases().end() ? theorem : alias->second);
        if (!verifiers().count(ids.back())) {
          throw Error(ErrorKind::InvalidSpec, "unknown verifier '" + theorem + "'");
        }
      }
      std::vector<TheoremVerdict> verdicts;
      for (const auto& id : ids) {
        auto part = verifiers().at(id)(params);
        verdicts.insert(verdicts.end(), part.begin(), part.end());
      }
      bool all_pass = true;
      for (const auto& v : verdicts) all_pass = all_pass && v.pass;
      if (json) {
        for (const auto& v : verdicts) out << to_json(v).dump() << '\n';
      } else {
        out << markdown_summary(verdicts);
        for (const auto& v : verdicts) {
          if (!v.pass) out << "FAIL " << to_json(v).dump() << '\n';
        }
      }
      if (!all_pass) result.status = kExitVerificationFailed;
    } else if (enum_cmd->parsed()) {
      const auto summary = sweep_small(enum_n, parse_enumeration_flag(enum_flag));
      if (json) {
        ordered_json j;
        j["n"] = summary.n;
        j["flag"] = to_string(summary.flag);
        j["labeled_total"] = summary.labeled_total;
        j["labeled_hits"] = summary.labeled_hits;
        ordered_json reps = ordered_json::array();
        for (const auto& c : summary.classes) {
          ordered_json r;
          r["graph6"] = to_graph6(c.representative);
          r["labeled_count"] = c.labeled_count;
          r["max_degree"] = c.representative.max_degree();
          r["connected"] = c.representative.is_connected();
          r["report"] = to_json(c.report);
          reps.push_back(std::move(r));
        }
        j["classes"] = std::move(reps);
        out << j.dump() << '\n';
      } else {
        out << "# n=" << summary.n << " flag=" << to_string(summary.flag)
            << " labeled=" << summary.labeled_total << " hits=" << summary.labeled_hits
            << " classes=" << summary.classes.size() << '\n';
        for (const auto& c : summary.classes) {
          out << to_graph6(c.representative) << ' ' << energy_text(c.report)
              << " maxdeg=" << c.representative.max_degree() << ' ' << flags_text(c.report)
              << '\n';
        }
      }
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    result.status = e.kind() == ErrorKind::NumericFailure ? kExitNumeric : kExitUsage;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace gel
