#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gel/classify.hpp"
#include "gel/graph.hpp"

namespace gel {

using ordered_json = nlohmann::ordered_json;

/// Inclusive integer range; "a..b" or a single "a".
struct IntRange {
  std::size_t first = 0;
  std::size_t last = 0;

  static IntRange parse(std::string_view text);
  std::vector<std::size_t> values() const;
};

/// Outcome of checking one theorem instance.
struct TheoremVerdict {
  std::string theorem_id;
  ordered_json instance = ordered_json::object();
  ordered_json expected = ordered_json::object();
  ordered_json observed = ordered_json::object();
  bool pass = false;
  // "exact" or "numeric" for ordinary checks, "vacuous" when the claim holds
  // only trivially, "precondition-failure" when the seed does not qualify.
  std::string qualifier;
  ordered_json witness;  // null on pass
};

// Verifier identifiers.
inline constexpr std::string_view kShadowOrderenergetic = "shadow-orderenergetic";
inline constexpr std::string_view kJoinEmpty = "join-empty";
inline constexpr std::string_view kSplittingOrderenergetic = "spl2-orderenergetic";
inline constexpr std::string_view kSuperpath = "superpath";
inline constexpr std::string_view kHypoClosure = "hypo-closure";
inline constexpr std::string_view kCompleteStar = "complete-star";
inline constexpr std::string_view kEquienergeticFamily = "equienergetic-family";
inline constexpr std::string_view kSmallGraphObservations = "small-graph-observations";

/// D_m(seed) is orderenergetic (and connected when seed is) for every m.
std::vector<TheoremVerdict> verify_shadow_orderenergetic(const Graph& seed, IntRange m_range);

/// For an r-regular orderenergetic seed on p vertices, seed v E(n) is
/// orderenergetic exactly when n = 4p - 2r.
std::vector<TheoremVerdict> verify_join_empty(const Graph& seed, IntRange n_range);

/// spl_2 of an orderenergetic seed is orderenergetic.
TheoremVerdict verify_spl2(const Graph& seed);

/// CSP(m) has simple eigenvalues +-1..+-m, 0 with multiplicity m(m-1),
/// energy m(m+1) equal to its order, and maximum degree 2m - 1.
std::vector<TheoremVerdict> verify_superpath(IntRange m_range);

enum class HypoOp {
  KroneckerOfHypo,       // g, h hypoenergetic
  KroneckerOrderHypo,    // g orderenergetic, h hypoenergetic
  Shadow,                // D_m(g), g hypoenergetic
  ShadowOfDuplicate,     // D_m(D(g)), g hypoenergetic
  Splitting,             // spl_m(g), g hypoenergetic, m > 2
};
const char* to_string(HypoOp op) noexcept;
HypoOp parse_hypo_op(std::string_view text);

struct HypoOperation {
  HypoOp op = HypoOp::KroneckerOfHypo;
  std::size_t m = 1;  // ignored by the Kronecker variants
};

/// Hypoenergetic graphs stay hypoenergetic under the given operation.
/// `h` is used only by the Kronecker variants.
TheoremVerdict verify_hypo_closure(const Graph& g, const Graph& h, HypoOperation op);

/// Floor bound k = floor(4 sqrt(m) / (4 sqrt(m) - (m + 1))); nullopt when the
/// denominator is not positive.
std::optional<std::size_t> complete_star_bound(std::size_t m);

/// K_{1,m} x K_p is hypoenergetic for m >= 14; for smaller m it is predicted
/// hypoenergetic iff p <= complete_star_bound(m).
std::vector<TheoremVerdict> verify_complete_star(IntRange p_range, IntRange m_range);

/// Equienergetic pairs built from duplicates and shadows, the energy and
/// integrality laws of the iterated duplicate, and the spl_2 / D_3 pair.
std::vector<TheoremVerdict> verify_equienergetic_family(const Graph& seed, IntRange m_range);

/// Exhaustive checks over all labeled graphs on n vertices (n <= 7):
/// the least maximum degree among orderenergetic graphs compared with the
/// canonical superpath of that order, and integrality of every orderenergetic
/// graph.
std::vector<TheoremVerdict> verify_small_graph_observations(std::size_t n);

/// Seeds used by the default sweeps: graphs known to be orderenergetic
/// (K_{p,p} for p <= 4, C_4, CSP(m) for m <= 5, K_2) and hypoenergetic ones
/// (stars and unbalanced complete bipartite graphs).
struct SeedCorpus {
  std::vector<Graph> orderenergetic;
  std::vector<Graph> hypoenergetic;
};
SeedCorpus seed_corpus();

/// Sorts by (theorem_id, instance) so merged runs are reproducible.
void sort_verdicts(std::vector<TheoremVerdict>& verdicts);

/// Serialized reproduction data for one graph: label, graph6, spectrum.
ordered_json graph_witness(const Graph& g);

}  // namespace gel
