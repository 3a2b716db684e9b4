#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "gel/classify.hpp"
#include "gel/graph.hpp"

namespace gel {

inline constexpr std::size_t kMaxEnumerationOrder = 7;

enum class EnumerationFlag { Orderenergetic, Hypoenergetic, Equienergetic };
const char* to_string(EnumerationFlag f) noexcept;
EnumerationFlag parse_enumeration_flag(std::string_view text);

/// Calls `visit` with every labeled graph on n vertices, in edge-mask order
/// (bit k of the mask is the k-th pair of the column-major upper triangle).
void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

/// One isomorphism class among the hits.
struct EnumeratedClass {
  Graph representative;
  EnergyReport report;
  std::size_t labeled_count = 0;  // labeled graphs in the class
};

struct EnumerationSummary {
  std::size_t n = 0;
  EnumerationFlag flag = EnumerationFlag::Orderenergetic;
  std::size_t labeled_total = 0;
  std::size_t labeled_hits = 0;
  std::vector<EnumeratedClass> classes;  // first-seen order
};

/// Exhaustive labeled sweep, filtered by `flag` and reduced to isomorphism
/// classes (bucketed by characteristic polynomial, then exact isomorphism).
/// For Equienergetic, the hits are the classes sharing their energy with at
/// least one other class. Throws Error{Capacity} for n > 7.
EnumerationSummary sweep_small(std::size_t n, EnumerationFlag flag);

/// Representatives only.
std::vector<Graph> enumerate_small(std::size_t n, EnumerationFlag flag);

}  // namespace gel
