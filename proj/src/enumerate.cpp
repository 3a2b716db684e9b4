#include "gel/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "gel/charpoly.hpp"
#include "gel/error.hpp"
#include "gel/isomorphism.hpp"

namespace gel {

const char* to_string(EnumerationFlag f) noexcept {
  switch (f) {
    case EnumerationFlag::Orderenergetic: return "orderenergetic";
    case EnumerationFlag::Hypoenergetic: return "hypoenergetic";
    case EnumerationFlag::Equienergetic: return "equienergetic";
  }
  return "unknown";
}

EnumerationFlag parse_enumeration_flag(std::string_view text) {
  if (text == "orderenergetic") return EnumerationFlag::Orderenergetic;
  if (text == "hypoenergetic") return EnumerationFlag::Hypoenergetic;
  if (text == "equienergetic") return EnumerationFlag::Equienergetic;
  throw Error(ErrorKind::InvalidSpec, "unknown enumeration flag '" + std::string(text) +
                                          "' (orderenergetic, hypoenergetic, equienergetic)");
}

void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n == 0) throw Error(ErrorKind::InvalidOrder, "enumeration needs n >= 1");
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorKind::Capacity, "exhaustive enumeration is limited to n <= " +
                                         std::to_string(kMaxEnumerationOrder) +
                                         "; feed larger graphs as graph6 instead");
  }
  std::vector<Graph::Edge> pairs;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  std::vector<Graph::Edge> edges;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    edges.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1) edges.push_back(pairs[k]);
    }
    visit(Graph::from_edges(n, edges));
  }
}

namespace {

class ClassIndex {
 public:
  // Returns the class index of g, registering a new class if needed.
  std::size_t add(const Graph& g, std::vector<EnumeratedClass>& classes) {
    auto& bucket = buckets_[char_poly(g).decimal_coeffs()];
    for (auto idx : bucket) {
      if (is_isomorphic(classes[idx].representative, g)) {
        ++classes[idx].labeled_count;
        return idx;
      }
    }
    classes.push_back({g, classify_energy(g), 1});
    bucket.push_back(classes.size() - 1);
    return classes.size() - 1;
  }

 private:
  std::map<std::vector<std::string>, std::vector<std::size_t>> buckets_;
};

}  // namespace

EnumerationSummary sweep_small(std::size_t n, EnumerationFlag flag) {
  EnumerationSummary summary;
  summary.n = n;
  summary.flag = flag;
  ClassIndex index;
  std::vector<EnumeratedClass> classes;

  for_each_labeled_graph(n, [&](const Graph& g) {
    ++summary.labeled_total;
    if (flag == EnumerationFlag::Equienergetic) {
      index.add(g, classes);
      return;
    }
    const auto report = classify_energy(g);
    const bool hit = flag == EnumerationFlag::Orderenergetic ? report.orderenergetic
                                                             : report.hypoenergetic;
    if (!hit) return;
    ++summary.labeled_hits;
    index.add(g, classes);
  });

  if (flag != EnumerationFlag::Equienergetic) {
    summary.classes = std::move(classes);
    return summary;
  }

  // Group classes of equal energy; all share the order n.
  std::vector<std::size_t> by_energy(classes.size());
  for (std::size_t i = 0; i < by_energy.size(); ++i) by_energy[i] = i;
  std::stable_sort(by_energy.begin(), by_energy.end(), [&](std::size_t a, std::size_t b) {
    return classes[a].report.energy < classes[b].report.energy;
  });
  std::vector<char> keep(classes.size(), 0);
  for (std::size_t start = 0; start < by_energy.size();) {
    std::size_t end = start + 1;
    while (end < by_energy.size() &&
           compare_energies(classes[by_energy[start]].report, classes[by_energy[end]].report).equal) {
      ++end;
    }
    if (end - start >= 2) {
      for (std::size_t k = start; k < end; ++k) keep[by_energy[k]] = 1;
    }
    start = end;
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!keep[i]) continue;
    summary.labeled_hits += classes[i].labeled_count;
    summary.classes.push_back(std::move(classes[i]));
  }
  return summary;
}

std::vector<Graph> enumerate_small(std::size_t n, EnumerationFlag flag) {
  auto summary = sweep_small(n, flag);
  std::vector<Graph> out;
  out.reserve(summary.classes.size());
  for (auto& c : summary.classes) out.push_back(std::move(c.representative));
  return out;
}

}  // namespace gel
