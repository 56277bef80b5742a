#include "treescope/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

namespace treescope {

BagProfiles bag_profiles(const Graph& g, const TreeDecomposition& td, const CoreDecomposition& cores) {
  return bag_profiles(td_stats(g, td, cores));
}

BagProfiles bag_profiles(const TDStats& stats) {
  BagProfiles out;
  std::map<std::size_t, std::pair<std::size_t, double>> by_card;  // count, density sum
  std::map<std::int32_t, std::pair<std::size_t, double>> by_ecc;   // count, core sum
  for (const auto& b : stats.bags) {
    auto& c = by_card[b.cardinality];
    ++c.first;
    c.second += b.density;
    auto& e = by_ecc[b.eccentricity];
    ++e.first;
    e.second += b.avg_core;
  }
  const double total = static_cast<double>(stats.bags.size());
  std::size_t running = 0;
  for (const auto& [card, agg] : by_card) {
    running += agg.first;
    out.cardinality.push_back({card, agg.first, static_cast<double>(running) / total});
    out.density.push_back({card, agg.second / static_cast<double>(agg.first)});
  }
  for (const auto& [ecc, agg] : by_ecc) {
    out.core_by_eccentricity.push_back({ecc, agg.second / static_cast<double>(agg.first), agg.first});
  }
  return out;
}

namespace {

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> rank(x.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = r;
    i = j + 1;
  }
  return rank;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("spearman: series lengths differ");
  if (x.size() < 2) return 0.0;
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double mean = 0.5 * static_cast<double>(x.size() + 1);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

// ---------------------------------------------------------------------------

std::size_t bags_touching(const TreeDecomposition& td, std::span<const vertex_t> members, std::size_t n) {
  std::vector<char> in_set(n, 0);
  for (vertex_t v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error("cluster vertex outside the decomposition");
    in_set[v] = 1;
  }
  std::vector<char> appears(n, 0);
  std::size_t count = 0;
  for (const auto& bag : td.bags) {
    bool hit = false;
    for (vertex_t v : bag) {
      if (v >= 0 && static_cast<std::size_t>(v) < n) {
        appears[v] = 1;
        hit |= in_set[v] != 0;
      }
    }
    count += hit;
  }
  for (vertex_t v : members) {
    if (!appears[v]) throw Error("vertex " + std::to_string(v) + " does not occur in the decomposition");
  }
  return count;
}

std::vector<LocalizationRow> localize(const TreeDecomposition& td, std::span<const NCPPoint> points, std::size_t n) {
  std::vector<LocalizationRow> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    LocalizationRow row;
    row.size = p.members.size();
    row.conductance = p.conductance;
    row.bag_count = bags_touching(td, p.members, n);
    row.threshold = row.size;
    row.localized = row.bag_count < row.threshold;
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------

CommunityTable CommunityTable::load_tsv(std::istream& in, const Graph& g, std::size_t* skipped) {
  CommunityTable table(g.num_vertices());
  std::string line;
  std::size_t line_no = 0, missing = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    std::string node, label;
    if (tab == std::string::npos) {
      // Tolerate space-separated files.
      std::istringstream fields(line);
      if (!(fields >> node)) continue;
      if (!(fields >> label)) continue;  // node without a label
    } else {
      node = line.substr(0, tab);
      label = line.substr(tab + 1);
    }
    if (label.empty()) continue;
    auto v = g.find(node);
    if (!v) {
      ++missing;
      continue;
    }
    table.assign(*v, label);
  }
  if (skipped) *skipped = missing;
  return table;
}

void CommunityTable::assign(vertex_t v, const std::string& label) {
  auto id = label_id(label);
  if (!id) {
    id = static_cast<std::int32_t>(names_.size());
    names_.push_back(label);
    counts_.push_back(0);
  }
  if (label_of_[v] >= 0) --counts_[label_of_[v]];
  label_of_[v] = *id;
  ++counts_[*id];
}

std::optional<std::int32_t> CommunityTable::label_id(const std::string& label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::int32_t>(it - names_.begin());
}

double CommunityTable::fraction(std::int32_t label) const {
  return label_of_.empty() ? 0.0 : static_cast<double>(counts_[label]) / static_cast<double>(label_of_.size());
}

ClassifierResult frequent_bag_classifier(const Graph& g, const TreeDecomposition& td, const CommunityTable& table,
                                         const std::string& label) {
  if (table.num_vertices() != g.num_vertices()) throw Error("community table does not match graph");
  auto id = table.label_id(label);
  if (!id) throw Error("unknown community label '" + label + "'");

  ClassifierResult result;
  result.global_fraction = table.fraction(*id);
  const std::size_t nb = td.bags.size();
  std::vector<char> frequent(nb, 0);
  for (std::size_t b = 0; b < nb; ++b) {
    const auto& bag = td.bags[b];
    if (bag.empty()) continue;
    std::size_t hits = 0;
    for (vertex_t v : bag) hits += table.has(v, *id);
    const double share = static_cast<double>(hits) / static_cast<double>(bag.size());
    if (share > result.global_fraction) {
      frequent[b] = 1;
      ++result.frequent_bags;
    }
  }

  // Connected groups of frequent bags in the decomposition tree.
  const auto adj = td.tree_adjacency();
  std::vector<std::int32_t> group(nb, -1);
  std::vector<std::vector<std::int32_t>> groups;
  for (std::size_t b = 0; b < nb; ++b) {
    if (!frequent[b] || group[b] >= 0) continue;
    const auto gid = static_cast<std::int32_t>(groups.size());
    groups.emplace_back();
    std::vector<std::int32_t> stack{static_cast<std::int32_t>(b)};
    group[b] = gid;
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      groups.back().push_back(a);
      for (auto c : adj[a]) {
        if (frequent[c] && group[c] < 0) {
          group[c] = gid;
          stack.push_back(c);
        }
      }
    }
  }

  auto union_of = [&](const std::vector<std::int32_t>& bags) {
    std::vector<vertex_t> members;
    for (auto b : bags) members.insert(members.end(), td.bags[b].begin(), td.bags[b].end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
  };

  // Groups are discovered in order of their lowest bag id, so a strict
  // comparison keeps the lowest id on a full tie.
  std::size_t best_union = 0;
  for (const auto& grp : groups) {
    auto members = union_of(grp);
    const bool better = grp.size() > result.bags.size() ||
                        (grp.size() == result.bags.size() && members.size() > best_union);
    if (better) {
      result.bags = grp;
      best_union = members.size();
      result.members = std::move(members);
    }
  }
  std::sort(result.bags.begin(), result.bags.end());

  const std::size_t community = table.count(*id);
  std::size_t hit = 0;
  for (vertex_t v : result.members) hit += table.has(v, *id);
  result.recall = community == 0 ? 0.0 : static_cast<double>(hit) / static_cast<double>(community);
  result.precision = result.members.empty() ? 0.0 : static_cast<double>(hit) / static_cast<double>(result.members.size());
  return result;
}

}  // namespace treescope
