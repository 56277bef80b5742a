#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treescope/graph.hpp"
#include "treescope/kcore.hpp"
#include "treescope/treedecomp.hpp"

namespace treescope {

// ---------------------------------------------------------------------------
// Bag profiles

struct CardinalityBin {
  std::size_t cardinality = 0;
  std::size_t count = 0;
  double cumulative_fraction = 0.0;
};

struct DensityBin {
  std::size_t cardinality = 0;
  double mean_density = 0.0;
};

struct CoreBin {
  std::int32_t eccentricity = 0;
  double mean_core = 0.0;
  std::size_t bags = 0;
};

/// The three bag-level series: cardinality histogram with cumulative
/// fraction, mean density by cardinality, mean bag core number by tree
/// eccentricity. Each is sorted by its key.
struct BagProfiles {
  std::vector<CardinalityBin> cardinality;
  std::vector<DensityBin> density;
  std::vector<CoreBin> core_by_eccentricity;
};

BagProfiles bag_profiles(const Graph& g, const TreeDecomposition& td, const CoreDecomposition& cores);
BagProfiles bag_profiles(const TDStats& stats);

/// Spearman rank correlation (average ranks for ties). 0 when either side is constant.
double spearman(std::span<const double> x, std::span<const double> y);

// ---------------------------------------------------------------------------
// Personalized PageRank and the network community profile

struct PprResult {
  std::vector<double> ppr;       // dense, indexed by vertex
  std::vector<double> residual;  // dense, indexed by vertex
  std::vector<vertex_t> support;  // vertices with positive ppr, in first-touch order
  std::size_t pushes = 0;
  double max_mass_error = 0.0;   // only populated when mass tracking is requested
};

/// Andersen-Chung-Lang push for the lazy walk: push while r(u) >= epsilon * d(u).
/// With `track_mass`, total ppr + residual is recomputed after every push and
/// the largest deviation from 1 is recorded.
PprResult ppr_push(const Graph& g, vertex_t seed, double alpha, double epsilon, bool track_mass = false);

struct SweepResult {
  std::vector<vertex_t> order;        // support sorted by ppr / degree, descending
  std::vector<double> conductance;    // conductance of each prefix (NaN when undefined)
  std::size_t best = 0;               // index of the chosen prefix (size = best + 1)
  bool found = false;
};

/// Sweep over `order` prefixes with |S| <= n/2; picks the minimum conductance,
/// ties to the shorter prefix.
SweepResult sweep_cut(const Graph& g, std::vector<vertex_t> order);

struct NCPPoint {
  std::size_t size = 0;
  double conductance = 1.0;
  std::vector<vertex_t> members;  // sorted
  vertex_t seed_vertex = -1;
  double alpha = 0.0;
  double epsilon = 0.0;
};

NCPPoint ppr_cluster(const Graph& g, vertex_t seed_vertex, double alpha, double epsilon);

struct NcpOptions {
  std::vector<vertex_t> seeds;  // empty: min(n, max_seeds) vertices sampled with `seed`
  std::size_t max_seeds = 500;
  std::vector<double> alphas{0.01, 0.1};
  std::vector<double> epsilons{1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

/// Log-spaced bin index (10 per decade) for a cluster size.
std::size_t ncp_bin(std::size_t size);

/// Lower envelope: per size bin, the lowest-conductance cluster over all
/// (seed, alpha, epsilon) runs. Identical for every thread count.
std::vector<NCPPoint> ncp(const Graph& g, const NcpOptions& options = {});

// ---------------------------------------------------------------------------
// Localization of clusters in a decomposition

struct LocalizationRow {
  std::size_t size = 0;
  double conductance = 0.0;
  std::size_t bag_count = 0;
  std::size_t threshold = 0;
  bool localized = false;
};

/// Bags touching a vertex set.
std::size_t bags_touching(const TreeDecomposition& td, std::span<const vertex_t> members, std::size_t n);

/// A cluster is localized when it meets strictly fewer bags than it has members.
std::vector<LocalizationRow> localize(const TreeDecomposition& td, std::span<const NCPPoint> points, std::size_t n);

// ---------------------------------------------------------------------------
// Ground-truth communities

/// Optional label per vertex, read from "node<TAB>label" lines.
class CommunityTable {
 public:
  CommunityTable() = default;
  explicit CommunityTable(std::size_t n) : label_of_(n, -1) {}

  /// Unknown node names are skipped and counted in `skipped`.
  static CommunityTable load_tsv(std::istream& in, const Graph& g, std::size_t* skipped = nullptr);

  void assign(vertex_t v, const std::string& label);
  std::optional<std::int32_t> label_id(const std::string& label) const;
  const std::vector<std::string>& labels() const noexcept { return names_; }
  bool has(vertex_t v, std::int32_t label) const { return label_of_[v] == label; }
  std::size_t count(std::int32_t label) const { return counts_[label]; }
  /// Fraction of all vertices carrying `label`.
  double fraction(std::int32_t label) const;
  std::size_t num_vertices() const noexcept { return label_of_.size(); }

 private:
  std::vector<std::int32_t> label_of_;
  std::vector<std::string> names_;
  std::vector<std::size_t> counts_;
};

struct ClassifierResult {
  double recall = 0.0;
  double precision = 0.0;
  double global_fraction = 0.0;
  std::size_t frequent_bags = 0;
  std::vector<std::int32_t> bags;  // chosen connected set of frequent bags
  std::vector<vertex_t> members;   // union of the chosen bags, sorted
};

/// Frequent bags hold the label strictly above its global fraction. The
/// largest tree-connected group of them (most bags, then larger union, then
/// lowest bag id) predicts the community.
ClassifierResult frequent_bag_classifier(const Graph& g, const TreeDecomposition& td, const CommunityTable& table,
                                         const std::string& label);

}  // namespace treescope
