#include "treescope/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "treescope/analysis.hpp"
#include "treescope/generators.hpp"
#include "treescope/graph.hpp"
#include "treescope/hyperbolicity.hpp"
#include "treescope/kcore.hpp"
#include "treescope/ordering.hpp"
#include "treescope/parallel.hpp"
#include "treescope/treedecomp.hpp"

namespace treescope {

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  bool no_timestamp = false;
  std::string command_line;
};

std::string num(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void provenance(std::ostream& out, const Common& c, const std::string& prefix = "#") {
  out << prefix << " treescope " << c.command_line << '\n';
  out << prefix << " seed=" << c.seed << '\n';
  if (!c.no_timestamp) out << prefix << " created=" << utc_now() << '\n';
}

// Writes to `path`, or to `fallback` when the path is empty or "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      out_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error("cannot write " + path);
      out_ = file_.get();
    }
  }
  std::ostream& operator*() { return *out_; }
  void close() {
    out_->flush();
    if (file_) {
      file_->close();
      if (!*file_) throw Error("write failed");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
};

bool has_extension(const std::string& path, const std::string& ext) {
  return std::filesystem::path(path).extension() == ext;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

// Every command works on the largest connected component of its input.
Graph load_input(const std::string& path, std::ostream& err) {
  auto loaded = load_graph_file(path);
  if (loaded.self_loops_dropped) err << "note: dropped " << loaded.self_loops_dropped << " self-loops\n";
  if (loaded.duplicates_dropped) err << "note: dropped " << loaded.duplicates_dropped << " duplicate edges\n";
  const std::size_t before = loaded.graph.num_vertices();
  Graph g = giant_component(loaded.graph);
  if (g.num_vertices() != before) {
    err << "note: using the largest component (" << g.num_vertices() << " of " << before << " vertices)\n";
  }
  return g;
}

TreeDecomposition load_td(const std::string& path, const Graph& g) {
  auto in = open_input(path);
  std::size_t n = 0;
  auto td = import_td(in, &n);
  if (n != g.num_vertices()) {
    throw Error(path + " decomposes " + std::to_string(n) + " vertices but the graph has " +
                std::to_string(g.num_vertices()));
  }
  return td;
}

std::vector<vertex_t> read_members(const std::string& path, const Graph& g) {
  auto in = open_input(path);
  std::vector<vertex_t> members;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto v = g.find(line);
    if (!v) throw Error(path + ": unknown vertex '" + line + "'");
    members.push_back(*v);
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream s(line);
  while (std::getline(s, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

// Reads an ncp CSV back, loading each row's members file.
std::vector<NCPPoint> read_ncp_csv(const std::string& path, const Graph& g) {
  auto in = open_input(path);
  const auto base = std::filesystem::path(path).parent_path();
  std::string line;
  std::map<std::string, std::size_t> column;
  std::vector<NCPPoint> points;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_csv_line(line);
    if (column.empty()) {
      for (std::size_t i = 0; i < fields.size(); ++i) column[fields[i]] = i;
      for (const char* need : {"conductance", "members_file"}) {
        if (!column.count(need)) throw Error(path + ": missing column " + need);
      }
      continue;
    }
    const auto& file = fields.at(column["members_file"]);
    if (file.empty()) throw Error(path + ": row without a members file (rerun ncp with --members-dir)");
    auto resolved = std::filesystem::path(file);
    if (resolved.is_relative() && !std::filesystem::exists(resolved)) resolved = base / resolved;
    NCPPoint p;
    p.members = read_members(resolved.string(), g);
    p.size = p.members.size();
    p.conductance = std::stod(fields.at(column["conductance"]));
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<double> parse_doubles(const std::string& list) {
  std::vector<double> out;
  std::istringstream s(list);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw Error("not a number: '" + item + "'");
    }
  }
  return out;
}

std::vector<Heuristic> parse_heuristics(const std::string& list) {
  if (list.empty() || list == "all") return all_heuristics();
  std::vector<Heuristic> out;
  std::istringstream s(list);
  std::string item;
  while (std::getline(s, item, ',')) out.push_back(parse_heuristic(item));
  return out;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family = "grid";
  GenSpec spec;
  std::string output;
};

void cmd_gen(const GenArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  GenSpec spec = a.spec;
  spec.family = parse_family(a.family);
  spec.seed = c.seed;
  Graph g = generate(spec);
  Sink sink(a.output, out);
  if (has_extension(a.output, ".gr")) {
    provenance(*sink, c, "c");
    save_pace_graph(g, *sink);
  } else {
    provenance(*sink, c);
    save_edge_list(g, *sink);
  }
  sink.close();
  err << "n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
}

struct OrderArgs {
  std::string input, heuristic = "mindeg", output;
};

void cmd_order(const OrderArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  Graph g = load_input(a.input, err);
  auto pi = compute_ordering(g, parse_heuristic(a.heuristic), c.seed);
  Sink sink(a.output, out);
  provenance(*sink, c);
  *sink << "# heuristic=" << pi.heuristic << '\n';
  save_ordering(g, pi, *sink);
  sink.close();
}

struct DecomposeArgs {
  std::string input, heuristic = "mindeg", ordering, output, dot;
};

void cmd_decompose(const DecomposeArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  Graph g = load_input(a.input, err);
  EliminationOrdering pi;
  if (!a.ordering.empty()) {
    auto in = open_input(a.ordering);
    pi = load_ordering(g, in);
  } else {
    pi = compute_ordering(g, parse_heuristic(a.heuristic), c.seed);
  }
  auto td = gavril_td(g, pi);
  Sink sink(a.output, out);
  provenance(*sink, c, "c");
  *sink << "c heuristic=" << pi.heuristic << '\n';
  export_td(td, g.num_vertices(), *sink);
  sink.close();
  if (!a.dot.empty()) {
    Sink dot(a.dot, out);
    provenance(*dot, c, "//");
    export_td_dot(g, td, *dot);
    dot.close();
  }
  err << "bags=" << td.num_bags() << " max_cardinality=" << td.max_cardinality() << " width=" << td.width() << '\n';
}

struct ValidateArgs {
  std::string input, td;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  Graph g = load_input(a.input, err);
  auto td = load_td(a.td, g);
  auto report = validate_td(g, td);
  if (report.valid()) {
    out << "VALID width=" << td.width() << " bags=" << td.num_bags() << '\n';
    return 0;
  }
  out << "INVALID " << to_string(report.violation) << ": " << report.message << '\n';
  return 1;
}

struct StatsArgs {
  std::string input, td, output, profiles;
};

void cmd_stats(const StatsArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  Graph g = load_input(a.input, err);
  auto td = load_td(a.td, g);
  auto cores = k_core(g);
  auto stats = td_stats(g, td, cores);

  std::ostringstream summary;
  summary << "n_bags=" << stats.n_bags << " td_diameter=" << stats.td_diameter << " width_max=" << stats.width_max
          << " width_median=" << num(stats.width_median) << " cardinality_max=" << stats.cardinality_max
          << " cardinality_median=" << num(stats.cardinality_median)
          << " density_median=" << num(stats.density_median);

  if (!a.output.empty()) {
    Sink sink(a.output, out);
    provenance(*sink, c);
    *sink << "id,cardinality,density,eccentricity,avg_core\n";
    for (std::size_t b = 0; b < stats.bags.size(); ++b) {
      const auto& s = stats.bags[b];
      *sink << (b + 1) << ',' << s.cardinality << ',' << num(s.density) << ',' << s.eccentricity << ','
            << num(s.avg_core) << '\n';
    }
    *sink << "# summary " << summary.str() << '\n';
    sink.close();
  }
  if (!a.profiles.empty()) {
    auto prof = bag_profiles(stats);
    Sink hist(a.profiles + "_histogram.csv", out);
    provenance(*hist, c);
    *hist << "cardinality,count,cumulative_fraction\n";
    for (const auto& b : prof.cardinality) *hist << b.cardinality << ',' << b.count << ',' << num(b.cumulative_fraction) << '\n';
    hist.close();
    Sink dens(a.profiles + "_density.csv", out);
    provenance(*dens, c);
    *dens << "cardinality,mean_density\n";
    for (const auto& b : prof.density) *dens << b.cardinality << ',' << num(b.mean_density) << '\n';
    dens.close();
    Sink core(a.profiles + "_core.csv", out);
    provenance(*core, c);
    *core << "eccentricity,mean_core,bags\n";
    for (const auto& b : prof.core_by_eccentricity) *core << b.eccentricity << ',' << num(b.mean_core) << ',' << b.bags << '\n';
    core.close();
  }
  out << summary.str() << '\n';
}

struct KcoreArgs {
  std::string input, output;
};

void cmd_kcore(const KcoreArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  Graph g = load_input(a.input, err);
  auto cores = k_core(g);
  if (!a.output.empty()) {
    Sink sink(a.output, out);
    provenance(*sink, c);
    *sink << "node,core\n";
    for (std::size_t v = 0; v < g.num_vertices(); ++v) *sink << g.label(static_cast<vertex_t>(v)) << ',' << cores.core[v] << '\n';
    sink.close();
  }
  out << "n=" << g.num_vertices() << " k_min=" << cores.k_min << " k_max=" << cores.k_max << '\n';
}

struct NcpArgs {
  std::string input, output, members_dir;
  std::string alphas = "0.01,0.1";
  std::string epsilons = "1e-3,1e-4,1e-5,1e-6,1e-7";
  std::size_t max_seeds = 500;
};

NcpOptions ncp_options(const NcpArgs& a, const Common& c) {
  NcpOptions o;
  o.alphas = parse_doubles(a.alphas);
  o.epsilons = parse_doubles(a.epsilons);
  o.max_seeds = a.max_seeds;
  o.seed = c.seed;
  o.threads = resolve_threads(c.threads);
  return o;
}

void cmd_ncp(const NcpArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  Graph g = load_input(a.input, err);
  auto points = ncp(g, ncp_options(a, c));
  if (!a.members_dir.empty()) std::filesystem::create_directories(a.members_dir);
  Sink sink(a.output, out);
  provenance(*sink, c);
  *sink << "size_bin,best_size,conductance,seed,alpha,epsilon,members_file\n";
  for (const auto& p : points) {
    std::string file;
    if (!a.members_dir.empty()) {
      file = (std::filesystem::path(a.members_dir) / ("cluster_" + std::to_string(ncp_bin(p.size)) + ".txt")).string();
      Sink m(file, out);
      for (vertex_t v : p.members) *m << g.label(v) << '\n';
      m.close();
    }
    *sink << ncp_bin(p.size) << ',' << p.size << ',' << num(p.conductance) << ',' << g.label(p.seed_vertex) << ','
          << num(p.alpha) << ',' << num(p.epsilon) << ',' << file << '\n';
  }
  sink.close();
}

struct LocalizeArgs {
  NcpArgs ncp;
  std::string td, ncp_csv;
};

void cmd_localize(const LocalizeArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  Graph g = load_input(a.ncp.input, err);
  auto td = load_td(a.td, g);
  auto points = a.ncp_csv.empty() ? ncp(g, ncp_options(a.ncp, c)) : read_ncp_csv(a.ncp_csv, g);
  auto rows = localize(td, points, g.num_vertices());
  Sink sink(a.ncp.output, out);
  provenance(*sink, c);
  *sink << "size,conductance,bag_count,threshold,localized\n";
  std::size_t localized = 0;
  for (const auto& r : rows) {
    *sink << r.size << ',' << num(r.conductance) << ',' << r.bag_count << ',' << r.threshold << ','
          << (r.localized ? 1 : 0) << '\n';
    localized += r.localized;
  }
  sink.close();
  err << "clusters=" << rows.size() << " localized=" << localized << '\n';
}

struct ClassifyArgs {
  std::string input, td, communities, output;
  std::vector<std::string> labels;
};

void cmd_classify(const ClassifyArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  Graph g = load_input(a.input, err);
  auto td = load_td(a.td, g);
  auto in = open_input(a.communities);
  std::size_t skipped = 0;
  auto table = CommunityTable::load_tsv(in, g, &skipped);
  if (skipped) err << "note: " << skipped << " community rows name vertices outside the graph\n";
  auto labels = a.labels.empty() ? table.labels() : a.labels;
  Sink sink(a.output, out);
  provenance(*sink, c);
  *sink << "label,community_size,global_fraction,frequent_bags,chosen_bags,predicted_size,recall,precision\n";
  for (const auto& label : labels) {
    auto r = frequent_bag_classifier(g, td, table, label);
    *sink << label << ',' << table.count(*table.label_id(label)) << ',' << num(r.global_fraction) << ','
          << r.frequent_bags << ',' << r.bags.size() << ',' << r.members.size() << ',' << num(r.recall) << ','
          << num(r.precision) << '\n';
  }
  sink.close();
}

struct HyperArgs {
  std::string input, td, csv;
  std::size_t cap = kDeltaCap;
  bool force = false;
};

void cmd_hyperbolicity(const HyperArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  Graph g = load_input(a.input, err);
  auto m = delta_exact(g, a.cap, a.force, resolve_threads(c.threads));
  out << "n=" << m.n << '\n' << "diameter=" << m.diameter << '\n' << "delta=" << num(m.delta) << '\n';
  std::string tl;
  if (!a.td.empty()) {
    auto td = load_td(a.td, g);
    tl = std::to_string(td_length(g, td));
    out << "td_length=" << tl << '\n';
  }
  if (!a.csv.empty()) {
    Sink sink(a.csv, out);
    provenance(*sink, c);
    *sink << "n,diameter,delta,td_length\n" << m.n << ',' << m.diameter << ',' << num(m.delta) << ',' << tl << '\n';
    sink.close();
  }
}

struct Thm3Args {
  std::size_t n = 3, k = 0, oracle_cap = 18;
  std::string heuristics = "all", csv;
};

int cmd_verify_thm3(const Thm3Args& a, const Common& c, std::ostream& out) {
  auto r = verify_theorem3(a.n, a.k, parse_heuristics(a.heuristics), c.seed, a.oracle_cap, resolve_threads(c.threads));
  auto yes = [](bool b) { return b ? "true" : "false"; };
  out << "n=" << r.n << " k=" << r.k << " vertices=" << r.vertices << '\n';
  out << "delta=" << num(r.metric.delta) << " diameter=" << r.metric.diameter << '\n';
  out << "delta_formula=" << num(r.delta_formula) << " delta_matches_formula=" << yes(r.delta_matches_formula) << '\n';
  out << "tw=" << r.tw << " tw_analytic=" << r.tw_analytic << '\n';
  out << "nu=" << r.nu << " cycle_length=" << r.nu_cycle.length << " cycle_geodesic=" << yes(r.nu_cycle.is_geodesic)
      << '\n';
  if (r.nu_bruteforce_run) out << "nu_bruteforce=" << r.nu_bruteforce << '\n';
  out << "tl_analytic=" << r.tl_analytic << '\n';
  for (const auto& h : r.lengths) out << "td_length[" << h.heuristic << "]=" << h.td_length << " width=" << h.width << '\n';
  out << "tl_min=" << r.tl_min << " bound=" << r.upper_bound << '\n';
  out << num(r.metric.delta) << " <= " << r.tl_min << " <= " << r.upper_bound << '\n';
  out << (r.chain_holds ? "chain holds" : "chain FAILS") << '\n';
  if (!a.csv.empty()) {
    Sink sink(a.csv, out);
    provenance(*sink, c);
    *sink << "n,k,vertices,delta,delta_formula,tw,nu,tl_analytic,heuristic,td_length,width,bound,chain_holds\n";
    for (const auto& h : r.lengths) {
      *sink << r.n << ',' << r.k << ',' << r.vertices << ',' << num(r.metric.delta) << ',' << num(r.delta_formula) << ','
            << r.tw << ',' << r.nu << ',' << r.tl_analytic << ',' << h.heuristic << ',' << h.td_length << ','
            << h.width << ',' << r.upper_bound << ',' << (r.chain_holds ? 1 : 0) << '\n';
    }
    sink.close();
  }
  return r.chain_holds ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tree decompositions and structural profiles of sparse graphs", "treescope"};
  app.require_subcommand(1);
  Common common;
  for (const auto& a : args) common.command_line += (common.command_line.empty() ? "" : " ") + a;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Seed for every random choice")->capture_default_str();
    sub->add_option("--threads", common.threads, "Worker threads (0: TREESCOPE_THREADS or 1)");
    sub->add_flag("--no-timestamp", common.no_timestamp, "Omit the creation time from output headers");
  };

  GenArgs gen;
  auto* s_gen = app.add_subcommand("gen", "Generate a graph");
  s_gen->add_option("--family", gen.family, "er | pl | binary_tree | grid | cycle | clique | grid_subdivision")
      ->capture_default_str();
  s_gen->add_option("--n", gen.spec.n, "Vertices (grid side for grid_subdivision)");
  s_gen->add_option("--p", gen.spec.p, "Edge probability (er)");
  s_gen->add_option("--gamma", gen.spec.gamma, "Power-law exponent (pl)")->capture_default_str();
  s_gen->add_option("--avg-degree", gen.spec.avg_degree, "Mean expected degree (pl)")->capture_default_str();
  s_gen->add_option("--rows", gen.spec.rows, "Grid rows");
  s_gen->add_option("--cols", gen.spec.cols, "Grid columns");
  s_gen->add_option("--depth", gen.spec.depth, "Binary tree depth");
  s_gen->add_option("--k", gen.spec.k, "Subdivision vertices per grid edge");
  s_gen->add_option("-o,--output", gen.output, "Output file (.gr for PACE, else edge list)");
  add_common(s_gen);

  OrderArgs order;
  auto* s_order = app.add_subcommand("order", "Compute an elimination ordering");
  s_order->add_option("graph", order.input, "Input graph")->required();
  s_order->add_option("--heuristic", order.heuristic, "mindeg | minfill | amd | mcs | lexm | metnnd")->capture_default_str();
  s_order->add_option("-o,--output", order.output, "Ordering file");
  add_common(s_order);

  DecomposeArgs dec;
  auto* s_dec = app.add_subcommand("decompose", "Build a tree decomposition");
  s_dec->add_option("graph", dec.input, "Input graph")->required();
  auto* h_opt = s_dec->add_option("--heuristic", dec.heuristic, "Ordering heuristic")->capture_default_str();
  s_dec->add_option("--ordering", dec.ordering, "Use an ordering file instead of a heuristic")->excludes(h_opt);
  s_dec->add_option("-o,--output", dec.output, "Output .td file");
  s_dec->add_option("--dot", dec.dot, "Also write a GraphViz rendering");
  add_common(s_dec);

  ValidateArgs val;
  auto* s_val = app.add_subcommand("validate", "Check a tree decomposition");
  s_val->add_option("graph", val.input, "Input graph")->required();
  s_val->add_option("td", val.td, "Decomposition (.td)")->required();
  add_common(s_val);

  StatsArgs st;
  auto* s_st = app.add_subcommand("stats", "Bag statistics of a decomposition");
  s_st->add_option("graph", st.input, "Input graph")->required();
  s_st->add_option("td", st.td, "Decomposition (.td)")->required();
  s_st->add_option("-o,--output", st.output, "Per-bag CSV");
  s_st->add_option("--profiles", st.profiles, "Prefix for histogram, density and core profile CSVs");
  add_common(s_st);

  KcoreArgs kc;
  auto* s_kc = app.add_subcommand("kcore", "Core numbers");
  s_kc->add_option("graph", kc.input, "Input graph")->required();
  s_kc->add_option("-o,--output", kc.output, "Per-vertex CSV");
  add_common(s_kc);

  NcpArgs nc;
  auto* s_ncp = app.add_subcommand("ncp", "Network community profile from PPR sweeps");
  s_ncp->add_option("graph", nc.input, "Input graph")->required();
  s_ncp->add_option("-o,--output", nc.output, "NCP CSV");
  s_ncp->add_option("--members-dir", nc.members_dir, "Directory for per-bin member lists");
  s_ncp->add_option("--alphas", nc.alphas, "Comma-separated teleport probabilities")->capture_default_str();
  s_ncp->add_option("--epsilons", nc.epsilons, "Comma-separated push tolerances")->capture_default_str();
  s_ncp->add_option("--max-seeds", nc.max_seeds, "Seed vertices sampled")->capture_default_str();
  add_common(s_ncp);

  LocalizeArgs loc;
  auto* s_loc = app.add_subcommand("localize", "How many bags each NCP cluster touches");
  s_loc->add_option("graph", loc.ncp.input, "Input graph")->required();
  s_loc->add_option("td", loc.td, "Decomposition (.td)")->required();
  s_loc->add_option("--ncp", loc.ncp_csv, "Reuse an ncp CSV written with --members-dir");
  s_loc->add_option("-o,--output", loc.ncp.output, "Localization CSV");
  s_loc->add_option("--alphas", loc.ncp.alphas, "Comma-separated teleport probabilities")->capture_default_str();
  s_loc->add_option("--epsilons", loc.ncp.epsilons, "Comma-separated push tolerances")->capture_default_str();
  s_loc->add_option("--max-seeds", loc.ncp.max_seeds, "Seed vertices sampled")->capture_default_str();
  add_common(s_loc);

  ClassifyArgs cl;
  auto* s_cl = app.add_subcommand("classify", "Frequent-bag community prediction");
  s_cl->add_option("graph", cl.input, "Input graph")->required();
  s_cl->add_option("td", cl.td, "Decomposition (.td)")->required();
  s_cl->add_option("--communities", cl.communities, "TSV of node<TAB>label")->required();
  s_cl->add_option("--label", cl.labels, "Labels to score (default: all)");
  s_cl->add_option("-o,--output", cl.output, "Report CSV");
  add_common(s_cl);

  HyperArgs hy;
  auto* s_hy = app.add_subcommand("hyperbolicity", "Exact four-point hyperbolicity");
  s_hy->add_option("graph", hy.input, "Input graph")->required();
  s_hy->add_option("--td", hy.td, "Also report the length of this decomposition");
  s_hy->add_option("--cap", hy.cap, "Refuse graphs with more vertices")->capture_default_str();
  s_hy->add_flag("--force", hy.force, "Ignore the cap");
  s_hy->add_option("--csv", hy.csv, "Also write a CSV row");
  add_common(s_hy);

  Thm3Args th;
  auto* s_th = app.add_subcommand("verify-thm3", "Check delta <= tl <= (tw+1) nu on a subdivided grid");
  s_th->add_option("--n", th.n, "Grid side")->capture_default_str();
  s_th->add_option("--k", th.k, "Subdivision vertices per edge")->capture_default_str();
  s_th->add_option("--heuristics", th.heuristics, "Comma-separated heuristics or 'all'")->capture_default_str();
  s_th->add_option("--oracle-cap", th.oracle_cap, "Largest kernel for exact treewidth")->capture_default_str();
  s_th->add_option("--csv", th.csv, "Also write a CSV report");
  add_common(s_th);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }

  try {
    if (*s_gen) cmd_gen(gen, common, out, err);
    else if (*s_order) cmd_order(order, common, out, err);
    else if (*s_dec) cmd_decompose(dec, common, out, err);
    else if (*s_val) return cmd_validate(val, out, err);
    else if (*s_st) cmd_stats(st, common, out, err);
    else if (*s_kc) cmd_kcore(kc, common, out, err);
    else if (*s_ncp) cmd_ncp(nc, common, out, err);
    else if (*s_loc) cmd_localize(loc, common, out, err);
    else if (*s_cl) cmd_classify(cl, common, out, err);
    else if (*s_hy) cmd_hyperbolicity(hy, common, out, err);
    else if (*s_th) return cmd_verify_thm3(th, common, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace treescope
