#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "treescope/treedecomp.hpp"

namespace treescope {

void export_td(const TreeDecomposition& td, std::size_t n, std::ostream& out) {
  out << "s td " << td.bags.size() << ' ' << td.max_cardinality() << ' ' << n << '\n';
  for (std::size_t b = 0; b < td.bags.size(); ++b) {
    out << "b " << (b + 1);
    for (vertex_t v : td.bags[b]) out << ' ' << (v + 1);
    out << '\n';
  }
  for (auto [a, b] : td.tree) out << (a + 1) << ' ' << (b + 1) << '\n';
}

TreeDecomposition import_td(std::istream& in, std::size_t* n_out) {
  TreeDecomposition td;
  td.source_heuristic = "file";
  std::string line;
  std::size_t line_no = 0;
  long long declared_bags = -1, declared_n = -1;
  std::vector<char> seen_bag;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head) || head == "c") continue;
    if (head == "s") {
      std::string kind;
      long long width = 0;
      if (!(fields >> kind >> declared_bags >> width >> declared_n) || kind != "td" || declared_bags < 0 ||
          declared_n < 0) {
        throw ParseError(line_no, "malformed 's td <bags> <max-cardinality> <n>' header");
      }
      td.bags.assign(static_cast<std::size_t>(declared_bags), {});
      seen_bag.assign(static_cast<std::size_t>(declared_bags), 0);
      continue;
    }
    if (declared_bags < 0) throw ParseError(line_no, "content before 's td' header");
    if (head == "b") {
      long long id = 0;
      if (!(fields >> id) || id < 1 || id > declared_bags) throw ParseError(line_no, "bag id out of range");
      if (seen_bag[id - 1]) throw ParseError(line_no, "bag " + std::to_string(id) + " defined twice");
      seen_bag[id - 1] = 1;
      auto& bag = td.bags[static_cast<std::size_t>(id - 1)];
      long long v = 0;
      while (fields >> v) {
        if (v < 1 || v > declared_n) throw ParseError(line_no, "vertex id out of range");
        bag.push_back(static_cast<vertex_t>(v - 1));
      }
      if (!fields.eof()) throw ParseError(line_no, "non-numeric vertex id");
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      continue;
    }
    std::istringstream edge_fields(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(edge_fields >> a >> b) || (edge_fields >> extra)) throw ParseError(line_no, "expected tree edge 'i j'");
    if (a < 1 || b < 1 || a > declared_bags || b > declared_bags) throw ParseError(line_no, "tree edge references unknown bag");
    td.tree.emplace_back(static_cast<std::int32_t>(a - 1), static_cast<std::int32_t>(b - 1));
  }
  if (declared_bags < 0) throw Error("missing 's td' header");
  for (std::size_t b = 0; b < seen_bag.size(); ++b) {
    if (!seen_bag[b]) throw Error("bag " + std::to_string(b + 1) + " declared but not defined");
  }
  if (n_out) *n_out = static_cast<std::size_t>(declared_n);
  return td;
}

void export_td_dot(const Graph& g, const TreeDecomposition& td, std::ostream& out) {
  out << "graph td {\n  node [style=filled, fontsize=8];\n";
  std::vector<std::int32_t> in_bag(g.num_vertices(), -1);
  for (std::size_t b = 0; b < td.bags.size(); ++b) {
    const auto& bag = td.bags[b];
    std::size_t twice = 0;
    for (vertex_t v : bag) in_bag[v] = static_cast<std::int32_t>(b);
    for (vertex_t u : bag) {
      for (vertex_t w : g.neighbors(u)) twice += in_bag[w] == static_cast<std::int32_t>(b);
    }
    const double k = static_cast<double>(bag.size());
    const double density = bag.size() <= 1 ? 1.0 : static_cast<double>(twice) / (k * (k - 1.0));
    // Hue 0.66 (blue, no internal edges) down to 0.0 (red, clique).
    const double hue = 0.66 * (1.0 - density);
    out << "  b" << b << " [label=\"";
    if (bag.size() <= 6) {
      for (std::size_t i = 0; i < bag.size(); ++i) out << (i ? " " : "") << g.label(bag[i]);
    } else {
      out << '|' << bag.size() << '|';
    }
    out << "\", fillcolor=\"" << hue << " 0.8 0.9\", width=" << 0.2 + 0.05 * k << "];\n";
  }
  for (auto [a, b] : td.tree) out << "  b" << a << " -- b" << b << ";\n";
  out << "}\n";
}

}  // namespace treescope
