#pragma once

#include <iostream>
#include <sstream>
#include <vector>

#include "ssred/strings.hpp"

namespace ssred {

// Complete directed graph with nonnegative integer weights. The diagonal
// is unused. When built from a string set, vertex 0 is the special start
// and end marker with zero-weight incident edges.
struct WeightedDigraph {
  int n = 0;
  std::vector<long> weights;  // row-major n*n
  bool has_v0 = false;

  WeightedDigraph() = default;
  explicit WeightedDigraph(int n_) : n(n_), weights(static_cast<size_t>(n_) * n_, 0) {}

  long w(int i, int j) const { return weights[static_cast<size_t>(i) * n + j]; }
  long& w(int i, int j) { return weights[static_cast<size_t>(i) * n + j]; }
};

// Vertex per string plus the marker vertex; w(u,v) = max_overlap(u,v).
inline WeightedDigraph overlap_graph(const StringSet& set) {
  WeightedDigraph g(static_cast<int>(set.size()) + 1);
  g.has_v0 = true;
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = 0; j < set.size(); ++j)
      if (i != j) g.w(static_cast<int>(i) + 1, static_cast<int>(j) + 1) =
          max_overlap(set[i], set[j]);
  return g;
}

// Weight-2 edges become 0, weight-1 edges stay 1.
inline WeightedDigraph min12_to_max(const WeightedDigraph& g) {
  WeightedDigraph out(g.n);
  out.has_v0 = g.has_v0;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      if (i == j) continue;
      long w = g.w(i, j);
      if (w != 1 && w != 2) throw error("min12_to_max: weight outside {1,2}");
      out.w(i, j) = w == 2 ? 0 : 1;
    }
  return out;
}

// ---- "digraph v1" text format ----------------------------------------------
// `n <count>` then `w <i> <j> <weight>` lines for nonzero weights; vertex 0
// is the marker when present.

inline void write_digraph(std::ostream& os, const WeightedDigraph& g) {
  os << "digraph v1\n" << "n " << g.n << '\n';
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (i != j && g.w(i, j) != 0) os << "w " << i << ' ' << j << ' ' << g.w(i, j) << '\n';
}

inline WeightedDigraph read_digraph(std::istream& is) {
  WeightedDigraph g;
  std::string line;
  bool header = false, sized = false;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!header) {
      std::string ver;
      if (tok != "digraph" || !(ls >> ver) || ver != "v1") throw error("digraph: bad header");
      header = true;
      continue;
    }
    if (tok == "n") {
      int n;
      if (!(ls >> n) || n < 0) throw error("digraph: bad size");
      g = WeightedDigraph(n);
      sized = true;
    } else if (tok == "w") {
      int i, j;
      long w;
      if (!sized || !(ls >> i >> j >> w) || i < 0 || j < 0 || i >= g.n || j >= g.n || w < 0)
        throw error("digraph: bad weight line");
      g.w(i, j) = w;
    } else {
      throw error("digraph: unexpected token '" + tok + "'");
    }
  }
  if (!header || !sized) throw error("digraph: missing header");
  return g;
}

}  // namespace ssred
