#pragma once

#include "uncsimp/shortcuts.hpp"

namespace uncsimp {

struct GraphOptions {
  size_t jobs = 1;
};

struct ShortcutGraph {
  size_t n = 0;
  std::vector<std::vector<size_t>> adj;  // adj[i]: ascending valid targets j > i
  size_t edges_tested = 0;
  size_t valid_edges = 0;
};

// Test every candidate shortcut; adjacency always contains i+1.
ShortcutGraph build_graph(const UncertainCurve& c, double eps, Metric metric,
                          const GraphOptions& opt = {});

// Fewest-links path from the first to the last vertex; among shortest paths
// the lexicographically smallest index sequence.
std::vector<size_t> shortest_path(const ShortcutGraph& g);

struct SimplifyResult {
  std::vector<size_t> indices;  // 0-based vertex sequence
  size_t links = 0;
  size_t edges_tested = 0;
  size_t valid_edges = 0;
};

SimplifyResult simplify(const UncertainCurve& c, double eps, Metric metric,
                        const GraphOptions& opt = {});

}  // namespace uncsimp
