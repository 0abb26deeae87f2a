#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polybern/polynomial.hpp"
#include "polybern/rational.hpp"

namespace polybern {

// Small labeled simple graph: no loops, no parallel edges, vertices
// 0..vertex_count-1. Edges are kept sorted with u < v.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(unsigned vertex_count) : vertex_count_(vertex_count) {}

  static SimpleGraph empty_graph(unsigned n) { return SimpleGraph(n); }
  static SimpleGraph complete_graph(unsigned n);

  // Edge-list text: first line "n <vertex_count>", then one "u v" per line.
  static SimpleGraph parse(const std::string& text);

  unsigned vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<unsigned, unsigned>>& edges() const { return edges_; }

  // Loops rejected; duplicate insertions are a no-op.
  void add_edge(unsigned u, unsigned v);
  bool has_edge(unsigned u, unsigned v) const;

 private:
  unsigned vertex_count_ = 0;
  std::vector<std::pair<unsigned, unsigned>> edges_;
};

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);

// G - e and G/e for an existing edge; contraction merges parallel edges.
SimpleGraph delete_edge(const SimpleGraph& g, unsigned u, unsigned v);
SimpleGraph contract_edge(const SimpleGraph& g, unsigned u, unsigned v);

// Deletion-contraction on the lexicographically smallest edge, base case
// x^n for edgeless graphs. Guarded at 12 vertices.
Polynomial chromatic_polynomial(const SimpleGraph& g);

// (-1)^{|V|} P(-x): counts pairs of a map V -> {1..x} and a compatible
// acyclic orientation.
Polynomial pbar(const SimpleGraph& g);

// Direct enumeration of all orientations and maps; sized for at most
// 5 vertices, 8 edges and x <= 3.
Integer pbar_bruteforce(const SimpleGraph& g, unsigned x);

// R_n^k(m) == (1/k!) sum_j (-1)^{k-j} C(k,j) pbar(O_n + K_m, j).
bool theorem35_check(unsigned n, unsigned k, unsigned m);

}  // namespace polybern
