#include "polybern/chromatic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "polybern/error.hpp"
#include "polybern/mstirling.hpp"
#include "polybern/stirling.hpp"

namespace polybern {

SimpleGraph SimpleGraph::complete_graph(unsigned n) {
  SimpleGraph g(n);
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  SimpleGraph g;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      unsigned n = 0;
      if (!(ls >> tag >> n) || tag != "n")
        raise(errc::parse, "graph input must start with \"n <vertex_count>\"");
      std::string rest;
      if (ls >> rest) raise(errc::parse, "trailing tokens on graph header line");
      g = SimpleGraph(n);
      have_header = true;
      continue;
    }
    unsigned u = 0, v = 0;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v))
      raise(errc::parse, "expected \"u v\" on line " + std::to_string(lineno));
    std::string rest;
    if (ls >> rest) raise(errc::parse, "trailing tokens on line " + std::to_string(lineno));
    g.add_edge(u, v);
  }
  if (!have_header) raise(errc::parse, "empty graph input");
  return g;
}

void SimpleGraph::add_edge(unsigned u, unsigned v) {
  if (u == v) raise(errc::invalid_argument, "self-loops are not allowed");
  if (u >= vertex_count_ || v >= vertex_count_)
    raise(errc::invalid_argument, "edge endpoint out of range");
  if (u > v) std::swap(u, v);
  auto e = std::make_pair(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
}

bool SimpleGraph::has_edge(unsigned u, unsigned v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
  SimpleGraph out(g.vertex_count() + h.vertex_count());
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  unsigned shift = g.vertex_count();
  for (const auto& [u, v] : h.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

SimpleGraph delete_edge(const SimpleGraph& g, unsigned u, unsigned v) {
  if (u > v) std::swap(u, v);
  if (!g.has_edge(u, v)) raise(errc::invalid_argument, "no such edge to delete");
  SimpleGraph out(g.vertex_count());
  for (const auto& [a, b] : g.edges())
    if (!(a == u && b == v)) out.add_edge(a, b);
  return out;
}

// Contract (u,v): v merges into u, the last vertex is renumbered into v's
// slot, parallel edges collapse.
SimpleGraph contract_edge(const SimpleGraph& g, unsigned u, unsigned v) {
  if (u > v) std::swap(u, v);
  if (!g.has_edge(u, v)) raise(errc::invalid_argument, "no such edge to contract");
  SimpleGraph out(g.vertex_count() - 1);
  unsigned last = g.vertex_count() - 1;
  auto remap = [&](unsigned w) {
    if (w == v) return u;
    if (w == last) return v;
    return w;
  };
  for (const auto& [a, b] : g.edges()) {
    unsigned x = remap(a), y = remap(b);
    if (x != y) out.add_edge(x, y);
  }
  return out;
}

namespace {

using EdgeList = std::vector<std::pair<unsigned, unsigned>>;

Polynomial chromatic_rec(const SimpleGraph& g,
                         std::map<std::pair<unsigned, EdgeList>, Polynomial>& memo) {
  if (g.edges().empty()) return Polynomial::monomial(g.vertex_count());
  auto key = std::make_pair(g.vertex_count(), g.edges());
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  auto [u, v] = g.edges().front();  // lexicographically smallest edge
  Polynomial result = chromatic_rec(delete_edge(g, u, v), memo) -
                      chromatic_rec(contract_edge(g, u, v), memo);
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

Polynomial chromatic_polynomial(const SimpleGraph& g) {
  if (g.vertex_count() > 12)
    raise(errc::size_limit, "deletion-contraction is limited to 12 vertices");
  std::map<std::pair<unsigned, EdgeList>, Polynomial> memo;
  return chromatic_rec(g, memo);
}

Polynomial pbar(const SimpleGraph& g) {
  Polynomial p = chromatic_polynomial(g);
  std::vector<Rational> coeffs = p.coeffs();
  unsigned n = g.vertex_count();
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if ((n + i) % 2 == 1) coeffs[i] = -coeffs[i];
  return Polynomial(std::move(coeffs));
}

namespace {

bool acyclic_by_sink_removal(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& arcs) {
  std::vector<bool> removed(n, false);
  std::vector<unsigned> outdeg(n, 0);
  for (const auto& [from, to] : arcs) {
    (void)to;
    ++outdeg[from];
  }
  for (unsigned round = 0; round < n; ++round) {
    int sink = -1;
    for (unsigned v = 0; v < n; ++v)
      if (!removed[v] && outdeg[v] == 0) {
        sink = static_cast<int>(v);
        break;
      }
    if (sink < 0) break;
    removed[static_cast<unsigned>(sink)] = true;
    for (const auto& [from, to] : arcs)
      if (to == static_cast<unsigned>(sink) && !removed[from]) --outdeg[from];
  }
  for (unsigned v = 0; v < n; ++v)
    if (!removed[v]) return false;
  return true;
}

}  // namespace

Integer pbar_bruteforce(const SimpleGraph& g, unsigned x) {
  if (g.vertex_count() > 5 || g.edges().size() > 8 || x > 3)
    raise(errc::size_limit, "brute-force enumeration is limited to 5 vertices, 8 edges, x <= 3");
  unsigned n = g.vertex_count();
  const auto& edges = g.edges();
  Integer count(0);

  unsigned long orientations = 1ul << edges.size();
  std::vector<std::pair<unsigned, unsigned>> arcs(edges.size());
  std::vector<unsigned> sigma(n, 1);
  for (unsigned long mask = 0; mask < orientations; ++mask) {
    for (std::size_t e = 0; e < edges.size(); ++e)
      arcs[e] = (mask >> e) & 1 ? std::make_pair(edges[e].second, edges[e].first)
                                : edges[e];
    if (!acyclic_by_sink_removal(n, arcs)) continue;

    if (n == 0) {
      count += 1;  // the empty map
      continue;
    }
    if (x == 0) continue;
    std::fill(sigma.begin(), sigma.end(), 1u);
    while (true) {
      bool compatible = true;
      for (const auto& [from, to] : arcs)
        if (sigma[from] < sigma[to]) {
          compatible = false;
          break;
        }
      if (compatible) count += 1;
      unsigned pos = 0;
      while (pos < n && sigma[pos] == x) sigma[pos++] = 1;
      if (pos == n) break;
      ++sigma[pos];
    }
  }
  return count;
}

bool theorem35_check(unsigned n, unsigned k, unsigned m) {
  SimpleGraph g = disjoint_union(SimpleGraph::empty_graph(n), SimpleGraph::complete_graph(m));
  Polynomial pb = pbar(g);
  Rational sum(0);
  for (unsigned j = 0; j <= k; ++j) {
    Rational term = Rational(binomial(k, j)) * pb(Rational(static_cast<long>(j)));
    if ((k - j) % 2 == 1) term = -term;
    sum += term;
  }
  sum /= Rational(factorial(k));
  return sum == Rational(m_stirling_explicit(n, k, m));
}

}  // namespace polybern
