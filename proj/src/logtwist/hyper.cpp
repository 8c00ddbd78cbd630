#include "logtwist/hyper.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace logtwist {

std::vector<int> QuadraticSignature::entries() const {
  std::vector<int> out = fixed;
  out.insert(out.end(), paired.begin(), paired.end());
  return out;
}

void check_well_formed(const HypSignature& mu) {
  for (std::size_t i = 0; i < mu.fixed.size(); ++i)
    if (mu.fixed[i] < 0 || mu.fixed[i] % 2 != 0)
      throw std::invalid_argument("fixed entry " + std::to_string(i + 1) + " must be a nonnegative even integer");
  for (std::size_t j = 0; j < mu.pairs.size(); ++j)
    if (mu.pairs[j] <= 0)
      throw std::invalid_argument("pair entry " + std::to_string(j + 1) + " must be positive");
}

bool check_nonempty(const HypSignature& mu) {
  check_well_formed(mu);
  const long n1 = static_cast<long>(mu.fixed.size());
  const long fixed = std::accumulate(mu.fixed.begin(), mu.fixed.end(), 0L);
  const long pairs = std::accumulate(mu.pairs.begin(), mu.pairs.end(), 0L);
  return n1 - 4 == fixed + 2 * pairs;
}

std::optional<int> hyperelliptic_genus(const HypSignature& mu) {
  const auto n1 = mu.fixed.size();
  if (n1 < 2 || n1 % 2 != 0) return std::nullopt;
  return static_cast<int>((n1 - 2) / 2);
}

QuadraticSignature quadratic_image(const HypSignature& mu) {
  check_well_formed(mu);
  QuadraticSignature q;
  q.fixed = mu.fixed;
  for (int c : mu.pairs) q.paired.push_back(2 * c);
  return q;
}

bool quadratic_nonempty(const QuadraticSignature& q) {
  const long n1 = static_cast<long>(q.fixed.size());
  const long total = std::accumulate(q.fixed.begin(), q.fixed.end(), 0L) +
                     std::accumulate(q.paired.begin(), q.paired.end(), 0L);
  return n1 - 4 == total;
}

QuadraticSignature quadratic_pushforward(const HypSignature& mu) {
  if (!check_nonempty(mu)) throw std::invalid_argument("signature does not satisfy the non-emptiness condition");
  QuadraticSignature q = quadratic_image(mu);
  // The quadratic differential has order m - 1 at each branch point and the
  // doubled order at each pair image; its degree on the line is -4.
  long degree = 0;
  for (int m : q.fixed) degree += m - 1;
  for (int c : q.paired) degree += c;
  if (degree != -4 || !quadratic_nonempty(q))
    throw std::logic_error("pushed-forward signature fails the degree check");
  return q;
}

EdgeOrbitSplit edge_orbit_split(const StableGraph& g, const GraphInvolution& iota) {
  EdgeOrbitSplit s;
  for (std::size_t l = 0; l < g.num_edges(); ++l) (iota.edge_image(l) == l ? s.fixed : s.swapped).push_back(l);
  return s;
}

bool check_involution_compat(const WeightedGraph& w, const GraphInvolution& iota) {
  const auto& g = w.graph;
  const auto& t = w.structure;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (t.degenerate[v] != t.degenerate[iota.vertex_map[v]]) return false;
  for (std::size_t i = 0; i < g.num_legs(); ++i)
    if (w.signature.at(i) != w.signature.at(iota.leg_map[i])) return false;
  for (std::size_t h = 0; h < g.num_half_edges(); ++h) {
    const std::size_t img = iota.half_edge_map[h];
    if (t.edges[StableGraph::edge_of(h)].contact != t.edges[StableGraph::edge_of(img)].contact) return false;
    if (t.edges[StableGraph::edge_of(h)].contact > 0 && is_outgoing(g, t, h) != is_outgoing(g, t, img)) return false;
  }
  return true;
}

std::optional<Diagnostic> quotient_cover_check(const StableGraph& g, const GraphInvolution& iota) {
  if (auto d = involution_diagnostic(g, iota)) return d;
  for (std::size_t l = 0; l < g.num_edges(); ++l)
    if (iota.half_edge_map[2 * l] == 2 * l + 1)
      return Diagnostic{"node", "involution exchanges the branches of node " + g.edge_name(l)};

  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const int gv = g.vertices()[v].genus;
    if (iota.vertex_map[v] != v) {
      if (gv != 0)
        return Diagnostic{"swapped", "component " + g.vertex_name(v) + ": swapped component must be rational"};
      continue;
    }
    long fixed_points = 0;
    for (auto i : g.legs_at(v))
      if (iota.leg_map[i] == i) ++fixed_points;
    for (auto h : g.half_edges_at(v))
      if (iota.half_edge_map[h] == h) ++fixed_points;
    if (fixed_points != 2L * gv + 2)
      return Diagnostic{"ramification", "component " + g.vertex_name(v) + ": " + std::to_string(fixed_points) +
                                            " fixed special points, expected " + std::to_string(2 * gv + 2)};
  }

  std::set<std::size_t> vertex_orbits, edge_orbits;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) vertex_orbits.insert(std::min(v, iota.vertex_map[v]));
  for (std::size_t l = 0; l < g.num_edges(); ++l) edge_orbits.insert(std::min(l, iota.edge_image(l)));
  if (!g.connected() || edge_orbits.size() + 1 != vertex_orbits.size())
    return Diagnostic{"tree", "quotient not a tree"};
  return std::nullopt;
}

}  // namespace logtwist
