#include "logtwist/twist.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "logtwist/minmonoid.hpp"

namespace logtwist {

std::size_t edge_source(const StableGraph& g, const TwistedStructure& t, std::size_t l) {
  return g.edges()[l].ends[t.edges[l].orientation == Orientation::backward ? 1 : 0];
}

std::size_t edge_target(const StableGraph& g, const TwistedStructure& t, std::size_t l) {
  return g.edges()[l].ends[t.edges[l].orientation == Orientation::backward ? 0 : 1];
}

bool is_outgoing(const StableGraph& g, const TwistedStructure& t, std::size_t half_edge) {
  (void)g;
  const auto o = t.edges[StableGraph::edge_of(half_edge)].orientation;
  const std::size_t side = half_edge % 2;
  return (o == Orientation::forward && side == 0) || (o == Orientation::backward && side == 1);
}

int half_edge_order(const StableGraph& g, const TwistedStructure& t, std::size_t half_edge) {
  const auto& e = t.edges[StableGraph::edge_of(half_edge)];
  if (e.orientation == Orientation::none) return -1;
  return is_outgoing(g, t, half_edge) ? e.contact - 1 : -(e.contact + 1);
}

void check_shape(const StableGraph& g, const TwistedStructure& t) {
  if (t.edges.size() != g.num_edges())
    throw std::invalid_argument("structure has " + std::to_string(t.edges.size()) + " edge entries for " +
                                std::to_string(g.num_edges()) + " edges");
  if (t.degenerate.size() != g.num_vertices())
    throw std::invalid_argument("structure has " + std::to_string(t.degenerate.size()) + " vertex flags for " +
                                std::to_string(g.num_vertices()) + " vertices");
  for (std::size_t l = 0; l < g.num_edges(); ++l) {
    const auto& e = t.edges[l];
    if (e.contact < 0) throw std::invalid_argument("edge " + g.edge_name(l) + " has a negative contact order");
    if ((e.contact == 0) != (e.orientation == Orientation::none))
      throw std::invalid_argument("edge " + g.edge_name(l) + " must be unoriented exactly when its contact order is 0");
    if (g.edges()[l].is_loop() && e.contact != 0)
      throw std::invalid_argument("loop " + g.edge_name(l) + " must have contact order 0");
  }
}

std::vector<long> degree_residual(const StableGraph& g, const Signature& mu, const TwistedStructure& t) {
  check_shape(g, t);
  if (mu.size() != g.num_legs()) throw std::invalid_argument("signature length does not match the markings");
  std::vector<long> r(g.num_vertices(), 0);
  for (std::size_t i = 0; i < g.num_legs(); ++i) r[g.legs()[i].vertex] += mu[i];
  for (std::size_t h = 0; h < g.num_half_edges(); ++h) r[g.half_edge_vertex(h)] += half_edge_order(g, t, h);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) r[v] -= 2L * g.vertices()[v].genus - 2;
  return r;
}

bool is_consistent(const StableGraph& g, const Signature& mu, const TwistedStructure& t) {
  return is_consistent(WeightedGraph{g, mu, t});
}

bool is_consistent(const WeightedGraph& w) {
  check_shape(w.graph, w.structure);
  const MinimalMonoid m = minimal_monoid(w);
  if (!m.monoid.sharp()) return false;
  for (std::size_t l = 0; l < w.graph.num_edges(); ++l)
    if (is_zero(m.edge_image(l))) return false;
  for (std::size_t v = 0; v < w.graph.num_vertices(); ++v)
    if (is_zero(m.vertex_image(v)) == static_cast<bool>(w.structure.degenerate[v])) return false;
  return true;
}

namespace {

struct Search {
  const StableGraph& g;
  int max_contact;
  std::vector<long> target;     // required sum of half-edge orders per vertex
  std::vector<long> partial;    // assigned so far
  std::vector<int> open;        // unassigned incidences per vertex
  std::vector<EdgeTwist> current;
  std::vector<std::vector<EdgeTwist>> found;

  bool feasible(std::size_t v) const {
    const long need = target[v] - partial[v];
    if (open[v] == 0) return need == 0;
    const long lo = -static_cast<long>(open[v]) * (max_contact + 1);
    const long hi = static_cast<long>(open[v]) * std::max(max_contact - 1, -1);
    return need >= lo && need <= hi;
  }

  void assign(std::size_t l, const EdgeTwist& e, int sign) {
    const auto& edge = g.edges()[l];
    for (std::size_t side = 0; side < 2; ++side) {
      long order = -1;
      if (e.orientation != Orientation::none) {
        const bool out = (e.orientation == Orientation::forward) == (side == 0);
        order = out ? e.contact - 1 : -(e.contact + 1);
      }
      partial[edge.ends[side]] += sign * order;
      open[edge.ends[side]] -= sign;
    }
  }

  void run(std::size_t l) {
    if (l == g.num_edges()) {
      found.push_back(current);
      return;
    }
    std::vector<EdgeTwist> options{{0, Orientation::none}};
    if (!g.edges()[l].is_loop())
      for (int c = 1; c <= max_contact; ++c) {
        options.push_back({c, Orientation::forward});
        options.push_back({c, Orientation::backward});
      }
    const auto& edge = g.edges()[l];
    for (const auto& e : options) {
      assign(l, e, +1);
      if (feasible(edge.ends[0]) && feasible(edge.ends[1])) {
        current[l] = e;
        run(l + 1);
      }
      assign(l, e, -1);
    }
  }
};

}  // namespace

std::vector<TwistedStructure> enumerate_structures(const StableGraph& g, const Signature& mu, int max_contact) {
  if (auto d = validate(g, mu)) throw std::invalid_argument("invalid graph or signature: " + d->message);
  if (max_contact < 0) throw std::invalid_argument("max_contact must be nonnegative");

  Search s{g, max_contact, {}, {}, {}, {}, {}};
  const std::size_t n = g.num_vertices();
  s.target.assign(n, 0);
  s.partial.assign(n, 0);
  s.open.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) s.target[v] = 2L * g.vertices()[v].genus - 2;
  for (std::size_t i = 0; i < g.num_legs(); ++i) s.target[g.legs()[i].vertex] -= mu[i];
  for (std::size_t h = 0; h < g.num_half_edges(); ++h) ++s.open[g.half_edge_vertex(h)];
  s.current.resize(g.num_edges());
  bool ok = true;
  for (std::size_t v = 0; v < n; ++v) ok = ok && s.feasible(v);
  if (ok) s.run(0);
  std::sort(s.found.begin(), s.found.end());

  std::vector<TwistedStructure> out;
  for (auto& edges : s.found) {
    TwistedStructure t{std::move(edges), std::vector<bool>(n, false)};
    std::vector<bool> has_incoming(n, false);
    for (std::size_t l = 0; l < g.num_edges(); ++l)
      if (t.edges[l].orientation != Orientation::none) has_incoming[edge_target(g, t, l)] = true;
    std::vector<std::size_t> free_vertices;
    for (std::size_t v = 0; v < n; ++v)
      if (has_incoming[v]) free_vertices.push_back(v);
    // Flags on non-source vertices, all-degenerate first.
    const std::size_t combos = std::size_t{1} << free_vertices.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
      for (std::size_t i = 0; i < free_vertices.size(); ++i) t.degenerate[free_vertices[i]] = !((mask >> i) & 1U);
      if (is_consistent(g, mu, t)) out.push_back(t);
    }
  }
  return out;
}

}  // namespace logtwist
