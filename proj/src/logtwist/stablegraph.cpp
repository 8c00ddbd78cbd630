#include "logtwist/stablegraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace logtwist {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool is_permutation_of_order_two(const std::vector<std::size_t>& map, std::size_t n) {
  if (map.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (map[i] >= n) return false;
    if (map[map[i]] != i) return false;
  }
  return true;
}

}  // namespace

StableGraph::StableGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Leg> legs)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), legs_(std::move(legs)) {
  std::stable_sort(legs_.begin(), legs_.end(), [](const Leg& a, const Leg& b) { return a.marking < b.marking; });
}

std::string StableGraph::vertex_name(std::size_t v) const {
  return vertices_[v].name.empty() ? "v" + std::to_string(v) : vertices_[v].name;
}

std::string StableGraph::edge_name(std::size_t l) const {
  return edges_[l].name.empty() ? "l" + std::to_string(l) : edges_[l].name;
}

std::vector<std::size_t> StableGraph::half_edges_at(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < num_half_edges(); ++h)
    if (half_edge_vertex(h) == v) out.push_back(h);
  return out;
}

std::vector<std::size_t> StableGraph::legs_at(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < legs_.size(); ++i)
    if (legs_[i].vertex == v) out.push_back(i);
  return out;
}

bool StableGraph::connected() const {
  if (vertices_.empty()) return false;
  DisjointSets ds(vertices_.size());
  for (const auto& e : edges_) ds.unite(e.ends[0], e.ends[1]);
  const std::size_t root = ds.find(0);
  for (std::size_t v = 1; v < vertices_.size(); ++v)
    if (ds.find(v) != root) return false;
  return true;
}

bool StableGraph::is_bridge(std::size_t l) const {
  if (edges_[l].is_loop()) return false;
  DisjointSets ds(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (i != l) ds.unite(edges_[i].ends[0], edges_[i].ends[1]);
  return ds.find(edges_[l].ends[0]) != ds.find(edges_[l].ends[1]);
}

long genus(const StableGraph& g) {
  long total = 0;
  for (const auto& v : g.vertices()) total += v.genus;
  return total + static_cast<long>(g.num_edges()) - static_cast<long>(g.num_vertices()) + 1;
}

std::optional<Diagnostic> validate_graph(const StableGraph& g) {
  if (g.num_vertices() == 0) return Diagnostic{"vertices", "graph has no vertices"};
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (g.vertices()[v].genus < 0)
      return Diagnostic{"genus", "vertex " + g.vertex_name(v) + " has negative genus"};
  for (std::size_t l = 0; l < g.num_edges(); ++l)
    for (auto end : g.edges()[l].ends)
      if (end >= g.num_vertices())
        return Diagnostic{"incidence", "edge " + g.edge_name(l) + " refers to a missing vertex"};
  for (std::size_t i = 0; i < g.num_legs(); ++i) {
    const auto& leg = g.legs()[i];
    if (leg.vertex >= g.num_vertices())
      return Diagnostic{"incidence", "marking " + std::to_string(leg.marking) + " refers to a missing vertex"};
    if (leg.marking != static_cast<int>(i) + 1)
      return Diagnostic{"markings", "markings must be exactly 1.." + std::to_string(g.num_legs()) +
                                        ", each once (missing or repeated marking " + std::to_string(i + 1) +
                                        ")"};
  }
  std::vector<std::string> names;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) names.push_back(g.vertex_name(v));
  for (std::size_t l = 0; l < g.num_edges(); ++l) names.push_back(g.edge_name(l));
  std::sort(names.begin(), names.end());
  if (auto dup = std::adjacent_find(names.begin(), names.end()); dup != names.end())
    return Diagnostic{"names", "name " + *dup + " is used twice"};
  if (!g.connected()) return Diagnostic{"connected", "not connected"};
  if (genus(g) < 0) return Diagnostic{"genus", "total genus is negative"};
  return std::nullopt;
}

std::optional<Diagnostic> validate(const StableGraph& g, const Signature& mu) {
  if (auto d = validate_graph(g)) return d;
  if (mu.size() != g.num_legs())
    return Diagnostic{"signature", "signature has " + std::to_string(mu.size()) + " entries for " +
                                       std::to_string(g.num_legs()) + " markings"};
  long sum = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < 0) return Diagnostic{"signature", "negative entry at marking " + std::to_string(i + 1)};
    sum += mu[i];
  }
  const long expected = 2 * genus(g) - 2;
  if (sum != expected)
    return Diagnostic{"degree", "degree mismatch " + std::to_string(sum) + " ≠ " + std::to_string(expected)};
  return std::nullopt;
}

GraphInvolution GraphInvolution::identity(const StableGraph& g) {
  GraphInvolution i;
  i.vertex_map.resize(g.num_vertices());
  i.half_edge_map.resize(g.num_half_edges());
  i.leg_map.resize(g.num_legs());
  std::iota(i.vertex_map.begin(), i.vertex_map.end(), 0);
  std::iota(i.half_edge_map.begin(), i.half_edge_map.end(), 0);
  std::iota(i.leg_map.begin(), i.leg_map.end(), 0);
  return i;
}

GraphInvolution GraphInvolution::from_edge_map(const StableGraph& g, std::vector<std::size_t> vertex_map,
                                               const std::vector<std::size_t>& edge_map,
                                               std::vector<std::size_t> leg_map) {
  if (vertex_map.size() != g.num_vertices() || edge_map.size() != g.num_edges() ||
      leg_map.size() != g.num_legs())
    throw std::invalid_argument("involution maps have the wrong sizes");
  GraphInvolution i;
  i.vertex_map = std::move(vertex_map);
  i.leg_map = std::move(leg_map);
  i.half_edge_map.resize(g.num_half_edges());
  for (std::size_t l = 0; l < g.num_edges(); ++l) {
    const std::size_t m = edge_map[l];
    if (m >= g.num_edges()) throw std::invalid_argument("edge map refers to a missing edge");
    for (std::size_t side = 0; side < 2; ++side) {
      const std::size_t v = g.edges()[l].ends[side];
      const std::size_t target = v < i.vertex_map.size() ? i.vertex_map[v] : v;
      const auto& image = g.edges()[m];
      std::size_t pick = side;
      if (image.ends[side] != target && image.ends[1 - side] == target) pick = 1 - side;
      i.half_edge_map[2 * l + side] = 2 * m + pick;
    }
  }
  return i;
}

std::optional<Diagnostic> involution_diagnostic(const StableGraph& g, const GraphInvolution& iota) {
  if (!is_permutation_of_order_two(iota.vertex_map, g.num_vertices()))
    return Diagnostic{"involution", "vertex map is not an involution"};
  if (!is_permutation_of_order_two(iota.half_edge_map, g.num_half_edges()))
    return Diagnostic{"involution", "half-edge map is not an involution"};
  if (!is_permutation_of_order_two(iota.leg_map, g.num_legs()))
    return Diagnostic{"involution", "leg map is not an involution"};
  for (std::size_t h = 0; h < g.num_half_edges(); ++h) {
    const std::size_t img = iota.half_edge_map[h];
    if (iota.half_edge_map[StableGraph::other_half(h)] != StableGraph::other_half(img))
      return Diagnostic{"involution", "half-edge map splits edge " + g.edge_name(StableGraph::edge_of(h))};
    if (g.half_edge_vertex(img) != iota.vertex_map[g.half_edge_vertex(h)])
      return Diagnostic{"involution", "incidence not preserved at edge " + g.edge_name(StableGraph::edge_of(h))};
  }
  for (std::size_t i = 0; i < g.num_legs(); ++i)
    if (g.legs()[iota.leg_map[i]].vertex != iota.vertex_map[g.legs()[i].vertex])
      return Diagnostic{"involution", "incidence not preserved at marking " + std::to_string(i + 1)};
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (g.vertices()[iota.vertex_map[v]].genus != g.vertices()[v].genus)
      return Diagnostic{"involution", "genus not preserved at vertex " + g.vertex_name(v)};
  return std::nullopt;
}

bool check_involution(const StableGraph& g, const GraphInvolution& iota) {
  return !involution_diagnostic(g, iota).has_value();
}

GraphInvolution compose(const GraphInvolution& a, const GraphInvolution& b) {
  auto apply = [](const std::vector<std::size_t>& outer, const std::vector<std::size_t>& inner) {
    std::vector<std::size_t> out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer.at(inner[i]);
    return out;
  };
  return {apply(a.vertex_map, b.vertex_map), apply(a.half_edge_map, b.half_edge_map),
          apply(a.leg_map, b.leg_map)};
}

}  // namespace logtwist
