#pragma once

// Dual graphs of marked nodal curves.
//
// Each edge is a pair of half-edges; half-edge 2*l sits at edges[l].ends[0]
// and half-edge 2*l+1 at edges[l].ends[1]. Loops are edges whose two ends
// are the same vertex. Markings are numbered 1..n and legs are stored in
// marking order, so leg i carries marking i+1.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace logtwist {

struct Vertex {
  int genus = 0;
  std::string name;
};

struct Edge {
  std::size_t ends[2] = {0, 0};
  std::string name;

  bool is_loop() const { return ends[0] == ends[1]; }
};

struct Leg {
  int marking = 0;  // 1-based
  std::size_t vertex = 0;
};

/// Signature entries m_1..m_n, positional by marking.
using Signature = std::vector<int>;

class StableGraph {
 public:
  StableGraph() = default;
  StableGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Leg> legs);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Leg>& legs() const { return legs_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_half_edges() const { return 2 * edges_.size(); }
  std::size_t num_legs() const { return legs_.size(); }

  std::size_t half_edge_vertex(std::size_t h) const { return edges_[h / 2].ends[h % 2]; }
  static std::size_t edge_of(std::size_t h) { return h / 2; }
  static std::size_t other_half(std::size_t h) { return h ^ 1U; }

  /// Display names with defaults v<i> and l<i>.
  std::string vertex_name(std::size_t v) const;
  std::string edge_name(std::size_t l) const;

  /// Half-edges attached to v, ascending.
  std::vector<std::size_t> half_edges_at(std::size_t v) const;
  /// Leg indices attached to v, ascending.
  std::vector<std::size_t> legs_at(std::size_t v) const;

  bool connected() const;
  /// True if removing edge l disconnects its endpoints.
  bool is_bridge(std::size_t l) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Leg> legs_;
};

/// Sum of vertex genera plus the first Betti number.
long genus(const StableGraph& g);

struct Diagnostic {
  std::string rule;
  std::string message;
};

/// Checks structure, markings, connectivity and sum(m) = 2g - 2, in that
/// order, and reports the first violated rule.
std::optional<Diagnostic> validate(const StableGraph& g, const Signature& mu);
/// Structural checks only (indices, genera, markings, connectivity).
std::optional<Diagnostic> validate_graph(const StableGraph& g);

/// An involution acting on vertices, half-edges and legs.
struct GraphInvolution {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> half_edge_map;
  std::vector<std::size_t> leg_map;

  static GraphInvolution identity(const StableGraph& g);
  /// Builds the half-edge map from an edge map by matching endpoints: each
  /// half-edge goes to the half-edge of the image edge at the image vertex,
  /// preferring the same end when both qualify.
  static GraphInvolution from_edge_map(const StableGraph& g, std::vector<std::size_t> vertex_map,
                                       const std::vector<std::size_t>& edge_map,
                                       std::vector<std::size_t> leg_map);

  std::size_t edge_image(std::size_t l) const { return half_edge_map[2 * l] / 2; }
};

/// True iff the maps are well-formed permutations of order <= 2 that respect
/// edges, incidence and genus.
bool check_involution(const StableGraph& g, const GraphInvolution& iota);
std::optional<Diagnostic> involution_diagnostic(const StableGraph& g, const GraphInvolution& iota);

GraphInvolution compose(const GraphInvolution& a, const GraphInvolution& b);

}  // namespace logtwist
