#pragma once

// Twisted structures on a stable graph: contact orders, orientations and the
// degenerate/nondegenerate vertex partition.

#include <cstddef>
#include <map>
#include <vector>

#include "logtwist/stablegraph.hpp"

namespace logtwist {

/// forward: from ends[0] to ends[1]; backward: from ends[1] to ends[0].
/// An edge points from the larger vertex in the minimal ordering to the
/// smaller (more degenerate) one.
enum class Orientation { none, forward, backward };

struct EdgeTwist {
  int contact = 0;
  Orientation orientation = Orientation::none;

  friend bool operator==(const EdgeTwist&, const EdgeTwist&) = default;
  friend auto operator<=>(const EdgeTwist&, const EdgeTwist&) = default;
};

struct TwistedStructure {
  std::vector<EdgeTwist> edges;
  std::vector<bool> degenerate;

  friend bool operator==(const TwistedStructure&, const TwistedStructure&) = default;
};

struct WeightedGraph {
  StableGraph graph;
  Signature signature;
  TwistedStructure structure;
};

/// Source and target vertex of an oriented edge.
std::size_t edge_source(const StableGraph& g, const TwistedStructure& t, std::size_t l);
std::size_t edge_target(const StableGraph& g, const TwistedStructure& t, std::size_t l);
bool is_outgoing(const StableGraph& g, const TwistedStructure& t, std::size_t half_edge);

/// Order of the induced differential at a half-edge: c-1 outgoing,
/// -(c+1) incoming, -1 unoriented.
int half_edge_order(const StableGraph& g, const TwistedStructure& t, std::size_t half_edge);

/// Throws std::invalid_argument unless `t` has one entry per edge and vertex,
/// nonnegative contacts, orientation none exactly when c = 0, and c = 0 on loops.
void check_shape(const StableGraph& g, const TwistedStructure& t);

/// Per vertex: sum of marking orders and half-edge orders minus (2g_v - 2).
std::vector<long> degree_residual(const StableGraph& g, const Signature& mu, const TwistedStructure& t);

bool is_consistent(const StableGraph& g, const Signature& mu, const TwistedStructure& t);
bool is_consistent(const WeightedGraph& w);

/// All admissible structures with contacts bounded by `max_contact`, sorted
/// by (contact, orientation) per edge. Sources of the oriented-edge digraph
/// carry the differential and are nondegenerate; the remaining flags are
/// those accepted by is_consistent.
std::vector<TwistedStructure> enumerate_structures(const StableGraph& g, const Signature& mu, int max_contact);

}  // namespace logtwist
