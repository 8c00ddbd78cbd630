#pragma once

// Zero and pole orders of the induced differential on each component.

#include <map>
#include <string>
#include <vector>

#include "logtwist/twist.hpp"

namespace logtwist {

/// Per vertex, the order at each special point. Legs are labelled
/// sigma<marking>; a half-edge is labelled <edge>+ on the source side (the
/// first end for unoriented edges) and <edge>- on the other side.
struct OrderAssignment {
  std::vector<std::map<std::string, int>> orders;
  /// Chart changes applied so far. Not part of equality.
  std::vector<std::string> provenance;

  long total(std::size_t v) const;

  friend bool operator==(const OrderAssignment& a, const OrderAssignment& b) { return a.orders == b.orders; }
};

std::string leg_label(const StableGraph& g, std::size_t leg);
std::string half_edge_label(const StableGraph& g, const TwistedStructure& t, std::size_t half_edge);

/// Throws std::invalid_argument naming the first vertex with a nonzero
/// degree residual.
OrderAssignment induced_orders(const WeightedGraph& w);

/// Orders after rescaling the chart at vertex v by the unit `unit`: the same
/// orders, with the rescaling recorded in provenance.
OrderAssignment rescale_class(const WeightedGraph& w, std::size_t v, const std::string& unit);
OrderAssignment rescale_class(const OrderAssignment& a, std::size_t v, const std::string& unit);

}  // namespace logtwist
