#include "logtwist/diffdata.hpp"

#include <stdexcept>

namespace logtwist {

long OrderAssignment::total(std::size_t v) const {
  long s = 0;
  for (const auto& [label, order] : orders.at(v)) s += order;
  return s;
}

std::string leg_label(const StableGraph& g, std::size_t leg) {
  return "sigma" + std::to_string(g.legs()[leg].marking);
}

std::string half_edge_label(const StableGraph& g, const TwistedStructure& t, std::size_t half_edge) {
  const std::size_t l = StableGraph::edge_of(half_edge);
  const bool plus = t.edges[l].orientation == Orientation::none ? half_edge % 2 == 0 : is_outgoing(g, t, half_edge);
  return g.edge_name(l) + (plus ? "+" : "-");
}

OrderAssignment induced_orders(const WeightedGraph& w) {
  const StableGraph& g = w.graph;
  const auto residual = degree_residual(g, w.signature, w.structure);
  for (std::size_t v = 0; v < residual.size(); ++v)
    if (residual[v] != 0)
      throw std::invalid_argument("degree residual " + std::to_string(residual[v]) + " at vertex " + g.vertex_name(v));
  OrderAssignment a;
  a.orders.resize(g.num_vertices());
  for (std::size_t i = 0; i < g.num_legs(); ++i) a.orders[g.legs()[i].vertex][leg_label(g, i)] = w.signature[i];
  for (std::size_t h = 0; h < g.num_half_edges(); ++h)
    a.orders[g.half_edge_vertex(h)][half_edge_label(g, w.structure, h)] = half_edge_order(g, w.structure, h);
  return a;
}

OrderAssignment rescale_class(const OrderAssignment& a, std::size_t v, const std::string& unit) {
  if (v >= a.orders.size()) throw std::out_of_range("vertex index out of range");
  OrderAssignment out = a;
  out.provenance.push_back("v" + std::to_string(v) + "*" + unit);
  return out;
}

OrderAssignment rescale_class(const WeightedGraph& w, std::size_t v, const std::string& unit) {
  return rescale_class(induced_orders(w), v, unit);
}

}  // namespace logtwist
