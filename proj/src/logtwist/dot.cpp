#include "logtwist/dot.hpp"

#include <sstream>

namespace logtwist {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const StableGraph& g, const std::optional<TwistedStructure>& t) {
  if (t) check_shape(g, *t);
  const bool directed = t.has_value();
  const char* arrow = directed ? " -> " : " -- ";
  std::ostringstream out;
  out << (directed ? "digraph" : "graph") << " G {\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::string label = g.vertex_name(v) + "\\ng=" + std::to_string(g.vertices()[v].genus);
    for (auto i : g.legs_at(v)) label += "\\nsigma" + std::to_string(g.legs()[i].marking);
    if (t && t->degenerate[v]) label += "\\ndegenerate";
    out << "  " << quoted(g.vertex_name(v)) << " [label=" << quoted(label) << "];\n";
  }
  for (std::size_t l = 0; l < g.num_edges(); ++l) {
    std::size_t a = g.edges()[l].ends[0], b = g.edges()[l].ends[1];
    std::string attrs = "label=" + quoted(g.edge_name(l));
    if (t) {
      const auto& e = t->edges[l];
      if (e.orientation != Orientation::none) {
        a = edge_source(g, *t, l);
        b = edge_target(g, *t, l);
      }
      attrs = "label=" + quoted(g.edge_name(l) + " c=" + std::to_string(e.contact));
      if (e.orientation == Orientation::none) attrs += ", dir=none";
    }
    out << "  " << quoted(g.vertex_name(a)) << arrow << quoted(g.vertex_name(b)) << " [" << attrs << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace logtwist
