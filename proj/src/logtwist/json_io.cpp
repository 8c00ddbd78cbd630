#include "logtwist/json_io.hpp"

#include <limits>

namespace logtwist {

namespace {

constexpr long long kMaxMagnitude = (1LL << 53) - 1;

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& at, const std::string& key) {
  if (!j.is_object()) throw InputError(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(child(at, key), "missing field");
  return *it;
}

const Json* optional_field(const Json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

const Json& array(const Json& j, const std::string& at) {
  if (!j.is_array()) throw InputError(at, "expected an array");
  return j;
}

long long integer(const Json& j, const std::string& at) {
  if (!j.is_number_integer()) throw InputError(at, "expected an integer");
  long long x = 0;
  if (j.is_number_unsigned()) {
    const auto u = j.get<unsigned long long>();
    if (u > static_cast<unsigned long long>(kMaxMagnitude)) throw InputError(at, "integer magnitude exceeds 2^53");
    x = static_cast<long long>(u);
  } else {
    x = j.get<long long>();
  }
  if (x > kMaxMagnitude || x < -kMaxMagnitude) throw InputError(at, "integer magnitude exceeds 2^53");
  return x;
}

int small_int(const Json& j, const std::string& at) {
  const long long x = integer(j, at);
  if (x > std::numeric_limits<int>::max() / 4 || x < std::numeric_limits<int>::min() / 4)
    throw InputError(at, "integer out of range");
  return static_cast<int>(x);
}

std::size_t index(const Json& j, const std::string& at, std::size_t bound, const std::string& what) {
  const long long x = integer(j, at);
  if (x < 0 || static_cast<unsigned long long>(x) >= bound) throw InputError(at, "no such " + what);
  return static_cast<std::size_t>(x);
}

std::vector<std::size_t> index_map(const Json& j, const std::string& at, std::size_t n, const std::string& what) {
  array(j, at);
  if (j.size() != n) throw InputError(at, "expected " + std::to_string(n) + " entries");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(index(j[i], child(at, i), n, what));
  return out;
}

std::vector<int> int_list(const Json& j, const std::string& at) {
  array(j, at);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(small_int(j[i], child(at, i)));
  return out;
}

std::string name(const Json& j, const std::string& at) {
  if (!j.is_string()) throw InputError(at, "expected a string");
  return j.get<std::string>();
}

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::forward: return "forward";
    case Orientation::backward: return "backward";
    case Orientation::none: break;
  }
  return "none";
}

}  // namespace

WeightedGraph Fixture::weighted() const {
  if (!structure) throw InputError("/structure", "missing field");
  return WeightedGraph{graph, signature, *structure};
}

StableGraph graph_from_json(const Json& j, const std::string& at) {
  const Json& vs = array(field(j, at, "vertices"), child(at, "vertices"));
  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    const std::string p = child(child(at, "vertices"), v);
    Vertex vx;
    vx.genus = small_int(field(vs[v], p, "genus"), child(p, "genus"));
    if (const Json* n = optional_field(vs[v], "name")) vx.name = name(*n, child(p, "name"));
    vertices.push_back(std::move(vx));
  }
  const std::size_t nv = vertices.size();
  std::vector<Edge> edges;
  if (const Json* es = optional_field(j, "edges")) {
    const std::string p = child(at, "edges");
    array(*es, p);
    for (std::size_t l = 0; l < es->size(); ++l) {
      const std::string q = child(p, l);
      const Json& e = array((*es)[l], q);
      if (e.size() != 2) throw InputError(q, "expected two endpoints");
      Edge edge;
      for (std::size_t s = 0; s < 2; ++s) edge.ends[s] = index(e[s], child(q, s), nv, "vertex");
      edges.push_back(edge);
    }
  }
  if (const Json* ns = optional_field(j, "edge_names")) {
    const std::string p = child(at, "edge_names");
    array(*ns, p);
    if (ns->size() != edges.size()) throw InputError(p, "expected one name per edge");
    for (std::size_t l = 0; l < edges.size(); ++l) edges[l].name = name((*ns)[l], child(p, l));
  }
  std::vector<Leg> legs;
  if (const Json* ls = optional_field(j, "legs")) {
    const std::string p = child(at, "legs");
    array(*ls, p);
    for (std::size_t i = 0; i < ls->size(); ++i) {
      const std::string q = child(p, i);
      Leg leg;
      leg.marking = small_int(field((*ls)[i], q, "marking"), child(q, "marking"));
      leg.vertex = index(field((*ls)[i], q, "vertex"), child(q, "vertex"), nv, "vertex");
      legs.push_back(leg);
    }
  }
  StableGraph g(std::move(vertices), std::move(edges), std::move(legs));
  if (auto d = validate_graph(g)) throw InputError(at, d->message);
  return g;
}

TwistedStructure structure_from_json(const Json& j, const std::string& at, const StableGraph& g) {
  TwistedStructure t;
  const std::string pc = child(at, "contacts"), po = child(at, "orientations"), pd = child(at, "degenerate");
  const auto contacts = int_list(field(j, at, "contacts"), pc);
  const Json& os = array(field(j, at, "orientations"), po);
  const Json& ds = array(field(j, at, "degenerate"), pd);
  if (contacts.size() != g.num_edges()) throw InputError(pc, "expected one entry per edge");
  if (os.size() != g.num_edges()) throw InputError(po, "expected one entry per edge");
  if (ds.size() != g.num_vertices()) throw InputError(pd, "expected one entry per vertex");
  for (std::size_t l = 0; l < g.num_edges(); ++l) {
    const std::string o = name(os[l], child(po, l));
    EdgeTwist e;
    e.contact = contacts[l];
    if (o == "forward")
      e.orientation = Orientation::forward;
    else if (o == "backward")
      e.orientation = Orientation::backward;
    else if (o != "none")
      throw InputError(child(po, l), "expected forward, backward or none");
    if (e.contact < 0) throw InputError(child(pc, l), "contact order must be nonnegative");
    if ((e.contact == 0) != (e.orientation == Orientation::none))
      throw InputError(child(po, l), "edge must be unoriented exactly when its contact order is 0");
    if (g.edges()[l].is_loop() && e.contact != 0) throw InputError(child(pc, l), "loops must have contact order 0");
    t.edges.push_back(e);
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!ds[v].is_boolean()) throw InputError(child(pd, v), "expected a boolean");
    t.degenerate.push_back(ds[v].get<bool>());
  }
  return t;
}

GraphInvolution involution_from_json(const Json& j, const std::string& at, const StableGraph& g) {
  const auto vertex_map = index_map(field(j, at, "vertices"), child(at, "vertices"), g.num_vertices(), "vertex");
  std::vector<std::size_t> leg_map;
  {
    const std::string p = child(at, "legs");
    const Json& ls = array(field(j, at, "legs"), p);
    if (ls.size() != g.num_legs()) throw InputError(p, "expected one entry per marking");
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const long long m = integer(ls[i], child(p, i));
      if (m < 1 || static_cast<std::size_t>(m) > g.num_legs()) throw InputError(child(p, i), "no such marking");
      leg_map.push_back(static_cast<std::size_t>(m - 1));
    }
  }
  GraphInvolution iota;
  if (const Json* hs = optional_field(j, "half_edges")) {
    iota.vertex_map = vertex_map;
    iota.leg_map = leg_map;
    iota.half_edge_map = index_map(*hs, child(at, "half_edges"), g.num_half_edges(), "half-edge");
  } else {
    const auto edge_map = index_map(field(j, at, "edges"), child(at, "edges"), g.num_edges(), "edge");
    iota = GraphInvolution::from_edge_map(g, vertex_map, edge_map, leg_map);
  }
  if (auto d = involution_diagnostic(g, iota)) throw InputError(at, d->message);
  return iota;
}

HypSignature hyp_signature_from_json(const Json& j, const std::string& at) {
  HypSignature mu;
  mu.fixed = int_list(field(j, at, "fixed"), child(at, "fixed"));
  if (const Json* p = optional_field(j, "pairs")) mu.pairs = int_list(*p, child(at, "pairs"));
  try {
    check_well_formed(mu);
  } catch (const std::invalid_argument& e) {
    throw InputError(at, e.what());
  }
  return mu;
}

Fixture fixture_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("", "expected an object");
  Fixture f;
  f.graph = graph_from_json(field(j, "", "graph"), "/graph");
  f.signature = int_list(field(j, "", "signature"), "/signature");
  if (auto d = validate(f.graph, f.signature)) throw InputError("/signature", d->message);
  if (const Json* s = optional_field(j, "structure")) f.structure = structure_from_json(*s, "/structure", f.graph);
  if (const Json* s = optional_field(j, "signs")) {
    f.signs = int_list(*s, "/signs");
    for (std::size_t i = 0; i < f.signs->size(); ++i)
      if ((*f.signs)[i] != 1 && (*f.signs)[i] != -1) throw InputError(child("/signs", i), "expected 1 or -1");
  }
  if (const Json* s = optional_field(j, "involution")) f.involution = involution_from_json(*s, "/involution", f.graph);
  if (const Json* s = optional_field(j, "hyp_signature")) f.hyp_signature = hyp_signature_from_json(*s, "/hyp_signature");
  return f;
}

Fixture parse_fixture(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("", std::string("malformed JSON: ") + e.what());
  }
  return fixture_from_json(j);
}

std::vector<int> parse_signs(const std::string& text) {
  std::vector<int> out;
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InputError("", std::string("malformed signs: ") + e.what());
    }
    out = int_list(j, "");
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string::npos) end = text.size();
      std::string tok = text.substr(start, end - start);
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      if (tok == "+" || tok == "+1" || tok == "1")
        out.push_back(1);
      else if (tok == "-" || tok == "-1")
        out.push_back(-1);
      else if (!(tok.empty() && text.find_first_not_of(" \t") == std::string::npos))
        throw InputError("/" + std::to_string(out.size()), "expected + or -");
      start = end + 1;
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] != 1 && out[i] != -1) throw InputError("/" + std::to_string(i), "expected 1 or -1");
  return out;
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

Json to_json(const StableGraph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    j["vertices"].push_back(Json{{"genus", g.vertices()[v].genus}, {"name", g.vertex_name(v)}});
  j["edges"] = Json::array();
  j["edge_names"] = Json::array();
  for (std::size_t l = 0; l < g.num_edges(); ++l) {
    j["edges"].push_back(Json::array({g.edges()[l].ends[0], g.edges()[l].ends[1]}));
    j["edge_names"].push_back(g.edge_name(l));
  }
  j["legs"] = Json::array();
  for (const auto& leg : g.legs()) j["legs"].push_back(Json{{"marking", leg.marking}, {"vertex", leg.vertex}});
  return j;
}

Json to_json(const TwistedStructure& t) {
  Json j;
  j["contacts"] = Json::array();
  j["orientations"] = Json::array();
  for (const auto& e : t.edges) {
    j["contacts"].push_back(e.contact);
    j["orientations"].push_back(orientation_name(e.orientation));
  }
  j["degenerate"] = Json::array();
  for (bool d : t.degenerate) j["degenerate"].push_back(d);
  return j;
}

Json to_json(const MinimalMonoid& m) {
  Json j;
  j["rank"] = m.rank();
  j["sharp"] = m.monoid.sharp();
  j["hilbert_basis"] = Json::array();
  for (const auto& h : m.monoid.hilbert_basis()) j["hilbert_basis"].push_back(to_json(h));
  j["images"] = Json::object();
  for (std::size_t s = 0; s < m.symbols.size(); ++s) j["images"][m.symbols[s]] = to_json(m.images[s]);
  return j;
}

Json to_json(const OrderAssignment& a, const StableGraph& g) {
  Json j = Json::object();
  for (std::size_t v = 0; v < a.orders.size(); ++v) {
    Json pts = Json::object();
    for (const auto& [label, order] : a.orders[v]) pts[label] = order;
    j[g.vertex_name(v)] = std::move(pts);
  }
  return j;
}

Json to_json(const HypSignature& mu) { return Json{{"fixed", mu.fixed}, {"pairs", mu.pairs}}; }

Json to_json(const GraphInvolution& iota, const StableGraph& g) {
  Json j;
  j["vertices"] = iota.vertex_map;
  j["half_edges"] = iota.half_edge_map;
  Json legs = Json::array();
  for (std::size_t i = 0; i < g.num_legs(); ++i) legs.push_back(iota.leg_map[i] + 1);
  j["legs"] = std::move(legs);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace logtwist
