#include "logtwist/jobs.hpp"

#include "logtwist/dot.hpp"

namespace logtwist {

namespace {

const GraphInvolution* involution_of(const Fixture& f, const JobOptions& o) {
  if (o.involution) return &*o.involution;
  if (f.involution) return &*f.involution;
  return nullptr;
}

Json names(const StableGraph& g, const std::vector<std::size_t>& edges) {
  Json a = Json::array();
  for (auto l : edges) a.push_back(g.edge_name(l));
  return a;
}

Json hyperelliptic_monoids(const WeightedGraph& w, const GraphInvolution& iota) {
  Json j;
  j["compatible"] = check_involution_compat(w, iota);
  if (!j["compatible"].get<bool>()) return j;
  const MinimalMonoid quotient = hyperelliptic_monoid_quotient(w, iota);
  const MinimalMonoid coequalizer = hyperelliptic_monoid_coequalizer(w, iota);
  j["quotient"] = to_json(quotient);
  j["coequalizer"] = to_json(coequalizer);
  j["presentations_agree"] = monoids_equal(quotient, coequalizer);
  return j;
}

template <typename F>
Json section(F&& f) {
  try {
    return f();
  } catch (const UnsupportedRegime& e) {
    return Json{{"skipped", e.what()}};
  } catch (const std::invalid_argument& e) {
    return Json{{"skipped", e.what()}};
  }
}

}  // namespace

Json run_enumerate(const Fixture& f, const JobOptions& o) {
  const auto structures = enumerate_structures(f.graph, f.signature, o.max_contact);
  Json j;
  j["command"] = "enumerate";
  j["max_contact"] = o.max_contact;
  j["count"] = structures.size();
  j["structures"] = Json::array();
  for (const auto& t : structures) j["structures"].push_back(to_json(t));
  return j;
}

Json run_monoid(const Fixture& f, const JobOptions& o) {
  const WeightedGraph w = f.weighted();
  Json j;
  j["command"] = "monoid";
  j["consistent"] = is_consistent(w);
  j["monoid"] = to_json(minimal_monoid(w));
  if (const GraphInvolution* iota = involution_of(f, o)) j["hyperelliptic"] = hyperelliptic_monoids(w, *iota);
  return j;
}

Json run_spin(const Fixture& f, const JobOptions& o) {
  SpinInput in{f.weighted(), {}};
  if (o.signs)
    in.signs = *o.signs;
  else if (f.signs)
    in.signs = *f.signs;
  else
    throw InputError("/signs", "missing field");
  const SpinReport r = spin_parity(in);

  Json j;
  j["command"] = "spin";
  j["parity"] = r.odd ? "odd" : "even";
  j["h0"] = r.h0;
  j["piece_h0"] = r.piece_h0;
  j["refinement_index"] = r.refinement_index.get_str();
  j["orbifold_edges"] = names(f.graph, r.lift.odd_edges);
  Json degrees = Json::object(), divisor = Json::object();
  for (std::size_t v = 0; v < f.graph.num_vertices(); ++v) {
    degrees[f.graph.vertex_name(v)] = r.degrees.degree[v];
    Json pts = Json::object();
    for (const auto& [label, c] : r.degrees.divisor[v]) pts[label] = c;
    divisor[f.graph.vertex_name(v)] = std::move(pts);
  }
  j["degrees"] = std::move(degrees);
  j["divisor"] = std::move(divisor);

  const SpinCurve curve = spin_curve(in.weighted, r.degrees, in.signs);
  bool stable = true;
  const auto pieces = connected_pieces(curve);
  for (std::size_t p = 0; p < pieces.size(); ++p)
    for (int k = 0; k < o.placements; ++k)
      if (h0_parity(pieces[p], random_placement(pieces[p], o.seed + static_cast<std::uint64_t>(k))).h0 != r.piece_h0[p])
        stable = false;
  j["placement_check"] = Json{{"seed", o.seed}, {"placements", o.placements}, {"stable", stable}};
  return j;
}

Json run_hyper(const Fixture& f, const JobOptions& o) {
  Json j;
  j["command"] = "hyper";
  const GraphInvolution* iota = involution_of(f, o);
  if (!iota && !f.hyp_signature) throw InputError("/involution", "missing field");
  if (iota) {
    const auto split = edge_orbit_split(f.graph, *iota);
    j["edge_orbits"] = Json{{"fixed", names(f.graph, split.fixed)}, {"swapped", names(f.graph, split.swapped)}};
    const auto diag = quotient_cover_check(f.graph, *iota);
    j["quotient_cover"] = diag ? Json{{"ok", false}, {"rule", diag->rule}, {"message", diag->message}}
                               : Json{{"ok", true}};
    if (f.structure) j["hyperelliptic"] = hyperelliptic_monoids(f.weighted(), *iota);
  }
  if (f.hyp_signature) {
    const HypSignature& mu = *f.hyp_signature;
    Json s = to_json(mu);
    const auto g = hyperelliptic_genus(mu);
    s["genus"] = g ? Json(*g) : Json(nullptr);
    s["nonempty"] = check_nonempty(mu);
    if (s["nonempty"].get<bool>()) {
      const QuadraticSignature q = quadratic_pushforward(mu);
      s["quadratic"] = Json{{"fixed", q.fixed}, {"paired", q.paired}, {"nonempty", quadratic_nonempty(q)}};
    }
    j["signature"] = std::move(s);
  }
  return j;
}

Json run_report(const Fixture& f, const JobOptions& o) {
  Json j;
  j["command"] = "report";
  j["graph"] = to_json(f.graph);
  j["signature"] = f.signature;
  j["genus"] = genus(f.graph);
  j["enumerate"] = run_enumerate(f, o);
  if (f.structure) {
    j["structure"] = to_json(*f.structure);
    j["orders"] = section([&] { return to_json(induced_orders(f.weighted()), f.graph); });
    j["monoid"] = run_monoid(f, o);
    j["spin"] = section([&] { return run_spin(f, o); });
  }
  if (involution_of(f, o) || f.hyp_signature) j["hyper"] = run_hyper(f, o);
  j["dot"] = to_dot(f.graph, f.structure);
  return j;
}

}  // namespace logtwist
