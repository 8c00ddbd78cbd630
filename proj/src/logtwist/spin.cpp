#include "logtwist/spin.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "logtwist/diffdata.hpp"

namespace logtwist {

namespace {

void require_even(const Signature& mu) {
  if (!check_even_signature(mu)) throw std::invalid_argument("signature has an odd entry");
}

void require_admissible(const WeightedGraph& w) {
  if (auto d = validate(w.graph, w.signature)) throw std::invalid_argument(d->message);
  const auto r = degree_residual(w.graph, w.signature, w.structure);
  for (std::size_t v = 0; v < r.size(); ++v)
    if (r[v] != 0)
      throw std::invalid_argument("degree residual " + std::to_string(r[v]) + " at vertex " + w.graph.vertex_name(v));
}

// Modulus for the rank cross-check.
const Integer& check_prime() {
  static const Integer p("2305843009213693951");  // 2^61 - 1
  return p;
}

}  // namespace

bool check_even_signature(const Signature& mu) {
  return std::all_of(mu.begin(), mu.end(), [](int m) { return m % 2 == 0; });
}

OrbifoldLift orbifold_lift_map(const WeightedGraph& w) {
  check_shape(w.graph, w.structure);
  OrbifoldLift lift;
  for (std::size_t l = 0; l < w.graph.num_edges(); ++l) {
    const bool odd = w.structure.edges[l].contact % 2 != 0;
    lift.multiplier.push_back(odd ? 2 : 1);
    (odd ? lift.odd_edges : lift.even_edges).push_back(l);
    lift.local_exponents.push_back(odd ? std::array<int, 2>{2, 2} : std::array<int, 2>{1, 1});
  }
  return lift;
}

RefinedMonoid divisibility_base_change(const WeightedGraph& w) {
  const MinimalMonoid m = minimal_monoid(w);
  std::vector<std::string> targets;
  for (std::size_t v = 0; v < w.graph.num_vertices(); ++v)
    if (w.structure.degenerate[v]) targets.push_back(m.symbols[v]);
  return refine_for_halving(m, targets);
}

SpinDegrees spin_degrees(const WeightedGraph& w) {
  require_even(w.signature);
  induced_orders(w);  // rejects nonzero residuals
  const StableGraph& g = w.graph;
  SpinDegrees d;
  d.divisor.resize(g.num_vertices());
  d.degree.assign(g.num_vertices(), 0);
  for (std::size_t i = 0; i < g.num_legs(); ++i) d.divisor[g.legs()[i].vertex][leg_label(g, i)] = w.signature[i] / 2;
  for (std::size_t h = 0; h < g.num_half_edges(); ++h) {
    const auto& e = w.structure.edges[StableGraph::edge_of(h)];
    long coeff = 0;
    if (e.orientation != Orientation::none) {
      const bool out = is_outgoing(g, w.structure, h);
      if (e.contact % 2 == 0)
        coeff = out ? e.contact / 2 : -e.contact / 2;
      else
        coeff = out ? (e.contact - 1) / 2 : -(e.contact + 1) / 2;
    }
    d.divisor[g.half_edge_vertex(h)][half_edge_label(g, w.structure, h)] = coeff;
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    for (const auto& [label, c] : d.divisor[v]) d.degree[v] += c;
  return d;
}

Placement default_placement(const SpinCurve& c) {
  std::vector<long> next(c.degree.size(), 0);
  Placement p;
  for (const auto& n : c.nodes) {
    std::array<Integer, 2> pt;
    for (int b = 0; b < 2; ++b) pt[b] = next[n.component[b]]++;
    p.push_back(pt);
  }
  return p;
}

Placement random_placement(const SpinCurve& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-(1L << 20), 1L << 20);
  std::vector<std::set<long>> used(c.degree.size());
  Placement p;
  for (const auto& n : c.nodes) {
    std::array<Integer, 2> pt;
    for (int b = 0; b < 2; ++b) {
      long x = 0;
      do x = dist(rng);
      while (!used[n.component[b]].insert(x).second);
      pt[b] = x;
    }
    p.push_back(pt);
  }
  return p;
}

H0Result h0_parity(const SpinCurve& c, const Placement& placement) {
  for (std::size_t v = 0; v < c.genus.size(); ++v)
    if (c.genus[v] != 0)
      throw UnsupportedRegime("component " + std::to_string(v) + " has genus " + std::to_string(c.genus[v]) +
                              "; only rational components are supported");
  if (placement.size() != c.nodes.size()) throw std::invalid_argument("placement does not match the nodes");
  std::vector<std::size_t> offset(c.degree.size() + 1, 0);
  for (std::size_t v = 0; v < c.degree.size(); ++v)
    offset[v + 1] = offset[v] + static_cast<std::size_t>(std::max(c.degree[v] + 1, 0L));
  const std::size_t unknowns = offset.back();
  if (c.nodes.empty() || unknowns == 0) return {static_cast<long>(unknowns), unknowns % 2 == 1};

  IntMatrix eq(c.nodes.size(), unknowns);
  for (std::size_t k = 0; k < c.nodes.size(); ++k) {
    const auto& n = c.nodes[k];
    for (int b = 0; b < 2; ++b) {
      const std::size_t v = n.component[b];
      const Integer scale = b == 0 ? Integer(1) : Integer(-n.sign);
      Integer power = 1;
      for (std::size_t j = offset[v]; j < offset[v + 1]; ++j) {
        eq(k, j) += scale * power;
        power *= placement[k][b];
      }
    }
  }
  const std::size_t r = rank(eq);
  if (rank_mod_p(eq, check_prime()) != r) throw std::logic_error("rank disagrees with the modular cross-check");
  const long h0 = static_cast<long>(unknowns - r);
  return {h0, h0 % 2 == 1};
}

// h0 only drops under specialization, so the smallest value over a few
// random placements is the value at a general placement. The sequential
// placement is not used: points in arithmetic progression can make the
// gluing equations dependent.
H0Result h0_parity(const SpinCurve& c) {
  H0Result best = h0_parity(c, random_placement(c, 0x243f6a8885a308d3ULL));
  for (std::uint64_t k = 1; k < 3; ++k) {
    const H0Result r = h0_parity(c, random_placement(c, 0x243f6a8885a308d3ULL + k));
    if (r.h0 < best.h0) best = r;
  }
  return best;
}

SpinCurve spin_curve(const WeightedGraph& w, const SpinDegrees& d, const std::vector<int>& signs) {
  const StableGraph& g = w.graph;
  SpinCurve c;
  c.degree = d.degree;
  for (const auto& v : g.vertices()) c.genus.push_back(v.genus);
  std::size_t k = 0;
  for (std::size_t l = 0; l < g.num_edges(); ++l) {
    if (w.structure.edges[l].contact % 2 != 0) continue;
    if (k >= signs.size()) throw std::invalid_argument("too few signs for the even-contact edges");
    if (signs[k] != 1 && signs[k] != -1) throw std::invalid_argument("signs must be +1 or -1");
    c.nodes.push_back({{g.edges()[l].ends[0], g.edges()[l].ends[1]}, signs[k]});
    ++k;
  }
  if (k != signs.size()) throw std::invalid_argument("too many signs for the even-contact edges");
  return c;
}

std::vector<SpinCurve> connected_pieces(const SpinCurve& c) {
  const std::size_t n = c.degree.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& node : c.nodes) parent[find(node.component[0])] = find(node.component[1]);

  std::vector<std::size_t> piece_of(n), local(n);
  std::vector<std::size_t> root_piece(n, n);
  std::vector<SpinCurve> pieces;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find(v);
    if (root_piece[r] == n) {
      root_piece[r] = pieces.size();
      pieces.emplace_back();
    }
    SpinCurve& p = pieces[root_piece[r]];
    piece_of[v] = root_piece[r];
    local[v] = p.degree.size();
    p.degree.push_back(c.degree[v]);
    p.genus.push_back(v < c.genus.size() ? c.genus[v] : 0);
  }
  for (const auto& node : c.nodes)
    pieces[piece_of[node.component[0]]].nodes.push_back(
        {{local[node.component[0]], local[node.component[1]]}, node.sign});
  return pieces;
}

SpinReport spin_parity(const SpinInput& input, bool base_change) {
  const WeightedGraph& w = input.weighted;
  require_even(w.signature);
  require_admissible(w);
  for (std::size_t v = 0; v < w.graph.num_vertices(); ++v)
    if (w.graph.vertices()[v].genus != 0)
      throw UnsupportedRegime("vertex " + w.graph.vertex_name(v) +
                              " has positive genus; parity is only computed when every component is rational");
  SpinReport report;
  report.lift = orbifold_lift_map(w);
  if (base_change) report.refinement_index = divisibility_base_change(w).index;
  report.degrees = spin_degrees(w);
  const SpinCurve curve = spin_curve(w, report.degrees, input.signs);
  for (const auto& piece : connected_pieces(curve)) {
    const H0Result r = h0_parity(piece);
    report.piece_h0.push_back(r.h0);
    report.h0 += r.h0;
  }
  report.odd = report.h0 % 2 == 1;
  return report;
}

}  // namespace logtwist
