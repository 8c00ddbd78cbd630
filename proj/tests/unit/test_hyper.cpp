#include "doctest.h"
#include "logtwist/hyper.hpp"
#include "oracles.hpp"

using namespace logtwist;

namespace {

std::string rule_of(const StableGraph& g, const GraphInvolution& iota) {
  const auto d = quotient_cover_check(g, iota);
  return d ? d->rule : "";
}

}  // namespace

TEST_CASE("signature bookkeeping") {
  const HypSignature mu{{0, 0, 0, 0, 0, 0}, {1}};
  CHECK(check_nonempty(mu));
  CHECK(hyperelliptic_genus(mu) == 2);
  const QuadraticSignature q = quadratic_pushforward(mu);
  CHECK(q.fixed == mu.fixed);
  CHECK(q.paired == std::vector<int>{2});
  CHECK(q.entries() == std::vector<int>{0, 0, 0, 0, 0, 0, 2});

  const HypSignature h4{{4, 0, 0, 0, 0, 0, 0, 0}, {}};
  CHECK(check_nonempty(h4));
  CHECK(hyperelliptic_genus(h4) == 3);

  const HypSignature empty{{2}, {}};
  CHECK_FALSE(check_nonempty(empty));
  CHECK_FALSE(hyperelliptic_genus(empty).has_value());
  CHECK_THROWS_AS(quadratic_pushforward(empty), std::invalid_argument);
  CHECK_FALSE(quadratic_nonempty(quadratic_image(empty)));
}

TEST_CASE("malformed hyperelliptic signatures") {
  CHECK_THROWS_AS(check_well_formed({{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(check_well_formed({{-2}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(check_well_formed({{}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(check_nonempty({{0, 0, 0, 0, 0}, {-1}}), std::invalid_argument);
  CHECK_NOTHROW(check_well_formed({{0, 2}, {3}}));
}

TEST_CASE("non-emptiness is preserved by the signature map") {
  oracle::Rng rng(51);
  int nonempty = 0;
  for (int t = 0; t < 2000; ++t) {
    HypSignature mu;
    const long n1 = rng.range(0, 9), n2 = rng.range(0, 3);
    for (long i = 0; i < n1; ++i) mu.fixed.push_back(rng.range(0, 3) == 0 ? 2 : 0);
    for (long j = 0; j < n2; ++j) mu.pairs.push_back(static_cast<int>(rng.range(1, 3)));
    const bool ok = check_nonempty(mu);
    CHECK(ok == quadratic_nonempty(quadratic_image(mu)));
    if (ok) {
      ++nonempty;
      const QuadraticSignature q = quadratic_pushforward(mu);
      long degree = 0;
      for (int m : q.fixed) degree += m - 1;
      for (int c : q.paired) degree += c;
      CHECK(degree == -4);
    } else {
      CHECK_THROWS_AS(quadratic_pushforward(mu), std::invalid_argument);
    }
  }
  CHECK(nonempty > 20);
}

TEST_CASE("edge orbits") {
  const Fixture f = oracle::load_fixture("banana_h4_hyperelliptic");
  const auto split = edge_orbit_split(f.graph, *f.involution);
  CHECK(split.fixed.empty());
  CHECK(split.swapped == std::vector<std::size_t>{0, 1});

  const StableGraph loop({{0, "N"}}, {{{0, 0}, "l"}}, {});
  const auto fixed = edge_orbit_split(loop, GraphInvolution::identity(loop));
  CHECK(fixed.fixed == std::vector<std::size_t>{0});
  CHECK(fixed.swapped.empty());
}

TEST_CASE("compatibility with the twisted data") {
  const Fixture f = oracle::load_fixture("banana_h4_hyperelliptic");
  const WeightedGraph w = f.weighted();
  CHECK(check_involution_compat(w, *f.involution));

  WeightedGraph contacts = w;
  contacts.structure.edges[0].contact = 1;
  contacts.structure.edges[1].contact = 3;
  CHECK_FALSE(check_involution_compat(contacts, *f.involution));
  CHECK(check_involution_compat(contacts, GraphInvolution::identity(w.graph)));

  WeightedGraph direction = w;
  direction.structure.edges[1].orientation = Orientation::backward;
  CHECK_FALSE(check_involution_compat(direction, *f.involution));

  // Swap two markings with different orders.
  GraphInvolution legs = *f.involution;
  legs.leg_map[0] = 1;
  legs.leg_map[1] = 0;
  CHECK(check_involution(w.graph, legs));
  CHECK_FALSE(check_involution_compat(w, legs));

  StableGraph pair({{1, "top"}, {0, "a"}, {0, "b"}}, {{{0, 1}, "x"}, {{0, 2}, "y"}}, {});
  const auto swap = GraphInvolution::from_edge_map(pair, {0, 2, 1}, {1, 0}, {});
  TwistedStructure t{{{0, Orientation::none}, {0, Orientation::none}}, {false, true, false}};
  CHECK_FALSE(check_involution_compat(WeightedGraph{pair, {}, t}, swap));
}

TEST_CASE("quotient cover check") {
  const Fixture f = oracle::load_fixture("banana_h4_hyperelliptic");
  const GraphInvolution& iota = *f.involution;
  CHECK_FALSE(quotient_cover_check(f.graph, iota).has_value());

  const Fixture smooth = oracle::load_fixture("smooth_genus3_hyperelliptic");
  CHECK_FALSE(quotient_cover_check(smooth.graph, *smooth.involution).has_value());

  // Identity on the edges adds two fixed points on each side.
  const auto fixed_edges = GraphInvolution::from_edge_map(f.graph, {0, 1}, {0, 1}, iota.leg_map);
  const auto d = quotient_cover_check(f.graph, fixed_edges);
  REQUIRE(d.has_value());
  CHECK(d->rule == "ramification");
  CHECK(d->message == "component X: 8 fixed special points, expected 6");

  // Genus change on X.
  const StableGraph g3({{3, "X"}, {0, "R"}}, f.graph.edges(), f.graph.legs());
  CHECK(rule_of(g3, iota) == "ramification");

  // Move a Weierstrass marking from X to R.
  std::vector<Leg> moved = f.graph.legs();
  moved[7].vertex = 1;
  const StableGraph g_moved(f.graph.vertices(), f.graph.edges(), moved);
  CHECK(rule_of(g_moved, iota) == "ramification");

  GraphInvolution broken = iota;
  broken.vertex_map = {1, 0};
  CHECK(rule_of(f.graph, broken) == "involution");

  const StableGraph loop({{0, "N"}}, {{{0, 0}, "l"}}, {{1, 0}, {2, 0}});
  GraphInvolution flip = GraphInvolution::identity(loop);
  flip.half_edge_map = {1, 0};
  CHECK(quotient_cover_check(loop, flip)->message == "involution exchanges the branches of node l");

  StableGraph pair({{0, "top"}, {1, "a"}, {1, "b"}}, {{{0, 1}, "x"}, {{0, 2}, "y"}}, {{1, 0}, {2, 0}});
  const auto swap = GraphInvolution::from_edge_map(pair, {0, 2, 1}, {1, 0}, {0, 1});
  CHECK(quotient_cover_check(pair, swap)->message == "component a: swapped component must be rational");

  // Two swapped components joined twice to a fixed one: the quotient has a cycle.
  StableGraph cyc({{0, "c"}, {0, "a"}, {0, "b"}}, {{{1, 2}, "x"}, {{1, 2}, "y"}, {{0, 1}, "u"}, {{0, 2}, "w"}},
                  {{1, 0}, {2, 0}});
  const auto cyc_iota = GraphInvolution::from_edge_map(cyc, {0, 2, 1}, {1, 0, 3, 2}, {0, 1});
  REQUIRE(check_involution(cyc, cyc_iota));
  CHECK(rule_of(cyc, cyc_iota) == "tree");
}
