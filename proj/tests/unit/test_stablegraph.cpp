#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "logtwist/dot.hpp"
#include "logtwist/stablegraph.hpp"
#include "oracles.hpp"

using namespace logtwist;

namespace {

StableGraph banana(int gx, int gr) {
  return StableGraph({{gx, "X"}, {gr, "R"}}, {{{0, 1}, "p"}, {{0, 1}, "q"}}, {{1, 1}});
}

// Same graph with vertices, edges and legs listed in a permuted order.
StableGraph relabel(const StableGraph& g, oracle::Rng& rng) {
  std::vector<std::size_t> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.range(0, static_cast<long>(i) - 1))]);
  std::vector<Vertex> vs(g.num_vertices());
  for (std::size_t v = 0; v < perm.size(); ++v) vs[perm[v]] = g.vertices()[v];
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    Edge f = e;
    f.ends[0] = perm[e.ends[1]];
    f.ends[1] = perm[e.ends[0]];
    es.push_back(f);
  }
  std::reverse(es.begin(), es.end());
  std::vector<Leg> legs;
  for (const auto& l : g.legs()) legs.push_back({l.marking, perm[l.vertex]});
  std::reverse(legs.begin(), legs.end());
  return StableGraph(vs, es, legs);
}

}  // namespace

TEST_CASE("genus") {
  CHECK(genus(StableGraph({{3, ""}}, {}, {})) == 3);
  CHECK(genus(banana(2, 0)) == 3);
  CHECK(genus(StableGraph({{0, ""}}, {{{0, 0}, ""}}, {})) == 1);
}

TEST_CASE("genus is invariant under relabeling") {
  oracle::Rng rng(21);
  for (const auto& name : oracle::fixture_names()) {
    const StableGraph g = oracle::load_fixture(name).graph;
    for (int k = 0; k < 5; ++k) {
      const StableGraph h = relabel(g, rng);
      CHECK(genus(h) == genus(g));
      CHECK_FALSE(validate_graph(h).has_value());
    }
  }
}

TEST_CASE("validate") {
  CHECK_FALSE(validate(banana(2, 0), {4}).has_value());
  const auto mismatch = validate(StableGraph({{2, ""}}, {}, {{1, 0}}), {3});
  REQUIRE(mismatch.has_value());
  CHECK(mismatch->message == "degree mismatch 3 ≠ 2");
  const auto split = validate(StableGraph({{1, ""}, {1, ""}}, {}, {}), {});
  REQUIRE(split.has_value());
  CHECK(split->message == "not connected");
}

TEST_CASE("validate accepts the corpus and rejects corrupted variants") {
  for (const auto& name : oracle::fixture_names()) {
    const Fixture f = oracle::load_fixture(name);
    CHECK_MESSAGE(!validate(f.graph, f.signature).has_value(), name);
  }
  const StableGraph g = banana(2, 0);
  CHECK(validate(banana(1, 0), {4}).has_value());                                               // genus changed
  CHECK(validate(g, {2}).has_value());                                                          // entry changed
  CHECK(validate(g, {4, 0}).has_value());                                                       // extra entry
  CHECK(validate(g, {-1}).has_value());                                                         // negative entry
  CHECK(validate(StableGraph({{2, "X"}, {0, "R"}}, {{{0, 1}, "p"}}, {{1, 1}}), {4}).has_value());  // edge dropped
  CHECK(validate(StableGraph({{2, "X"}, {0, "R"}}, {{{0, 1}, "p"}, {{0, 2}, "q"}}, {{1, 1}}), {4}).has_value());
  CHECK(validate(StableGraph({{2, "X"}, {0, "R"}}, {{{0, 1}, "p"}, {{0, 1}, "q"}}, {{2, 1}}), {4}).has_value());
  CHECK(validate(StableGraph({{2, "X"}, {0, "R"}}, {{{0, 1}, "p"}, {{0, 1}, "p"}}, {{1, 1}}), {4}).has_value());
  CHECK(validate(StableGraph({{-1, "X"}, {0, "R"}}, {{{0, 1}, "p"}, {{0, 1}, "q"}}, {{1, 1}}), {4}).has_value());
  CHECK(validate(StableGraph({}, {}, {}), {}).has_value());
}

TEST_CASE("involutions") {
  const StableGraph g = banana(2, 0);
  const auto id = GraphInvolution::identity(g);
  CHECK(check_involution(g, id));
  const auto swap = GraphInvolution::from_edge_map(g, {0, 1}, {1, 0}, {0});
  CHECK(check_involution(g, swap));
  CHECK(swap.half_edge_map == std::vector<std::size_t>{2, 3, 0, 1});
  const auto bad = GraphInvolution::from_edge_map(g, {1, 0}, {0, 1}, {0});
  CHECK_FALSE(check_involution(g, bad));

  // Genus-preserving vertex swap is fine; a genus mismatch is not.
  const StableGraph sym({{1, ""}, {1, ""}}, {{{0, 1}, ""}}, {});
  CHECK(check_involution(sym, GraphInvolution::from_edge_map(sym, {1, 0}, {0}, {})));
  GraphInvolution wrong;
  wrong.vertex_map = {0, 0};
  wrong.half_edge_map = {0, 1};
  CHECK_FALSE(check_involution(sym, wrong));
}

TEST_CASE("an involution composed with itself is the identity") {
  oracle::Rng rng(22);
  for (int t = 0; t < 30; ++t) {
    const auto inst = oracle::random_symmetric_instance(rng);
    const StableGraph& g = inst.weighted.graph;
    REQUIRE(check_involution(g, inst.iota));
    const auto twice = compose(inst.iota, inst.iota);
    CHECK(check_involution(g, twice));
    const auto id = GraphInvolution::identity(g);
    CHECK(twice.vertex_map == id.vertex_map);
    CHECK(twice.half_edge_map == id.half_edge_map);
    CHECK(twice.leg_map == id.leg_map);
  }
}

TEST_CASE("bridges") {
  const StableGraph chain({{1, ""}, {1, ""}}, {{{0, 1}, ""}}, {});
  CHECK(chain.is_bridge(0));
  CHECK_FALSE(banana(2, 0).is_bridge(0));
  CHECK_FALSE(StableGraph({{0, ""}}, {{{0, 0}, ""}}, {}).is_bridge(0));
}

TEST_CASE("dot output") {
  const Fixture f = oracle::load_fixture("banana_h4");
  const std::string dot = to_dot(f.graph, f.structure);
  CHECK(dot.rfind("digraph G {", 0) == 0);
  CHECK(dot.find("\"X\" -> \"R\" [label=\"p c=2\"]") != std::string::npos);
  CHECK(dot.find("\"X\" -> \"R\" [label=\"q c=2\"]") != std::string::npos);
  CHECK(to_dot(f.graph, f.structure) == dot);

  const std::string single = to_dot(StableGraph({{3, "C"}}, {}, {}));
  CHECK(single.rfind("graph G {", 0) == 0);
  CHECK(single.find("--") == std::string::npos);

  const Fixture loop = oracle::load_fixture("rational_loop");
  CHECK(to_dot(loop.graph).find("\"N\" -- \"N\"") != std::string::npos);
  CHECK(to_dot(loop.graph, loop.structure).find("\"N\" -> \"N\" [label=\"loop c=0\", dir=none]") != std::string::npos);
}
