#include "doctest.h"
#include "logtwist/hyper.hpp"
#include "logtwist/minmonoid.hpp"
#include "oracles.hpp"

using namespace logtwist;

namespace {

IntVector vec(std::initializer_list<long> xs) { return make_vector(xs); }

// v0 (genus 3, top) with two edges of contact 3 down to the swapped pair
// v1, v2, each rational with one zero of order 2.
struct Fork {
  WeightedGraph w;
  GraphInvolution iota;
};

Fork fork_instance() {
  StableGraph g({{3, "top"}, {0, "left"}, {0, "right"}}, {{{0, 1}, "a"}, {{0, 2}, "b"}}, {{1, 1}, {2, 2}});
  TwistedStructure t{{{3, Orientation::forward}, {3, Orientation::forward}}, {false, true, true}};
  WeightedGraph w{g, {2, 2}, t};
  return {w, GraphInvolution::from_edge_map(g, {0, 2, 1}, {1, 0}, {1, 0})};
}

void check_relations(const WeightedGraph& w, const MinimalMonoid& m) {
  const auto& g = w.graph;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (!w.structure.degenerate[v]) CHECK(is_zero(m.vertex_image(v)));
  for (std::size_t l = 0; l < g.num_edges(); ++l) {
    const auto& e = w.structure.edges[l];
    if (e.orientation == Orientation::none) continue;
    const std::size_t s = edge_source(g, w.structure, l), t = edge_target(g, w.structure, l);
    IntVector lhs = m.vertex_image(s);
    for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] += e.contact * m.edge_image(l)[k];
    CHECK(lhs == m.vertex_image(t));
  }
}

}  // namespace

TEST_CASE("genus-3 banana monoid") {
  const Fixture f = oracle::load_fixture("banana_h4");
  const MinimalMonoid m = minimal_monoid(f.weighted());
  CHECK(m.rank() == 1);
  CHECK(m.monoid.sharp());
  CHECK(m.symbols == std::vector<std::string>{"e_X", "e_R", "e_p", "e_q"});
  CHECK(m.image("e_X") == vec({0}));
  CHECK(m.image("e_R") == vec({2}));
  CHECK(m.image("e_p") == vec({1}));
  CHECK(m.image("e_q") == vec({1}));
  CHECK(m.monoid.hilbert_basis() == std::vector<IntVector>{vec({1})});
  CHECK_FALSE(m.symbol_index("e_Z").has_value());
  CHECK_THROWS(m.image("e_Z"));
}

TEST_CASE("smooth and chain monoids") {
  const Fixture s = oracle::load_fixture("smooth_genus2");
  const MinimalMonoid ms = minimal_monoid(s.weighted());
  CHECK(ms.rank() == 0);
  CHECK(ms.monoid.sharp());
  CHECK(ms.monoid.hilbert_basis().empty());

  const Fixture c = oracle::load_fixture("chain");
  const MinimalMonoid mc = minimal_monoid(c.weighted());
  CHECK(mc.rank() == 1);
  CHECK(mc.vertex_image(1) == mc.edge_image(0));
  CHECK(mc.vertex_image(1) == vec({1}));
}

TEST_CASE("edge relations hold and the images generate the ambient group") {
  for (const auto& name : oracle::fixture_names()) {
    const Fixture f = oracle::load_fixture(name);
    for (const auto& t : enumerate_structures(f.graph, f.signature, 5)) {
      const WeightedGraph w{f.graph, f.signature, t};
      const MinimalMonoid m = minimal_monoid(w);
      check_relations(w, m);
      const Lattice gen = Lattice::spanned_by(m.images, m.rank());
      CHECK(gen.rank() == m.rank());
      for (std::size_t r = 0; r < m.monoid.ambient().rank(); ++r)
        CHECK(gen.contains(m.monoid.ambient().basis().row(r)));
      for (const auto& img : m.images) CHECK(contains(m.monoid, img));
    }
  }
}

TEST_CASE("hyperelliptic quotient of a fork") {
  const Fork fk = fork_instance();
  REQUIRE(check_involution(fk.w.graph, fk.iota));
  REQUIRE(check_involution_compat(fk.w, fk.iota));
  const MinimalMonoid m = minimal_monoid(fk.w);
  CHECK(m.rank() == 2);
  CHECK(m.image("e_a") != m.image("e_b"));

  const MinimalMonoid q = hyperelliptic_monoid_quotient(fk.w, fk.iota);
  CHECK(q.rank() == 1);
  CHECK(q.image("e_a") == q.image("e_b"));
  CHECK(q.image("e_left") == q.image("e_right"));
  CHECK(q.image("e_left") == vec({3}));
  CHECK(q.monoid.sharp());

  const MinimalMonoid c = hyperelliptic_monoid_coequalizer(fk.w, fk.iota);
  CHECK(monoids_equal(q, c));
  CHECK_FALSE(monoids_equal(q, m));
  CHECK(monoids_equal(m, m));

  const IntMatrix phi = involution_automorphism(m, fk.w.graph, fk.iota);
  CHECK(phi * phi == IntMatrix::identity(m.rank()));
  CHECK(phi.apply(m.image("e_a")) == m.image("e_b"));
}

TEST_CASE("quotient of two swapped parallel edges") {
  StableGraph g({{1, "v1"}, {0, "v2"}}, {{{0, 1}, "a"}, {{0, 1}, "b"}}, {{1, 1}});
  WeightedGraph w{g, {2}, {{{1, Orientation::forward}, {1, Orientation::forward}}, {false, true}}};
  REQUIRE(is_consistent(w));
  const auto iota = GraphInvolution::from_edge_map(g, {0, 1}, {1, 0}, {0});
  REQUIRE(check_involution_compat(w, iota));
  const MinimalMonoid m = minimal_monoid(w);
  const MinimalMonoid q = hyperelliptic_monoid_quotient(w, iota);
  CHECK(m.rank() == 1);
  CHECK(monoids_equal(m, q));
  CHECK(monoids_equal(q, hyperelliptic_monoid_coequalizer(w, iota)));
}

TEST_CASE("quotient properties on random symmetric instances") {
  oracle::Rng rng(31);
  int with_swaps = 0;
  for (int t = 0; t < 25; ++t) {
    const auto inst = oracle::random_symmetric_instance(rng);
    const WeightedGraph& w = inst.weighted;
    const MinimalMonoid m = minimal_monoid(w);
    const MinimalMonoid q = hyperelliptic_monoid_quotient(w, inst.iota);
    const MinimalMonoid c = hyperelliptic_monoid_coequalizer(w, inst.iota);
    CHECK(monoids_equal(q, c));
    CHECK(q.rank() <= m.rank());
    CHECK(q.monoid.sharp());
    const auto split = edge_orbit_split(w.graph, inst.iota);
    if (!split.swapped.empty()) ++with_swaps;
    for (auto l : split.swapped) CHECK(q.edge_image(l) == q.edge_image(inst.iota.edge_image(l)));
    if (split.swapped.empty()) CHECK(monoids_equal(m, q));
    check_relations(w, q);
    const IntMatrix phi = involution_automorphism(m, w.graph, inst.iota);
    CHECK(phi * phi == IntMatrix::identity(m.rank()));
    for (const auto& h : m.monoid.hilbert_basis()) CHECK(contains(m.monoid, phi.apply(h)));
  }
  CHECK(with_swaps > 5);
}

TEST_CASE("halving and refinement") {
  const MinimalMonoid banana = minimal_monoid(oracle::load_fixture("banana_h4").weighted());
  CHECK(halve(banana, "e_R") == vec({1}));
  CHECK_FALSE(halve(banana, "e_p").has_value());
  CHECK(halve(banana, "e_X") == vec({0}));
  CHECK(refine_for_halving(banana, {"e_R"}).index == 1);

  const MinimalMonoid chain = minimal_monoid(oracle::load_fixture("chain").weighted());
  const std::string low = chain.symbols[1];
  CHECK_FALSE(halve(chain, low).has_value());
  const RefinedMonoid r = refine_for_halving(chain, {low});
  CHECK(r.index == 2);
  CHECK(halve(r.monoid, low).has_value());
  CHECK(refine_for_halving(r.monoid, {low}).index == 1);

  const MinimalMonoid fk = minimal_monoid(fork_instance().w);
  const RefinedMonoid rf = refine_for_halving(fk, {"e_left", "e_right"});
  CHECK(rf.index == 4);
  CHECK(halve(rf.monoid, "e_left").has_value());
  CHECK(halve(rf.monoid, "e_right").has_value());
  CHECK(refine_for_halving(rf.monoid, {"e_left", "e_right"}).index == 1);
}
