#include "doctest.h"
#include "logtwist/diffdata.hpp"
#include "oracles.hpp"

using namespace logtwist;

TEST_CASE("orders on the genus-3 banana") {
  const Fixture f = oracle::load_fixture("banana_h4");
  const OrderAssignment a = induced_orders(f.weighted());
  REQUIRE(a.orders.size() == 2);
  CHECK(a.orders[0] == std::map<std::string, int>{{"p+", 1}, {"q+", 1}});
  CHECK(a.orders[1] == std::map<std::string, int>{{"p-", -3}, {"q-", -3}, {"sigma1", 4}});
  CHECK(a.total(0) == 2);
  CHECK(a.total(1) == -2);
}

TEST_CASE("orders on unoriented edges") {
  const Fixture f = oracle::load_fixture("banana_genus1");
  const OrderAssignment a = induced_orders(f.weighted());
  CHECK(a.orders[0] == std::map<std::string, int>{{"a+", -1}, {"b+", -1}});
  CHECK(a.orders[1] == std::map<std::string, int>{{"a-", -1}, {"b-", -1}});
}

TEST_CASE("nonzero residual names the vertex") {
  Fixture f = oracle::load_fixture("banana_h4");
  WeightedGraph w = f.weighted();
  w.structure.edges[0].contact = 1;
  try {
    induced_orders(w);
    FAIL("expected a residual error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()) == "degree residual -1 at vertex X");
  }
}

TEST_CASE("orders per vertex sum to 2g - 2 and node pairs sum to -2") {
  for (const auto& name : oracle::fixture_names()) {
    const Fixture f = oracle::load_fixture(name);
    for (const auto& t : enumerate_structures(f.graph, f.signature, 5)) {
      const WeightedGraph w{f.graph, f.signature, t};
      const OrderAssignment a = induced_orders(w);
      for (std::size_t v = 0; v < f.graph.num_vertices(); ++v)
        CHECK(a.total(v) == 2L * f.graph.vertices()[v].genus - 2);
      for (std::size_t l = 0; l < f.graph.num_edges(); ++l) {
        const auto& e = f.graph.edges()[l];
        const int x = a.orders[e.ends[0]].at(half_edge_label(f.graph, t, 2 * l));
        const int y = a.orders[e.ends[1]].at(half_edge_label(f.graph, t, 2 * l + 1));
        CHECK(x + y == -2);
      }
    }
  }
}

TEST_CASE("rescaling keeps the class and composes") {
  const Fixture f = oracle::load_fixture("banana_h4");
  const WeightedGraph w = f.weighted();
  const OrderAssignment base = induced_orders(w);
  const OrderAssignment once = rescale_class(w, 1, "u");
  CHECK(once == base);
  CHECK(once.provenance == std::vector<std::string>{"v1*u"});
  const OrderAssignment twice = rescale_class(once, 0, "t");
  CHECK(twice == base);
  CHECK(twice.provenance == std::vector<std::string>{"v1*u", "v0*t"});
  CHECK(rescale_class(rescale_class(w, 0, "t"), 1, "u") == twice);
  CHECK_THROWS(rescale_class(w, 5, "u"));
}
