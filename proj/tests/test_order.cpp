#include <doctest.h>

#include <algorithm>

#include "plethysm/errors.hpp"
#include "plethysm/order.hpp"

using namespace plethysm;

namespace {

using Edge = std::pair<Partition, Partition>;

bool has_edge(const HasseDiagram& d, const Partition& a, const Partition& b) {
  return std::find(d.edges.begin(), d.edges.end(), Edge{a, b}) != d.edges.end();
}

}  // namespace

TEST_CASE("Schur differences") {
  PlethysmEngine engine;
  SymExpr d = schur_difference(engine, Partition{2}, Partition{3});
  CHECK(d.size() == 1);
  CHECK(d.coefficient(Partition{2, 2, 2}) == 1);
  CHECK(schur_difference(engine, Partition{3, 1}, Partition{3, 1}).is_zero());

  SymExpr e = schur_difference(engine, Partition{1, 1}, Partition{2});
  CHECK(e.size() == 3);
  CHECK(e.coefficient(Partition{2, 2}) == 1);
  CHECK(e.coefficient(Partition{2, 1, 1}) == 1);
  CHECK(e.coefficient(Partition{1, 1, 1, 1}) == 1);
  CHECK_THROWS_AS(schur_difference(engine, Partition{}, Partition{2}), UsageError);
}

TEST_CASE("relation verdicts") {
  PlethysmEngine engine;
  auto up = is_le(engine, Partition{2}, Partition{3});
  CHECK(up.holds);
  CHECK_FALSE(up.witness.has_value());
  auto down = is_le(engine, Partition{3}, Partition{2});
  CHECK_FALSE(down.holds);
  REQUIRE(down.witness.has_value());
  CHECK(*down.witness == Partition{2, 2, 2});
  CHECK(is_le(engine, Partition{1, 1}, Partition{1}).holds);
  CHECK(is_le(engine, Partition{1}, Partition{1, 1}).holds);
  CHECK(is_le(engine, Partition{2, 2}, Partition{2}).holds);

  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : enumerate_partitions(n)) CHECK(is_le(engine, mu, mu).holds);
}

TEST_CASE("Foulkes direction for one-row partitions") {
  PlethysmEngine engine(ExpandOptions{4, 24});
  for (int n = 1; n <= 4; ++n)
    for (int m = n; n * m <= 16; ++m) CHECK(is_le(engine, Partition{n}, Partition{m}).holds);
}

TEST_CASE("Hasse diagrams of small node sets") {
  PlethysmEngine engine;
  auto chain = hasse_diagram(engine, {Partition{4}, Partition{2}, Partition{3}});
  CHECK(chain.nodes == std::vector<Partition>{Partition{2}, Partition{3}, Partition{4}});
  CHECK(chain.edges == std::vector<Edge>{{Partition{2}, Partition{3}}, {Partition{3}, Partition{4}}});

  auto pair = hasse_diagram(engine, {Partition{2, 2}, Partition{2}});
  CHECK(pair.edges == std::vector<Edge>{{Partition{2, 2}, Partition{2}}});

  auto three = hasse_diagram(engine, {Partition{2, 1}, Partition{2, 2}, Partition{3, 1}});
  CHECK(three.edges.size() == 2);
  CHECK(has_edge(three, Partition{2, 1}, Partition{2, 2}));
  CHECK(has_edge(three, Partition{2, 1}, Partition{3, 1}));

  CHECK_THROWS_AS(normalize_nodes({Partition{2}, Partition{2}}), UsageError);
}

TEST_CASE("uncomputed pairs are reported, not guessed") {
  PlethysmEngine engine(ExpandOptions{1, 8});
  auto d = hasse_diagram(engine, {Partition{2}, Partition{3}, Partition{4}});
  CHECK(d.edges == std::vector<Edge>{{Partition{2}, Partition{3}}, {Partition{2}, Partition{4}}});
  CHECK(d.uncomputed == std::vector<Edge>{{Partition{3}, Partition{4}}});
}

TEST_CASE("scans") {
  PlethysmEngine engine(ExpandOptions{4, 24});
  auto nodes = poset_nodes(3, false);
  CHECK(transitivity_scan(engine, nodes).violations.empty());
  CHECK(antisymmetry_scan(engine, nodes).violations.empty());

  auto cols = antisymmetry_scan(engine, {Partition{1}, Partition{1, 1}});
  REQUIRE(cols.violations.size() == 1);
  CHECK(cols.violations[0] == std::vector<Partition>{Partition{1}, Partition{1, 1}});
  CHECK(antisymmetry_scan(engine, {Partition{2}, Partition{3}}).violations.empty());
}

TEST_CASE("poset nodes and DOT export") {
  auto nodes = poset_nodes(3, false);
  CHECK(nodes == std::vector<Partition>{Partition{2}, Partition{3}, Partition{2, 1}});
  CHECK(poset_nodes(1, false).empty());
  CHECK(poset_nodes(1, true) == std::vector<Partition>{Partition{1}});
  CHECK(poset_nodes(2, true).size() == 3);

  PlethysmEngine engine;
  std::string dot = to_dot(hasse_diagram(engine, nodes));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\"2\" -> \"3\"") != std::string::npos);
}

TEST_CASE("instances of mu + (k) below mu + (k + 1)") {
  PlethysmEngine engine;
  for (const Partition& mu : {Partition{}, Partition{1}, Partition{1, 1}, Partition{2}, Partition{2, 1}})
    for (int k = 1; k <= 4; ++k) {
      Partition low = add_parts(mu, Partition{k}), high = add_parts(mu, Partition{k + 1});
      if (low.size() * high.size() > 24) continue;
      CAPTURE(low.to_string());
      CHECK(is_le(engine, low, high).holds);
    }
}
