#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "shellseq/generators.hpp"
#include "shellseq/quiver.hpp"

using namespace shellseq;

namespace {

// reference arrow condition, straight from the gluing definition: an arrow
// from i to j whenever the closure of tile i contains a cell of tile j
Quiver bruteforce_quiver(const MorseTiling& t) {
  Quiver q;
  q.vertex_count = t.tile_count();
  for (const auto& tile : t.tiles) q.vertex_orders.push_back(tile.order());
  for (int i = 0; i < t.tile_count(); ++i) {
    const auto& closure_i = t.tiles[static_cast<std::size_t>(i)].underlying();
    for (int j = 0; j < t.tile_count(); ++j) {
      if (i == j) continue;
      bool meets = false;
      for (const auto& f : t.tiles[static_cast<std::size_t>(j)].open_faces())
        if (closure_i.has_face(f)) {
          meets = true;
          break;
        }
      if (!meets) continue;
      std::vector<int> common;
      const auto& vj = t.tiles[static_cast<std::size_t>(j)].underlying().vertices();
      for (int v : closure_i.vertices())
        if (std::binary_search(vj.begin(), vj.end(), v)) common.push_back(v);
      q.arrows.push_back({i, j, static_cast<int>(common.size()) - 1});
    }
  }
  std::sort(q.arrows.begin(), q.arrows.end(), [](const Arrow& a, const Arrow& b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
  return q;
}

}  // namespace

TEST_CASE("sphere tiling quivers point from later tiles to earlier ones") {
  for (int n = 1; n <= 3; ++n) {
    const auto t = simplex_boundary_shelling(n).tiling;
    const auto q = build_quiver(t);
    std::set<std::pair<int, int>> got, expected;
    for (const auto& a : q.arrows) {
      got.insert({a.source, a.target});
      CHECK(a.label == n - 1);  // facets of the sphere meet along ridges
    }
    for (int j = 0; j < t.tile_count(); ++j)
      for (int i = 0; i < j; ++i) expected.insert({j, i});
    CHECK(got == expected);
    CHECK(is_acyclic(q));
  }
}

TEST_CASE("closed-form arrows equal the point-set definition") {
  std::vector<MorseTiling> corpus;
  for (int n = 0; n <= 3; ++n) corpus.push_back(simplex_boundary_shelling(n).tiling);
  corpus.push_back(cyclic_triangle_tiling());
  int sampled = 0;
  enumerate_octahedron_tilings([&](const MorseTiling& t) {
    corpus.push_back(t);
    return ++sampled < 60;
  });

  for (const auto& t : corpus) {
    const auto fast = build_quiver(t);
    const auto slow = bruteforce_quiver(t);
    CHECK(fast.arrows == slow.arrows);
  }
}

TEST_CASE("the cyclic triangle tiling gives a directed three-cycle") {
  const auto q = build_quiver(cyclic_triangle_tiling());
  CHECK(q.vertex_count == 3);
  CHECK(q.arrows == std::vector<Arrow>{{0, 1, 0}, {1, 2, 0}, {2, 0, 0}});

  const auto cycle = find_cycle(q);
  REQUIRE(cycle.has_value());
  CHECK(cycle->size() == 3);
  for (std::size_t i = 0; i < cycle->size(); ++i) {
    // consecutive arrows chain up and the walk closes
    CHECK((*cycle)[i].target == (*cycle)[(i + 1) % cycle->size()].source);
    CHECK(std::count(q.arrows.begin(), q.arrows.end(), (*cycle)[i]) == 1);
  }
  CHECK_FALSE(is_acyclic(q));
}

TEST_CASE("gradings decrease along arrows and come out injective") {
  const auto q = build_quiver(simplex_boundary_shelling(2).tiling);
  const auto graded = compute_grading(q);
  REQUIRE(std::holds_alternative<Grading>(graded));
  const auto& g = std::get<Grading>(graded);
  CHECK(is_valid_grading(q, g));
  CHECK(g == Grading{0, 1, 2, 3});

  CHECK_FALSE(is_valid_grading(q, {0, 0, 1, 2}));   // not injective
  CHECK_FALSE(is_valid_grading(q, {3, 2, 1, 0}));   // increases along arrows

  const auto cyclic = compute_grading(build_quiver(cyclic_triangle_tiling()));
  CHECK(std::holds_alternative<CycleCertificate>(cyclic));
}

TEST_CASE("shelling orders come from quiver gradings") {
  const auto gen = simplex_boundary_shelling(3);
  const auto verdict = shelling_order(gen.tiling);
  REQUIRE(std::holds_alternative<ShellingOrder>(verdict));
  CHECK(std::get<ShellingOrder>(verdict) == gen.order);

  const auto blocked = shelling_order(cyclic_triangle_tiling());
  REQUIRE(std::holds_alternative<CycleCertificate>(blocked));
  CHECK(std::get<CycleCertificate>(blocked).size() == 3);
}

TEST_CASE("the complete sphere quiver admits exactly one topological order") {
  const auto q = build_quiver(simplex_boundary_shelling(2).tiling);
  std::vector<ShellingOrder> orders;
  for_each_topological_order(q, [&](const ShellingOrder& o) {
    orders.push_back(o);
    return true;
  });
  REQUIRE(orders.size() == 1);
  CHECK(orders[0] == ShellingOrder{0, 1, 2, 3});

  int count = 0;
  for_each_topological_order(build_quiver(cyclic_triangle_tiling()),
                             [&](const ShellingOrder&) {
                               ++count;
                               return true;
                             });
  CHECK(count == 0);
}

TEST_CASE("label filtering keeps only low-dimensional gluings") {
  const auto q = build_quiver(simplex_boundary_shelling(2).tiling);
  CHECK(label_filtered(q, 0).arrows.empty());  // all labels are 1
  CHECK(label_filtered(q, 1).arrows == q.arrows);

  // low-order obstruction: the triangle cycle is already blocked at level 0
  CHECK(partial_shellability_obstruction(cyclic_triangle_tiling(), 0).has_value());
  CHECK_FALSE(partial_shellability_obstruction(simplex_boundary_shelling(2).tiling, 0)
                  .has_value());
}

TEST_CASE("restricted quiver drives the partial filtration") {
  const auto t = simplex_boundary_shelling(2).tiling;
  const auto restricted = restricted_quiver(t, 1);
  CHECK(restricted.tile_ids == std::vector<int>{0, 1, 2});  // orders 0, 1, 2

  const auto result = partial_shelling_filtration(t, 1);
  REQUIRE(std::holds_alternative<PartialShelling>(result));
  const auto& partial = std::get<PartialShelling>(result);
  CHECK(partial.tiles == std::vector<int>{0, 1, 2});
  REQUIRE(partial.prefixes.size() == 3);

  const auto skeleton = t.space.restricted_to_dimension(1).cells;
  for (const auto& prefix : partial.prefixes) CHECK(is_closed_in(prefix, skeleton));
  CHECK(partial.prefixes.back() == skeleton);
  for (std::size_t i = 0; i + 1 < partial.prefixes.size(); ++i)
    CHECK(std::includes(partial.prefixes[i + 1].begin(), partial.prefixes[i + 1].end(),
                        partial.prefixes[i].begin(), partial.prefixes[i].end()));
}

TEST_CASE("vertex orders ride along with the quiver") {
  const auto q = build_quiver(simplex_boundary_shelling(2).tiling);
  CHECK(q.vertex_orders == std::vector<int>{0, 1, 2, 3});
}
