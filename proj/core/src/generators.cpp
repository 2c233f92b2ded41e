#include "shellseq/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "shellseq/quiver.hpp"
#include "shellseq/spectral.hpp"

namespace shellseq {

GeneratedShelling simplex_boundary_shelling(int n) {
  if (n < 0) throw std::invalid_argument("dimension must be non-negative");

  std::vector<int> all(static_cast<std::size_t>(n) + 2);
  std::iota(all.begin(), all.end(), 0);

  GeneratedShelling out;
  for (int j = 0; j <= n + 1; ++j) {
    std::vector<int> verts;
    for (int v : all)
      if (v != j) verts.push_back(v);
    std::vector<int> removed;
    for (int i = 0; i < j; ++i) removed.push_back(i);
    out.tiling.tiles.emplace_back(Simplex(std::move(verts)), std::move(removed));
  }
  auto space = tiling_over_own_space(std::move(out.tiling.tiles));
  out.tiling = std::move(space);

  out.order.resize(out.tiling.tiles.size());
  std::iota(out.order.begin(), out.order.end(), 0);
  return out;
}

MorseTiling cyclic_triangle_tiling() {
  std::vector<MorseTile> tiles;
  for (int i = 0; i < 3; ++i)
    tiles.emplace_back(Simplex{i, (i + 1) % 3}, std::vector<int>{i});
  return tiling_over_own_space(std::move(tiles));
}

SimplicialComplex octahedron_complex() {
  std::vector<Simplex> triangles;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) triangles.push_back(Simplex{a, b, c});
  return SimplicialComplex::downward_closure(triangles);
}

std::vector<MorseTile> triangle_shapes(const Simplex& tri) {
  const auto& v = tri.vertices();
  std::vector<MorseTile> shapes;
  shapes.emplace_back(tri, std::vector<int>{});
  for (int x : v) shapes.emplace_back(tri, std::vector<int>{x});
  for (int x : v) shapes.emplace_back(tri, std::vector<int>{x}, Simplex{x});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      shapes.emplace_back(tri, std::vector<int>{v[i], v[j]});
  shapes.emplace_back(tri, std::vector<int>(v));
  return shapes;
}

namespace {

struct TileOption {
  MorseTile tile;
  std::vector<int> covers;  // indices into the global cell list
};

}  // namespace

void enumerate_octahedron_tilings(const std::function<bool(const MorseTiling&)>& visit) {
  const auto complex = octahedron_complex();

  std::vector<Simplex> cells(complex.faces().begin(), complex.faces().end());
  std::map<Simplex, int> cell_index;
  for (std::size_t i = 0; i < cells.size(); ++i)
    cell_index.emplace(cells[i], static_cast<int>(i));

  const auto triangles = complex.faces_of_dimension(2);
  const int nt = static_cast<int>(triangles.size());

  // a cell must be covered once every triangle containing it is placed
  std::vector<int> deadline(cells.size(), -1);
  for (int ti = 0; ti < nt; ++ti)
    for (const auto& f : triangles[static_cast<std::size_t>(ti)].faces())
      deadline[static_cast<std::size_t>(cell_index.at(f))] = ti;

  std::vector<std::vector<TileOption>> options(static_cast<std::size_t>(nt));
  for (int ti = 0; ti < nt; ++ti)
    for (auto& shape : triangle_shapes(triangles[static_cast<std::size_t>(ti)])) {
      TileOption opt{std::move(shape), {}};
      for (const auto& f : opt.tile.open_faces()) opt.covers.push_back(cell_index.at(f));
      options[static_cast<std::size_t>(ti)].push_back(std::move(opt));
    }

  std::vector<char> covered(cells.size(), 0);
  std::vector<const TileOption*> chosen;
  chosen.reserve(static_cast<std::size_t>(nt));
  bool keep_going = true;

  auto place = [&](auto&& self, int ti) -> void {
    if (!keep_going) return;
    if (ti == nt) {
      MorseTiling t;
      t.space.ambient = complex;
      t.space.cells = complex.faces();
      for (const auto* opt : chosen) t.tiles.push_back(opt->tile);
      if (validate_partition(t).ok && validate_closedness(t).ok) keep_going = visit(t);
      return;
    }
    for (const auto& opt : options[static_cast<std::size_t>(ti)]) {
      bool clash = false;
      for (int c : opt.covers)
        if (covered[static_cast<std::size_t>(c)]) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (int c : opt.covers) covered[static_cast<std::size_t>(c)] = 1;

      bool orphan = false;
      for (std::size_t c = 0; c < cells.size() && !orphan; ++c)
        if (deadline[c] == ti && !covered[c]) orphan = true;

      if (!orphan) {
        chosen.push_back(&opt);
        self(self, ti + 1);
        chosen.pop_back();
      }
      for (int c : opt.covers) covered[static_cast<std::size_t>(c)] = 0;
      if (!keep_going) return;
    }
  };
  place(place, 0);
}

std::optional<MorseTiling> find_octahedron_tiling(
    const std::function<bool(const MorseTiling&)>& pred) {
  std::optional<MorseTiling> found;
  enumerate_octahedron_tilings([&](const MorseTiling& t) {
    if (!pred(t)) return true;
    found = t;
    return false;
  });
  return found;
}

GeneratedShelling searched_octahedron_shelling() {
  std::optional<GeneratedShelling> found;

  enumerate_octahedron_tilings([&](const MorseTiling& t) {
    std::vector<int> indices;
    int index_one_tile = -1;
    std::vector<bool> is_index_two(t.tiles.size(), false);
    for (const auto& [tile, index] : critical_tiles(t)) {
      indices.push_back(index);
      if (index == 1) index_one_tile = tile;
      if (index == 2) is_index_two[static_cast<std::size_t>(tile)] = true;
    }
    std::sort(indices.begin(), indices.end());
    if (indices != std::vector<int>{0, 1, 2, 2}) return true;

    const auto quiver = build_quiver(t);
    if (!is_acyclic(quiver)) return true;

    bool done = false;
    for_each_topological_order(quiver, [&](const ShellingOrder& order) {
      // the lone degree-1 class can only be cancelled by the first
      // differential, so an index-2 tile must be glued right after the
      // index-1 tile
      const auto it = std::find(order.begin(), order.end(), index_one_tile);
      const auto next = static_cast<std::size_t>(it - order.begin()) + 1;
      if (next >= order.size() || !is_index_two[static_cast<std::size_t>(order[next])])
        return true;

      const auto filtration = filtration_from_shelling(t, order);
      RationalField rationals;
      const auto page2 = compute_page(filtration.complex, rationals, 2);
      int total = 0;
      for (const auto& [key, dim] : page2.dims) total += dim;
      if (total != 2) return true;  // something survived that the sphere does not have

      GeneratedShelling result;
      result.tiling.space = t.space;
      for (int id : order) result.tiling.tiles.push_back(t.tiles[static_cast<std::size_t>(id)]);
      result.order.resize(order.size());
      std::iota(result.order.begin(), result.order.end(), 0);
      found = std::move(result);
      done = true;
      return false;
    });
    return !done;
  });

  if (!found) throw std::runtime_error("no octahedron tiling matched the search criteria");
  return *found;
}

}  // namespace shellseq
