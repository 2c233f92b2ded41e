#include "shellseq/tiling.hpp"

#include <algorithm>
#include <stdexcept>

namespace shellseq {

CellSet CellSet::restricted_to_dimension(int q) const {
  CellSet out;
  out.ambient = ambient;
  for (const auto& c : cells)
    if (c.dimension() <= q) out.cells.insert(c);
  return out;
}

MorseTiling tiling_over_own_space(std::vector<MorseTile> tiles) {
  std::vector<Simplex> tops;
  tops.reserve(tiles.size());
  for (const auto& t : tiles) tops.push_back(t.underlying());
  MorseTiling out;
  out.space.ambient = SimplicialComplex::downward_closure(tops);
  out.space.cells = out.space.ambient.faces();
  out.tiles = std::move(tiles);
  return out;
}

SimplicialComplex underlying_complex(const MorseTiling& t) {
  std::vector<Simplex> tops;
  tops.reserve(t.tiles.size());
  for (const auto& tile : t.tiles) tops.push_back(tile.underlying());
  return SimplicialComplex::downward_closure(tops);
}

PartitionReport validate_partition(const MorseTiling& t) {
  PartitionReport report;

  std::map<Simplex, std::vector<int>> covered;
  for (int i = 0; i < t.tile_count(); ++i) {
    const auto& tile = t.tiles[static_cast<std::size_t>(i)];
    if (!t.space.ambient.contains(tile.underlying())) {
      report.tiles_outside_ambient.push_back(i);
      report.ok = false;
    }
    for (const auto& f : tile.open_faces()) {
      covered[f].push_back(i);
      if (!t.space.cells.count(f)) {
        report.outside.emplace_back(i, f);
        report.ok = false;
      }
    }
  }

  for (const auto& c : t.space.cells) {
    auto it = covered.find(c);
    if (it == covered.end()) {
      report.uncovered.push_back(c);
      report.ok = false;
    }
  }
  for (const auto& [cell, owners] : covered) {
    if (owners.size() > 1) {
      report.overlaps.emplace_back(cell, owners);
      report.ok = false;
    }
  }
  return report;
}

std::map<Simplex, int> tile_assignment(const MorseTiling& t) {
  std::map<Simplex, int> owner;
  for (int i = 0; i < t.tile_count(); ++i)
    for (const auto& f : t.tiles[static_cast<std::size_t>(i)].open_faces()) {
      auto [it, inserted] = owner.emplace(f, i);
      if (!inserted) throw std::invalid_argument("tiles overlap on " + f.to_string());
    }
  return owner;
}

ClosednessReport validate_closedness(const MorseTiling& t) {
  ClosednessReport report;
  const auto owner = tile_assignment(t);

  for (int i = 0; i < t.tile_count(); ++i) {
    const auto& tile = t.tiles[static_cast<std::size_t>(i)];
    for (const auto& f : tile.underlying().faces()) {
      if (!t.space.cells.count(f)) continue;
      auto it = owner.find(f);
      if (it == owner.end()) continue;  // partition failure; reported elsewhere
      const auto& owning = t.tiles[static_cast<std::size_t>(it->second)];
      if (owning.dimension() < tile.dimension()) {
        report.violations.push_back({i, f, it->second});
        report.ok = false;
      }
    }
  }
  return report;
}

bool is_valid_tiling(const MorseTiling& t) {
  return validate_partition(t).ok && validate_closedness(t).ok;
}

ShellingCheck check_shelling(const MorseTiling& t, const ShellingOrder& order) {
  const int n = t.tile_count();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("order must list every tile exactly once");
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    const int tile = order[static_cast<std::size_t>(p)];
    if (tile < 0 || tile >= n || position[static_cast<std::size_t>(tile)] != -1)
      throw std::invalid_argument("order must list every tile exactly once");
    position[static_cast<std::size_t>(tile)] = p;
  }

  const auto owner = tile_assignment(t);

  ShellingCheck check;
  for (int i = 0; i < n; ++i) {
    const int pos_i = position[static_cast<std::size_t>(i)];
    for (const auto& f : t.tiles[static_cast<std::size_t>(i)].underlying().faces()) {
      if (!t.space.cells.count(f)) continue;
      auto it = owner.find(f);
      if (it == owner.end()) continue;
      const int pos_f = position[static_cast<std::size_t>(it->second)];
      if (pos_f <= pos_i) continue;
      // prefix ending at tile i is not closed: f escapes it
      const int prefix = pos_i + 1;
      if (check.ok || prefix < check.failing_prefix) {
        check.ok = false;
        check.failing_prefix = prefix;
        check.witness = f;
        check.witness_tile = it->second;
      }
    }
  }
  return check;
}

bool is_closed_in(const std::set<Simplex>& subset, const std::set<Simplex>& within) {
  for (const auto& s : subset)
    for (const auto& f : s.faces())
      if (within.count(f) && !subset.count(f)) return false;
  return true;
}

std::vector<std::pair<int, int>> critical_tiles(const MorseTiling& t) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < t.tile_count(); ++i) {
    const auto c = t.tiles[static_cast<std::size_t>(i)].classify();
    if (c.kind == TileClass::Kind::critical) out.emplace_back(i, c.index);
  }
  return out;
}

}  // namespace shellseq
