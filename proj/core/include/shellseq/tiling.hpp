#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "shellseq/simplex.hpp"
#include "shellseq/tile.hpp"

namespace shellseq {

// A set of open cells inside an ambient complex. `cells` lists the faces
// whose open cells belong to the set; it need not be downward closed.
struct CellSet {
  SimplicialComplex ambient;
  std::set<Simplex> cells;

  CellSet restricted_to_dimension(int q) const;
  bool operator==(const CellSet&) const = default;
};

// Candidate tiling: tiles are kept in a fixed order and referred to by index.
struct MorseTiling {
  CellSet space;
  std::vector<MorseTile> tiles;

  int tile_count() const { return static_cast<int>(tiles.size()); }
};

// Space whose open cells are exactly the tiled cells, i.e. the downward
// closure of the tiles' underlying simplices with all of its faces.
MorseTiling tiling_over_own_space(std::vector<MorseTile> tiles);

SimplicialComplex underlying_complex(const MorseTiling& t);

struct PartitionReport {
  bool ok = true;
  std::vector<Simplex> uncovered;                               // cell of the space in no tile
  std::vector<std::pair<Simplex, std::vector<int>>> overlaps;   // cell covered twice or more
  std::vector<std::pair<int, Simplex>> outside;                 // tile index, cell not in the space
  std::vector<int> tiles_outside_ambient;                       // underlying simplex not ambient
};
PartitionReport validate_partition(const MorseTiling& t);

struct ClosednessViolation {
  int tile;        // the tile whose closure escapes
  Simplex cell;    // a face of that tile's closure…
  int cell_tile;   // …owned by a tile of strictly smaller dimension
};
struct ClosednessReport {
  bool ok = true;
  std::vector<ClosednessViolation> violations;
};
// Requires a valid partition: checks that for every tile, each cell of its
// closure lies in a tile of dimension at least as large. Equivalently, the
// union of all tiles of dimension > j is closed in the space for every j.
ClosednessReport validate_closedness(const MorseTiling& t);

bool is_valid_tiling(const MorseTiling& t);

// tile index owning each cell of the space (requires a valid partition)
std::map<Simplex, int> tile_assignment(const MorseTiling& t);

// Tile indices in the order they are to be glued.
using ShellingOrder = std::vector<int>;

struct ShellingCheck {
  bool ok = true;
  int failing_prefix = -1;              // smallest prefix length whose union is not closed
  std::optional<Simplex> witness;       // face demonstrating the failure
  int witness_tile = -1;                // tile owning the witness (appears later)
};
// Is the order a shelling: every prefix union closed in the space? The order
// must be a permutation of the tile indices.
ShellingCheck check_shelling(const MorseTiling& t, const ShellingOrder& order);

// Is `subset` closed within `within`: no face of a member that lies in
// `within` escapes `subset`.
bool is_closed_in(const std::set<Simplex>& subset, const std::set<Simplex>& within);

// Critical tile indices grouped as (tile index, critical index), ascending.
std::vector<std::pair<int, int>> critical_tiles(const MorseTiling& t);

}  // namespace shellseq
