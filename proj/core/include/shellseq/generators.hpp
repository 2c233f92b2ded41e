#pragma once

#include <functional>
#include <optional>

#include "shellseq/tiling.hpp"

namespace shellseq {

struct GeneratedShelling {
  MorseTiling tiling;
  ShellingOrder order;
};

// Boundary of the (n+1)-simplex on vertices 0..n+1, tiled facet by facet:
// tile j sits on the facet opposite vertex j and removes the facets shared
// with tiles 0..j-1. Listing the tiles in index order is a shelling; tiles 0
// and n+1 are critical of index 0 and n.
GeneratedShelling simplex_boundary_shelling(int n);

// Boundary of the triangle tiled by three half-open edges, each covering one
// vertex: the quiver is a directed 3-cycle, so no shelling order exists.
MorseTiling cyclic_triangle_tiling();

// Boundary of the octahedron: vertices 0..5 with antipodal pairs (0,1),
// (2,3), (4,5), eight triangles picking one vertex of each pair.
SimplicialComplex octahedron_complex();

// The eleven tile shapes a triangle supports: closed; one removed facet,
// with or without the opposite vertex as Morse face; two removed facets;
// open. These are the candidate tiles of the octahedron enumeration.
std::vector<MorseTile> triangle_shapes(const Simplex& tri);

// Every valid Morse tiling of the octahedron, by exhaustive cover search
// over the eleven tile shapes each triangle supports, in a fixed order.
// visit returns false to stop early.
void enumerate_octahedron_tilings(const std::function<bool(const MorseTiling&)>& visit);

// First valid tiling satisfying pred, in enumeration order.
std::optional<MorseTiling> find_octahedron_tiling(
    const std::function<bool(const MorseTiling&)>& pred);

// First shellable octahedron tiling whose critical tiles have indices
// {0, 1, 2, 2} and whose rational homology filtration collapses to the
// sphere by the second differential. The tiles are returned already in the
// certified shelling order.
GeneratedShelling searched_octahedron_shelling();

}  // namespace shellseq
