#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shellseq/homology.hpp"
#include "shellseq/simplex.hpp"

namespace shellseq {

struct TileClass {
  enum class Kind { basic, regular_with_face, critical };
  Kind kind = Kind::basic;
  int index = -1;  // meaningful only when kind == critical

  bool operator==(const TileClass&) const = default;
};

// A tile of dimension n sitting inside the closed simplex on `underlying`:
// the closed simplex minus the open stars of the facets opposite the
// `removed_opposite` vertices, optionally minus the open star of a Morse
// face containing all removed-opposite vertices.
//
// With k removed facets the tile is an open cone for 1 <= k <= n (basic), a
// closed simplex for k = 0, and an open simplex for k = n + 1. A Morse face
// of dimension k - 1 necessarily equals the span of the removed-opposite
// vertices and punches out the cone point, leaving a critical tile of index
// k. The degenerate input (k = n, face = that span) describes the same point
// set as the open simplex and is normalized to it.
class MorseTile {
 public:
  MorseTile(Simplex underlying, std::vector<int> removed_opposite,
            std::optional<Simplex> morse_face = std::nullopt);

  const Simplex& underlying() const { return underlying_; }
  const std::vector<int>& removed_opposite() const { return removed_; }
  const std::optional<Simplex>& morse_face() const { return face_; }

  int dimension() const { return underlying_.dimension(); }
  int order() const { return static_cast<int>(removed_.size()); }

  // Face spanned by the removed-opposite vertices; empty when order is 0.
  std::optional<Simplex> opposite_face() const;

  TileClass classify() const;
  bool is_critical() const { return classify().kind == TileClass::Kind::critical; }

  // The faces of the underlying simplex whose open cells belong to the tile:
  // exactly those spanning sets that contain every removed-opposite vertex
  // and are not contained in the Morse face.
  std::set<Simplex> open_faces() const;

  // Same point set, i.e. the same set of open faces.
  bool same_point_set(const MorseTile& other) const;

  std::string to_string() const;

  bool operator==(const MorseTile&) const = default;

 private:
  Simplex underlying_;
  std::vector<int> removed_;
  std::optional<Simplex> face_;
};

// Reduced (co)homology of the tile pair, degrees 0..dimension: zero for
// basic and regular tiles, one copy of the coefficients in the critical
// index for critical tiles.
GradedGroups tile_homology(const MorseTile& t, const CoefficientRing& r);

// Independent computation from the simplicial pair (closure of the tile,
// closed part that was removed). Same grading as tile_homology.
GradedGroups tile_homology_bruteforce(const MorseTile& t, const CoefficientRing& r);
GradedGroups tile_cohomology_bruteforce(const MorseTile& t, const CoefficientRing& r);

// The pair (closure, removed part) underlying the brute-force computation.
std::pair<SimplicialComplex, SimplicialComplex> tile_pair(const MorseTile& t);

}  // namespace shellseq
