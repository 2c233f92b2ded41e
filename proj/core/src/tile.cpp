#include "shellseq/tile.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shellseq {

MorseTile::MorseTile(Simplex underlying, std::vector<int> removed_opposite,
                     std::optional<Simplex> morse_face)
    : underlying_(std::move(underlying)),
      removed_(std::move(removed_opposite)),
      face_(std::move(morse_face)) {
  std::sort(removed_.begin(), removed_.end());
  if (std::adjacent_find(removed_.begin(), removed_.end()) != removed_.end())
    throw std::invalid_argument("removed-opposite vertices repeat");
  for (int v : removed_)
    if (!underlying_.has_vertex(v))
      throw std::invalid_argument("removed-opposite vertex " + std::to_string(v) +
                                  " is not in the underlying simplex");

  const int n = dimension();
  const int k = order();

  if (face_) {
    if (k == 0)
      throw std::invalid_argument("a tile with no removed facets cannot carry a morse face");
    if (!underlying_.has_face(*face_))
      throw std::invalid_argument("morse face is not a face of the underlying simplex");
    const Simplex theta{std::vector<int>(removed_)};
    if (!face_->has_face(theta))
      throw std::invalid_argument(
          "morse face must contain the face spanned by the removed-opposite vertices");
    if (face_->dimension() == n - 1 && *face_ == theta) {
      // same point set as the open simplex; store the normal form
      removed_ = underlying_.vertices();
      face_.reset();
    } else if (face_->dimension() > n - 2) {
      throw std::invalid_argument("morse face must have codimension at least two");
    }
  }
}

std::optional<Simplex> MorseTile::opposite_face() const {
  if (removed_.empty()) return std::nullopt;
  return Simplex(removed_);
}

TileClass MorseTile::classify() const {
  const int n = dimension();
  const int k = order();
  if (k == 0) return {TileClass::Kind::critical, 0};
  if (k == n + 1) return {TileClass::Kind::critical, n};
  if (face_) {
    if (face_->dimension() == k - 1) return {TileClass::Kind::critical, k};
    return {TileClass::Kind::regular_with_face, -1};
  }
  return {TileClass::Kind::basic, -1};
}

std::set<Simplex> MorseTile::open_faces() const {
  const auto& verts = underlying_.vertices();
  const std::size_t n = verts.size();
  if (n > 25) throw std::invalid_argument("tile dimension too large to enumerate faces");

  unsigned long removed_mask = 0, face_mask = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int v = verts[i];
    if (std::binary_search(removed_.begin(), removed_.end(), v)) removed_mask |= 1ul << i;
    if (face_ && face_->has_vertex(v)) face_mask |= 1ul << i;
  }

  std::set<Simplex> out;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    if ((mask & removed_mask) != removed_mask) continue;
    if (face_ && (mask & ~face_mask) == 0) continue;
    std::vector<int> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) sub.push_back(verts[i]);
    out.insert(Simplex(std::move(sub)));
  }
  return out;
}

bool MorseTile::same_point_set(const MorseTile& other) const {
  return underlying_ == other.underlying_ && open_faces() == other.open_faces();
}

std::string MorseTile::to_string() const {
  std::ostringstream os;
  os << underlying_.to_string() << " \\ {";
  for (std::size_t i = 0; i < removed_.size(); ++i) {
    if (i) os << ',';
    os << removed_[i];
  }
  os << '}';
  if (face_) os << " / " << face_->to_string();
  return os.str();
}

GradedGroups tile_homology(const MorseTile& t, const CoefficientRing& r) {
  GradedGroups out(static_cast<std::size_t>(t.dimension()) + 1);
  const auto c = t.classify();
  if (c.kind == TileClass::Kind::critical) out[static_cast<std::size_t>(c.index)].rank = 1;
  return out;
}

std::pair<SimplicialComplex, SimplicialComplex> tile_pair(const MorseTile& t) {
  std::vector<Simplex> removed_part;
  for (int v : t.removed_opposite())
    if (t.dimension() >= 1) removed_part.push_back(t.underlying().facet_opposite(v));
  if (t.morse_face()) removed_part.push_back(*t.morse_face());

  auto closure = SimplicialComplex::downward_closure({t.underlying()});
  auto removed = SimplicialComplex::downward_closure(removed_part);
  return {std::move(closure), std::move(removed)};
}

GradedGroups tile_homology_bruteforce(const MorseTile& t, const CoefficientRing& r) {
  auto [closure, removed] = tile_pair(t);
  return relative_homology(closure, removed, r);
}

GradedGroups tile_cohomology_bruteforce(const MorseTile& t, const CoefficientRing& r) {
  auto [closure, removed] = tile_pair(t);
  return relative_cohomology(closure, removed, r);
}

}  // namespace shellseq
