#include "shellseq/simplex.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace shellseq {

Simplex::Simplex(std::vector<int> vertices) : verts_(std::move(vertices)) {
  if (verts_.empty()) throw std::invalid_argument("simplex needs at least one vertex");
  std::sort(verts_.begin(), verts_.end());
  if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
    throw std::invalid_argument("simplex has a repeated vertex");
  if (verts_.front() < 0) throw std::invalid_argument("vertex ids must be non-negative");
}

Simplex::Simplex(std::initializer_list<int> vertices) : Simplex(std::vector<int>(vertices)) {}

bool Simplex::has_vertex(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::has_face(const Simplex& face) const {
  return std::includes(verts_.begin(), verts_.end(), face.verts_.begin(), face.verts_.end());
}

Simplex Simplex::facet_opposite(int v) const {
  if (!has_vertex(v)) throw std::invalid_argument("vertex not in simplex");
  if (verts_.size() == 1) throw std::invalid_argument("a vertex has no facets");
  std::vector<int> rest;
  rest.reserve(verts_.size() - 1);
  for (int u : verts_)
    if (u != v) rest.push_back(u);
  return Simplex(std::move(rest));
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (verts_.size() == 1) return out;
  out.reserve(verts_.size());
  for (int v : verts_) out.push_back(facet_opposite(v));
  return out;
}

std::vector<Simplex> Simplex::faces() const {
  const std::size_t n = verts_.size();
  std::set<Simplex> sorted;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) sub.push_back(verts_[i]);
    sorted.insert(Simplex(std::move(sub)));
  }
  return {sorted.begin(), sorted.end()};
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  os << '{';
  const auto& vs = s.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << ',';
    os << vs[i];
  }
  return os << '}';
}

SimplicialComplex SimplicialComplex::downward_closure(const std::vector<Simplex>& generators) {
  std::set<Simplex> all;
  for (const auto& g : generators) {
    auto fs = g.faces();
    all.insert(fs.begin(), fs.end());
  }
  return SimplicialComplex(std::move(all));
}

SimplicialComplex SimplicialComplex::from_faces(std::set<Simplex> faces) {
  for (const auto& s : faces)
    for (const auto& f : s.facets())
      if (!faces.count(f))
        throw std::invalid_argument("face set is not downward closed: " + s.to_string() +
                                    " present but " + f.to_string() + " missing");
  return SimplicialComplex(std::move(faces));
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& s : faces_) d = std::max(d, s.dimension());
  return d;
}

bool SimplicialComplex::contains(const Simplex& s) const { return faces_.count(s) != 0; }

bool SimplicialComplex::contains_complex(const SimplicialComplex& sub) const {
  return std::includes(faces_.begin(), faces_.end(), sub.faces_.begin(), sub.faces_.end());
}

std::vector<Simplex> SimplicialComplex::faces_of_dimension(int d) const {
  std::vector<Simplex> out;
  for (const auto& s : faces_)
    if (s.dimension() == d) out.push_back(s);
  return out;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& s : faces_) ++counts[static_cast<std::size_t>(s.dimension())];
  return counts;
}

SimplicialComplex SimplicialComplex::skeleton(int q) const {
  std::set<Simplex> kept;
  for (const auto& s : faces_)
    if (s.dimension() <= q) kept.insert(s);
  return SimplicialComplex(std::move(kept));
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (const auto& s : faces_) chi += (s.dimension() % 2 == 0) ? 1 : -1;
  return chi;
}

}  // namespace shellseq
