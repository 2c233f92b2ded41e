#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace shellseq {

// An abstract simplex: a non-empty strictly increasing tuple of vertex ids.
// Vertex ids are non-negative ints; the constructor sorts its input and
// rejects duplicates.
class Simplex {
 public:
  explicit Simplex(std::vector<int> vertices);
  Simplex(std::initializer_list<int> vertices);

  int dimension() const { return static_cast<int>(verts_.size()) - 1; }
  const std::vector<int>& vertices() const { return verts_; }

  bool has_vertex(int v) const;
  bool has_face(const Simplex& face) const;

  // Deletes vertex v, which must be present and not the only vertex.
  Simplex facet_opposite(int v) const;

  // Codimension-one faces; entry i drops the i-th smallest vertex, so the
  // order matches the alternating signs of the boundary operator.
  std::vector<Simplex> facets() const;

  // Every non-empty subset of the vertices, in lexicographic order.
  std::vector<Simplex> faces() const;

  std::string to_string() const;

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<int> verts_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

// A finite abstract simplicial complex, stored as the full set of its faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Smallest complex containing every generator.
  static SimplicialComplex downward_closure(const std::vector<Simplex>& generators);

  // Wraps an explicit face set; throws std::invalid_argument if it is not
  // downward closed.
  static SimplicialComplex from_faces(std::set<Simplex> faces);

  bool empty() const { return faces_.empty(); }
  std::size_t face_count() const { return faces_.size(); }
  int dimension() const;  // -1 for the empty complex

  bool contains(const Simplex& s) const;
  bool contains_complex(const SimplicialComplex& sub) const;

  const std::set<Simplex>& faces() const { return faces_; }
  std::vector<Simplex> faces_of_dimension(int d) const;
  std::vector<std::size_t> face_counts() const;  // index = dimension

  SimplicialComplex skeleton(int q) const;
  long long euler_characteristic() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  explicit SimplicialComplex(std::set<Simplex> faces) : faces_(std::move(faces)) {}
  std::set<Simplex> faces_;
};

}  // namespace shellseq
