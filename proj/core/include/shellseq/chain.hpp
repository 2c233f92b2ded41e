#pragma once

#include <vector>

#include "shellseq/matrix.hpp"
#include "shellseq/simplex.hpp"

namespace shellseq {

// Simplicial chain complex with integer coefficients. bases[d] lists the
// d-cells in lexicographic order; boundary[d] maps C_d to C_{d-1} with the
// usual alternating signs (the i-th facet drops the i-th smallest vertex and
// carries sign (-1)^i). boundary[0] has zero rows.
struct ChainComplex {
  std::vector<std::vector<Simplex>> bases;
  std::vector<Matrix<int>> boundary;

  int top_dimension() const { return static_cast<int>(bases.size()) - 1; }

  std::size_t cell_count(int d) const {
    if (d < 0 || d > top_dimension()) return 0;
    return bases[static_cast<std::size_t>(d)].size();
  }

  // Boundary matrix in degree d with the correct shape even when d is
  // outside [1, top]: rows index (d-1)-cells, columns index d-cells.
  Matrix<int> boundary_in_degree(int d) const;

  static ChainComplex of(const SimplicialComplex& k);

  // Quotient complex of the pair (k, sub): cells of k not in sub, with
  // boundary entries through sub dropped. Throws std::invalid_argument if
  // sub is not a subcomplex of k.
  static ChainComplex relative(const SimplicialComplex& k, const SimplicialComplex& sub);
};

// Convenience accessor on a complex without building the whole ChainComplex.
Matrix<int> boundary_matrix(const SimplicialComplex& k, int d);

}  // namespace shellseq
