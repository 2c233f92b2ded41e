#pragma once

#include <cstddef>
#include <vector>

#include "shellseq/fields.hpp"
#include "shellseq/matrix.hpp"

namespace shellseq {

// Diagonal of the Smith normal form: positive invariant factors d_1 | d_2 |
// ... | d_r, one per nonzero diagonal entry.
struct SmithResult {
  std::vector<Integer> invariant_factors;
  std::size_t rank() const { return invariant_factors.size(); }

  // Factors greater than one, i.e. the torsion part of the cokernel.
  std::vector<Integer> torsion_factors() const;
};

SmithResult smith_normal_form(Matrix<Integer> m);
SmithResult smith_normal_form(const Matrix<int>& m);

}  // namespace shellseq
