#pragma once

#include <string>
#include <vector>

#include "shellseq/chain.hpp"
#include "shellseq/fields.hpp"
#include "shellseq/simplex.hpp"

namespace shellseq {

// A finitely generated module over the chosen coefficients: free rank plus
// invariant-factor torsion (torsion is empty over a field).
struct AbelianGroup {
  long long rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
};

// Graded result indexed by degree. May carry trailing trivial entries;
// compare with graded_equal.
using GradedGroups = std::vector<AbelianGroup>;

bool graded_equal(const GradedGroups& a, const GradedGroups& b);

// "Z^2 (+) Z/2", "Q", "F3^2", "0"
std::string group_to_string(const AbelianGroup& g, const CoefficientRing& r);

GradedGroups homology_of(const ChainComplex& c, const CoefficientRing& r);
GradedGroups cohomology_of(const ChainComplex& c, const CoefficientRing& r);

GradedGroups homology(const SimplicialComplex& k, const CoefficientRing& r);
GradedGroups cohomology(const SimplicialComplex& k, const CoefficientRing& r);
GradedGroups relative_homology(const SimplicialComplex& k, const SimplicialComplex& sub,
                               const CoefficientRing& r);
GradedGroups relative_cohomology(const SimplicialComplex& k, const SimplicialComplex& sub,
                                 const CoefficientRing& r);

// Betti number in one degree (free rank over Z, dimension over a field).
long long betti_number(const SimplicialComplex& k, int degree, const CoefficientRing& r);

}  // namespace shellseq
