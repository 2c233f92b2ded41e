#include "shellseq/homology.hpp"

#include <sstream>
#include <stdexcept>

#include "shellseq/linalg.hpp"
#include "shellseq/smith.hpp"

namespace shellseq {

namespace {

std::size_t rank_over(const CoefficientRing& r, const Matrix<int>& m) {
  switch (r.kind()) {
    case CoefficientRing::Kind::integers:
      return smith_normal_form(m).rank();
    case CoefficientRing::Kind::rationals: {
      RationalField f;
      return rank(f, lift(f, m));
    }
    case CoefficientRing::Kind::prime_field: {
      PrimeField f(r.characteristic());
      return rank(f, lift(f, m));
    }
  }
  throw std::logic_error("unknown coefficient ring");
}

// Shared engine: in degree d the free rank is n_d - rank d_d - rank d_{d+1};
// over the integers the torsion of H_d comes from the invariant factors of
// d_{d+1}, and the torsion of H^d from those of d_d.
GradedGroups compute(const ChainComplex& c, const CoefficientRing& r, bool dual) {
  const int top = c.top_dimension();
  GradedGroups out(static_cast<std::size_t>(top + 1));
  if (top < 0) return out;

  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  std::vector<std::vector<Integer>> torsion(static_cast<std::size_t>(top) + 2);
  for (int d = 1; d <= top; ++d) {
    if (r.kind() == CoefficientRing::Kind::integers) {
      auto snf = smith_normal_form(c.boundary_in_degree(d));
      ranks[static_cast<std::size_t>(d)] = snf.rank();
      torsion[static_cast<std::size_t>(d)] = snf.torsion_factors();
    } else {
      ranks[static_cast<std::size_t>(d)] = rank_over(r, c.boundary_in_degree(d));
    }
  }

  for (int d = 0; d <= top; ++d) {
    auto& g = out[static_cast<std::size_t>(d)];
    const auto nd = static_cast<long long>(c.cell_count(d));
    g.rank = nd - static_cast<long long>(ranks[static_cast<std::size_t>(d)]) -
             static_cast<long long>(ranks[static_cast<std::size_t>(d) + 1]);
    if (g.rank < 0) throw std::logic_error("negative homology rank");
    if (r.kind() == CoefficientRing::Kind::integers)
      g.torsion = dual ? torsion[static_cast<std::size_t>(d)]
                       : torsion[static_cast<std::size_t>(d) + 1];
  }
  return out;
}

}  // namespace

bool graded_equal(const GradedGroups& a, const GradedGroups& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const AbelianGroup ga = i < a.size() ? a[i] : AbelianGroup{};
    const AbelianGroup gb = i < b.size() ? b[i] : AbelianGroup{};
    if (!(ga == gb)) return false;
  }
  return true;
}

std::string group_to_string(const AbelianGroup& g, const CoefficientRing& r) {
  if (g.trivial()) return "0";
  std::ostringstream os;
  std::string base = r.kind() == CoefficientRing::Kind::integers ? "Z" : r.name();
  if (g.rank > 0) {
    os << base;
    if (g.rank > 1) os << "^" << g.rank;
  }
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    if (g.rank > 0 || i > 0) os << " (+) ";
    os << "Z/" << g.torsion[i];
  }
  return os.str();
}

GradedGroups homology_of(const ChainComplex& c, const CoefficientRing& r) {
  return compute(c, r, false);
}

GradedGroups cohomology_of(const ChainComplex& c, const CoefficientRing& r) {
  return compute(c, r, true);
}

GradedGroups homology(const SimplicialComplex& k, const CoefficientRing& r) {
  return homology_of(ChainComplex::of(k), r);
}

GradedGroups cohomology(const SimplicialComplex& k, const CoefficientRing& r) {
  return cohomology_of(ChainComplex::of(k), r);
}

GradedGroups relative_homology(const SimplicialComplex& k, const SimplicialComplex& sub,
                               const CoefficientRing& r) {
  return homology_of(ChainComplex::relative(k, sub), r);
}

GradedGroups relative_cohomology(const SimplicialComplex& k, const SimplicialComplex& sub,
                                 const CoefficientRing& r) {
  return cohomology_of(ChainComplex::relative(k, sub), r);
}

long long betti_number(const SimplicialComplex& k, int degree, const CoefficientRing& r) {
  if (degree < 0) return 0;
  auto h = homology(k, r);
  if (static_cast<std::size_t>(degree) >= h.size()) return 0;
  return h[static_cast<std::size_t>(degree)].rank;
}

}  // namespace shellseq
