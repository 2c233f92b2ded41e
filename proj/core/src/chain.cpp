#include "shellseq/chain.hpp"

#include <map>
#include <stdexcept>

namespace shellseq {

namespace {

ChainComplex build(const SimplicialComplex& k, const SimplicialComplex* drop) {
  ChainComplex out;
  const int top = k.dimension();
  if (top < 0) return out;

  out.bases.resize(static_cast<std::size_t>(top) + 1);
  std::vector<std::map<Simplex, std::size_t>> index(out.bases.size());
  for (const auto& s : k.faces()) {
    if (drop && drop->contains(s)) continue;
    auto d = static_cast<std::size_t>(s.dimension());
    index[d].emplace(s, index[d].size());
    out.bases[d].push_back(s);
  }
  while (!out.bases.empty() && out.bases.back().empty()) {
    out.bases.pop_back();
    index.pop_back();
  }

  out.boundary.resize(out.bases.size());
  for (std::size_t d = 0; d < out.bases.size(); ++d) {
    const std::size_t rows = d == 0 ? 0 : out.bases[d - 1].size();
    Matrix<int> mat(rows, out.bases[d].size());
    if (d > 0) {
      for (std::size_t c = 0; c < out.bases[d].size(); ++c) {
        const auto facets = out.bases[d][c].facets();
        for (std::size_t i = 0; i < facets.size(); ++i) {
          auto it = index[d - 1].find(facets[i]);
          if (it == index[d - 1].end()) continue;  // face lies in the dropped subcomplex
          mat(it->second, c) = (i % 2 == 0) ? 1 : -1;
        }
      }
    }
    out.boundary[d] = std::move(mat);
  }

  for (std::size_t d = 1; d < out.boundary.size(); ++d)
    if (!(out.boundary[d - 1] * out.boundary[d]).is_zero())
      throw std::logic_error("boundary of boundary is nonzero");

  return out;
}

}  // namespace

Matrix<int> ChainComplex::boundary_in_degree(int d) const {
  if (d >= 1 && d <= top_dimension()) return boundary[static_cast<std::size_t>(d)];
  return Matrix<int>(cell_count(d - 1), cell_count(d));
}

ChainComplex ChainComplex::of(const SimplicialComplex& k) { return build(k, nullptr); }

ChainComplex ChainComplex::relative(const SimplicialComplex& k, const SimplicialComplex& sub) {
  if (!k.contains_complex(sub))
    throw std::invalid_argument("relative pair: second complex is not contained in the first");
  return build(k, &sub);
}

Matrix<int> boundary_matrix(const SimplicialComplex& k, int d) {
  return ChainComplex::of(k).boundary_in_degree(d);
}

}  // namespace shellseq
