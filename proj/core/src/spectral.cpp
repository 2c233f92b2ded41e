#include "shellseq/spectral.hpp"

#include <algorithm>
#include <sstream>

#include "shellseq/chain.hpp"

namespace shellseq {

Matrix<int> FilteredComplex::boundary_in_degree(int m) const {
  if (m >= 1 && m <= top_degree()) return boundary[static_cast<std::size_t>(m)];
  return Matrix<int>(cell_count(m - 1), cell_count(m));
}

std::pair<int, int> FilteredComplex::report_key(int level, int degree) const {
  if (direction == Direction::homological) return {level, degree - level};
  const int p = levels - level;
  const int m = report_top - degree;
  return {p, m - p};
}

ShellingFiltration filtration_from_shelling(const MorseTiling& t, const std::vector<int>& order,
                                            std::optional<int> q) {
  const auto full_space = underlying_complex(t);
  if (t.space.cells != full_space.faces())
    throw std::invalid_argument("the tiling must cover every face of its complex");

  ShellingFiltration out;
  out.skeleton_dimension = q;

  if (q) {
    // the listed tiles must be exactly those of order <= q+1
    std::set<int> listed(order.begin(), order.end());
    if (static_cast<int>(order.size()) != static_cast<int>(listed.size()))
      throw std::invalid_argument("order lists a tile twice");
    for (int i = 0; i < t.tile_count(); ++i) {
      const bool low = t.tiles[static_cast<std::size_t>(i)].order() <= *q + 1;
      if (low && !listed.count(i))
        throw std::invalid_argument("order misses a tile of low order");
      if (!low && listed.count(i))
        throw std::invalid_argument("order lists a tile of order above the cutoff");
    }
  } else {
    const auto verdict = check_shelling(t, order);
    if (!verdict.ok) {
      std::ostringstream os;
      os << "order is not a shelling: prefix " << verdict.failing_prefix << " is not closed";
      if (verdict.witness) os << " (" << verdict.witness->to_string() << " escapes)";
      throw std::invalid_argument(os.str());
    }
  }

  const auto space = q ? full_space.skeleton(*q) : full_space;
  const auto chain = ChainComplex::of(space);
  const auto owner = tile_assignment(t);

  std::vector<int> position(static_cast<std::size_t>(t.tile_count()), -1);
  for (std::size_t p = 0; p < order.size(); ++p)
    position[static_cast<std::size_t>(order[p])] = static_cast<int>(p) + 1;

  FilteredComplex fc;
  fc.space = space;
  fc.cells = chain.bases;
  fc.boundary = chain.boundary;
  fc.levels = static_cast<int>(order.size());
  fc.direction = Direction::homological;
  fc.report_top = chain.top_dimension();

  fc.filtration.resize(fc.cells.size());
  for (std::size_t m = 0; m < fc.cells.size(); ++m) {
    fc.filtration[m].reserve(fc.cells[m].size());
    for (const auto& cell : fc.cells[m]) {
      const auto it = owner.find(cell);
      if (it == owner.end())
        throw std::invalid_argument("cell " + cell.to_string() + " belongs to no tile");
      const int pos = position[static_cast<std::size_t>(it->second)];
      if (pos < 0)
        throw std::invalid_argument("cell " + cell.to_string() +
                                    " belongs to a tile outside the order");
      fc.filtration[m].push_back(pos);
    }
  }

  // gluing along the order must filter by subcomplexes
  for (std::size_t m = 1; m < fc.cells.size(); ++m)
    for (std::size_t c = 0; c < fc.cells[m].size(); ++c)
      for (std::size_t r = 0; r < fc.cells[m - 1].size(); ++r)
        if (fc.boundary[m](r, c) != 0 && fc.filtration[m - 1][r] > fc.filtration[m][c]) {
          std::ostringstream os;
          os << "order is not a shelling: prefix " << fc.filtration[m][c]
             << " is not closed (" << fc.cells[m - 1][r].to_string() << " escapes)";
          throw std::invalid_argument(os.str());
        }

  out.complex = std::move(fc);
  out.tiles.reserve(order.size());
  for (int id : order) out.tiles.push_back(t.tiles[static_cast<std::size_t>(id)]);
  return out;
}

FilteredComplex dualize(const FilteredComplex& fc) {
  FilteredComplex dual;
  dual.space = fc.space;
  dual.levels = fc.levels;
  dual.direction = Direction::cohomological;
  dual.report_top = fc.report_top;

  const int top = fc.top_degree();
  if (top < 0) return dual;

  dual.cells.resize(static_cast<std::size_t>(top) + 1);
  dual.filtration.resize(static_cast<std::size_t>(top) + 1);
  dual.boundary.resize(static_cast<std::size_t>(top) + 1);

  for (int t = 0; t <= top; ++t) {
    const auto m = static_cast<std::size_t>(top - t);
    dual.cells[static_cast<std::size_t>(t)] = fc.cells[m];
    auto& filt = dual.filtration[static_cast<std::size_t>(t)];
    filt.reserve(fc.filtration[m].size());
    for (int f : fc.filtration[m]) filt.push_back(fc.levels - f + 1);
    // the coboundary out of degree top-t is the transpose of the boundary
    // into it
    dual.boundary[static_cast<std::size_t>(t)] =
        t == 0 ? Matrix<int>(0, fc.cells[m].size()) : fc.boundary[m + 1].transposed();
  }
  return dual;
}

}  // namespace shellseq
