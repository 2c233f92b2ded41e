#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shellseq/homology.hpp"
#include "shellseq/linalg.hpp"
#include "shellseq/quiver.hpp"
#include "shellseq/tiling.hpp"

namespace shellseq {

enum class Direction { homological, cohomological };

// A chain complex with integer coefficients filtered by levels 1..levels.
// Entries are reported in the (p, s) plane where p is the filtration level
// and s the complementary degree; for the cohomological direction the keys
// are translated so that level p corresponds to the cells glued strictly
// after position p (see dualize).
struct FilteredComplex {
  SimplicialComplex space;                    // the complex being filtered
  std::vector<std::vector<Simplex>> cells;    // internal degree -> basis
  std::vector<Matrix<int>> boundary;          // boundary[m]: C_m -> C_{m-1}
  std::vector<std::vector<int>> filtration;   // per degree, per cell, in 1..levels
  int levels = 0;
  Direction direction = Direction::homological;
  int report_top = -1;  // top simplicial degree, used to translate dual keys

  int top_degree() const { return static_cast<int>(cells.size()) - 1; }
  std::size_t cell_count(int m) const {
    if (m < 0 || m > top_degree()) return 0;
    return cells[static_cast<std::size_t>(m)].size();
  }
  Matrix<int> boundary_in_degree(int m) const;

  // Reported (p, s) key of an internal (level, degree) pair.
  std::pair<int, int> report_key(int level, int degree) const;
};

// Chain filtration of the (optionally q-truncated) space of a tiling glued
// along the given order. For the full space the order must be a shelling
// order of all tiles; with q set it must list exactly the tiles of order
// <= q+1 in an order whose prefixes are closed in the q-skeleton (as
// produced by partial_shelling_filtration). Throws std::invalid_argument
// naming the first bad prefix otherwise.
struct ShellingFiltration {
  FilteredComplex complex;
  std::vector<MorseTile> tiles;  // by gluing position, tiles[p-1] enters at level p
  std::optional<int> skeleton_dimension;
};
ShellingFiltration filtration_from_shelling(const MorseTiling& t, const std::vector<int>& order,
                                            std::optional<int> q = std::nullopt);

// Cochain filtration dual to fc: the dual of a cell of level f gets level
// levels - f + 1, so that level p collects the cochains vanishing on the
// first p tiles' cells; reported keys are translated accordingly.
FilteredComplex dualize(const FilteredComplex& fc);

template <class Field>
struct SpectralPage {
  int r = 0;
  Direction direction = Direction::homological;
  // (p, s) -> dimension; absent means zero
  std::map<std::pair<int, int>, int> dims;
  // source (p, s) -> matrix of the page differential out of that entry, in
  // the representative bases chosen by the computation; rows index the
  // target entry's basis
  std::map<std::pair<int, int>, FieldMatrix<Field>> differentials;

  int dim_at(int p, int s) const {
    auto it = dims.find({p, s});
    return it == dims.end() ? 0 : it->second;
  }
  std::map<int, int> total_dims() const {
    std::map<int, int> out;
    for (const auto& [key, d] : dims) out[key.first + key.second] += d;
    return out;
  }
};

struct LimitDegree {
  int degree = 0;
  int p_first = 1;               // p value of einf[0] (0 for the cohomological direction)
  std::vector<int> einf;         // limit dimensions by filtration level
  std::vector<int> image_dims;   // cumulative image filtration on H_degree
  long long oracle = 0;          // independent Betti number of the space
  bool match = false;            // sum(einf) == oracle and successive image jumps == einf
};
struct LimitReport {
  std::vector<LimitDegree> degrees;
  bool match = true;
};

namespace detail {

// Basis of Z^r at (level, degree): chains of level <= `level` whose boundary
// drops to level <= level - r (r = -1 recovers the whole filtration step).
template <class Field>
std::vector<std::vector<typename Field::Element>> cycle_space(const FilteredComplex& fc,
                                                              const Field& f, int level,
                                                              int degree, int r) {
  const auto n = fc.cell_count(degree);
  std::vector<std::vector<typename Field::Element>> out;
  if (n == 0 || level <= 0) return out;

  const auto& filt = fc.filtration[static_cast<std::size_t>(degree)];
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < n; ++i)
    if (filt[i] <= level) cols.push_back(i);
  if (cols.empty()) return out;

  const int drop = level - r;
  std::vector<std::size_t> rows;
  const auto nb = fc.cell_count(degree - 1);
  if (degree >= 1 && nb > 0) {
    const auto& bfilt = fc.filtration[static_cast<std::size_t>(degree) - 1];
    for (std::size_t i = 0; i < nb; ++i)
      if (bfilt[i] > drop) rows.push_back(i);
  }

  const auto bd = fc.boundary_in_degree(degree);
  FieldMatrix<Field> m(rows.size(), cols.size());
  for (std::size_t ri = 0; ri < rows.size(); ++ri)
    for (std::size_t ci = 0; ci < cols.size(); ++ci)
      m(ri, ci) = f.from_int(bd(rows[ri], cols[ci]));

  for (const auto& k : kernel_basis(f, m)) {
    std::vector<typename Field::Element> v(n, f.zero());
    for (std::size_t ci = 0; ci < cols.size(); ++ci) v[cols[ci]] = k[ci];
    out.push_back(std::move(v));
  }
  return out;
}

template <class Field>
std::vector<typename Field::Element> apply_boundary(const FilteredComplex& fc, const Field& f,
                                                    int degree,
                                                    const std::vector<typename Field::Element>& v) {
  const auto bd = fc.boundary_in_degree(degree);
  std::vector<typename Field::Element> out(bd.rows(), f.zero());
  for (std::size_t c = 0; c < bd.cols(); ++c) {
    if (f.is_zero(v[c])) continue;
    for (std::size_t r = 0; r < bd.rows(); ++r) {
      const int e = bd(r, c);
      if (e == 0) continue;
      out[r] = f.add(out[r], f.mul(v[c], f.from_int(e)));
    }
  }
  return out;
}

// Echelon data of one page entry: the span of boundaries-plus-lower-level
// cycles, extended by representatives of the quotient.
template <class Field>
struct PageEntry {
  SpanSolver<Field> solver;
  std::size_t denominator_dim = 0;
  std::vector<std::vector<typename Field::Element>> reps;
};

template <class Field>
PageEntry<Field> page_entry(const FilteredComplex& fc, const Field& f, int level, int degree,
                            int r) {
  PageEntry<Field> entry{SpanSolver<Field>(f, fc.cell_count(degree)), 0, {}};
  if (fc.cell_count(degree) == 0) return entry;

  for (const auto& v : cycle_space(fc, f, level - 1, degree, r - 1)) entry.solver.insert(v);
  for (const auto& z : cycle_space(fc, f, level + r - 1, degree + 1, r - 1)) {
    auto b = apply_boundary(fc, f, degree + 1, z);
    entry.solver.insert(b);
  }
  entry.denominator_dim = entry.solver.dim();

  for (auto& z : cycle_space(fc, f, level, degree, r))
    if (entry.solver.insert(z)) entry.reps.push_back(std::move(z));
  return entry;
}

}  // namespace detail

template <class Field>
SpectralPage<Field> compute_page(const FilteredComplex& fc, const Field& f, int r) {
  if (r < 0) throw std::invalid_argument("page index must be non-negative");
  SpectralPage<Field> page;
  page.r = r;
  page.direction = fc.direction;

  const int top = fc.top_degree();
  std::map<std::pair<int, int>, detail::PageEntry<Field>> entries;
  for (int level = 1; level <= fc.levels; ++level)
    for (int degree = 0; degree <= top; ++degree) {
      auto entry = detail::page_entry(fc, f, level, degree, r);
      if (!entry.reps.empty()) {
        page.dims[fc.report_key(level, degree)] = static_cast<int>(entry.reps.size());
        entries.emplace(std::make_pair(level, degree), std::move(entry));
      }
    }

  for (auto& [key, entry] : entries) {
    const auto [level, degree] = key;
    auto target_it = entries.find({level - r, degree - 1});
    const std::size_t target_dim =
        target_it == entries.end() ? 0 : target_it->second.reps.size();
    FieldMatrix<Field> d(target_dim, entry.reps.size());
    if (target_dim > 0) {
      auto& target = target_it->second;
      for (std::size_t j = 0; j < entry.reps.size(); ++j) {
        auto b = detail::apply_boundary(fc, f, degree, entry.reps[j]);
        auto coords = target.solver.express(b);
        if (!coords)
          throw std::logic_error("page differential leaves the target cycle space");
        for (std::size_t i = 0; i < target_dim; ++i)
          d(i, j) = (*coords)[target.denominator_dim + i];
      }
    }
    page.differentials[fc.report_key(level, degree)] = std::move(d);
  }
  return page;
}

template <class Field>
std::vector<SpectralPage<Field>> compute_pages(const FilteredComplex& fc, const Field& f,
                                               int r_max) {
  std::vector<SpectralPage<Field>> out;
  out.reserve(static_cast<std::size_t>(r_max) + 1);
  for (int r = 0; r <= r_max; ++r) out.push_back(compute_page(fc, f, r));
  return out;
}

template <class Field>
struct LimitOutcome {
  std::vector<SpectralPage<Field>> pages;  // pages 0..levels; the last one is stable
  LimitReport report;
};

template <class Field>
LimitOutcome<Field> run_to_limit(const FilteredComplex& fc, const Field& f) {
  LimitOutcome<Field> out;
  out.pages = compute_pages(fc, f, fc.levels);
  const auto& einf = out.pages.back();

  const auto oracle = fc.direction == Direction::homological
                          ? homology(fc.space, f.ring())
                          : cohomology(fc.space, f.ring());

  const int top = fc.top_degree();
  for (int degree = 0; degree <= top; ++degree) {
    LimitDegree ld;
    ld.degree = fc.direction == Direction::homological ? degree : fc.report_top - degree;

    for (int level = 1; level <= fc.levels; ++level) {
      const auto key = fc.report_key(level, degree);
      ld.einf.push_back(einf.dim_at(key.first, key.second));
      // image of H(F_level) in H(F_levels): cycles of level `level` modulo
      // boundaries of the whole complex
      auto solver = SpanSolver<Field>(f, fc.cell_count(degree));
      for (const auto& z : detail::cycle_space(fc, f, fc.levels, degree + 1, -1)) {
        auto b = detail::apply_boundary(fc, f, degree + 1, z);
        solver.insert(b);
      }
      const auto boundary_dim = solver.dim();
      for (const auto& z : detail::cycle_space(fc, f, level, degree, fc.levels + 1))
        solver.insert(z);
      ld.image_dims.push_back(static_cast<int>(solver.dim() - boundary_dim));
    }

    const auto deg_idx = static_cast<std::size_t>(ld.degree);
    ld.oracle = deg_idx < oracle.size() ? oracle[deg_idx].rank : 0;

    // the internal filtration is increasing regardless of direction, so the
    // limit entries must match the successive image jumps level by level
    long long total = 0;
    ld.match = true;
    int previous = 0;
    for (std::size_t i = 0; i < ld.einf.size(); ++i) {
      total += ld.einf[i];
      if (ld.image_dims[i] - previous != ld.einf[i]) ld.match = false;
      previous = ld.image_dims[i];
    }
    if (total != ld.oracle) ld.match = false;

    if (fc.direction == Direction::cohomological) {
      // report by p = levels - internal level, which runs over 0..levels-1
      std::reverse(ld.einf.begin(), ld.einf.end());
      std::reverse(ld.image_dims.begin(), ld.image_dims.end());
      ld.p_first = 0;
    }

    if (!ld.match) out.report.match = false;
    out.report.degrees.push_back(std::move(ld));
  }
  return out;
}

struct FirstPageMismatch {
  int p = 0;
  int s = 0;
  int page_dim = 0;
  int tile_dim = 0;
};
struct FirstPageComparison {
  bool ok = true;
  std::vector<FirstPageMismatch> mismatches;
};

// Page 1 must consist of the critical tiles: one dimension at entry
// (p, s) exactly when the tile glued at level p is critical of index p+s
// (cohomological direction: the tile at position p+1, index p+s). For a
// truncated filtration only total degrees < q are conclusive, so larger
// degrees are skipped.
template <class Field>
FirstPageComparison compare_first_page_with_tiles(const FilteredComplex& fc, const Field& f,
                                                  const std::vector<MorseTile>& tiles_by_position,
                                                  std::optional<int> truncation) {
  const auto page = compute_page(fc, f, 1);
  FirstPageComparison cmp;

  const int top = fc.top_degree();
  for (int level = 1; level <= fc.levels; ++level) {
    // internal level maps to gluing position level for chains and to
    // position levels - level + 1 for cochains
    const std::size_t position = fc.direction == Direction::homological
                                     ? static_cast<std::size_t>(level)
                                     : static_cast<std::size_t>(fc.levels - level + 1);
    const auto cls = tiles_by_position[position - 1].classify();
    for (int degree = 0; degree <= top; ++degree) {
      const auto key = fc.report_key(level, degree);
      const int total = key.first + key.second;  // the (co)homological degree
      if (truncation && total >= *truncation) continue;
      const int page_dim = page.dim_at(key.first, key.second);
      const int tile_dim =
          (cls.kind == TileClass::Kind::critical && cls.index == total) ? 1 : 0;
      if (page_dim != tile_dim)
        cmp.mismatches.push_back({key.first, key.second, page_dim, tile_dim});
    }
  }
  cmp.ok = cmp.mismatches.empty();
  return cmp;
}

}  // namespace shellseq
