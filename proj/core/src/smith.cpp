#include "shellseq/smith.hpp"

#include <algorithm>
#include <cstdlib>

#include <boost/multiprecision/integer.hpp>

namespace shellseq {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Position of a nonzero entry with the smallest absolute value in the
// submatrix starting at (start, start), if any.
bool find_pivot(const Matrix<Integer>& m, std::size_t start, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best = 0;
  for (std::size_t r = start; r < m.rows(); ++r)
    for (std::size_t c = start; c < m.cols(); ++c) {
      const Integer& x = m(r, c);
      if (x == 0) continue;
      Integer a = abs(x);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = r;
        pc = c;
      }
    }
  return found;
}

void swap_rows(Matrix<Integer>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(Matrix<Integer>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

std::vector<Integer> SmithResult::torsion_factors() const {
  std::vector<Integer> out;
  for (const Integer& d : invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

SmithResult smith_normal_form(Matrix<Integer> m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<Integer> diag;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    if (!find_pivot(m, k, pr, pc)) break;
    swap_rows(m, k, pr);
    swap_cols(m, k, pc);

    // Clear row and column k; switching to a smaller remainder as pivot
    // whenever a division is inexact makes this terminate.
    for (;;) {
      bool clean = true;
      for (std::size_t r = k + 1; r < m.rows(); ++r) {
        if (m(r, k) == 0) continue;
        const Integer q = m(r, k) / m(k, k);
        for (std::size_t c = k; c < m.cols(); ++c) m(r, c) -= q * m(k, c);
        if (m(r, k) != 0) {  // remainder is smaller than the pivot
          swap_rows(m, k, r);
          clean = false;
        }
      }
      for (std::size_t c = k + 1; c < m.cols(); ++c) {
        if (m(k, c) == 0) continue;
        const Integer q = m(k, c) / m(k, k);
        for (std::size_t r = k; r < m.rows(); ++r) m(r, c) -= q * m(r, k);
        if (m(k, c) != 0) {
          swap_cols(m, k, c);
          clean = false;
        }
      }
      if (clean) break;
    }
    if (m(k, k) < 0) m(k, k) = -m(k, k);
    diag.push_back(m(k, k));
  }

  // Enforce divisibility d_i | d_{i+1} by repeated gcd/lcm smoothing; each
  // pass preserves the multiset of elementary divisors per prime.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i + 1] % diag[i] == 0) continue;
      const Integer g = gcd(diag[i], diag[i + 1]);
      const Integer l = (diag[i] / g) * diag[i + 1];
      diag[i] = g;
      diag[i + 1] = l;
      changed = true;
    }
  }

  return SmithResult{std::move(diag)};
}

SmithResult smith_normal_form(const Matrix<int>& m) {
  return smith_normal_form(matrix_cast<Integer>(m));
}

}  // namespace shellseq
