#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shellseq/fields.hpp"
#include "shellseq/linalg.hpp"
#include "shellseq/smith.hpp"

using namespace shellseq;

namespace {

Matrix<int> from_rows(const std::vector<std::vector<int>>& rows) {
  Matrix<int> m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

std::vector<long long> factors_ll(const SmithResult& s) {
  std::vector<long long> out;
  for (const auto& f : s.invariant_factors) out.push_back(f.convert_to<long long>());
  return out;
}

}  // namespace

TEST_CASE("row reduction over the rationals") {
  RationalField f;
  auto m = lift(f, from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}));
  const auto pivots = reduced_row_echelon(f, m);
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(rank(f, lift(f, from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}))) == 2);

  // a fully reduced echelon form has identity columns at the pivots
  CHECK(m(0, 0) == Rational(1));
  CHECK(m(1, 1) == Rational(1));
  CHECK(m(0, 1) == Rational(0));
}

TEST_CASE("kernel vectors really lie in the kernel") {
  RationalField f;
  const auto a = lift(f, from_rows({{1, 2, 0, -1}, {0, 0, 1, 1}}));
  const auto kernel = kernel_basis(f, a);
  REQUIRE(kernel.size() == 2);  // 4 columns, rank 2
  for (const auto& v : kernel) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Rational sum = 0;
      for (std::size_t c = 0; c < a.cols(); ++c) sum += a(r, c) * v[c];
      CHECK(sum == Rational(0));
    }
  }
}

TEST_CASE("prime field arithmetic") {
  PrimeField f7(7);
  for (long long x = 1; x < 7; ++x) {
    const auto inv = f7.div(f7.one(), f7.from_int(x));
    CHECK(f7.mul(inv, f7.from_int(x)) == f7.one());
  }
  CHECK(f7.from_int(-1) == f7.from_int(6));
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientRing::prime_field(9), std::invalid_argument);
  CHECK(CoefficientRing::prime_field(2).name() == "F2");
  CHECK(CoefficientRing::rationals().is_field());
  CHECK_FALSE(CoefficientRing::integers().is_field());
}

TEST_CASE("span solver expresses members and rejects dependents") {
  PrimeField f(5);
  SpanSolver<PrimeField> solver(f, 4);
  const std::vector<std::vector<long long>> vs = {
      {1, 2, 0, 4}, {0, 1, 1, 1}, {2, 0, 3, 2}};
  std::vector<std::vector<PrimeField::Element>> basis;
  for (const auto& raw : vs) {
    std::vector<PrimeField::Element> v;
    for (auto x : raw) v.push_back(f.from_int(x));
    CHECK(solver.insert(v));
    basis.push_back(v);
  }

  // a combination of the inserted vectors
  std::vector<PrimeField::Element> w(4, f.zero());
  for (std::size_t j = 0; j < 4; ++j)
    w[j] = f.add(basis[0][j], f.mul(f.from_int(3), basis[2][j]));
  CHECK_FALSE(solver.insert(w));
  CHECK(solver.contains(w));
  const auto coords = solver.express(w);
  REQUIRE(coords.has_value());
  REQUIRE(coords->size() == 3);

  // recombining with the reported coordinates reproduces the vector
  for (std::size_t j = 0; j < 4; ++j) {
    auto sum = f.zero();
    for (std::size_t i = 0; i < 3; ++i) sum = f.add(sum, f.mul((*coords)[i], basis[i][j]));
    CHECK(sum == w[j]);
  }

  std::vector<PrimeField::Element> outside = {f.one(), f.zero(), f.zero(), f.zero()};
  if (!solver.contains(outside)) CHECK_FALSE(solver.express(outside).has_value());
}

TEST_CASE("smith normal form on frozen examples") {
  CHECK(factors_ll(smith_normal_form(from_rows({{2, 4}, {6, 8}}))) ==
        std::vector<long long>{2, 4});
  CHECK(factors_ll(smith_normal_form(from_rows({{2, 0}, {0, 3}}))) ==
        std::vector<long long>{1, 6});
  CHECK(factors_ll(smith_normal_form(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))) ==
        std::vector<long long>{1, 1, 1});
  CHECK(smith_normal_form(from_rows({{0, 0}, {0, 0}})).rank() == 0);
  CHECK(factors_ll(smith_normal_form(from_rows({{6}}))) == std::vector<long long>{6});
  CHECK(smith_normal_form(from_rows({{2, 0}, {0, 3}})).torsion_factors() ==
        std::vector<Integer>{6});
}

TEST_CASE("smith rank agrees with rational rank on random matrices") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  RationalField f;

  for (int trial = 0; trial < 60; ++trial) {
    Matrix<int> m(size(rng), size(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);

    const auto snf = smith_normal_form(m);
    CHECK(snf.rank() == rank(f, lift(f, m)));

    // invariant factors form a divisibility chain
    for (std::size_t i = 0; i + 1 < snf.invariant_factors.size(); ++i)
      CHECK(snf.invariant_factors[i + 1] % snf.invariant_factors[i] == 0);
  }
}
