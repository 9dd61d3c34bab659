#include <random>

#include "doctest.h"

#include "fillscope/error.hpp"
#include "fillscope/exact_lp.hpp"
#include "fillscope/integer.hpp"
#include "fillscope/matrix.hpp"
#include "fillscope/smith.hpp"
#include "support.hpp"

using namespace fillscope;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int k) {
  std::uniform_int_distribution<int> d(-k, k);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool is_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("integer and rational parsing") {
  CHECK(parse_integer("-123") == -123);
  CHECK(parse_integer("+7") == 7);
  CHECK_THROWS_AS(parse_integer("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-3") == -3);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(floor_of(Rational(-1, 2)) == -1);
  CHECK(ceil_of(Rational(-1, 2)) == 0);
  CHECK(floor_of(Rational(7, 2)) == 3);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 3, 4);
    Integer cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                  m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                  m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    CHECK(determinant(m) == cof);
  }
}

TEST_CASE("sparse and dense forms agree") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 4, 2), b = random_matrix(rng, 4, 2, 2);
    SparseMatrix sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
    CHECK(sa.to_dense() == a);
    CHECK((sa * sb).to_dense() == a * b);
  }
  SparseMatrix m(2, 1);
  m.set_column(0, {{1, 3}, {0, 2}, {1, -3}});
  CHECK(m.column(0).size() == 1);
  CHECK(m.at(0, 0) == 2);
}

TEST_CASE("smith normal form: known invariant factors") {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SnfDecomposition snf = smith_normal_form(a);
  CHECK(snf.invariant_factors() == std::vector<Integer>{2, 6, 12});
  CHECK(snf.U * a * snf.V == snf.D);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    const IntMatrix a = random_matrix(rng, dim(rng), dim(rng), 3);
    const SnfDecomposition snf = smith_normal_form(a);
    CHECK(snf.U * a * snf.V == snf.D);
    CHECK(is_diagonal(snf.D));
    CHECK(abs(determinant(snf.U)) == 1);
    CHECK(abs(determinant(snf.V)) == 1);
    const auto f = snf.invariant_factors();
    CHECK(f.size() == snf.rank);
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(f[i] > 0);
      if (i + 1 < f.size()) CHECK(f[i + 1] % f[i] == 0);
    }
    for (std::size_t i = snf.rank; i < std::min(a.rows(), a.cols()); ++i) CHECK(snf.D(i, i) == 0);
  }
}

TEST_CASE("lattice membership matches exhaustive search") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    const std::size_t r = dim(rng), c = dim(rng);
    const IntMatrix a = random_matrix(rng, r, c, 2);
    const LatticeSolver solver(a);
    testing::for_each_box_vector(r, 2, [&](const std::vector<long>& t) {
      IntVector target(t.begin(), t.end());
      // A solution found in the box proves membership; the solver must agree.
      bool found = false;
      testing::for_each_box_vector(c, 4, [&](const std::vector<long>& x) {
        if (found) return;
        IntVector xv(x.begin(), x.end());
        found = a * xv == target;
      });
      const auto sol = solver.solve(target);
      if (found) CHECK(sol.has_value());
      if (sol) CHECK(a * *sol == target);
    });
  }
}

TEST_CASE("kernel basis spans solutions of the homogeneous system") {
  const IntMatrix a{{1, -1, 1, -1}};
  const LatticeSolver s(a);
  CHECK(s.rank() == 1);
  const auto k = s.kernel_basis();
  CHECK(k.size() == 3);
  for (const auto& v : k) CHECK(a * v == IntVector{0});
}

TEST_CASE("exact simplex") {
  using Q = Rational;
  SUBCASE("optimum at a vertex") {
    // min -x - y  s.t.  x + s1 = 2, y + s2 = 3, x + y + s3 = 4
    std::vector<std::vector<Q>> A{{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {1, 1, 0, 0, 1}};
    auto r = solve_standard_lp(A, {2, 3, 4}, {-1, -1, 0, 0, 0});
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.objective == -4);
  }
  SUBCASE("fractional optimum") {
    // min x + y  s.t.  2x + 2y - s = 1
    auto r = solve_standard_lp({{2, 2, -1}}, {1}, {1, 1, 0});
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.objective == Q(1, 2));
  }
  SUBCASE("infeasible") {
    auto r = solve_standard_lp({{1, 1}}, {-1}, {0, 0});
    CHECK(r.status == LpStatus::infeasible);
  }
  SUBCASE("unbounded") {
    auto r = solve_standard_lp({{1, -1}}, {0}, {-1, 0});
    CHECK(r.status == LpStatus::unbounded);
  }
  SUBCASE("redundant rows") {
    auto r = solve_standard_lp({{1, 1}, {2, 2}}, {1, 2}, {1, 2});
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.objective == 1);
    CHECK(r.x[0] == 1);
  }
}

TEST_CASE("smith normal form: small cases") {
  const auto id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.D == IntMatrix::identity(2));
  const IntMatrix a{{2, 4}, {6, 8}};
  const auto snf = smith_normal_form(a);
  CHECK(snf.D == IntMatrix{{2, 0}, {0, 4}});
  CHECK(snf.U * a * snf.V == snf.D);
  CHECK(abs(determinant(snf.U)) == 1);
  CHECK(abs(determinant(snf.V)) == 1);
  const auto zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.D.is_zero());
  CHECK(zero.rank == 0);
}

TEST_CASE("integer solvability") {
  CHECK_FALSE(solve_integer(IntMatrix{{2}}, {3}).has_value());
  auto x = solve_integer(IntMatrix{{2}}, {4});
  REQUIRE(x.has_value());
  CHECK(*x == IntVector{2});
  // Rationally solvable but not over the integers.
  CHECK_FALSE(solve_integer(IntMatrix{{2, 4}, {0, 2}}, {1, 1}).has_value());
  CHECK(solve_integer(IntMatrix(0, 0), {}).has_value());
}
