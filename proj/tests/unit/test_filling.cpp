#include <random>

#include "doctest.h"

#include "fillscope/error.hpp"
#include "fillscope/filling.hpp"
#include "fillscope/io.hpp"
#include "support.hpp"

using namespace fillscope;

namespace {

ChainComplex builtin_complex(const char* name) {
  const Document doc = load_builtin(name);
  if (auto cc = std::get_if<ChainComplex>(&doc)) return *cc;
  return to_chain_complex(std::get<SimplicialComplex>(doc));
}

void check_witness(const ChainComplex& cc, std::size_t q, const Chain& c, const FillResult& r) {
  REQUIRE(r.witness.has_value());
  CHECK(boundary(cc, *r.witness) == c);
  CHECK(l1_norm(*r.witness) == r.value);
  CHECK(r.witness->dim() == q);
}

}  // namespace

TEST_CASE("zero chain fills with nothing") {
  const ChainComplex cc = builtin_complex("tetra-boundary");
  const FillResult r = fill_volume(cc, 2, Chain(1));
  CHECK(r.status == FillStatus::exact);
  CHECK(r.value == 0);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->is_zero());
  CHECK(fill_volume_bruteforce(cc, 2, Chain(1), 0).status == FillStatus::exact);
}

TEST_CASE("complex with only even-dimensional cells") {
  const ChainComplex cp2 = builtin_complex("cp2");
  CHECK(cp2.cell_count(3) == 0);
  const FillResult r = fill_volume(cp2, 4, Chain(3));
  CHECK(r.status == FillStatus::exact);
  CHECK(r.value == 0);
  const FillResult r2 = fill_volume(cp2, 2, Chain(1));
  CHECK(r2.status == FillStatus::exact);
}

TEST_CASE("face boundary in the tetrahedron boundary") {
  const ChainComplex cc = builtin_complex("tetra-boundary");
  const Chain face = cc.make_chain(2, {{"[0,1,2]", 1}});
  const Chain c = boundary(cc, face);
  const FillResult r = fill_volume(cc, 2, c);
  CHECK(r.status == FillStatus::exact);
  CHECK(r.value == 1);
  check_witness(cc, 2, c, r);
  CHECK(*r.witness == face);
  const FillResult oracle = fill_volume_bruteforce(cc, 2, c, 3);
  CHECK(oracle.status == FillStatus::exact);
  CHECK(oracle.value == 1);
}

TEST_CASE("sum of two face boundaries") {
  // The two faces' boundaries share an edge; the other two faces fill the
  // same cycle with opposite orientation, also at norm 2.
  const ChainComplex cc = builtin_complex("tetra-boundary");
  const Chain c = boundary(cc, cc.make_chain(2, {{"[0,1,2]", 1}, {"[0,1,3]", -1}}));
  const FillResult r = fill_volume(cc, 2, c);
  CHECK(r.value == 2);
  check_witness(cc, 2, c, r);
}

TEST_CASE("graph fillings") {
  const ChainComplex tri = builtin_complex("circle-3");
  const Chain c = tri.make_chain(0, {{"1", 1}, {"0", -1}});
  const FillResult r = fill_volume(tri, 1, c);
  CHECK(r.status == FillStatus::exact);
  CHECK(r.value == 1);
  check_witness(tri, 1, c, r);
  try {
    fill_volume(tri, 2, Chain(1));
    FAIL("expected a dimension error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::dimension_out_of_range);
  }
  const Chain lone = tri.make_chain(0, {{"1", 1}});
  CHECK(fill_volume(tri, 1, lone).status == FillStatus::infinite);
  CHECK(fill_volume_bruteforce(tri, 1, lone, 4).status == FillStatus::infinite);

  // Opposite points on a hexagon are three edges apart either way.
  const ChainComplex hex = builtin_complex("circle-6");
  const Chain far = hex.make_chain(0, {{"3", 1}, {"0", -1}});
  CHECK(fill_volume(hex, 1, far).value == 3);
}

TEST_CASE("torsion obstructs filling") {
  // A 2-cell attached by a degree-2 map: the loop is not a boundary but
  // twice the loop is.
  SparseMatrix d2(1, 1);
  d2.set_column(0, {{0, 2}});
  const ChainComplex rp2({{"v"}, {"e"}, {"f"}}, {SparseMatrix(1, 1), d2});
  const Chain loop = rp2.make_chain(1, {{"e", 1}});
  CHECK(fill_volume(rp2, 2, loop).status == FillStatus::infinite);
  const FillResult twice = fill_volume(rp2, 2, Integer(2) * loop);
  CHECK(twice.status == FillStatus::exact);
  CHECK(twice.value == 1);
}

TEST_CASE("fractional relaxation needs branching") {
  // Boundary map with columns (2, 0), (1, 1), (1, -1): filling (2, 0) costs 1
  // with the first column; the relaxation could split across the others.
  SparseMatrix d(2, 3);
  d.set_column(0, {{0, 2}});
  d.set_column(1, {{0, 1}, {1, 1}});
  d.set_column(2, {{0, 1}, {1, -1}});
  const ChainComplex cc({{"x", "y"}, {"a", "b", "c"}}, {d});
  for (long k = 1; k <= 4; ++k) {
    for (long m = -3; m <= 3; ++m) {
      Chain c(0);
      c.add_term(0, k);
      c.add_term(1, m);
      const FillResult r = fill_volume(cc, 1, c);
      const FillResult o = fill_volume_bruteforce(cc, 1, c, 8);
      CHECK(r.status == o.status);
      if (r.status == FillStatus::exact) {
        CHECK(r.value == o.value);
        check_witness(cc, 1, c, r);
      }
    }
  }
}

TEST_CASE("budget exhaustion reports a lower bound") {
  // 2a + 3b = x: the relaxation reaches 1/3 but the integer optimum is 2.
  SparseMatrix d(1, 2);
  d.set_column(0, {{0, 2}});
  d.set_column(1, {{0, 3}});
  const ChainComplex cc({{"x"}, {"a", "b"}}, {d});
  const Chain c = cc.make_chain(0, {{"x", 1}});
  const FillResult tight = fill_volume(cc, 1, c, FillBudget{0});
  CHECK(tight.status == FillStatus::lower_bound);
  CHECK(tight.value == 1);
  CHECK_FALSE(tight.witness.has_value());
  const FillResult full = fill_volume(cc, 1, c);
  CHECK(full.status == FillStatus::exact);
  CHECK(full.value == 2);
  CHECK(full.nodes > 0);
  CHECK(fill_volume_bruteforce(cc, 1, c, 4).value == 2);
}

TEST_CASE("any budget gives a sound bound") {
  std::mt19937 rng(41);
  const ChainComplex cc = builtin_complex("torus7");
  const FillSolver solver(cc, 2);
  bool saw_lower = false;
  for (int trial = 0; trial < 30 && !saw_lower; ++trial) {
    const Chain b = testing::random_chain(rng, 2, cc.cell_count(2), 2, 6);
    const Chain c = boundary(cc, b);
    const FillResult tight = solver.solve(c, FillBudget{0});
    const FillResult full = solver.solve(c);
    REQUIRE(full.status == FillStatus::exact);
    CHECK(full.value <= l1_norm(b));
    if (tight.status == FillStatus::lower_bound) {
      saw_lower = true;
      CHECK(tight.value <= full.value);
      CHECK_FALSE(tight.witness.has_value());
    } else {
      CHECK(tight.value == full.value);
    }
  }
}

TEST_CASE("solver agrees with exhaustive search on random complexes") {
  std::mt19937 rng(2024);
  int compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const ChainComplex cc = testing::random_complex(rng);
    for (std::size_t q = 1; q <= cc.top_dim(); ++q) {
      if (cc.cell_count(q) == 0) continue;
      const Chain b0 = testing::random_chain(rng, q, cc.cell_count(q), 2, 3);
      const Chain c = boundary(cc, b0);
      if (l1_norm(c) > 4) continue;
      const std::size_t bound = l1_norm(b0).get_ui();
      const FillResult r = fill_volume(cc, q, c);
      const FillResult o = fill_volume_bruteforce(cc, q, c, bound);
      REQUIRE(r.status == FillStatus::exact);
      REQUIRE(o.status == FillStatus::exact);
      CHECK(r.value == o.value);
      check_witness(cc, q, c, r);
      check_witness(cc, q, c, o);
      ++compared;

      // A random chain is usually not a boundary; both must agree on that.
      const Chain noise = testing::random_chain(rng, q - 1, cc.cell_count(q - 1), 1, 2);
      const FillResult rn = fill_volume(cc, q, noise);
      const FillResult on = fill_volume_bruteforce(cc, q, noise, 6);
      CHECK((rn.status == FillStatus::infinite) == (on.status == FillStatus::infinite));
      if (rn.status == FillStatus::exact && on.status == FillStatus::exact) CHECK(rn.value == on.value);
    }
  }
  CHECK(compared >= 100);
}

TEST_CASE("filling volume properties") {
  std::mt19937 rng(43);
  const ChainComplex cc = builtin_complex("torus7");
  const FillSolver solver(cc, 2);
  for (int trial = 0; trial < 25; ++trial) {
    const Chain a = boundary(cc, testing::random_chain(rng, 2, cc.cell_count(2), 1, 3));
    const Chain b = boundary(cc, testing::random_chain(rng, 2, cc.cell_count(2), 1, 3));
    const FillResult fa = solver.solve(a), fb = solver.solve(b);
    const FillResult fs = solver.solve(a + b), fn = solver.solve(-a);
    REQUIRE(fa.status == FillStatus::exact);
    REQUIRE(fb.status == FillStatus::exact);
    REQUIRE(fs.status == FillStatus::exact);
    CHECK(fn.value == fa.value);                // symmetric
    CHECK(fs.value <= fa.value + fb.value);     // subadditive
    CHECK(solver.solve(Integer(2) * a).value <= 2 * fa.value);
  }
}

TEST_CASE("chain dimension is checked") {
  const ChainComplex cc = builtin_complex("tetra-boundary");
  CHECK_THROWS_AS(fill_volume(cc, 2, Chain(2)), Error);
  Chain bad(1);
  bad.add_term(99, 1);
  CHECK_THROWS_AS(fill_volume(cc, 2, bad), Error);
}

TEST_CASE("norm enumeration") {
  // Integer vectors of length n and norm k: sum_i 2^i C(n,i) C(k-1,i-1).
  std::size_t count = 0;
  for_each_vector_with_norm(3, 2, [&](const std::vector<long>& v) {
    CHECK(testing::l1(v) == 2);
    ++count;
    return true;
  });
  CHECK(count == 18);
  std::size_t zero = 0;
  for_each_vector_with_norm(4, 0, [&](const std::vector<long>&) {
    ++zero;
    return true;
  });
  CHECK(zero == 1);
}
