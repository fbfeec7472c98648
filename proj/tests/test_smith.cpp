#include "shifteq/smith.hpp"

#include "shifteq/linsolve.hpp"

#include <doctest.h>

#include <random>

using namespace shifteq;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long long lo,
                        long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  IntMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M(i, j) = d(rng);
  return M;
}

void check_smith_invariants(const IntMatrix& A) {
  SmithDecomposition s = smith_normal_form(A);
  CHECK(s.U * A * s.V == s.D);
  BigInt du = determinant(s.U), dv = determinant(s.V);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  const std::size_t k = s.D.rows() < s.D.cols() ? s.D.rows() : s.D.cols();
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    CHECK(s.D(i, i) >= 0);
    if (s.D(i, i) != 0)
      CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
    else
      CHECK(s.D(i + 1, i + 1) == 0);
  }
}

}  // namespace

TEST_CASE("known diagonal: gcd 2, then det/gcd") {
  SmithDecomposition s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(s.D == IntMatrix{{2, 0}, {0, 4}});
  CHECK(s.U * IntMatrix{{2, 4}, {6, 8}} * s.V == s.D);
}

TEST_CASE("identity and zero matrices") {
  CHECK(smith_normal_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));
  CHECK(smith_normal_form(IntMatrix(2, 2)).D == IntMatrix(2, 2));
}

TEST_CASE("rectangular shapes") {
  check_smith_invariants(IntMatrix{{1, 2, 3}, {4, 5, 6}});
  check_smith_invariants(IntMatrix{{1, 2}, {3, 4}, {5, 6}});
}

TEST_CASE("property: decomposition invariants on random 5x5") {
  std::mt19937_64 rng(20240813);
  for (int trial = 0; trial < 25; ++trial)
    check_smith_invariants(random_matrix(rng, 5, -9, 9));
}

TEST_CASE("hermite form is canonical for the row lattice") {
  // Same lattice, different presentations.
  IntMatrix a{{2, 0}, {0, 3}};
  IntMatrix b{{2, 3}, {2, 0}, {4, 3}};
  CHECK(row_hermite_form(a) == row_hermite_form(b));
  // Unimodular row operations are invisible.
  IntMatrix c{{2, 0}, {2, 3}};
  CHECK(row_hermite_form(a) == row_hermite_form(c));
  // The zero lattice keeps a single zero row as its representative.
  CHECK(row_hermite_form(IntMatrix(2, 3)) == IntMatrix(1, 3));
}

TEST_CASE("integer kernel: known bases") {
  std::vector<IntMatrix> k = integer_kernel(IntMatrix{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK((k[0] == IntMatrix{{1, -1}} || k[0] == IntMatrix{{-1, 1}}));

  CHECK(integer_kernel(IntMatrix{{2, 1}, {1, 1}}).empty());

  std::vector<IntMatrix> full = integer_kernel(IntMatrix{{0, 0}});
  REQUIRE(full.size() == 2);
  IntMatrix stacked(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) stacked(i, j) = full[i](0, j);
  CHECK(row_hermite_form(IntMatrix{{1, 0}, {0, 1}}) == row_hermite_form(stacked));
}

TEST_CASE("property: kernel vectors annihilate and are independent") {
  std::mt19937_64 rng(20240814);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix A = random_matrix(rng, 4, -4, 4);
    // Make it singular half the time by zeroing a row.
    if (trial % 2 == 0)
      for (std::size_t j = 0; j < 4; ++j) A(2, j) = 0;
    std::vector<IntMatrix> kernel = integer_kernel(A);
    for (const IntMatrix& v : kernel)
      CHECK((A * v.transpose()).is_zero());
    if (!kernel.empty()) {
      IntMatrix stacked(kernel.size(), 4);
      for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = 0; j < 4; ++j) stacked(i, j) = kernel[i](0, j);
      // Z-independence and primitivity: Smith diagonal all ones.
      SmithDecomposition s = smith_normal_form(stacked);
      for (std::size_t i = 0; i < kernel.size(); ++i) CHECK(s.D(i, i) == 1);
    }
    CHECK(kernel.size() == 4 - rank(A));
  }
}

TEST_CASE("integer solve: solvable and unsolvable") {
  auto x = solve_integer(IntMatrix{{2}}, IntMatrix{{4}});
  REQUIRE(x.has_value());
  CHECK((*x)(0, 0) == 2);

  CHECK_FALSE(solve_integer(IntMatrix{{2}}, IntMatrix{{3}}).has_value());

  // Rationally solvable, integrally not.
  CHECK_FALSE(solve_integer(IntMatrix{{2, 0}, {0, 2}}, IntMatrix{{1}, {2}})
                  .has_value());

  // Underdetermined: any solution works.
  auto y = solve_integer(IntMatrix{{1, 1}}, IntMatrix{{5}});
  REQUIRE(y.has_value());
  CHECK((*y)(0, 0) + (*y)(1, 0) == 5);
}

TEST_CASE("property: solve_integer agrees with a direct check") {
  std::mt19937_64 rng(20240815);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix A = random_matrix(rng, 3, -3, 3);
    IntMatrix xs(3, 1);
    std::uniform_int_distribution<long long> d(-3, 3);
    for (std::size_t i = 0; i < 3; ++i) xs(i, 0) = d(rng);
    IntMatrix b = A * xs;
    auto sol = solve_integer(A, b);
    REQUIRE(sol.has_value());
    CHECK(A * *sol == b);
  }
}

TEST_CASE("determinant: known values and product rule") {
  CHECK(determinant(IntMatrix{{2, 4}, {6, 8}}) == -8);
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(determinant(IntMatrix{{1, 1}, {1, 1}}) == 0);

  std::mt19937_64 rng(20240816);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a = random_matrix(rng, 4, -5, 5);
    IntMatrix b = random_matrix(rng, 4, -5, 5);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}
