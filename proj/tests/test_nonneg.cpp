#include "shifteq/nonneg.hpp"

#include "shifteq/linsolve.hpp"

#include <doctest.h>

#include <random>

using namespace shifteq;

namespace {

RatMatrix rat(const IntMatrix& m) { return RatMatrix(m); }

RatMatrix flatten(const RatMatrix& m) {
  RatMatrix row(1, m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      row(0, i * m.cols() + j) = m(i, j);
  return row;
}

// A found point must be nonzero, nonnegative and inside the span.
void check_witness(const RatMatrix& x, const std::vector<RatMatrix>& span) {
  CHECK_FALSE(x.is_zero());
  CHECK(x.is_nonnegative());
  std::vector<RatMatrix> rows;
  for (const RatMatrix& s : span) rows.push_back(flatten(s));
  RatMatrix stacked(rows.size(), rows[0].cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].cols(); ++j) stacked(i, j) = rows[i](0, j);
  CHECK(in_row_space(flatten(x), row_space_basis(stacked)));
}

// Exhaustive integer-coefficient search.  For spans of dimension <= 2 with
// entries bounded by 3 this is complete: the feasibility cone in coefficient
// space is cut out by the ambient coordinates, so its extreme rays are
// (+-b_2j, -+b_1j), all within the box; scale invariance reduces rational
// coefficients to integer ones.
bool grid_feasible(const std::vector<RatMatrix>& span, long long radius) {
  const std::size_t d = span.size();
  std::vector<long long> c(d, -radius);
  for (;;) {
    bool allzero = true;
    for (long long ci : c)
      if (ci != 0) allzero = false;
    if (!allzero) {
      RatMatrix x(span[0].rows(), span[0].cols());
      for (std::size_t i = 0; i < d; ++i)
        x = x + BigRat(c[i]) * span[i];
      if (!x.is_zero() && x.is_nonnegative()) return true;
    }
    std::size_t i = d;
    bool advanced = false;
    while (i-- > 0) {
      if (c[i] < radius) {
        ++c[i];
        for (std::size_t j = i + 1; j < d; ++j) c[j] = -radius;
        advanced = true;
        break;
      }
    }
    if (!advanced) return false;
  }
}

}  // namespace

TEST_CASE("known spans") {
  // A sign-mixed line meets the orthant only at 0.
  CHECK_FALSE(nonneg_feasible({rat(IntMatrix{{1, -1}})}).has_value());

  auto hit = nonneg_feasible({rat(IntMatrix{{1, 1}})});
  REQUIRE(hit.has_value());
  CHECK(*hit == rat(IntMatrix{{1, 1}}));

  CHECK_FALSE(nonneg_feasible({}).has_value());
  CHECK_FALSE(nonneg_feasible({RatMatrix(2, 2)}).has_value());

  // A negative basis vector still spans a feasible ray.
  auto neg = nonneg_feasible({rat(IntMatrix{{-1, -2}})});
  REQUIRE(neg.has_value());
  check_witness(*neg, {rat(IntMatrix{{-1, -2}})});

  // Two crossed lines only feasible in combination.
  std::vector<RatMatrix> crossed{rat(IntMatrix{{1, -1, 0}}),
                                 rat(IntMatrix{{0, 1, -1}})};
  // c1*(1,-1,0) + c2*(0,1,-1) = (c1, c2-c1, -c2) >= 0 forces c1 <= 0 <= c1.
  CHECK_FALSE(nonneg_feasible(crossed).has_value());
}

TEST_CASE("the two backends agree with each other and with the grid") {
  std::mt19937_64 rng(20240818);
  std::uniform_int_distribution<long long> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> dim_d(1, 2), amb_d(2, 4);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t d = dim_d(rng), n = amb_d(rng);
    std::vector<RatMatrix> span;
    for (std::size_t i = 0; i < d; ++i) {
      RatMatrix v(1, n);
      for (std::size_t j = 0; j < n; ++j) v(0, j) = entry(rng);
      span.push_back(v);
    }
    auto fm = nonneg_feasible_fm(span);
    auto simplex = nonneg_feasible_simplex(span);
    CHECK(fm.has_value() == simplex.has_value());
    const bool grid = grid_feasible(span, 4);
    CHECK(fm.has_value() == grid);
    if (fm) check_witness(*fm, span);
    if (simplex) check_witness(*simplex, span);
  }
}

TEST_CASE("backends agree on wider spans") {
  std::mt19937_64 rng(20240819);
  std::uniform_int_distribution<long long> entry(-2, 2);

  // Ambient 4x4 = 16 coordinates: past the elimination cutoff, so the
  // automatic dispatch must pick the simplex and get the same answers.
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RatMatrix> span;
    for (std::size_t i = 0; i < 3; ++i) {
      RatMatrix v(4, 4);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) v(r, c) = entry(rng);
      span.push_back(v);
    }
    auto simplex = nonneg_feasible_simplex(span);
    auto dispatched = nonneg_feasible(span);
    CHECK(dispatched.has_value() == simplex.has_value());
    if (simplex) check_witness(*simplex, span);
    if (dispatched) check_witness(*dispatched, span);
  }

  // Direct backend-vs-backend comparison on three-dimensional spans in
  // ambient 2x3, a shape the eliminator still handles quickly.  (Running it
  // at ambient 16 is exactly the blowup the dispatch cutoff avoids.)
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RatMatrix> span;
    for (std::size_t i = 0; i < 3; ++i) {
      RatMatrix v(2, 3);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 3; ++c) v(r, c) = entry(rng);
      span.push_back(v);
    }
    auto fm = nonneg_feasible_fm(span);
    auto simplex = nonneg_feasible_simplex(span);
    CHECK(fm.has_value() == simplex.has_value());
    if (fm) check_witness(*fm, span);
    if (simplex) check_witness(*simplex, span);
  }
}

TEST_CASE("rational entries are handled exactly") {
  RatMatrix v(1, 2);
  v(0, 0) = BigRat(1, 3);
  v(0, 1) = BigRat(1, 7);
  auto hit = nonneg_feasible({v});
  REQUIRE(hit.has_value());
  check_witness(*hit, {v});
}
