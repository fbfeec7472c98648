#include "shifteq/nonneg.hpp"

#include "shifteq/linsolve.hpp"

#include <algorithm>
#include <set>

namespace shifteq {

namespace {

// Shared setup: flatten the span to rows, reduce to an independent basis W,
// and record the target shape.  x ranges over t * W with t free.
struct SpanLP {
  RatMatrix W;           // k x N basis of the flattened span
  std::vector<BigRat> c;  // objective coefficients: c_i = sum_j W(i, j)
  std::size_t out_rows, out_cols;
};

std::optional<SpanLP> setup(const std::vector<RatMatrix>& span) {
  if (span.empty()) return std::nullopt;
  const std::size_t r = span.front().rows(), cdim = span.front().cols();
  const std::size_t N = r * cdim;
  RatMatrix flat(span.size(), N);
  for (std::size_t v = 0; v < span.size(); ++v) {
    if (span[v].rows() != r || span[v].cols() != cdim)
      throw DimensionError("nonneg_feasible: span vectors have mixed shapes");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < cdim; ++j) flat(v, i * cdim + j) = span[v](i, j);
  }
  std::vector<RatMatrix> basis = row_space_basis(flat);
  if (basis.empty()) return std::nullopt;  // span is {0}
  SpanLP lp{RatMatrix(basis.size(), N), {}, r, cdim};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    BigRat sum = 0;
    for (std::size_t j = 0; j < N; ++j) {
      lp.W(i, j) = basis[i](0, j);
      sum += basis[i](0, j);
    }
    lp.c.push_back(sum);
  }
  return lp;
}

RatMatrix reshape(const std::vector<BigRat>& t, const SpanLP& lp) {
  RatMatrix x(lp.out_rows, lp.out_cols);
  for (std::size_t i = 0; i < lp.W.rows(); ++i) {
    if (t[i] == 0) continue;
    for (std::size_t j = 0; j < lp.W.cols(); ++j)
      x(j / lp.out_cols, j % lp.out_cols) += t[i] * lp.W(i, j);
  }
  return x;
}

// --- Fourier–Motzkin -------------------------------------------------------

// An inequality a . y <= b over variables y = (t_0 .. t_{k-1}, z), stored as
// a primitive integer row (a_0, ..., a_k, b).
using Ineq = std::vector<BigInt>;

Ineq make_primitive(Ineq row) {
  BigInt g = 0;
  for (const auto& x : row) g = gcd(g, x);
  if (g > 1)
    for (auto& x : row) x /= g;
  return row;
}

bool trivially_true(const Ineq& row) {
  for (std::size_t i = 0; i + 1 < row.size(); ++i)
    if (row[i] != 0) return false;
  return row.back() >= 0;
}

// Eliminate variable v from the system, returning the projection.
std::vector<Ineq> fm_eliminate(const std::vector<Ineq>& sys, std::size_t v) {
  std::vector<const Ineq*> pos, neg;
  std::vector<Ineq> out;
  std::set<Ineq> seen;
  auto push = [&](Ineq row) {
    row = make_primitive(std::move(row));
    if (trivially_true(row)) return;
    if (seen.insert(row).second) out.push_back(row);
  };
  for (const auto& row : sys) {
    if (row[v] > 0)
      pos.push_back(&row);
    else if (row[v] < 0)
      neg.push_back(&row);
    else
      push(row);
  }
  for (const Ineq* p : pos)
    for (const Ineq* q : neg) {
      Ineq comb(p->size());
      const BigInt pc = (*p)[v], qc = -(*q)[v];
      for (std::size_t i = 0; i < comb.size(); ++i) comb[i] = qc * (*p)[i] + pc * (*q)[i];
      push(std::move(comb));
    }
  return out;
}

struct Interval {
  std::optional<BigRat> lo, hi;  // unset end = unbounded
};

// Bounds on variable v implied by rows whose later variables are fixed.
Interval fm_bounds(const std::vector<Ineq>& sys, std::size_t v,
                   const std::vector<BigRat>& values) {
  Interval iv;
  for (const auto& row : sys) {
    if (row[v] == 0) continue;
    BigRat rest = BigRat(row.back());
    for (std::size_t i = v + 1; i + 1 < row.size(); ++i) rest -= BigRat(row[i]) * values[i];
    BigRat bound = rest / BigRat(row[v]);
    if (row[v] > 0) {
      if (!iv.hi || bound < *iv.hi) iv.hi = bound;
    } else {
      if (!iv.lo || bound > *iv.lo) iv.lo = bound;
    }
  }
  return iv;
}

std::optional<RatMatrix> solve_fm(const SpanLP& lp) {
  const std::size_t k = lp.W.rows(), N = lp.W.cols();
  const std::size_t nvar = k + 1;  // t variables then z
  std::vector<Ineq> sys;
  for (std::size_t j = 0; j < N; ++j) {
    // 0 <= (t W)_j <= 1, cleared of denominators.
    BigInt lcm = 1;
    for (std::size_t i = 0; i < k; ++i)
      lcm = boost::multiprecision::lcm(lcm, denominator(lp.W(i, j)));
    Ineq up(nvar + 1, BigInt(0)), down(nvar + 1, BigInt(0));
    for (std::size_t i = 0; i < k; ++i) {
      BigInt a = numerator(lp.W(i, j)) * (lcm / denominator(lp.W(i, j)));
      up[i] = a;
      down[i] = -a;
    }
    up.back() = lcm;
    sys.push_back(make_primitive(std::move(up)));
    sys.push_back(make_primitive(std::move(down)));
  }
  {
    // z = c . t as a pair of inequalities.
    BigInt lcm = 1;
    for (const auto& ci : lp.c) lcm = boost::multiprecision::lcm(lcm, denominator(ci));
    Ineq up(nvar + 1, BigInt(0)), down(nvar + 1, BigInt(0));
    for (std::size_t i = 0; i < k; ++i) {
      BigInt a = numerator(lp.c[i]) * (lcm / denominator(lp.c[i]));
      up[i] = -a;
      down[i] = a;
    }
    up[k] = lcm;    //  lcm*z - a.t <= 0
    down[k] = -lcm;  //  a.t - lcm*z <= 0
    sys.push_back(make_primitive(std::move(up)));
    sys.push_back(make_primitive(std::move(down)));
  }

  std::vector<std::vector<Ineq>> stages;  // system before eliminating t_s
  for (std::size_t s = 0; s < k; ++s) {
    stages.push_back(sys);
    sys = fm_eliminate(sys, s);
  }

  // Only z remains: its largest feasible value is the optimum.
  std::vector<BigRat> values(nvar, BigRat(0));
  Interval zb = fm_bounds(sys, k, values);
  if (!zb.hi) throw std::logic_error("nonneg_feasible: objective unbounded");
  if (*zb.hi <= 0) return std::nullopt;
  values[k] = *zb.hi;

  for (std::size_t s = k; s-- > 0;) {
    Interval iv = fm_bounds(stages[s], s, values);
    if (iv.lo && iv.hi)
      values[s] = (*iv.lo + *iv.hi) / 2;
    else if (iv.lo)
      values[s] = *iv.lo;
    else if (iv.hi)
      values[s] = *iv.hi;
  }
  std::vector<BigRat> t(values.begin(), values.begin() + k);
  return reshape(t, lp);
}

// --- exact simplex ---------------------------------------------------------

// Dense tableau simplex with Bland's rule, maximizing over
//   w = (u, v, slacks) >= 0,  t = u - v,  constraints 0 <= (t W)_j <= 1.
std::optional<RatMatrix> solve_simplex(const SpanLP& lp) {
  const std::size_t k = lp.W.rows(), N = lp.W.cols();
  const std::size_t nstruct = 2 * k, mrows = 2 * N, ncols = nstruct + mrows;
  // T is mrows x (ncols + 1); last column is the right-hand side.
  RatMatrix T(mrows, ncols + 1);
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      T(j, i) = lp.W(i, j);
      T(j, k + i) = -lp.W(i, j);
      T(N + j, i) = -lp.W(i, j);
      T(N + j, k + i) = lp.W(i, j);
    }
    T(j, nstruct + j) = 1;
    T(N + j, nstruct + N + j) = 1;
    T(j, ncols) = 1;
  }
  std::vector<BigRat> obj(ncols);
  for (std::size_t i = 0; i < k; ++i) {
    obj[i] = lp.c[i];
    obj[k + i] = -lp.c[i];
  }
  std::vector<std::size_t> basis(mrows);
  for (std::size_t i = 0; i < mrows; ++i) basis[i] = nstruct + i;

  std::vector<BigRat> red = obj;  // reduced costs (slack basis has zero cost)
  BigRat value = 0;
  for (;;) {
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j)
      if (red[j] > 0) {
        enter = j;
        break;  // Bland: smallest improving index
      }
    if (enter == ncols) break;
    std::size_t leave = mrows;
    for (std::size_t i = 0; i < mrows; ++i) {
      if (T(i, enter) <= 0) continue;
      if (leave == mrows) {
        leave = i;
        continue;
      }
      BigRat cur = T(i, ncols) / T(i, enter);
      BigRat best = T(leave, ncols) / T(leave, enter);
      if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
    }
    if (leave == mrows) throw std::logic_error("nonneg_feasible: objective unbounded");

    BigRat piv = T(leave, enter);
    for (std::size_t j = 0; j <= ncols; ++j) T(leave, j) /= piv;
    for (std::size_t i = 0; i < mrows; ++i) {
      if (i == leave || T(i, enter) == 0) continue;
      BigRat f = T(i, enter);
      for (std::size_t j = 0; j <= ncols; ++j) T(i, j) -= f * T(leave, j);
    }
    BigRat f = red[enter];
    for (std::size_t j = 0; j < ncols; ++j) red[j] -= f * T(leave, j);
    value += f * T(leave, ncols);
    basis[leave] = enter;
  }

  if (value <= 0) return std::nullopt;
  std::vector<BigRat> t(k, BigRat(0));
  for (std::size_t i = 0; i < mrows; ++i) {
    if (basis[i] < k)
      t[basis[i]] += T(i, ncols);
    else if (basis[i] < 2 * k)
      t[basis[i] - k] -= T(i, ncols);
  }
  return reshape(t, lp);
}

}  // namespace

std::optional<RatMatrix> nonneg_feasible_fm(const std::vector<RatMatrix>& span) {
  auto lp = setup(span);
  if (!lp) return std::nullopt;
  return solve_fm(*lp);
}

std::optional<RatMatrix> nonneg_feasible_simplex(const std::vector<RatMatrix>& span) {
  auto lp = setup(span);
  if (!lp) return std::nullopt;
  return solve_simplex(*lp);
}

std::optional<RatMatrix> nonneg_feasible(const std::vector<RatMatrix>& span) {
  auto lp = setup(span);
  if (!lp) return std::nullopt;
  // Fourier–Motzkin blows up combinatorially, so reserve it for the ambient
  // dimensions where it beats setting up a tableau.
  if (lp->W.cols() <= 12) return solve_fm(*lp);
  return solve_simplex(*lp);
}

}  // namespace shifteq
