#include "shifteq/smith.hpp"

namespace shifteq {

namespace {

// Quotient rounding toward negative infinity, so a - floor_div(a, b) * b lies
// in [0, |b|).
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& c) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += c * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += c * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SmithDecomposition s{IntMatrix::identity(m), A, IntMatrix::identity(n)};
  IntMatrix& U = s.U;
  IntMatrix& D = s.D;
  IntMatrix& V = s.V;

  const std::size_t steps = m < n ? m : n;
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Move the entry of smallest absolute value in the remaining block to
      // the pivot position; small pivots keep the quotients, and hence the
      // intermediate entries, small.
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (D(i, j) == 0) continue;
          if (!found || abs(D(i, j)) < abs(D(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        t = steps;  // remaining block is zero, done
        break;
      }
      swap_rows(D, t, pi);
      swap_rows(U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(V, t, pj);
      if (D(t, t) < 0) {
        negate_row(D, t);
        negate_row(U, t);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        BigInt q = D(i, t) / D(t, t);
        add_row_multiple(D, i, t, -q);
        add_row_multiple(U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        BigInt q = D(t, j) / D(t, t);
        add_col_multiple(D, j, t, -q);
        add_col_multiple(V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot is alone in its row and column; force it to divide the whole
      // remaining block so the diagonal ends up as a divisibility chain.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i)
        for (std::size_t j = t + 1; j < n && divides_all; ++j)
          if (D(i, j) % D(t, t) != 0) {
            add_row_multiple(D, t, i, 1);
            add_row_multiple(U, t, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (t == steps) break;
  }
  return s;
}

IntMatrix row_hermite_form(const IntMatrix& A) {
  IntMatrix W = A;
  const std::size_t m = W.rows(), n = W.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Clear column c below row r via a gcd cascade.
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (W(i, c) != 0 && (best == m || abs(W(i, c)) < abs(W(best, c)))) best = i;
      if (best == m) break;  // column is zero from row r down
      swap_rows(W, r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (W(i, c) == 0) continue;
        BigInt q = W(i, c) / W(r, c);
        add_row_multiple(W, i, r, -q);
        if (W(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (W(r, c) == 0) continue;
    if (W(r, c) < 0) negate_row(W, r);
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = floor_div(W(i, c), W(r, c));
      if (q != 0) add_row_multiple(W, i, r, -q);
    }
    ++r;
  }
  if (r == 0) return IntMatrix(1, n);  // zero row span: single zero row
  IntMatrix H(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) H(i, j) = W(i, j);
  return H;
}

std::vector<IntMatrix> integer_kernel(const IntMatrix& A) {
  const std::size_t n = A.cols();
  SmithDecomposition s = smith_normal_form(A);
  const std::size_t steps = A.rows() < n ? A.rows() : n;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (j >= steps || s.D(j, j) == 0) free_cols.push_back(j);
  if (free_cols.empty()) return {};

  IntMatrix K(free_cols.size(), n);
  for (std::size_t i = 0; i < free_cols.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) K(i, j) = s.V(j, free_cols[i]);
  K = row_hermite_form(K);

  std::vector<IntMatrix> basis;
  for (std::size_t i = 0; i < K.rows(); ++i) {
    IntMatrix v(1, n);
    for (std::size_t j = 0; j < n; ++j) v(0, j) = K(i, j);
    basis.push_back(v);
  }
  return basis;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& A, const IntMatrix& b) {
  if (b.cols() != 1 || b.rows() != A.rows())
    throw DimensionError("solve_integer: right-hand side must be a column of length " +
                         std::to_string(A.rows()));
  SmithDecomposition s = smith_normal_form(A);
  IntMatrix c = s.U * b;
  const std::size_t n = A.cols();
  const std::size_t steps = A.rows() < n ? A.rows() : n;
  IntMatrix y(n, 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (i < steps && s.D(i, i) != 0) {
      if (c(i, 0) % s.D(i, i) != 0) return std::nullopt;
      y(i, 0) = c(i, 0) / s.D(i, i);
    } else if (c(i, 0) != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

BigInt determinant(const IntMatrix& A) {
  if (!A.is_square())
    throw DimensionError("determinant: matrix is not square");
  const std::size_t n = A.rows();
  IntMatrix M = A;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && M(i, k) == 0) ++i;
      if (i == n) return 0;
      swap_rows(M, k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        M(i, j) = (M(k, k) * M(i, j) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

}  // namespace shifteq
