#include "shifteq/linsolve.hpp"

namespace shifteq {

std::vector<std::size_t> rref(RatMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M(p, c) == 0) ++p;
    if (p == m) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(M(r, j), M(p, j));
    BigRat inv = BigRat(1) / M(r, c);
    for (std::size_t j = c; j < n; ++j) M(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || M(i, c) == 0) continue;
      BigRat f = M(i, c);
      for (std::size_t j = c; j < n; ++j) M(i, j) -= f * M(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const RatMatrix& M) {
  RatMatrix tmp = M;
  return rref(tmp).size();
}

std::size_t rank(const IntMatrix& M) { return rank(RatMatrix(M)); }

std::vector<RatMatrix> row_space_basis(const RatMatrix& M) {
  RatMatrix tmp = M;
  std::vector<std::size_t> pivots = rref(tmp);
  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    RatMatrix row(1, M.cols());
    for (std::size_t j = 0; j < M.cols(); ++j) row(0, j) = tmp(i, j);
    basis.push_back(row);
  }
  return basis;
}

bool in_row_space(const RatMatrix& v, const std::vector<RatMatrix>& basis) {
  if (v.rows() != 1)
    throw DimensionError("in_row_space: v must be a row vector");
  if (basis.empty()) return v.is_zero();
  RatMatrix stacked(basis.size() + 1, v.cols());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].rows() != 1 || basis[i].cols() != v.cols())
      throw DimensionError("in_row_space: basis rows must match v");
    for (std::size_t j = 0; j < v.cols(); ++j) stacked(i, j) = basis[i](0, j);
  }
  for (std::size_t j = 0; j < v.cols(); ++j) stacked(basis.size(), j) = v(0, j);
  RatMatrix top(basis.size(), v.cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) top(i, j) = basis[i](0, j);
  return rank(stacked) == rank(top);
}

std::optional<RationalSolution> rational_solve(const RatMatrix& A, const RatMatrix& b) {
  if (b.cols() != 1 || b.rows() != A.rows())
    throw DimensionError("rational_solve: right-hand side must be a column of length " +
                         std::to_string(A.rows()));
  const std::size_t m = A.rows(), n = A.cols();
  RatMatrix aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n) = b(i, 0);
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // 0 = 1 row

  RationalSolution sol{RatMatrix(n, 1), {}};
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    is_pivot[pivots[i]] = true;
    sol.particular(pivots[i], 0) = aug(i, n);
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    RatMatrix k(n, 1);
    k(c, 0) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], 0) = -aug(i, c);
    sol.homogeneous.push_back(k);
  }
  return sol;
}

std::optional<RatMatrix> rat_inverse(const RatMatrix& M) {
  if (M.rows() != M.cols())
    throw DimensionError("rat_inverse: matrix is not square");
  const std::size_t n = M.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = M(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace shifteq
