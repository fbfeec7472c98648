#ifndef SHIFTEQ_LINSOLVE_HPP
#define SHIFTEQ_LINSOLVE_HPP

#include "shifteq/rat_matrix.hpp"

#include <optional>
#include <vector>

namespace shifteq {

// In-place reduced row echelon form; returns the pivot columns (so the rank
// is the number of pivots).
std::vector<std::size_t> rref(RatMatrix& M);

std::size_t rank(const RatMatrix& M);
std::size_t rank(const IntMatrix& M);

// Canonical basis of the row space: the nonzero rows of the RREF.  Empty for
// the zero matrix.
std::vector<RatMatrix> row_space_basis(const RatMatrix& M);

// True if v (a row vector) is a rational combination of the given rows.
bool in_row_space(const RatMatrix& v, const std::vector<RatMatrix>& basis);

struct RationalSolution {
  RatMatrix particular;             // one solution of A x = b (column)
  std::vector<RatMatrix> homogeneous;  // basis of the kernel of A (columns)
};

// Solve A x = b over the rationals; nullopt if inconsistent.
std::optional<RationalSolution> rational_solve(const RatMatrix& A, const RatMatrix& b);

// Inverse of a square rational matrix; nullopt if singular.
std::optional<RatMatrix> rat_inverse(const RatMatrix& M);

}  // namespace shifteq

#endif
