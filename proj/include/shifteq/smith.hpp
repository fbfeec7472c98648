#ifndef SHIFTEQ_SMITH_HPP
#define SHIFTEQ_SMITH_HPP

#include "shifteq/int_matrix.hpp"

#include <optional>
#include <vector>

namespace shifteq {

// U * A * V = D with U, V unimodular and D diagonal, each diagonal entry
// nonnegative and dividing the next.
struct SmithDecomposition {
  IntMatrix U, D, V;
};

SmithDecomposition smith_normal_form(const IntMatrix& A);

// Row-style Hermite normal form: row span is preserved, pivots are positive,
// entries above a pivot lie in [0, pivot), zero rows are dropped.  Two integer
// matrices have the same Hermite form iff their rows span the same lattice,
// so this is the canonical representative used wherever a lattice basis must
// be reproducible.
IntMatrix row_hermite_form(const IntMatrix& A);

// Basis of { x : A x = 0 } over the integers, as canonical rows (Hermite form
// of the null lattice).  Empty when the kernel is trivial.
std::vector<IntMatrix> integer_kernel(const IntMatrix& A);

// One integer solution of A x = b, if any exists.
std::optional<IntMatrix> solve_integer(const IntMatrix& A, const IntMatrix& b);

// Exact determinant by Bareiss fraction-free elimination.
BigInt determinant(const IntMatrix& A);

}  // namespace shifteq

#endif
