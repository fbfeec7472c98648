#ifndef SHIFTEQ_NONNEG_HPP
#define SHIFTEQ_NONNEG_HPP

#include "shifteq/rat_matrix.hpp"

#include <optional>
#include <vector>

namespace shifteq {

// Search the rational span of the given matrices (all of one shape) for a
// nonzero entrywise-nonnegative point, returned in the same shape.  The span
// is scale-invariant, so the search reduces to the exact linear program
//
//   maximize sum of entries of x  subject to  x in span, 0 <= x <= 1;
//
// a positive optimum yields a witness and a zero optimum proves none exists.
// Small ambient dimensions go through Fourier–Motzkin elimination, larger
// ones through an exact rational simplex; both are deterministic.
std::optional<RatMatrix> nonneg_feasible(const std::vector<RatMatrix>& span);

// The two solver backends, exposed so they can be played against each other.
std::optional<RatMatrix> nonneg_feasible_fm(const std::vector<RatMatrix>& span);
std::optional<RatMatrix> nonneg_feasible_simplex(const std::vector<RatMatrix>& span);

}  // namespace shifteq

#endif
