#ifndef SHIFTEQ_SHIFT_EQUIVALENCE_HPP
#define SHIFTEQ_SHIFT_EQUIVALENCE_HPP

#include "shifteq/dimension_group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shifteq {

// A claimed lag-m equivalence between A and B: nonnegative integer R, S with
//   A^m = R S,  B^m = S R,  A R = R B,  B S = S A.
struct SEWitness {
  EssentialMatrix A, B;
  IntMatrix R, S;
  std::size_t m;

  SEWitness(EssentialMatrix a, EssentialMatrix b, IntMatrix r, IntMatrix s,
            std::size_t lag);
};

// The one-sided weakening: only A^m = R S, A R = R B and B^k = T R are
// required, with a separate left inverse T at its own lag.
struct RelaxedSEWitness {
  EssentialMatrix A, B;
  IntMatrix R, S, T;
  std::size_t m, k;

  RelaxedSEWitness(EssentialMatrix a, EssentialMatrix b, IntMatrix r, IntMatrix s,
                   IntMatrix t, std::size_t lag_m, std::size_t lag_k);
};

struct RelationCheck {
  std::string name;
  bool pass;
  std::optional<IntMatrix> residual;  // lhs - rhs for failed equations
};

struct VerifyReport {
  std::vector<RelationCheck> checks;

  bool ok() const;
  // Names of the failed checks, comma separated; empty when ok().
  std::string failures() const;
};

VerifyReport verify_se(const SEWitness& w);
VerifyReport verify_relaxed_se(const RelaxedSEWitness& w);

// One elementary step A = R S, B' = S R of a strong chain.
struct SSEStep {
  IntMatrix R, S;
};

// Walks the chain from A, checking each factorization and handing S R to the
// next step; the last product must land on B.
VerifyReport verify_sse_chain(const IntMatrix& A, const std::vector<SSEStep>& steps,
                              const IntMatrix& B);

// Composes a valid chain into a lag-|steps| equivalence witness
// (R = R_1 ... R_k, S = S_k ... S_1).  Throws DomainError if the chain does
// not verify.
SEWitness sse_compose(const IntMatrix& A, const std::vector<SSEStep>& steps,
                      const IntMatrix& B);

// Does R carry the order unit of A to the order unit of B?  The condition is
// (B^t)^l (R^t 1 - 1) = 0 for some l, and l = |B| decides it because kernels
// of powers stabilize there.
bool verify_unital(const IntMatrix& R, const EssentialMatrix& A,
                   const EssentialMatrix& B);

// Lattice basis of { R integer : A R = R B }, via the integer kernel of the
// Kronecker difference acting on vec(R).  Canonical (Hermite) basis, so the
// result is reproducible and its span can be searched in a fixed order.
std::vector<IntMatrix> solve_intertwiners(const EssentialMatrix& A,
                                          const EssentialMatrix& B);

// Bounded complete search for an equivalence witness.  Enumerates, for each
// lag m = 1..m_max, the nonnegative matrices R in the intertwiner lattice
// with coefficients in [-coeff_bound, coeff_bound], in lexicographic
// coefficient order, and tries to complete each R with an integral
// nonnegative S solving the remaining equations.  Deterministic: always
// returns the first witness in (m, coefficient) order, regardless of jobs.
// nullopt means no witness within the bounds, not a disproof.
std::optional<SEWitness> search_se(const EssentialMatrix& A, const EssentialMatrix& B,
                                   std::size_t m_max, const BigInt& coeff_bound,
                                   std::size_t jobs = 1);

// Thrown by lift_hom_to_matrix when the proposed generator images do not
// commute with the shift, i.e. they do not define a homomorphism.
class NotAHomomorphism : public std::runtime_error {
 public:
  explicit NotAHomomorphism(const std::string& what) : std::runtime_error(what) {}
};

// A graded positive homomorphism between the limit groups of A and B,
// presented by its values on the stage-0 coordinate classes of A.  Each
// image must carry a nonnegative representative.
struct GradedHomSpec {
  EssentialMatrix A, B;
  std::vector<DimClass> images;  // images[i] = value on [e_i, 0], over B

  GradedHomSpec(EssentialMatrix a, EssentialMatrix b, std::vector<DimClass> imgs);
};

struct LiftResult {
  IntMatrix R;        // |A| x |B| nonnegative intertwiner: A R = R B
  std::size_t shift;  // the lift realizes [v, k] |-> [R^t v, k + shift]
};

// Realizes a graded positive homomorphism by a single nonnegative integer
// matrix, up to a stage shift.  Writing images[i] = [v_i, l_i], the columns
// (B^t)^(s - l_i) v_i (s = sum of the l_j) assemble a candidate R'; pushing
// by the first power l <= |B| that makes it intertwine eventually yields R.
// Throws NotAHomomorphism when no such power exists.
LiftResult lift_hom_to_matrix(const GradedHomSpec& spec);

// The other direction: a nonnegative intertwiner induces the homomorphism
// sending [e_i, 0] to [R^t e_i, 0].
GradedHomSpec matrix_to_hom(const IntMatrix& R, const EssentialMatrix& A,
                            const EssentialMatrix& B);

}  // namespace shifteq

#endif
