#ifndef SHIFTEQ_EVENTUAL_IMAGE_HPP
#define SHIFTEQ_EVENTUAL_IMAGE_HPP

#include "shifteq/dimension_group.hpp"
#include "shifteq/rat_matrix.hpp"

#include <optional>
#include <vector>

namespace shifteq {

// The eventual row space of A: the intersection over all k of the row spaces
// of A^k.  Since ranks can only drop finitely often, this equals the row
// space of A^p at the first power p where the rank stops falling.
struct EventualImageSpace {
  EssentialMatrix mat;
  std::vector<RatMatrix> basis;       // canonical RREF rows
  std::size_t stabilization_power;    // least p >= 1 with rank A^p = rank A^(p+1)
};

EventualImageSpace eventual_image(const EssentialMatrix& A);

// A point of the eventual row space together with an integrality
// certificate: an exponent l with v A^l integral.
struct DeltaElement {
  EssentialMatrix mat;
  RatMatrix v;           // 1 x |A| rational row
  std::size_t certificate;
};

enum class DeltaStatus {
  Member,
  NotInSpan,              // v is outside the eventual row space
  CertificateCapExceeded  // in the span, but no integrality exponent found
};

struct DeltaResult {
  DeltaStatus status;
  std::optional<DeltaElement> element;  // set only for Member
  std::size_t cap;                      // certificate exponents tried: 0..cap
};

// Membership test.  Distinguishes "provably outside the span" from "the
// bounded certificate search came up empty": the latter is inconclusive in
// principle, so it is reported as its own status rather than folded into a
// plain no.  The cap is |A| plus the total bit length of the denominators
// of v, which covers every certificate a member of this lattice can need in
// practice while staying small.
DeltaResult delta_membership(const RatMatrix& v, const EssentialMatrix& A);

// The isomorphism onto the stationary inductive-limit group: a point with
// certificate l maps to the class of the integer column (v A^l)^t at stage l.
DimClass psi(const DeltaElement& d);

// The canonical order unit on the eventual-image side: the unique point u of
// the span with u A^n = (1,...,1) A^n, n = |A|.  psi carries it to the
// all-ones class.
DeltaElement delta_order_unit(const EssentialMatrix& A);

// Push a point forward along an intertwiner (A R = R B, enforced): v maps to
// v R, and any certificate for v works on the other side because
// v R B^j = v A^j R.
DeltaElement apply_R_delta(const DeltaElement& d, const IntMatrix& R,
                           const EssentialMatrix& B);

}  // namespace shifteq

#endif
