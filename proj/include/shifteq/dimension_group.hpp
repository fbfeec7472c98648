#ifndef SHIFTEQ_DIMENSION_GROUP_HPP
#define SHIFTEQ_DIMENSION_GROUP_HPP

#include "shifteq/essential.hpp"

#include <cstdint>

namespace shifteq {

// An element of the stationary inductive-limit group of A: the class of the
// integer column v placed at stage k of the chain  Z^n --A^t--> Z^n --A^t--> ...
// Two pairs name the same element when they agree after being pushed far
// enough along the chain.  Every class carries its defining matrix so that
// mixing groups is caught instead of silently computed.
struct DimClass {
  EssentialMatrix mat;
  IntMatrix v;     // column vector of length mat.size()
  std::size_t k;

  DimClass(EssentialMatrix m, IntMatrix vec, std::size_t stage);
};

DimClass zero_class(const EssentialMatrix& A);

// The class of the all-ones column at stage 0, the canonical order unit.
DimClass order_unit(const EssentialMatrix& A);

// Decides equality outright: after aligning both classes to a common stage,
// their difference d names zero iff (A^t)^n d = 0 where n = |A|, because the
// kernels of (A^t)^j cannot grow past j = n.
bool dim_equal(const DimClass& a, const DimClass& b);

DimClass dim_add(const DimClass& a, const DimClass& b);

// The shift automorphism: power >= 0 multiplies the representative by
// (A^t)^power, power < 0 moves the class |power| stages up the chain.
DimClass x_action(const DimClass& a, std::int64_t power);

enum class ConeStatus { InCone, Unknown };

struct ConeResult {
  ConeStatus status;
  // For InCone: the first stage push that exhibits a nonnegative
  // representative.  For Unknown: the bound that was exhausted.
  std::size_t power;
};

// Positivity is only semi-decidable here: we push the representative up the
// chain looking for a nonnegative vector and report Unknown at the bound.
// max_power = 0 selects the default bound of 50 * |A|.
ConeResult in_positive_cone(const DimClass& a, std::size_t max_power = 0);

std::size_t default_cone_bound(const EssentialMatrix& A);

// Pull a class of A over to B along an intertwiner (A R = R B, enforced):
// [v, k] over A maps to [R^t v, k] over B.  Intertwining makes this
// independent of the chosen representative; it preserves order when R is
// nonnegative.
DimClass apply_Rt_G(const DimClass& a, const IntMatrix& R, const EssentialMatrix& B);

}  // namespace shifteq

#endif
