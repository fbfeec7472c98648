#include "shifteq/eventual_image.hpp"

#include "shifteq/linsolve.hpp"

namespace shifteq {

EventualImageSpace eventual_image(const EssentialMatrix& A) {
  std::size_t p = 1;
  IntMatrix power = A.matrix();
  std::size_t r = rank(power);
  for (;;) {
    IntMatrix next = power * A.matrix();
    std::size_t rn = rank(next);
    if (rn == r) break;
    power = next;
    r = rn;
    ++p;
  }
  return {A, row_space_basis(RatMatrix(power)), p};
}

namespace {

std::size_t certificate_cap(const RatMatrix& v, const EssentialMatrix& A) {
  std::size_t cap = A.size();
  for (std::size_t j = 0; j < v.cols(); ++j) {
    BigInt den = denominator(v(0, j));
    while (den > 1) {
      den >>= 1;
      ++cap;
    }
  }
  return cap;
}

// Least l <= cap with v A^l integral, if any.
std::optional<std::size_t> find_certificate(const RatMatrix& v, const IntMatrix& A,
                                            std::size_t cap) {
  RatMatrix w = v;
  RatMatrix Aq(A);
  for (std::size_t l = 0; l <= cap; ++l) {
    if (w.is_integral()) return l;
    w = w * Aq;
  }
  return std::nullopt;
}

}  // namespace

DeltaResult delta_membership(const RatMatrix& v, const EssentialMatrix& A) {
  if (v.rows() != 1 || v.cols() != A.size())
    throw DimensionError("delta_membership: v must be a row of length " +
                         std::to_string(A.size()));
  EventualImageSpace img = eventual_image(A);
  std::size_t cap = certificate_cap(v, A);
  if (!in_row_space(v, img.basis)) return {DeltaStatus::NotInSpan, std::nullopt, cap};
  std::optional<std::size_t> l = find_certificate(v, A.matrix(), cap);
  if (!l) return {DeltaStatus::CertificateCapExceeded, std::nullopt, cap};
  return {DeltaStatus::Member, DeltaElement{A, v, *l}, cap};
}

DimClass psi(const DeltaElement& d) {
  RatMatrix moved = d.v * RatMatrix(d.mat.power(d.certificate));
  return DimClass(d.mat, moved.transpose().to_int(), d.certificate);
}

DeltaElement delta_order_unit(const EssentialMatrix& A) {
  const std::size_t n = A.size();
  EventualImageSpace img = eventual_image(A);
  // Solve t W A^n = 1 A^n for span coordinates t; the system is consistent
  // because 1 A^n lies in the row space of A^(n + stabilization power).
  RatMatrix W(img.basis.size(), n);
  for (std::size_t i = 0; i < img.basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) W(i, j) = img.basis[i](0, j);
  RatMatrix An(A.power(n));
  RatMatrix lhs = (W * An).transpose();  // n x k, columns indexed by t
  RatMatrix ones(1, n);
  for (std::size_t j = 0; j < n; ++j) ones(0, j) = 1;
  RatMatrix rhs = (ones * An).transpose();
  auto sol = rational_solve(lhs, rhs);
  if (!sol)
    throw std::logic_error("delta_order_unit: projection system inconsistent");
  RatMatrix u = (sol->particular.transpose() * W);
  std::optional<std::size_t> l = find_certificate(u, A.matrix(), n);
  if (!l) throw std::logic_error("delta_order_unit: no certificate below |A|");
  return DeltaElement{A, u, *l};
}

DeltaElement apply_R_delta(const DeltaElement& d, const IntMatrix& R,
                           const EssentialMatrix& B) {
  if (R.rows() != d.mat.size() || R.cols() != B.size())
    throw DimensionError("apply_R_delta: intertwiner must be " +
                         std::to_string(d.mat.size()) + "x" + std::to_string(B.size()));
  if (d.mat.matrix() * R != R * B.matrix())
    throw DomainError("apply_R_delta: A R != R B, matrix does not intertwine");
  RatMatrix moved = d.v * RatMatrix(R);
  // v R B^j = v A^j R, so the old certificate still works; take the least one.
  std::optional<std::size_t> l = find_certificate(moved, B.matrix(), d.certificate);
  if (!l) throw std::logic_error("apply_R_delta: certificate did not transfer");
  return DeltaElement{B, moved, *l};
}

}  // namespace shifteq
