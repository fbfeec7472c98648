#include "shifteq/dimension_group.hpp"

namespace shifteq {

DimClass::DimClass(EssentialMatrix m, IntMatrix vec, std::size_t stage)
    : mat(std::move(m)), v(std::move(vec)), k(stage) {
  if (v.cols() != 1 || v.rows() != mat.size())
    throw DimensionError("DimClass: representative must be a column of length " +
                         std::to_string(mat.size()));
}

DimClass zero_class(const EssentialMatrix& A) {
  return DimClass(A, IntMatrix(A.size(), 1), 0);
}

DimClass order_unit(const EssentialMatrix& A) {
  return DimClass(A, IntMatrix::ones_column(A.size()), 0);
}

namespace {

void require_same_group(const DimClass& a, const DimClass& b, const char* op) {
  if (a.mat != b.mat)
    throw DomainError(std::string(op) + ": classes live over different matrices");
}

}  // namespace

bool dim_equal(const DimClass& a, const DimClass& b) {
  require_same_group(a, b, "dim_equal");
  const std::size_t M = a.k > b.k ? a.k : b.k;
  IntMatrix d = a.mat.transpose_power(M - a.k) * a.v -
                a.mat.transpose_power(M - b.k) * b.v;
  return (a.mat.transpose_power(a.mat.size()) * d).is_zero();
}

DimClass dim_add(const DimClass& a, const DimClass& b) {
  require_same_group(a, b, "dim_add");
  IntMatrix v = a.mat.transpose_power(b.k) * a.v + a.mat.transpose_power(a.k) * b.v;
  return DimClass(a.mat, std::move(v), a.k + b.k);
}

DimClass x_action(const DimClass& a, std::int64_t power) {
  if (power >= 0)
    return DimClass(a.mat, a.mat.transpose_power(static_cast<std::size_t>(power)) * a.v,
                    a.k);
  return DimClass(a.mat, a.v, a.k + static_cast<std::size_t>(-power));
}

std::size_t default_cone_bound(const EssentialMatrix& A) { return 50 * A.size(); }

ConeResult in_positive_cone(const DimClass& a, std::size_t max_power) {
  if (max_power == 0) max_power = default_cone_bound(a.mat);
  IntMatrix w = a.v;
  IntMatrix At = a.mat.matrix().transpose();
  for (std::size_t p = 0; p <= max_power; ++p) {
    if (w.is_nonnegative()) return {ConeStatus::InCone, p};
    w = At * w;
  }
  return {ConeStatus::Unknown, max_power};
}

DimClass apply_Rt_G(const DimClass& a, const IntMatrix& R, const EssentialMatrix& B) {
  if (R.rows() != a.mat.size() || R.cols() != B.size())
    throw DimensionError("apply_Rt_G: intertwiner must be " +
                         std::to_string(a.mat.size()) + "x" + std::to_string(B.size()));
  if (a.mat.matrix() * R != R * B.matrix())
    throw DomainError("apply_Rt_G: A R != R B, matrix does not intertwine");
  return DimClass(B, R.transpose() * a.v, a.k);
}

}  // namespace shifteq
