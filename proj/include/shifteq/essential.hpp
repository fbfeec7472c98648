#ifndef SHIFTEQ_ESSENTIAL_HPP
#define SHIFTEQ_ESSENTIAL_HPP

#include "shifteq/int_matrix.hpp"

namespace shifteq {

// Thrown when input data violates a domain-side requirement (negative entry,
// zero row, malformed witness file, ...) rather than a shape mismatch.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A square nonnegative integer matrix in which every row has a positive
// entry.  Read as a graph: every vertex emits at least one edge, so powers
// never lose rows and the associated dynamical constructions are defined.
class EssentialMatrix {
 public:
  explicit EssentialMatrix(IntMatrix a);

  const IntMatrix& matrix() const { return a_; }
  std::size_t size() const { return a_.rows(); }

  // (A^t)^k; the transpose shows up in everything class-shaped because
  // classes are column vectors acted on from the left.
  IntMatrix transpose_power(std::size_t k) const { return a_.transpose().pow(k); }
  IntMatrix power(std::size_t k) const { return a_.pow(k); }

  friend bool operator==(const EssentialMatrix& x, const EssentialMatrix& y) {
    return x.a_ == y.a_;
  }
  friend bool operator!=(const EssentialMatrix& x, const EssentialMatrix& y) {
    return !(x == y);
  }

 private:
  IntMatrix a_;
};

}  // namespace shifteq

#endif
