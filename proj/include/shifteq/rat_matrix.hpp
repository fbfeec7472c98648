#ifndef SHIFTEQ_RAT_MATRIX_HPP
#define SHIFTEQ_RAT_MATRIX_HPP

#include "shifteq/int_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace shifteq {

// cpp_rational keeps every value in lowest terms with a positive denominator,
// so rational entries need no separate normalisation step.
using BigRat = boost::multiprecision::cpp_rational;

class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<BigRat> entries);
  explicit RatMatrix(const IntMatrix& m);

  static RatMatrix identity(std::size_t n);
  static RatMatrix row_vector(std::vector<BigRat> entries);
  static RatMatrix column_vector(std::vector<BigRat> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigRat& operator()(std::size_t i, std::size_t j);
  const BigRat& operator()(std::size_t i, std::size_t j) const;

  RatMatrix transpose() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_integral() const;
  // Requires every entry to be an integer; throws DimensionError otherwise.
  IntMatrix to_int() const;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const BigRat& c, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<BigRat> data_;

  void check_index(std::size_t i, std::size_t j) const;
};

}  // namespace shifteq

#endif
