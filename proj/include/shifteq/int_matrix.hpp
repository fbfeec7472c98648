#ifndef SHIFTEQ_INT_MATRIX_HPP
#define SHIFTEQ_INT_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace shifteq {

using BigInt = boost::multiprecision::cpp_int;

// Thrown when two operands have incompatible shapes, or an index is out of
// range.  The message names the operation and both shapes.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Dense row-major matrix over arbitrary-precision integers.  Matrices always
// have at least one row and one column; vectors are 1xN or Nx1 matrices.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix row_vector(std::vector<BigInt> entries);
  static IntMatrix column_vector(std::vector<BigInt> entries);
  // All-ones column vector, the standard order unit numerator.
  static IntMatrix ones_column(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j);
  const BigInt& operator()(std::size_t i, std::size_t j) const;

  IntMatrix transpose() const;
  // A^k by repeated squaring; requires a square matrix.  A^0 is the identity.
  IntMatrix pow(std::size_t k) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_nonnegative() const;
  // True if every row contains a positive entry (no sinks when read as the
  // adjacency matrix of a graph).
  bool has_no_zero_row() const;

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const BigInt& c, const IntMatrix& a);
  IntMatrix operator-() const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  // Strict entry-wise lexicographic order on (rows, cols, entries); used to
  // make search enumeration order reproducible.
  friend bool lex_less(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> data_;

  void check_index(std::size_t i, std::size_t j) const;
};

}  // namespace shifteq

#endif
