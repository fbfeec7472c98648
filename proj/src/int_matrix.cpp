#include "shifteq/int_matrix.hpp"

#include <sstream>

namespace shifteq {

namespace {

std::string shape(const IntMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0)
    throw DimensionError("IntMatrix: dimensions must be positive, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0)
    throw DimensionError("IntMatrix: dimensions must be positive");
  if (data_.size() != rows * cols)
    throw DimensionError("IntMatrix: got " + std::to_string(data_.size()) +
                         " entries for a " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " matrix");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0)
    throw DimensionError("IntMatrix: dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw DimensionError("IntMatrix: ragged initializer rows");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::row_vector(std::vector<BigInt> entries) {
  std::size_t n = entries.size();
  return IntMatrix(1, n, std::move(entries));
}

IntMatrix IntMatrix::column_vector(std::vector<BigInt> entries) {
  std::size_t n = entries.size();
  return IntMatrix(n, 1, std::move(entries));
}

IntMatrix IntMatrix::ones_column(std::size_t n) {
  IntMatrix m(n, 1);
  for (std::size_t i = 0; i < n; ++i) m(i, 0) = 1;
  return m;
}

void IntMatrix::check_index(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw DimensionError("IntMatrix: index (" + std::to_string(i) + "," +
                         std::to_string(j) + ") outside " + shape(*this));
}

BigInt& IntMatrix::operator()(std::size_t i, std::size_t j) {
  check_index(i, j);
  return data_[i * cols_ + j];
}

const BigInt& IntMatrix::operator()(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return data_[i * cols_ + j];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::pow(std::size_t k) const {
  if (!is_square())
    throw DimensionError("pow: matrix is " + shape(*this) + ", not square");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_nonnegative() const {
  for (const auto& x : data_)
    if (x < 0) return false;
  return true;
}

bool IntMatrix::has_no_zero_row() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < cols_ && !nonzero; ++j)
      if ((*this)(i, j) != 0) nonzero = true;
    if (!nonzero) return false;
  }
  return true;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("add: " + shape(a) + " vs " + shape(b));
  IntMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("subtract: " + shape(a) + " vs " + shape(b));
  IntMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("multiply: " + shape(a) + " times " + shape(b));
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator*(const BigInt& c, const IntMatrix& a) {
  IntMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = c * a.data_[i];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
  return r;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (a.data_[i] != b.data_[i]) return a.data_[i] < b.data_[i];
  return false;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) {
      out << (*this)(i, j);
      if (j + 1 < cols_) out << " ";
    }
    out << (i + 1 < rows_ ? "\n" : "]");
  }
  return out.str();
}

}  // namespace shifteq
