#include "shifteq/rat_matrix.hpp"

#include <sstream>

namespace shifteq {

namespace {

std::string shape(const RatMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0)
    throw DimensionError("RatMatrix: dimensions must be positive");
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<BigRat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0)
    throw DimensionError("RatMatrix: dimensions must be positive");
  if (data_.size() != rows * cols)
    throw DimensionError("RatMatrix: got " + std::to_string(data_.size()) +
                         " entries for a " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " matrix");
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
  data_.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) data_.emplace_back(m(i, j));
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::row_vector(std::vector<BigRat> entries) {
  std::size_t n = entries.size();
  return RatMatrix(1, n, std::move(entries));
}

RatMatrix RatMatrix::column_vector(std::vector<BigRat> entries) {
  std::size_t n = entries.size();
  return RatMatrix(n, 1, std::move(entries));
}

void RatMatrix::check_index(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw DimensionError("RatMatrix: index (" + std::to_string(i) + "," +
                         std::to_string(j) + ") outside " + shape(*this));
}

BigRat& RatMatrix::operator()(std::size_t i, std::size_t j) {
  check_index(i, j);
  return data_[i * cols_ + j];
}

const BigRat& RatMatrix::operator()(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return data_[i * cols_ + j];
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool RatMatrix::is_nonnegative() const {
  for (const auto& x : data_)
    if (x < 0) return false;
  return true;
}

bool RatMatrix::is_integral() const {
  for (const auto& x : data_)
    if (boost::multiprecision::denominator(x) != 1) return false;
  return true;
}

IntMatrix RatMatrix::to_int() const {
  if (!is_integral())
    throw DimensionError("to_int: matrix has non-integer entries");
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(i, j) = boost::multiprecision::numerator((*this)(i, j));
  return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("add: " + shape(a) + " vs " + shape(b));
  RatMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("subtract: " + shape(a) + " vs " + shape(b));
  RatMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("multiply: " + shape(a) + " times " + shape(b));
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigRat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatMatrix operator*(const BigRat& c, const RatMatrix& a) {
  RatMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = c * a.data_[i];
  return r;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RatMatrix::to_string() const {
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
