#pragma once

// Dense matrices over Z and Q with exact arithmetic. Row-major storage.
// These are small (rank <= ~60 throughout), so no attention is paid to
// asymptotics beyond fraction-free elimination for determinants.

#include "hessk3/numeric.hpp"

#include <cstddef>
#include <initializer_list>

namespace hessk3 {

template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Mat: ragged initializer");
      for (const auto& v : row) a_.push_back(v);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& v = (*this)(i, k);
        if (v == T(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat: dimension mismatch in sum");
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  Mat operator-() const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }

  Mat scaled(const T& c) const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != T(0)) return false;
    return true;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  void set_row(std::size_t i, const std::vector<T>& r) {
    if (r.size() != cols_) throw std::invalid_argument("Mat: row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  // Rows [r0, r1) as a new matrix.
  Mat slice_rows(std::size_t r0, std::size_t r1) const {
    Mat m(r1 - r0, cols_);
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i - r0, j) = (*this)(i, j);
    return m;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }
  // row(i) += c * row(j)
  void add_row(std::size_t i, std::size_t j, const T& c) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
  }
  void add_col(std::size_t i, std::size_t j, const T& c) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
  }
  void negate_col(std::size_t i) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) = -(*this)(k, i);
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

// Exact conversions.
RatMat to_rat(const IntMat& m);
// Throws if any entry has denominator != 1.
IntMat to_int(const RatMat& m);
// Smallest D > 0 with D*m integral, and the integral matrix D*m.
std::pair<Int, IntMat> clear_denominators(const RatMat& m);

// Stack a on top of b (same column count).
IntMat vstack(const IntMat& a, const IntMat& b);
RatMat vstack(const RatMat& a, const RatMat& b);

// Matrix-vector products (v as row vector: v * m, and m * v with v as column).
std::vector<Rat> row_times_mat(const std::vector<Rat>& v, const RatMat& m);
std::vector<Rat> mat_times_col(const RatMat& m, const std::vector<Rat>& v);
std::vector<Rat> to_rat(const std::vector<Int>& v);

}  // namespace hessk3
