#include "hessk3/matrix.hpp"

namespace hessk3 {

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

IntMat to_int(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1)
        throw std::domain_error("to_int: non-integral entry " + to_string(m(i, j)));
      r(i, j) = num(m(i, j));
    }
  return r;
}

std::pair<Int, IntMat> clear_denominators(const RatMat& m) {
  Int d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int dd = den(m(i, j));
      Int g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), dd.get_mpz_t());
      d = d / g * dd;
    }
  IntMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat v = m(i, j) * Rat(d);
      r(i, j) = num(v);
    }
  return {d, r};
}

template <class T>
static Mat<T> vstack_impl(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw std::invalid_argument("vstack: column mismatch");
  std::size_t cols = a.rows() ? a.cols() : b.cols();
  Mat<T> r(a.rows() + b.rows(), cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

IntMat vstack(const IntMat& a, const IntMat& b) { return vstack_impl(a, b); }
RatMat vstack(const RatMat& a, const RatMat& b) { return vstack_impl(a, b); }

std::vector<Rat> row_times_mat(const std::vector<Rat>& v, const RatMat& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("row_times_mat: size mismatch");
  std::vector<Rat> r(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (is_zero(v[i])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

std::vector<Rat> mat_times_col(const RatMat& m, const std::vector<Rat>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_times_col: size mismatch");
  std::vector<Rat> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(v[j])) r[i] += m(i, j) * v[j];
  return r;
}

std::vector<Rat> to_rat(const std::vector<Int>& v) {
  std::vector<Rat> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace hessk3
