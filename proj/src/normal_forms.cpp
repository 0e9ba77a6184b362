#include "hessk3/normal_forms.hpp"

namespace hessk3 {

std::vector<Int> SnfResult::diagonal() const {
  std::size_t n = std::min(s.rows(), s.cols());
  std::vector<Int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = s(i, i);
  return d;
}

std::vector<Int> SnfResult::invariant_factors() const {
  std::vector<Int> out;
  for (const Int& d : diagonal())
    if (!is_zero(d)) out.push_back(d);
  return out;
}

HnfResult hnf(const IntMat& m) {
  HnfResult res;
  res.h = m;
  res.u = IntMat::identity(m.rows());
  IntMat& h = res.h;
  IntMat& u = res.u;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
    // Gcd-eliminate column `col` among rows >= pr.
    for (;;) {
      // Find the row with the smallest nonzero |entry| in this column.
      std::size_t best = m.rows();
      for (std::size_t i = pr; i < m.rows(); ++i) {
        if (is_zero(h(i, col))) continue;
        if (best == m.rows() || cmp_abs(h(i, col), h(best, col)) < 0) best = i;
      }
      if (best == m.rows()) break;  // column clear below pr
      if (best != pr) { h.swap_rows(pr, best); u.swap_rows(pr, best); }
      bool others = false;
      for (std::size_t i = pr + 1; i < m.rows(); ++i) {
        if (is_zero(h(i, col))) continue;
        Int q = floor_div(h(i, col), h(pr, col));
        if (!is_zero(q)) { h.add_row(i, pr, -q); u.add_row(i, pr, -q); }
        if (!is_zero(h(i, col))) others = true;
      }
      if (!others) break;
    }
    if (pr < m.rows() && !is_zero(h(pr, col))) {
      if (sgn(h(pr, col)) < 0) { h.negate_row(pr); u.negate_row(pr); }
      // Reduce the entries above the pivot into [0, pivot).
      for (std::size_t i = 0; i < pr; ++i) {
        Int q = floor_div(h(i, col), h(pr, col));
        if (!is_zero(q)) { h.add_row(i, pr, -q); u.add_row(i, pr, -q); }
      }
      ++pr;
    }
  }
  res.rank = pr;
  return res;
}

SnfResult snf(const IntMat& m) {
  SnfResult res;
  res.s = m;
  res.u = IntMat::identity(m.rows());
  res.v = IntMat::identity(m.cols());
  IntMat& s = res.s;
  IntMat& u = res.u;
  IntMat& v = res.v;
  std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
  restart:
    // Pivot: smallest nonzero absolute value in the trailing block, ties by
    // row-major position.
    std::size_t pi = m.rows(), pj = m.cols();
    for (std::size_t i = t; i < m.rows(); ++i)
      for (std::size_t j = t; j < m.cols(); ++j) {
        if (is_zero(s(i, j))) continue;
        if (pi == m.rows() || cmp_abs(s(i, j), s(pi, pj)) < 0) { pi = i; pj = j; }
      }
    if (pi == m.rows()) break;  // trailing block is zero
    if (pi != t) { s.swap_rows(t, pi); u.swap_rows(t, pi); }
    if (pj != t) { s.swap_cols(t, pj); v.swap_cols(t, pj); }
    if (sgn(s(t, t)) < 0) { s.negate_row(t); u.negate_row(t); }

    // Clear column t.
    for (std::size_t i = t + 1; i < m.rows(); ++i) {
      if (is_zero(s(i, t))) continue;
      Int q = floor_div(s(i, t), s(t, t));
      if (!is_zero(q)) { s.add_row(i, t, -q); u.add_row(i, t, -q); }
      if (!is_zero(s(i, t))) goto restart;  // remainder became the new pivot candidate
    }
    // Clear row t.
    for (std::size_t j = t + 1; j < m.cols(); ++j) {
      if (is_zero(s(t, j))) continue;
      Int q = floor_div(s(t, j), s(t, t));
      if (!is_zero(q)) { s.add_col(j, t, -q); v.add_col(j, t, -q); }
      if (!is_zero(s(t, j))) goto restart;
    }
    // Divisibility: every entry of the trailing block must be divisible by
    // the pivot; if not, fold the offending row into row t and redo.
    for (std::size_t i = t + 1; i < m.rows(); ++i)
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (is_zero(s(i, j))) continue;
        Int r;
        mpz_mod(r.get_mpz_t(), s(i, j).get_mpz_t(), s(t, t).get_mpz_t());
        if (!is_zero(r)) {
          s.add_row(t, i, Int(1));
          u.add_row(t, i, Int(1));
          goto restart;
        }
      }
  }
  return res;
}

// Bareiss fraction-free elimination; returns (echelon rank, det-if-square).
// Operates on a copy.
static std::pair<std::size_t, Int> bareiss(IntMat a) {
  std::size_t R = a.rows(), C = a.cols();
  Int denom = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i)
      if (!is_zero(a(i, c))) { piv = i; break; }
    if (piv == R) continue;
    if (piv != r) { a.swap_rows(piv, r); sign = -sign; }
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / denom;
      a(i, c) = 0;
    }
    denom = a(r, c);
    ++r;
  }
  Int d = 0;
  if (R == C) {
    if (r == R) {
      d = a(R - 1, C - 1);
      if (sign < 0) d = -d;
    }
  }
  return {r, d};
}

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  if (m.rows() == 0) return 1;
  return bareiss(m).second;
}

Rat det(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  if (m.rows() == 0) return 1;
  auto [d, num_mat] = clear_denominators(m);
  Int dn = det(num_mat);
  Rat scale(1);
  Rat dr(d);
  for (std::size_t i = 0; i < m.rows(); ++i) scale /= dr;
  return Rat(dn) * scale;
}

std::size_t rank(const IntMat& m) { return bareiss(m).first; }

std::size_t rank(const RatMat& m) {
  auto [d, num_mat] = clear_denominators(m);
  (void)d;
  return rank(num_mat);
}

IntMat kernel(const IntMat& m) {
  // Row-HNF the transpose with transform: rows of u paired with zero rows of
  // h are exactly the integer column-kernel of m, and they span all of it.
  HnfResult r = hnf(m.transpose());
  std::size_t k = m.cols() - r.rank;
  IntMat basis(k, m.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = r.u(r.rank + i, j);
  return hnf(basis).h.slice_rows(0, k);  // canonical presentation
}

std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_integer: rhs size mismatch");
  SnfResult f = snf(m);
  // m x = rhs  <=>  s y = u rhs with x = v y.
  std::vector<Int> c(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) c[i] += f.u(i, j) * rhs[j];
  std::vector<Int> y(m.cols());
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int si = (i < n) ? f.s(i, i) : Int(0);
    if (is_zero(si)) {
      if (!is_zero(c[i])) return std::nullopt;
    } else {
      Int q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c[i].get_mpz_t(), si.get_mpz_t());
      if (!is_zero(r)) return std::nullopt;
      y[i] = q;
    }
  }
  std::vector<Int> x(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(f.v(i, j)) && !is_zero(y[j])) x[i] += f.v(i, j) * y[j];
  return x;
}

RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  std::size_t n = m.rows();
  RatMat a = m;
  RatMat inv = RatMat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!is_zero(a(i, c))) { piv = i; break; }
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    if (piv != c) { a.swap_rows(piv, c); inv.swap_rows(piv, c); }
    Rat p = a(c, c);
    for (std::size_t j = 0; j < n; ++j) { a(c, j) /= p; inv(c, j) /= p; }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(a(i, c))) continue;
      Rat f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<Rat> solve_rational(const RatMat& m, const std::vector<Rat>& rhs) {
  return mat_times_col(inverse(m), rhs);
}

}  // namespace hessk3
