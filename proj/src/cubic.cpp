#include "hessk3/cubic.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hessk3 {

namespace {

// Smallest common field of a and b; only Q-to-extension widening is allowed.
CoeffField unify_fields(const CoeffField& a, const CoeffField& b) {
  if (a == b) return a;
  if (a.is_rationals()) return b;
  if (b.is_rationals()) return a;
  throw std::invalid_argument("cubic: incompatible coefficient fields");
}

CoeffField::Elem widen_elem(const CoeffField& src, const CoeffField& dst,
                            const CoeffField::Elem& e) {
  if (src == dst) return e;
  if (!src.is_rationals())
    throw std::invalid_argument("cubic: can only widen rational coefficients");
  return dst.from_rational(src.rational_value(e));
}

CoeffField::Elem field_det(const std::vector<std::vector<CoeffField::Elem>>& m,
                           const CoeffField& f) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  CoeffField::Elem total = f.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (f.is_zero(m[0][j])) continue;
    std::vector<std::vector<CoeffField::Elem>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<CoeffField::Elem> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    CoeffField::Elem cof = f.mul(m[0][j], field_det(minor, f));
    total = (j % 2 == 0) ? f.add(total, cof) : f.sub(total, cof);
  }
  return total;
}

std::vector<std::vector<CoeffField::Elem>> field_mat_mul(
    const std::vector<std::vector<CoeffField::Elem>>& a,
    const std::vector<std::vector<CoeffField::Elem>>& b, const CoeffField& f) {
  const std::size_t n = a.size();
  std::vector<std::vector<CoeffField::Elem>> out(
      n, std::vector<CoeffField::Elem>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (f.is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j)
        out[i][j] = f.add(out[i][j], f.mul(a[i][k], b[k][j]));
    }
  return out;
}

bool is_scalar_matrix(const std::vector<std::vector<CoeffField::Elem>>& m,
                      const CoeffField& f) {
  const std::size_t n = m.size();
  if (f.is_zero(m[0][0])) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j ? !f.is_zero(f.sub(m[i][j], m[0][0])) : !f.is_zero(m[i][j]))
        return false;
    }
  return true;
}

void check_square_4(const std::vector<std::vector<CoeffField::Elem>>& m) {
  if (m.size() != 4) throw std::invalid_argument("cubic: matrix must be 4x4");
  for (const auto& row : m)
    if (row.size() != 4) throw std::invalid_argument("cubic: matrix must be 4x4");
}

}  // namespace

const std::vector<std::string>& cubic_vars() {
  static const std::vector<std::string> v = {"x0", "x1", "x2", "x3"};
  return v;
}

const std::vector<std::string>& sylvester_vars() {
  static const std::vector<std::string> v = {"x0", "x1", "x2", "x3", "x4"};
  return v;
}

SylvesterSurface::SylvesterSurface(CoeffField f, std::vector<CoeffField::Elem> l)
    : field(std::move(f)), lambda(std::move(l)) {
  if (lambda.size() != 5)
    throw std::invalid_argument("SylvesterSurface: expected 5 coefficients");
  bool all_zero = true;
  for (const auto& e : lambda)
    if (!field.is_zero(e)) all_zero = false;
  if (all_zero)
    throw std::invalid_argument("SylvesterSurface: coefficients must not all vanish");
}

SylvesterSurface SylvesterSurface::rational(const std::vector<Rat>& l) {
  CoeffField q = CoeffField::rationals();
  std::vector<CoeffField::Elem> elems;
  elems.reserve(l.size());
  for (const Rat& r : l) elems.push_back(q.from_rational(r));
  return SylvesterSurface(std::move(q), std::move(elems));
}

CubicForm::CubicForm(MultiPoly f) : form_(std::move(f)) {
  if (form_.vars() != cubic_vars())
    throw std::invalid_argument("CubicForm: variables must be x0,x1,x2,x3");
  if (form_.is_zero()) throw std::invalid_argument("CubicForm: form is zero");
  for (const auto& [exps, coeff] : form_.terms()) {
    int deg = 0;
    for (int e : exps) deg += e;
    if (deg != 3)
      throw std::invalid_argument("CubicForm: form is not homogeneous of degree 3");
  }
}

CubicForm sylvester_to_cubic(const SylvesterSurface& s) {
  const CoeffField& f = s.field;
  std::vector<MultiPoly> x;
  for (const auto& name : cubic_vars())
    x.push_back(MultiPoly::variable(f, cubic_vars(), name));
  MultiPoly x4 = -(x[0] + x[1] + x[2] + x[3]);
  MultiPoly total = MultiPoly::zero(f, cubic_vars());
  for (std::size_t i = 0; i < 4; ++i) total = total + x[i].pow(3).scaled(s.lambda[i]);
  total = total + x4.pow(3).scaled(s.lambda[4]);
  return CubicForm(std::move(total));
}

std::optional<MultiPoly> hessian_form(const CubicForm& f) {
  std::vector<std::vector<MultiPoly>> h(4);
  std::vector<MultiPoly> grad;
  for (const auto& name : cubic_vars()) grad.push_back(f.poly().derivative(name));
  for (std::size_t i = 0; i < 4; ++i)
    for (const auto& name : cubic_vars()) h[i].push_back(grad[i].derivative(name));
  MultiPoly det = det_poly_matrix(h);
  if (det.is_zero()) return std::nullopt;
  return det;
}

MultiPoly hessian_sylvester_closed(const SylvesterSurface& s) {
  const CoeffField& f = s.field;
  std::vector<MultiPoly> x;
  for (const auto& name : cubic_vars())
    x.push_back(MultiPoly::variable(f, cubic_vars(), name));
  x.push_back(-(x[0] + x[1] + x[2] + x[3]));  // x4 eliminated
  MultiPoly total = MultiPoly::zero(f, cubic_vars());
  for (std::size_t i = 0; i < 5; ++i) {
    CoeffField::Elem mu = f.one();
    for (std::size_t j = 0; j < 5; ++j)
      if (j != i) mu = f.mul(mu, s.lambda[j]);
    MultiPoly prod = MultiPoly::constant(f, cubic_vars(), Rat(1));
    for (std::size_t j = 0; j < 5; ++j)
      if (j != i) prod = prod * x[j];
    total = total + prod.scaled(mu);
  }
  return total;
}

namespace {

const std::vector<std::string>& symbolic_vars() {
  static const std::vector<std::string> v = {"l0", "l1", "l2", "l3", "l4",
                                             "x0", "x1", "x2", "x3"};
  return v;
}

}  // namespace

MultiPoly hessian_det_symbolic() {
  CoeffField q = CoeffField::rationals();
  std::vector<MultiPoly> l, x;
  for (int i = 0; i < 5; ++i)
    l.push_back(MultiPoly::variable(q, symbolic_vars(), "l" + std::to_string(i)));
  for (int i = 0; i < 4; ++i)
    x.push_back(MultiPoly::variable(q, symbolic_vars(), "x" + std::to_string(i)));
  MultiPoly x4 = -(x[0] + x[1] + x[2] + x[3]);
  MultiPoly form = l[4] * x4.pow(3);
  for (int i = 0; i < 4; ++i) form = form + l[i] * x[i].pow(3);
  std::vector<std::vector<MultiPoly>> h(4);
  for (int i = 0; i < 4; ++i) {
    MultiPoly di = form.derivative("x" + std::to_string(i));
    for (int j = 0; j < 4; ++j) h[i].push_back(di.derivative("x" + std::to_string(j)));
  }
  return det_poly_matrix(h);
}

MultiPoly hessian_closed_symbolic() {
  CoeffField q = CoeffField::rationals();
  std::vector<MultiPoly> l, x;
  for (int i = 0; i < 5; ++i)
    l.push_back(MultiPoly::variable(q, symbolic_vars(), "l" + std::to_string(i)));
  for (int i = 0; i < 4; ++i)
    x.push_back(MultiPoly::variable(q, symbolic_vars(), "x" + std::to_string(i)));
  x.push_back(-(x[0] + x[1] + x[2] + x[3]));
  MultiPoly total = MultiPoly::zero(q, symbolic_vars());
  for (int i = 0; i < 5; ++i) {
    MultiPoly prod = MultiPoly::constant(q, symbolic_vars(), Rat(1));
    for (int j = 0; j < 5; ++j)
      if (j != i) prod = prod * l[j] * x[j];
    total = total + prod;
  }
  return total;
}

namespace {

// The sign product, halved into a polynomial in the five mu_i.
const MultiPoly& disc32_mu_poly() {
  static const MultiPoly cached = [] {
    CoeffField q = CoeffField::rationals();
    const std::vector<std::string> svars = {"s0", "s1", "s2", "s3", "s4"};
    std::vector<MultiPoly> s;
    for (const auto& name : svars) s.push_back(MultiPoly::variable(q, svars, name));
    MultiPoly prod = MultiPoly::constant(q, svars, Rat(1));
    for (int mask = 0; mask < 16; ++mask) {
      MultiPoly lin = s[0];
      for (int i = 1; i <= 4; ++i)
        lin = (mask & (1 << (i - 1))) ? lin + s[i] : lin - s[i];
      prod = prod * lin;
    }
    const std::vector<std::string> mvars = {"m0", "m1", "m2", "m3", "m4"};
    MultiPoly out = MultiPoly::zero(q, mvars);
    for (const auto& [exps, coeff] : prod.terms()) {
      std::vector<int> half(5);
      for (int i = 0; i < 5; ++i) {
        if (exps[i] % 2 != 0)
          throw std::logic_error("disc32: sign product has an odd exponent");
        half[i] = exps[i] / 2;
      }
      out.add_term(std::move(half), coeff);
    }
    return out;
  }();
  return cached;
}

}  // namespace

CoeffField::Elem disc32(const SylvesterSurface& s) {
  const CoeffField& f = s.field;
  std::map<std::string, CoeffField::Elem> point;
  for (std::size_t i = 0; i < 5; ++i) {
    CoeffField::Elem mu = f.one();
    for (std::size_t j = 0; j < 5; ++j)
      if (j != i) mu = f.mul(mu, s.lambda[j]);
    point["m" + std::to_string(i)] = std::move(mu);
  }
  return disc32_mu_poly().with_field(f).evaluate(point);
}

MultiPoly disc32_symbolic() {
  CoeffField q = CoeffField::rationals();
  const std::vector<std::string> lvars = {"l0", "l1", "l2", "l3", "l4"};
  std::vector<MultiPoly> l;
  for (const auto& name : lvars) l.push_back(MultiPoly::variable(q, lvars, name));
  std::map<std::string, MultiPoly> mu;
  for (int i = 0; i < 5; ++i) {
    MultiPoly prod = MultiPoly::constant(q, lvars, Rat(1));
    for (int j = 0; j < 5; ++j)
      if (j != i) prod = prod * l[j];
    mu["m" + std::to_string(i)] = std::move(prod);
  }
  return disc32_mu_poly().substitute(mu);
}

bool singular_at(const CubicForm& f, const std::vector<CoeffField::Elem>& point) {
  const CoeffField& fld = f.field();
  std::vector<CoeffField::Elem> affine;
  if (point.size() == 5) {
    CoeffField::Elem sum = fld.zero();
    for (const auto& c : point) sum = fld.add(sum, c);
    if (!fld.is_zero(sum))
      throw std::invalid_argument(
          "singular_at: Sylvester coordinates must sum to zero");
    affine.assign(point.begin(), point.begin() + 4);
  } else if (point.size() == 4) {
    affine = point;
  } else {
    throw std::invalid_argument("singular_at: expected 4 or 5 coordinates");
  }
  bool all_zero = true;
  for (const auto& c : affine)
    if (!fld.is_zero(c)) all_zero = false;
  if (all_zero)
    throw std::invalid_argument("singular_at: point coordinates all vanish");
  std::map<std::string, CoeffField::Elem> at;
  for (std::size_t i = 0; i < 4; ++i) at[cubic_vars()[i]] = affine[i];
  if (!fld.is_zero(f.poly().evaluate(at))) return false;
  for (const auto& name : cubic_vars())
    if (!fld.is_zero(f.poly().derivative(name).evaluate(at))) return false;
  return true;
}

EckardtData eckardt_data(const SylvesterSurface& s) {
  const CoeffField& f = s.field;
  for (const auto& e : s.lambda)
    if (f.is_zero(e))
      throw std::invalid_argument("eckardt_data: requires all coefficients nonzero");

  EckardtData data;
  data.count = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (!f.is_zero(f.sub(s.lambda[i], s.lambda[j]))) continue;
      ++data.count;

      EckardtPoint pt;
      pt.i = i;
      pt.j = j;
      std::size_t pos = 0;
      for (std::size_t t = 0; t < 5; ++t)
        if (t != i && t != j) pt.klm[pos++] = t;
      pt.vertex.assign(5, f.zero());
      pt.vertex[i] = f.one();
      pt.vertex[j] = f.neg(f.one());

      const auto [k, l, m] = pt.klm;
      auto xv = [&](std::size_t t) {
        return MultiPoly::variable(f, sylvester_vars(), "x" + std::to_string(t));
      };
      pt.plane = xv(k) + xv(l) + xv(m);
      const CoeffField::Elem lk = s.lambda[k], ll = s.lambda[l], lm = s.lambda[m];
      pt.conic = (xv(k) * xv(l)).scaled(f.mul(lk, ll)) +
                 (xv(k) * xv(m)).scaled(f.mul(lk, lm)) +
                 (xv(l) * xv(m)).scaled(f.mul(ll, lm));

      // Eliminate x_m via the plane: the conic restricts to
      //   A x_k^2 + B x_k x_l + C x_l^2,
      // which splits over the field generated by sqrt(B^2 - 4AC).
      const CoeffField::Elem a = f.neg(f.mul(lk, lm));
      const CoeffField::Elem b =
          f.sub(f.sub(f.mul(lk, ll), f.mul(lk, lm)), f.mul(ll, lm));
      const CoeffField::Elem c = f.neg(f.mul(ll, lm));
      const CoeffField::Elem disc =
          f.sub(f.mul(b, b), f.mul(f.from_rational(Rat(4)), f.mul(a, c)));

      CoeffField split = f;
      CoeffField::Elem sqrt_disc;
      if (f.is_rationals()) {
        Rat d = f.rational_value(disc);
        Rat root;
        if (rat_is_square(d, &root)) {
          sqrt_disc = f.from_rational(root);
        } else {
          split = CoeffField::extension("r", {-d, Rat(0), Rat(1)});  // r^2 = d
          sqrt_disc = split.gen();
        }
      } else {
        throw std::invalid_argument(
            "eckardt_data: new-line splitting requires rational coefficients");
      }

      const CoeffField::Elem a_s = widen_elem(f, split, a);
      const CoeffField::Elem b_s = widen_elem(f, split, b);
      const CoeffField::Elem two_a = split.add(a_s, a_s);
      const CoeffField::Elem root_plus =
          split.div(split.add(split.neg(b_s), sqrt_disc), two_a);
      const CoeffField::Elem root_minus =
          split.div(split.sub(split.neg(b_s), sqrt_disc), two_a);

      auto xs = [&](std::size_t t) {
        return MultiPoly::variable(split, sylvester_vars(), "x" + std::to_string(t));
      };
      pt.split_field = split;
      pt.lead = a_s;
      pt.line_plus = xs(k) - xs(l).scaled(root_plus);
      pt.line_minus = xs(k) - xs(l).scaled(root_minus);

      // Postcondition: conic == lead * line_plus * line_minus modulo the plane.
      std::map<std::string, MultiPoly> elim;
      elim["x" + std::to_string(m)] = -(xs(k) + xs(l));
      MultiPoly restricted = pt.conic.with_field(split).substitute(elim);
      MultiPoly split_product = (pt.line_plus * pt.line_minus).scaled(pt.lead);
      if (restricted != split_product)
        throw std::logic_error("eckardt_data: line splitting failed to certify");

      data.points.push_back(std::move(pt));
    }
  return data;
}

bool is_automorphism(const CubicForm& f, const CoeffField& mfield,
                     const std::vector<std::vector<CoeffField::Elem>>& m) {
  check_square_4(m);
  const CoeffField common = unify_fields(f.field(), mfield);
  std::vector<std::vector<CoeffField::Elem>> mw(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      mw[i].push_back(widen_elem(mfield, common, m[i][j]));
  if (common.is_zero(field_det(mw, common)))
    throw std::invalid_argument("is_automorphism: matrix is singular");

  const MultiPoly base = f.poly().with_field(common);
  std::map<std::string, MultiPoly> images;
  for (std::size_t i = 0; i < 4; ++i) {
    MultiPoly img = MultiPoly::zero(common, cubic_vars());
    for (std::size_t j = 0; j < 4; ++j)
      img = img + MultiPoly::variable(common, cubic_vars(), cubic_vars()[j])
                      .scaled(mw[i][j]);
    images[cubic_vars()[i]] = std::move(img);
  }
  const MultiPoly composed = base.substitute(images);
  if (composed.is_zero()) return false;

  const auto lead = base.terms().begin();
  const auto match = composed.terms().find(lead->first);
  if (match == composed.terms().end()) return false;
  const CoeffField::Elem scalar = common.div(match->second, lead->second);
  if (common.is_zero(scalar)) return false;
  return composed == base.scaled(scalar);
}

std::optional<unsigned> projective_order(
    const std::vector<std::vector<CoeffField::Elem>>& m, const CoeffField& field,
    unsigned max_order) {
  check_square_4(m);
  if (field.is_zero(field_det(m, field)))
    throw std::invalid_argument("projective_order: matrix is singular");
  std::vector<std::vector<CoeffField::Elem>> power = m;
  for (unsigned n = 1; n <= max_order; ++n) {
    if (is_scalar_matrix(power, field)) return n;
    power = field_mat_mul(power, m, field);
  }
  return std::nullopt;
}

}  // namespace hessk3
