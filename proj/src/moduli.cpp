#include "hessk3/moduli.hpp"

#include "hessk3/poly_json.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hessk3 {

namespace {

constexpr std::array<int, 5> kWeights{1, 2, 3, 4, 5};

Rat rat_pow(const Rat& a, int n) {
  Rat r = 1;
  for (int k = 0; k < n; ++k) r *= a;
  return r;
}

Rat make_rat(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// (I8, I16, I24, I32, I40) from (sigma1..sigma5).
std::array<Rat, 5> invariants_from_sigma(const std::array<Rat, 5>& s) {
  const Rat& s1 = s[0];
  const Rat& s2 = s[1];
  const Rat& s3 = s[2];
  const Rat& s4 = s[3];
  const Rat& s5 = s[4];
  return {s4 * s4 - 4 * s3 * s5, rat_pow(s5, 3) * s1, rat_pow(s5, 4) * s4,
          rat_pow(s5, 6) * s2, rat_pow(s5, 8)};
}

bool all_zero(const std::array<Rat, 5>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& r) { return sgn(r) == 0; });
}

const CoeffField& rationals() {
  static const CoeffField q = CoeffField::rationals();
  return q;
}

MultiPoly ivar(const std::string& name) {
  return MultiPoly::variable(rationals(), invariant_vars(), name);
}

// Sum over the k-subsets of `indices` of the product of the corresponding
// variables, in the given context.
MultiPoly elem_sym_poly(const std::vector<std::string>& vars,
                        const std::vector<std::size_t>& indices, int k,
                        int power_per_var = 1) {
  MultiPoly out = MultiPoly::zero(rationals(), vars);
  const std::size_t n = indices.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> e(vars.size(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) e[indices[i]] = power_per_var;
    out.add_term(std::move(e), rationals().one());
  }
  return out;
}

// Leading rational coefficient (graded-lex) of a nonzero polynomial over Q.
Rat leading_rational(const MultiPoly& p) {
  return p.field().rational_value(p.terms().begin()->second);
}

// Weighted degree when every term has the same one; nullopt otherwise.
std::optional<long> uniform_weighted_degree(const MultiPoly& p,
                                            const std::vector<long>& weights) {
  std::optional<long> deg;
  for (const auto& [e, c] : p.terms()) {
    long w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * weights[i];
    if (deg && *deg != w) return std::nullopt;
    deg = w;
  }
  return deg;
}

}  // namespace

// ---------------------------------------------------------------------------
// Weighted points and the basic invariants
// ---------------------------------------------------------------------------

WeightedPoint::WeightedPoint(WpsFlavor flavor, std::array<Rat, 5> coords)
    : flavor_(flavor), coords_(std::move(coords)) {
  if (all_zero(coords_))
    throw std::invalid_argument("weighted point: all coordinates are zero");
}

const std::array<int, 5>& WeightedPoint::weights() { return kWeights; }

WeightedPoint WeightedPoint::rescaled(const Rat& t) const {
  if (sgn(t) == 0)
    throw std::invalid_argument("weighted rescaling requires a nonzero scalar");
  std::array<Rat, 5> out;
  for (int i = 0; i < 5; ++i) out[i] = coords_[i] * rat_pow(t, kWeights[i]);
  return WeightedPoint(flavor_, std::move(out));
}

std::string WeightedPoint::to_string() const {
  std::string out = "(";
  for (int i = 0; i < 5; ++i) {
    if (i) out += " : ";
    out += hessk3::to_string(coords_[i]);
  }
  return out + ")";
}

std::array<Rat, 5> elementary_symmetric(const std::vector<Rat>& lambda) {
  if (lambda.size() != 5)
    throw std::invalid_argument("elementary_symmetric expects five coefficients");
  std::array<Rat, 6> e;
  e.fill(0);
  e[0] = 1;
  for (const Rat& l : lambda)
    for (int k = 5; k >= 1; --k) e[k] += e[k - 1] * l;
  return {e[1], e[2], e[3], e[4], e[5]};
}

WeightedPoint invariants_point(const std::vector<Rat>& lambda) {
  std::array<Rat, 5> I = invariants_from_sigma(elementary_symmetric(lambda));
  if (all_zero(I))
    throw std::invalid_argument(
        "invariants vanish identically (sigma4 = sigma5 = 0)");
  return WeightedPoint(WpsFlavor::invariant, std::move(I));
}

std::array<CoeffField::Elem, 5> invariants_field(
    const CoeffField& field, const std::vector<CoeffField::Elem>& lambda) {
  if (lambda.size() != 5)
    throw std::invalid_argument("invariants_field expects five coefficients");
  std::array<CoeffField::Elem, 6> e;
  e.fill(field.zero());
  e[0] = field.one();
  for (const auto& l : lambda)
    for (int k = 5; k >= 1; --k) e[k] = field.add(e[k], field.mul(e[k - 1], l));
  const auto& s1 = e[1];
  const auto& s2 = e[2];
  const auto& s3 = e[3];
  const auto& s4 = e[4];
  const auto& s5 = e[5];
  auto pw = [&](const CoeffField::Elem& a, unsigned long n) { return field.pow(a, n); };
  CoeffField::Elem four = field.from_rational(4);
  return {field.sub(field.mul(s4, s4), field.mul(four, field.mul(s3, s5))),
          field.mul(pw(s5, 3), s1), field.mul(pw(s5, 4), s4),
          field.mul(pw(s5, 6), s2), pw(s5, 8)};
}

WeightedPoint phi(const WeightedPoint& sigma_point) {
  if (sigma_point.flavor() != WpsFlavor::sigma)
    throw std::invalid_argument("phi expects a sigma-space point");
  const auto& s = sigma_point.coords();
  if (sgn(s[3]) == 0 && sgn(s[4]) == 0)
    throw std::invalid_argument("phi is undefined where sigma4 = sigma5 = 0");
  return WeightedPoint(WpsFlavor::invariant, invariants_from_sigma(s));
}

WeightedPoint psi(const WeightedPoint& invariant_point) {
  if (invariant_point.flavor() != WpsFlavor::invariant)
    throw std::invalid_argument("psi expects an invariant-space point");
  const auto& I = invariant_point.coords();
  if (sgn(I[1]) == 0 && sgn(I[2]) == 0 && sgn(I[3]) == 0 && sgn(I[4]) == 0)
    throw std::invalid_argument("psi is undefined at its base point (1:0:0:0:0)");
  return WeightedPoint(
      WpsFlavor::sigma,
      {I[1], I[3], (I[2] * I[2] - I[0] * I[4]) / 4, I[2] * I[4], I[4] * I[4]});
}

bool wps_equal(const WeightedPoint& p, const WeightedPoint& q) {
  if (p.flavor() != q.flavor())
    throw std::invalid_argument("wps_equal: points live in different spaces");
  const auto& a = p.coords();
  const auto& b = q.coords();
  for (int i = 0; i < 5; ++i)
    if ((sgn(a[i]) == 0) != (sgn(b[i]) == 0)) return false;
  for (int i = 0; i < 5; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = i + 1; j < 5; ++j) {
      if (sgn(a[j]) == 0) continue;
      int g = std::gcd(kWeights[i], kWeights[j]);
      int wi = kWeights[i] / g, wj = kWeights[j] / g;
      if (rat_pow(a[i], wj) * rat_pow(b[j], wi) !=
          rat_pow(b[i], wj) * rat_pow(a[j], wi))
        return false;
    }
  }
  return true;
}

bool wps_equal_symbolic(const std::array<MultiPoly, 5>& p,
                        const std::array<MultiPoly, 5>& q) {
  auto nonzero = [](const std::array<MultiPoly, 5>& v) {
    return std::any_of(v.begin(), v.end(),
                       [](const MultiPoly& m) { return !m.is_zero(); });
  };
  if (!nonzero(p) || !nonzero(q))
    throw std::invalid_argument("wps_equal_symbolic: tuple is identically zero");
  for (int i = 0; i < 5; ++i)
    if (p[i].is_zero() != q[i].is_zero()) return false;
  for (int i = 0; i < 5; ++i) {
    if (p[i].is_zero()) continue;
    for (int j = i + 1; j < 5; ++j) {
      if (p[j].is_zero()) continue;
      int g = std::gcd(kWeights[i], kWeights[j]);
      unsigned long wi = kWeights[i] / g, wj = kWeights[j] / g;
      if (p[i].pow(wj) * q[j].pow(wi) != q[i].pow(wj) * p[j].pow(wi))
        return false;
    }
  }
  return true;
}

bool wps_is_singular(const WeightedPoint& p) {
  int g = 0;
  for (int i = 0; i < 5; ++i)
    if (sgn(p.coords()[i]) != 0) g = std::gcd(g, kWeights[i]);
  return g > 1;
}

// ---------------------------------------------------------------------------
// Divisors
// ---------------------------------------------------------------------------

DivisorFlags divisor_membership(const WeightedPoint& invariant_point) {
  if (invariant_point.flavor() != WpsFlavor::invariant)
    throw std::invalid_argument("divisor_membership expects an invariant-space point");
  const auto& I = invariant_point.coords();
  const Rat& i8 = I[0];
  const Rat& i16 = I[1];
  const Rat& i24 = I[2];
  const Rat& i32 = I[3];
  const Rat& i40 = I[4];
  Rat lhs = i8 * i8 - 64 * i16;
  Rat boundary = lhs * lhs - 16384 * i32 - 2048 * i8 * i24;
  Rat g = 16 * rat_pow(i16, 3) * i24 * i24 + 27 * rat_pow(i24, 4) -
          72 * i16 * i24 * i24 * i32 - 16 * i16 * i16 * i32 * i32 +
          64 * rat_pow(i32, 3);
  DivisorFlags out;
  out.boundary = sgn(boundary) == 0;
  out.kummer = sgn(i8 * i24 + 8 * i32) == 0;
  out.non_sylvester = sgn(i40) == 0;
  out.ns2_locus = sgn(i24) == 0 && sgn(i40) == 0;
  out.cyclic_locus = sgn(i24) == 0 && sgn(i32) == 0 && sgn(i40) == 0;
  out.fermat_point =
      sgn(i16) == 0 && sgn(i24) == 0 && sgn(i32) == 0 && sgn(i40) == 0;
  out.g_locus = sgn(g) == 0;
  return out;
}

const std::vector<std::string>& invariant_vars() {
  static const std::vector<std::string> v{"i8", "i16", "i24", "i32", "i40"};
  return v;
}

MultiPoly boundary_polynomial() {
  MultiPoly i8 = ivar("i8"), i16 = ivar("i16"), i24 = ivar("i24"), i32 = ivar("i32");
  MultiPoly lhs = i8 * i8 - i16.scaled(Rat(64));
  return lhs * lhs - i32.scaled(Rat(16384)) - (i8 * i24).scaled(Rat(2048));
}

MultiPoly kummer_polynomial() {
  return ivar("i8") * ivar("i24") + ivar("i32").scaled(Rat(8));
}

MultiPoly g_polynomial() {
  MultiPoly i16 = ivar("i16"), i24 = ivar("i24"), i32 = ivar("i32");
  return (i16.pow(3) * i24.pow(2)).scaled(Rat(16)) + i24.pow(4).scaled(Rat(27)) -
         (i16 * i24.pow(2) * i32).scaled(Rat(72)) -
         (i16.pow(2) * i32.pow(2)).scaled(Rat(16)) + i32.pow(3).scaled(Rat(64));
}

std::array<MultiPoly, 5> invariants_in_sigma() {
  static const std::vector<std::string> sv{"s1", "s2", "s3", "s4", "s5"};
  auto v = [&](const std::string& n) { return MultiPoly::variable(rationals(), sv, n); };
  MultiPoly s1 = v("s1"), s2 = v("s2"), s3 = v("s3"), s4 = v("s4"), s5 = v("s5");
  return {s4 * s4 - (s3 * s5).scaled(Rat(4)), s5.pow(3) * s1, s5.pow(4) * s4,
          s5.pow(6) * s2, s5.pow(8)};
}

std::array<MultiPoly, 5> invariants_in_lambda() {
  static const std::vector<std::string> lv{"l0", "l1", "l2", "l3", "l4"};
  std::map<std::string, MultiPoly> assign;
  for (int k = 1; k <= 5; ++k)
    assign["s" + std::to_string(k)] =
        elem_sym_poly(lv, {0, 1, 2, 3, 4}, k);
  std::array<MultiPoly, 5> in_sigma = invariants_in_sigma();
  std::array<MultiPoly, 5> out{MultiPoly(), MultiPoly(), MultiPoly(), MultiPoly(),
                               MultiPoly()};
  for (int n = 0; n < 5; ++n) out[n] = in_sigma[n].substitute(assign);
  return out;
}

// ---------------------------------------------------------------------------
// Tritangent polynomial
// ---------------------------------------------------------------------------

namespace {

// Validation shared by the fresh computation and the checkpoint path: the
// i40 = 0 factorization and the discriminant identity
// quotient_scale * f(invariants(lambda)) = sigma5^36 prod (li - lj)^2 at a
// sample pentahedron.
struct FactorCheck {
  Rat constant = 0;
  bool holds = false;
};

FactorCheck factorization_at_i40(const MultiPoly& f) {
  const auto& iv = invariant_vars();
  MultiPoly f0 = f.substitute({{"i40", MultiPoly::zero(rationals(), iv)}});
  MultiPoly rhs = ivar("i24").pow(3) *
                  (ivar("i8") * ivar("i24") + ivar("i32").scaled(Rat(8))) *
                  g_polynomial();
  FactorCheck out;
  if (f0.is_zero() || rhs.is_zero()) return out;
  Rat c = leading_rational(f0) / leading_rational(rhs);
  if (f0 == rhs.scaled(c)) {
    out.constant = c;
    out.holds = true;
  }
  return out;
}

bool discriminant_identity_sample(const MultiPoly& f, const Rat& scale) {
  const std::vector<Rat> lambda{1, 2, 3, 4, 5};
  std::array<Rat, 5> I = invariants_from_sigma(elementary_symmetric(lambda));
  std::map<std::string, Rat> at;
  for (int n = 0; n < 5; ++n) at[invariant_vars()[n]] = I[n];
  Rat value = f.field().rational_value(f.evaluate_rational(at));
  Rat disc = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j)
      disc *= (lambda[i] - lambda[j]) * (lambda[i] - lambda[j]);
  Rat sigma5 = elementary_symmetric(lambda)[4];
  return scale * value == rat_pow(sigma5, 36) * disc;
}

std::optional<TritangentPolynomial> load_tritangent_checkpoint(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    TritangentPolynomial t;
    t.f = poly_from_json(rationals(), invariant_vars(),
                         j.at("f"));
    t.quotient_scale = parse_rat(j.at("quotient_scale").get<std::string>());
    t.sigma_weight = j.at("sigma_weight").get<long>();
    t.pullback_weight = j.at("pullback_weight").get<long>();
    std::optional<long> fw =
        uniform_weighted_degree(t.f, {1, 2, 3, 4, 5});
    if (!fw) return std::nullopt;
    t.f_weight = 8 * *fw;
    FactorCheck fc = factorization_at_i40(t.f);
    if (!fc.holds) return std::nullopt;
    t.factor_constant = fc.constant;
    t.factorization_holds = true;
    if (!discriminant_identity_sample(t.f, t.quotient_scale)) return std::nullopt;
    t.weights_match_convention =
        t.sigma_weight == 20 && t.pullback_weight == 320 && t.f_weight == 200;
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

TritangentPolynomial compute_tritangent(const std::string& cache_dir) {
  std::string path;
  if (!cache_dir.empty()) {
    path = cache_dir + "/tritangent_f.json";
    if (auto cached = load_tritangent_checkpoint(path)) return *cached;
  }

  TritangentPolynomial t;
  const std::vector<std::string> dv{"x", "s1", "s2", "s3", "s4", "s5"};
  auto v = [&](const std::string& n) { return MultiPoly::variable(rationals(), dv, n); };
  MultiPoly x = v("x");
  MultiPoly quintic = x.pow(5) - v("s1") * x.pow(4) + v("s2") * x.pow(3) -
                      v("s3") * x.pow(2) + v("s4") * x - v("s5");
  MultiPoly disc = discriminant_univariate(quintic, "x");
  std::optional<long> dw = uniform_weighted_degree(disc, {0, 1, 2, 3, 4, 5});
  t.sigma_weight = dw.value_or(-1);

  const auto& iv = invariant_vars();
  MultiPoly i8 = ivar("i8"), i16 = ivar("i16"), i24 = ivar("i24"),
            i32 = ivar("i32"), i40 = ivar("i40");
  std::map<std::string, MultiPoly> psi_sub{
      {"x", MultiPoly::zero(rationals(), iv)},
      {"s1", i16},
      {"s2", i32},
      {"s3", (i24 * i24 - i8 * i40).scaled(Rat(1, 4))},
      {"s4", i24 * i40},
      {"s5", i40 * i40}};
  MultiPoly pullback = disc.substitute(psi_sub);
  std::optional<long> pw = uniform_weighted_degree(pullback, {1, 2, 3, 4, 5});
  t.pullback_weight = pw ? 8 * *pw : -1;

  MultiPoly quotient = exact_div(pullback, i40.pow(3));
  t.f = normalized_primitive(quotient);
  t.quotient_scale = leading_rational(quotient) / leading_rational(t.f);
  std::optional<long> fw = uniform_weighted_degree(t.f, {1, 2, 3, 4, 5});
  t.f_weight = fw ? 8 * *fw : -1;
  t.weights_match_convention =
      t.sigma_weight == 20 && t.pullback_weight == 320 && t.f_weight == 200;

  FactorCheck fc = factorization_at_i40(t.f);
  t.factor_constant = fc.constant;
  t.factorization_holds = fc.holds;

  if (!cache_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    nlohmann::json j;
    j["f"] = poly_to_json(t.f);
    j["quotient_scale"] = hessk3::to_string(t.quotient_scale);
    j["sigma_weight"] = t.sigma_weight;
    j["pullback_weight"] = t.pullback_weight;
    std::ofstream out(path);
    if (out) out << j.dump(1) << "\n";
  }
  return t;
}

const TritangentPolynomial& tritangent_polynomial() {
  static const TritangentPolynomial t = [] {
    const char* dir = std::getenv("HESSK3_CACHE_DIR");
    return compute_tritangent(dir ? dir : "");
  }();
  return t;
}

// ---------------------------------------------------------------------------
// Families and weighted limits
// ---------------------------------------------------------------------------

FamilySpec::FamilySpec(std::array<LaurentPoly, 5> l) : lambda_(std::move(l)) {
  for (const LaurentPoly& li : lambda_) {
    if (li.is_zero())
      throw std::invalid_argument(
          "family coefficient lambda_i must not be identically zero");
    if (li.field() != lambda_[0].field() || li.params() != lambda_[0].params())
      throw std::invalid_argument(
          "family coefficients must share one field and parameter context");
  }
}

FamilySpec specialize(const FamilySpec& fam, const std::map<std::string, Rat>& values) {
  if (!fam.field().is_rationals())
    throw std::invalid_argument("specialize expects a rational-coefficient family");
  std::array<LaurentPoly, 5> out{
      LaurentPoly::zero(rationals(), {}), LaurentPoly::zero(rationals(), {}),
      LaurentPoly::zero(rationals(), {}), LaurentPoly::zero(rationals(), {}),
      LaurentPoly::zero(rationals(), {})};
  for (int i = 0; i < 5; ++i) {
    LaurentPoly li = LaurentPoly::zero(rationals(), {});
    for (const auto& [exponent, coeff] : fam.lambda()[i].terms()) {
      std::map<std::string, Rat> point(values.begin(), values.end());
      Rat value = rationals().rational_value(coeff.evaluate_rational(point));
      if (sgn(value) == 0) continue;
      li = li + LaurentPoly::term(MultiPoly::constant(rationals(), {}, value),
                                  exponent);
    }
    if (li.is_zero())
      throw std::invalid_argument(
          "specialization degenerates lambda_" + std::to_string(i) + " to zero");
    out[i] = std::move(li);
  }
  return FamilySpec(std::move(out));
}

std::optional<WeightedPoint> WeightedLimit::point() const {
  std::array<Rat, 5> out;
  for (int i = 0; i < 5; ++i) {
    if (coords[i].is_zero()) {
      out[i] = 0;
      continue;
    }
    if (!coords[i].is_constant()) return std::nullopt;
    CoeffField::Elem c = coords[i].constant_value();
    if (!coords[i].field().is_rational_elem(c)) return std::nullopt;
    out[i] = coords[i].field().rational_value(c);
  }
  return WeightedPoint(WpsFlavor::invariant, std::move(out));
}

WeightedLimit weighted_limit_of_invariants(const std::array<LaurentPoly, 5>& inv) {
  bool any = false;
  for (const LaurentPoly& c : inv) any = any || !c.is_zero();
  if (!any)
    throw std::invalid_argument(
        "degenerate family: every invariant vanishes identically");

  Rat e;
  bool first = true;
  for (int n = 0; n < 5; ++n) {
    if (inv[n].is_zero()) continue;
    Rat cand = make_rat(-inv[n].valuation(), kWeights[n]);
    if (first || cand > e) e = cand;
    first = false;
  }

  Int d = 1;
  for (int n = 0; n < 5; ++n) {
    if (inv[n].is_zero()) continue;
    Rat s = e * kWeights[n];
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den(s).get_mpz_t());
  }
  long dl = d.get_si();

  WeightedLimit out;
  out.exponent = e;
  out.substitution_degree = dl;
  for (int n = 0; n < 5; ++n) {
    if (inv[n].is_zero()) {
      out.coords[n] = MultiPoly::zero(inv[n].field(), inv[n].params());
      continue;
    }
    Rat shift = e * kWeights[n] * dl;
    if (den(shift) != 1)
      throw std::logic_error("weighted limit: non-integral shift after clearing");
    out.coords[n] =
        inv[n].scale_exponents(dl).shifted(num(shift).get_si()).at_zero();
  }
  return out;
}

WeightedLimit weighted_limit(const FamilySpec& fam) {
  const CoeffField& field = fam.field();
  const auto& params = fam.params();
  std::array<LaurentPoly, 6> e{
      LaurentPoly::constant(field, params, Rat(1)), LaurentPoly::zero(field, params),
      LaurentPoly::zero(field, params),             LaurentPoly::zero(field, params),
      LaurentPoly::zero(field, params),             LaurentPoly::zero(field, params)};
  for (const LaurentPoly& l : fam.lambda())
    for (int k = 5; k >= 1; --k) e[k] = e[k] + e[k - 1] * l;
  const LaurentPoly& s1 = e[1];
  const LaurentPoly& s2 = e[2];
  const LaurentPoly& s3 = e[3];
  const LaurentPoly& s4 = e[4];
  const LaurentPoly& s5 = e[5];
  std::array<LaurentPoly, 5> inv{s4 * s4 - (s3 * s5).scaled(Rat(4)),
                                 s5.pow(3) * s1, s5.pow(4) * s4, s5.pow(6) * s2,
                                 s5.pow(8)};
  return weighted_limit_of_invariants(inv);
}

namespace {

LaurentPoly lau_term(const std::vector<std::string>& params,
                     std::vector<int> exponents, const Rat& coeff, long t_exp) {
  return LaurentPoly::term(
      MultiPoly::monomial(rationals(), params, std::move(exponents),
                          rationals().from_rational(coeff)),
      t_exp);
}

}  // namespace

FamilySpec ns1_family() {
  const std::vector<std::string> p{"a0", "a1", "a2", "a3"};
  return FamilySpec({lau_term(p, {1, 3, 3, 3}, 1, 0) + lau_term(p, {0, 3, 3, 3}, 1, -1),
                     lau_term(p, {0, 0, 3, 3}, 1, -3),
                     lau_term(p, {0, 3, 0, 3}, 1, -3),
                     lau_term(p, {0, 3, 3, 0}, 1, -3),
                     lau_term(p, {0, 3, 3, 3}, 1, -1)});
}

FamilySpec ns2_family() {
  const std::vector<std::string> p{"lam", "mu"};
  return FamilySpec(
      {lau_term(p, {0, 3}, 1, -2), lau_term(p, {0, 0}, 1, -6),
       lau_term(p, {0, 3}, 1, -6),
       lau_term(p, {1, 3}, Rat(1, 4), 0) + lau_term(p, {0, 3}, Rat(1, 4), -2),
       lau_term(p, {0, 3}, 1, -2)});
}

FamilySpec cyclic_family() {
  const std::vector<std::string> p{"c0", "c1", "c2", "c3", "c4"};
  return FamilySpec({lau_term(p, {1, 0, 0, 0, 0}, 1, 0),
                     lau_term(p, {0, 1, 0, 0, 0}, 1, 0),
                     lau_term(p, {0, 0, 1, 0, 0}, 1, 0),
                     lau_term(p, {0, 0, 0, 1, 0}, 1, 0),
                     lau_term(p, {0, 0, 0, 0, 1}, 1, -3)});
}

std::array<MultiPoly, 5> ns1_limit_expected() {
  const std::vector<std::string> p{"a0", "a1", "a2", "a3"};
  MultiPoly rho1 = elem_sym_poly(p, {1, 2, 3}, 1, 3);
  MultiPoly rho2 = elem_sym_poly(p, {1, 2, 3}, 2, 3);
  MultiPoly rho3 = elem_sym_poly(p, {1, 2, 3}, 3, 3);
  MultiPoly a0 = MultiPoly::variable(rationals(), p, "a0");
  return {rho1.scaled(Rat(-4)) + a0 * a0, rho2, rho3.scaled(Rat(2)), rho1 * rho3,
          MultiPoly::zero(rationals(), p)};
}

std::array<MultiPoly, 5> ns2_limit_expected() {
  const std::vector<std::string> p{"lam", "mu"};
  MultiPoly lam = MultiPoly::variable(rationals(), p, "lam");
  MultiPoly mu = MultiPoly::variable(rationals(), p, "mu");
  MultiPoly one = MultiPoly::constant(rationals(), p, Rat(1));
  return {lam.scaled(Rat(-8)), one + mu.pow(3), MultiPoly::zero(rationals(), p),
          mu.pow(3), MultiPoly::zero(rationals(), p)};
}

std::array<MultiPoly, 5> cyclic_limit_expected() {
  const std::vector<std::string> p{"c0", "c1", "c2", "c3", "c4"};
  MultiPoly tau2 = elem_sym_poly(p, {0, 1, 2, 3}, 2);
  MultiPoly tau3 = elem_sym_poly(p, {0, 1, 2, 3}, 3);
  MultiPoly tau4 = elem_sym_poly(p, {0, 1, 2, 3}, 4);
  return {tau3 * tau3 - (tau2 * tau4).scaled(Rat(4)), tau4.pow(3),
          MultiPoly::zero(rationals(), p), MultiPoly::zero(rationals(), p),
          MultiPoly::zero(rationals(), p)};
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

WeightedPoint ipt(const std::array<Rat, 5>& coords) {
  return WeightedPoint(WpsFlavor::invariant, coords);
}

Rat rq(const std::string& s) { return parse_rat(s); }

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e;
    e.name = "clebsch";
    e.description =
        "Clebsch diagonal surface, pentahedron (1,1,1,1,1): ten Eckardt "
        "points, smooth.";
    e.lambda = {1, 1, 1, 1, 1};
    e.point = ipt({-15, 5, 5, 10, 1});
    e.eckardt_count = 10;
    e.transcendental = "clebsch";
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "cayley";
    e.description =
        "Cayley surface, pentahedron (1,1,1,1,1/4): four nodes, six Eckardt "
        "points.";
    e.lambda = {1, 1, 1, 1, Rat(1, 4)};
    e.point = ipt({Rat(-3, 2), Rat(17, 256), Rat(1, 128), Rat(7, 4096), Rat(1, 65536)});
    e.eckardt_count = 6;
    e.nodes = {{1, 1, 1, -1, -2}, {1, 1, -1, 1, -2}, {1, -1, 1, 1, -2},
               {-1, 1, 1, 1, -2}};
    e.transcendental = "cayley";
    e.flags.boundary = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "x1n6";
    e.description =
        "Pentahedron (1,1,1,1,1/16): one node, six Eckardt points.";
    e.lambda = {1, 1, 1, 1, Rat(1, 16)};
    e.point = ipt({rq("15/32"), rq("65/65536"), rq("5/262144"), rq("25/67108864"),
                   rq("1/4294967296")});
    e.eckardt_count = 6;
    e.nodes = {{1, 1, 1, 1, -4}};
    e.transcendental = "x1n6";
    e.flags.boundary = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "x1n4";
    e.description =
        "Pentahedron (1,1,1,4/9,4/9): one node, four Eckardt points.";
    e.lambda = {1, 1, 1, Rat(4, 9), Rat(4, 9)};
    e.point = ipt({rq("-2560/2187"), rq("143360/4782969"), rq("2621440/1162261467"),
                   rq("7969177600/22876792454961"),
                   rq("4294967296/1853020188851841")});
    e.eckardt_count = 4;
    e.nodes = {{2, 2, 2, -3, -3}};
    e.transcendental = "x1n4";
    e.flags.boundary = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "x3n4";
    e.description =
        "Pentahedron (1,1,1,4,4): three nodes, four Eckardt points.";
    e.lambda = {1, 1, 1, 4, 4};
    e.point = ipt({-1536, 45056, 3670016, 721420288, rq("4294967296")});
    e.eckardt_count = 4;
    e.nodes = {{-2, 2, 2, -1, -1}, {2, -2, 2, -1, -1}, {2, 2, -2, -1, -1}};
    e.transcendental = "x3n4";
    e.flags.boundary = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "ns1";
    e.description =
        "Generic degeneration onto the I40 = 0 divisor; sample parameters "
        "a = (1,1,2,3).";
    e.family = ns1_family();
    std::array<MultiPoly, 5> lim = ns1_limit_expected();
    e.limit.assign(lim.begin(), lim.end());
    e.sample_params = {{"a0", 1}, {"a1", 1}, {"a2", 2}, {"a3", 3}};
    e.point = ipt({-143, 251, 432, 7776, 0});
    e.transcendental = "ns1_cube";
    e.flags.non_sylvester = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "ns2";
    e.description =
        "Degeneration onto I24 = I40 = 0; sample parameters (lam, mu) = (2, 3).";
    e.family = ns2_family();
    std::array<MultiPoly, 5> lim = ns2_limit_expected();
    e.limit.assign(lim.begin(), lim.end());
    e.sample_params = {{"lam", 2}, {"mu", 3}};
    e.point = ipt({-16, 28, 0, 27, 0});
    e.transcendental = "ns2_square";
    e.flags.non_sylvester = true;
    e.flags.ns2_locus = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "cyclic";
    e.description =
        "Cyclic-cover degeneration onto I24 = I32 = I40 = 0; sample "
        "parameters c = (1,2,3,4,5).";
    e.family = cyclic_family();
    std::array<MultiPoly, 5> lim = cyclic_limit_expected();
    e.limit.assign(lim.begin(), lim.end());
    e.sample_params = {{"c0", 1}, {"c1", 2}, {"c2", 3}, {"c3", 4}, {"c4", 5}};
    e.point = ipt({-860, 13824, 0, 0, 0});
    e.flags.kummer = true;
    e.flags.non_sylvester = true;
    e.flags.ns2_locus = true;
    e.flags.cyclic_locus = true;
    e.flags.g_locus = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "fermat";
    e.description =
        "Fermat cubic surface: the base point of psi; eighteen Eckardt "
        "points, no pentahedral form.";
    e.point = ipt({1, 0, 0, 0, 0});
    e.flags.kummer = true;
    e.flags.non_sylvester = true;
    e.flags.ns2_locus = true;
    e.flags.cyclic_locus = true;
    e.flags.fermat_point = true;
    e.flags.g_locus = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "txyz";
    e.description =
        "Strictly semi-stable wall t^3 = xyz, i.e. x4^3 = 3 (x0+x1)(x0+x2)"
        "(x1+x2): the unique boundary point of the cyclic locus, reached "
        "from the cyclic family at c = (1,1,1,1,1).";
    e.point = ipt({8, 1, 0, 0, 0});
    e.flags.boundary = true;
    e.flags.kummer = true;
    e.flags.non_sylvester = true;
    e.flags.ns2_locus = true;
    e.flags.cyclic_locus = true;
    e.flags.g_locus = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "omega_surface";
    e.description =
        "x1^3 + w x2^3 + w^2 x3^3 - 3 x0^2 (x1+x2+x3), w^3 = 1: the surface "
        "at the weight-3 singular point of the moduli space, with conjugate "
        "nodes (+-1 : 1 : w : w^2) and an order-3 automorphism.";
    e.point = ipt({0, 0, 1, 0, 0});
    e.automorphism_order = 3;
    e.flags.boundary = true;
    e.flags.kummer = true;
    e.flags.non_sylvester = true;
    e.singular_in_moduli = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "eta_surface";
    e.description =
        "Pentahedron (1, z, z^2, z^3, z^4), z^5 = 1: the surface at the "
        "weight-5 singular point, with node (1 : z^2 : z^4 : z : z^3) and an "
        "order-5 rotation.";
    e.point = ipt({0, 0, 0, 0, 1});
    e.automorphism_order = 5;
    e.flags.boundary = true;
    e.flags.kummer = true;
    e.flags.g_locus = true;
    e.singular_in_moduli = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "smu_family";
    e.description =
        "Pencil x1^3 + x2^3 - 3 x3 (mu x1 x3 + x2 x3 + x0^2) through "
        "(0 : 1+mu^3 : 0 : mu^3 : 0), parametrizing I8 = I24 = I40 = 0; "
        "Eckardt point (1:0:0:0), order-4 automorphism, singular members "
        "exactly at mu^3 = 1; sample mu = 2.";
    e.point = ipt({0, 9, 0, 8, 0});
    e.automorphism_order = 4;
    e.flags.non_sylvester = true;
    e.flags.ns2_locus = true;
    e.singular_in_moduli = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "smu_zero";
    e.description =
        "The mu = 0 member: cyclic cubic surface over the elliptic curve "
        "with j = 1728, at (0:1:0:0:0).";
    e.point = ipt({0, 1, 0, 0, 0});
    e.automorphism_order = 4;
    e.flags.kummer = true;
    e.flags.non_sylvester = true;
    e.flags.ns2_locus = true;
    e.flags.cyclic_locus = true;
    e.flags.g_locus = true;
    e.singular_in_moduli = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "smu_cube_negative";
    e.description =
        "The mu^3 = -1 members (sample mu = -1), at the weight-4 singular "
        "point (0:0:0:1:0); smooth, since mu^3 != 1.";
    e.point = ipt({0, 0, 0, 1, 0});
    e.automorphism_order = 4;
    e.flags.non_sylvester = true;
    e.flags.ns2_locus = true;
    e.singular_in_moduli = true;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

// ---------------------------------------------------------------------------
// Singular-locus witness surfaces
// ---------------------------------------------------------------------------

CubicForm omega_surface_form() {
  CoeffField f = CoeffField::cyclotomic(3, "w");
  const auto& vars = cubic_vars();
  CoeffField::Elem w = f.gen();
  CoeffField::Elem w2 = f.mul(w, w);
  CoeffField::Elem m3 = f.from_rational(-3);
  MultiPoly p = MultiPoly::monomial(f, vars, {0, 3, 0, 0}, f.one());
  p = p + MultiPoly::monomial(f, vars, {0, 0, 3, 0}, w);
  p = p + MultiPoly::monomial(f, vars, {0, 0, 0, 3}, w2);
  p = p + MultiPoly::monomial(f, vars, {2, 1, 0, 0}, m3);
  p = p + MultiPoly::monomial(f, vars, {2, 0, 1, 0}, m3);
  p = p + MultiPoly::monomial(f, vars, {2, 0, 0, 1}, m3);
  return CubicForm(std::move(p));
}

ProjectiveMap omega_surface_automorphism() {
  CoeffField f = CoeffField::cyclotomic(3, "w");
  CoeffField::Elem z = f.zero(), o = f.one(), w = f.gen();
  return {f,
          {{w, z, z, z}, {z, z, o, z}, {z, z, z, o}, {z, o, z, z}}};
}

SylvesterSurface eta_pentahedron() {
  CoeffField f = CoeffField::cyclotomic(5, "z");
  std::vector<CoeffField::Elem> lambda;
  for (unsigned i = 0; i < 5; ++i) lambda.push_back(f.pow(f.gen(), i));
  return SylvesterSurface(f, std::move(lambda));
}

ProjectiveMap eta_surface_automorphism() {
  CoeffField f = CoeffField::rationals();
  CoeffField::Elem z = f.zero(), o = f.one(), m = f.from_rational(-1);
  return {f,
          {{z, o, z, z}, {z, z, o, z}, {z, z, z, o}, {m, m, m, m}}};
}

CubicForm smu_surface_form(const Rat& mu) {
  CoeffField f = CoeffField::rationals();
  const auto& vars = cubic_vars();
  MultiPoly p = MultiPoly::monomial(f, vars, {0, 3, 0, 0}, f.one());
  p = p + MultiPoly::monomial(f, vars, {0, 0, 3, 0}, f.one());
  p = p + MultiPoly::monomial(f, vars, {0, 1, 0, 2}, f.from_rational(-3 * mu));
  p = p + MultiPoly::monomial(f, vars, {0, 0, 1, 2}, f.from_rational(-3));
  p = p + MultiPoly::monomial(f, vars, {2, 0, 0, 1}, f.from_rational(-3));
  return CubicForm(std::move(p));
}

ProjectiveMap smu_surface_automorphism() {
  CoeffField f = CoeffField::cyclotomic(4, "i");
  CoeffField::Elem z = f.zero(), o = f.one(), i = f.gen(), m = f.from_rational(-1);
  return {f,
          {{i, z, z, z}, {z, o, z, z}, {z, z, o, z}, {z, z, z, m}}};
}

}  // namespace hessk3
