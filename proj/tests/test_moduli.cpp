#include "doctest.h"

#include "hessk3/curve.hpp"
#include "hessk3/decomposition.hpp"
#include "hessk3/moduli.hpp"
#include "hessk3/moduli_json.hpp"
#include "hessk3/poly_json.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <vector>

using namespace hessk3;

namespace {

WeightedPoint ipoint(std::array<Rat, 5> c) {
  return WeightedPoint(WpsFlavor::invariant, std::move(c));
}

WeightedPoint spoint(std::array<Rat, 5> c) {
  return WeightedPoint(WpsFlavor::sigma, std::move(c));
}

Rat rnd_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Rat rnd_nonzero(std::mt19937& rng) {
  Rat r = rnd_rat(rng);
  while (sgn(r) == 0) r = rnd_rat(rng);
  return r;
}

Rat ev(const MultiPoly& p, const std::map<std::string, Rat>& at) {
  return p.field().rational_value(p.evaluate_rational(at));
}

Rat rat_power(const Rat& a, long e) {
  Rat r = 1;
  for (long k = 0; k < (e < 0 ? -e : e); ++k) r *= a;
  if (e < 0) return Rat(1) / r;
  return r;
}

// Evaluation of an invariant-context polynomial at a weighted point.
Rat ev_invariants(const MultiPoly& p, const WeightedPoint& pt) {
  std::map<std::string, Rat> at;
  for (int n = 0; n < 5; ++n) at[invariant_vars()[n]] = pt.coords()[n];
  return ev(p, at);
}

// The family with t replaced by c*t: every Laurent term coeff * t^e becomes
// c^e coeff * t^e.
FamilySpec reparametrized(const FamilySpec& fam, const Rat& c) {
  std::array<LaurentPoly, 5> out{
      LaurentPoly::zero(fam.field(), fam.params()),
      LaurentPoly::zero(fam.field(), fam.params()),
      LaurentPoly::zero(fam.field(), fam.params()),
      LaurentPoly::zero(fam.field(), fam.params()),
      LaurentPoly::zero(fam.field(), fam.params())};
  for (int i = 0; i < 5; ++i)
    for (const auto& [e, coeff] : fam.lambda()[i].terms())
      out[i] = out[i] + LaurentPoly::term(coeff.scaled(rat_power(c, e)), e);
  return FamilySpec(std::move(out));
}

std::array<MultiPoly, 5> as_array(const std::vector<MultiPoly>& v) {
  REQUIRE(v.size() == 5);
  return {v[0], v[1], v[2], v[3], v[4]};
}

std::filesystem::path fresh_cache_dir(const std::string& tag) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / ("hessk3_" + tag);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("weighted points validate input and rescale with their weights") {
  CHECK_THROWS_AS(ipoint({0, 0, 0, 0, 0}), std::invalid_argument);
  WeightedPoint p = ipoint({1, 2, 0, -1, 3});
  CHECK(p.flavor() == WpsFlavor::invariant);
  CHECK(WeightedPoint::weights() == std::array<int, 5>{1, 2, 3, 4, 5});
  CHECK_THROWS_AS(p.rescaled(Rat(0)), std::invalid_argument);

  WeightedPoint q = p.rescaled(Rat(2));
  CHECK(q.coords() == std::array<Rat, 5>{2, 8, 0, -16, 96});
  CHECK(wps_equal(p, q));
  CHECK(p.to_string() == "(1 : 2 : 0 : -1 : 3)");

  std::mt19937 rng(20260814);
  for (int it = 0; it < 100; ++it) {
    std::array<Rat, 5> c;
    bool nonzero = false;
    for (auto& x : c) {
      x = rnd_rat(rng);
      nonzero = nonzero || sgn(x) != 0;
    }
    if (!nonzero) c[0] = 1;
    WeightedPoint a = ipoint(c);
    for (Rat t : {Rat(2), Rat(-3), Rat(1, 5)}) CHECK(wps_equal(a, a.rescaled(t)));
  }
}

TEST_CASE("elementary symmetric functions of the pentahedron coefficients") {
  CHECK_THROWS_AS(elementary_symmetric({1, 2, 3}), std::invalid_argument);
  CHECK(elementary_symmetric({1, 1, 1, 1, 1}) ==
        std::array<Rat, 5>{5, 10, 10, 5, 1});
  CHECK(elementary_symmetric({1, 2, 3, 4, 5}) ==
        std::array<Rat, 5>{15, 85, 225, 274, 120});
  CHECK(elementary_symmetric({1, -1, 2, -2, 0}) ==
        std::array<Rat, 5>{0, -5, 0, 4, 0});

  // Vieta: the lambda_i are the roots of x^5 - s1 x^4 + ... - s5.
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    std::vector<Rat> l;
    for (int i = 0; i < 5; ++i) l.push_back(rnd_rat(rng));
    std::array<Rat, 5> s = elementary_symmetric(l);
    for (const Rat& x : l) {
      Rat v = rat_power(x, 5) - s[0] * rat_power(x, 4) + s[1] * rat_power(x, 3) -
              s[2] * x * x + s[3] * x - s[4];
      CHECK(v == 0);
    }
  }
}

TEST_CASE("invariants of distinguished pentahedra") {
  CHECK(invariants_point({1, 1, 1, 1, 1}).coords() ==
        std::array<Rat, 5>{-15, 5, 5, 10, 1});
  CHECK(invariants_point({1, 1, 1, 1, Rat(1, 4)}).coords() ==
        std::array<Rat, 5>{Rat(-3, 2), Rat(17, 256), Rat(1, 128), Rat(7, 4096),
                           Rat(1, 65536)});
  // sigma5 = 0 but sigma4 != 0: the invariants degenerate onto the Fermat
  // point (1:0:0:0:0).
  WeightedPoint p = invariants_point({1, -1, 2, -2, 0});
  CHECK(p.coords() == std::array<Rat, 5>{16, 0, 0, 0, 0});
  CHECK(wps_equal(p, ipoint({1, 0, 0, 0, 0})));
  // sigma4 = sigma5 = 0: every invariant vanishes.
  CHECK_THROWS_AS(invariants_point({1, 1, 1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(invariants_point({1, -1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("invariants_field handles the eta pentahedron over Q(z5)") {
  SylvesterSurface eta = eta_pentahedron();
  std::array<CoeffField::Elem, 5> I = invariants_field(eta.field, eta.lambda);
  for (int n = 0; n < 4; ++n) CHECK(eta.field.is_zero(I[n]));
  CHECK(I[4] == eta.field.one());

  // Rational input reproduces invariants_point.
  CoeffField q = CoeffField::rationals();
  std::vector<CoeffField::Elem> l;
  for (int i = 1; i <= 5; ++i) l.push_back(q.from_rational(Rat(i)));
  std::array<CoeffField::Elem, 5> J = invariants_field(q, l);
  WeightedPoint expect = invariants_point({1, 2, 3, 4, 5});
  for (int n = 0; n < 5; ++n)
    CHECK(q.rational_value(J[n]) == expect.coords()[n]);
}

TEST_CASE("phi evaluates the invariants on sigma space") {
  WeightedPoint img = phi(spoint({5, 10, 10, 5, 1}));
  CHECK(img.flavor() == WpsFlavor::invariant);
  CHECK(img.coords() == std::array<Rat, 5>{-15, 5, 5, 10, 1});

  CHECK_THROWS_AS(phi(ipoint({1, 1, 1, 1, 1})), std::invalid_argument);
  // Base locus sigma4 = sigma5 = 0.
  CHECK_THROWS_AS(phi(spoint({1, 2, 3, 0, 0})), std::invalid_argument);
  CHECK_NOTHROW(phi(spoint({1, 2, 3, 1, 0})));
}

TEST_CASE("psi inverts phi away from the loci where either is undefined") {
  WeightedPoint s = psi(ipoint({-3, 1, 1, 1, 1}));
  CHECK(s.flavor() == WpsFlavor::sigma);
  CHECK(s.coords() == std::array<Rat, 5>{1, 1, 1, 1, 1});

  CHECK_THROWS_AS(psi(spoint({1, 1, 1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(psi(ipoint({1, 0, 0, 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(psi(ipoint({-7, 0, 0, 0, 0})), std::invalid_argument);

  // psi(phi(sigma)) is the weighted rescale of sigma by sigma5^3, hence the
  // same point of P(1,2,3,4,5).
  std::mt19937 rng(20260814);
  int checked = 0;
  while (checked < 100) {
    std::array<Rat, 5> sig;
    for (auto& x : sig) x = rnd_rat(rng);
    if (sgn(sig[3]) == 0 || sgn(sig[4]) == 0) continue;
    WeightedPoint sp = spoint(sig);
    WeightedPoint round = psi(phi(sp));
    CHECK(wps_equal(round, sp));
    CHECK(round.coords() == sp.rescaled(rat_power(sig[4], 3)).coords());
    ++checked;
  }

  // phi(psi(I)) returns to I on invariant points in the image (I40 != 0
  // guarantees a pentahedral preimage).
  WeightedPoint cayley = invariants_point({1, 1, 1, 1, Rat(1, 4)});
  CHECK(wps_equal(phi(psi(cayley)), cayley));
}

TEST_CASE("weighted equality is closure-orbit equality") {
  // Same point under a sign flip of the rescaling parameter.
  CHECK(wps_equal(ipoint({-8, 1, 0, 0, 0}), ipoint({8, 1, 0, 0, 0})));
  CHECK(wps_equal(ipoint({1, 0, 0, 0, 0}), ipoint({-7, 0, 0, 0, 0})));
  CHECK_FALSE(wps_equal(ipoint({1, 1, 0, 0, 0}), ipoint({1, 2, 0, 0, 0})));
  CHECK_FALSE(wps_equal(ipoint({1, 0, 0, 0, 0}), ipoint({1, 1, 0, 0, 0})));
  CHECK_THROWS_AS(wps_equal(ipoint({1, 1, 1, 1, 1}), spoint({1, 1, 1, 1, 1})),
                  std::invalid_argument);

  // The support {2, 4} needs the primitive exponents: with the literal
  // cross powers p2^4 q4^2 = q2^4 p4^2 these two points would wrongly
  // compare equal (any closure scalar with t^2 = 1 forces t^4 = 1 != -1).
  CHECK_FALSE(wps_equal(ipoint({0, 1, 0, 1, 0}), ipoint({0, 1, 0, -1, 0})));
  CHECK(wps_equal(ipoint({0, 1, 0, 1, 0}), ipoint({0, 4, 0, 16, 0})));
  // (0:1:0:-1:0) is the t = 2i rescale of (0:4:0:16:0)... with real points
  // it is reached from (0:1:0:1:0) by no rational or complex t at all; but
  // it does equal its own odd rescales.
  CHECK(wps_equal(ipoint({0, 1, 0, -1, 0}), ipoint({0, 9, 0, -81, 0})));

  std::mt19937 rng(99);
  for (int it = 0; it < 200; ++it) {
    std::array<Rat, 5> c;
    bool nonzero = false;
    for (auto& x : c) {
      x = rnd_rat(rng);
      nonzero = nonzero || sgn(x) != 0;
    }
    if (!nonzero) c[2] = 1;
    WeightedPoint a = ipoint(c);
    WeightedPoint b = a.rescaled(rnd_nonzero(rng));
    WeightedPoint d = b.rescaled(rnd_nonzero(rng));
    // reflexive, symmetric, transitive along the rescale chain
    CHECK(wps_equal(a, a));
    CHECK(wps_equal(a, b));
    CHECK(wps_equal(b, a));
    CHECK(wps_equal(a, d));
    // perturbing one nonzero coordinate leaves the orbit
    std::array<Rat, 5> e = c;
    for (int i = 0; i < 5; ++i)
      if (sgn(e[i]) != 0) {
        e[i] += 1;
        if (sgn(e[i]) == 0) e[i] += 1;
        break;
      }
    if (e != c) CHECK_FALSE(wps_equal(a, ipoint(e)));
  }
}

TEST_CASE("symbolic weighted equality") {
  const std::vector<std::string> pv{"a", "b"};
  CoeffField q = CoeffField::rationals();
  MultiPoly a = MultiPoly::variable(q, pv, "a");
  MultiPoly b = MultiPoly::variable(q, pv, "b");
  MultiPoly zero = MultiPoly::zero(q, pv);
  MultiPoly one = MultiPoly::constant(q, pv, Rat(1));

  // (a : a^2 : 0 : 0 : 0) = (1 : 1 : 0 : 0 : 0) * rescale(a), whatever the
  // parameter values — so also (b : b^2 : ...) is the same point.
  CHECK(wps_equal_symbolic({a, a * a, zero, zero, zero},
                           {one, one, zero, zero, zero}));
  CHECK(wps_equal_symbolic({a, a * a, zero, zero, zero},
                           {b, b * b, zero, zero, zero}));
  CHECK_FALSE(wps_equal_symbolic({a, a * a, zero, zero, zero},
                                 {a, a * a * a, zero, zero, zero}));
  CHECK_FALSE(wps_equal_symbolic({one, one, zero, zero, zero},
                                 {one, b, zero, zero, zero}));
  CHECK_FALSE(wps_equal_symbolic({a, zero, zero, zero, zero},
                                 {a, a, zero, zero, zero}));
  CHECK_THROWS_AS(wps_equal_symbolic({zero, zero, zero, zero, zero},
                                     {one, zero, zero, zero, zero}),
                  std::invalid_argument);
}

TEST_CASE("singular locus of P(1,2,3,4,5)") {
  // Exhaustive over the 31 supports: the point with 1 on the support is
  // singular exactly when the weights on the support share a factor.
  std::set<std::set<int>> singular_supports;
  for (unsigned mask = 1; mask < 32; ++mask) {
    std::array<Rat, 5> c{0, 0, 0, 0, 0};
    std::set<int> support;
    for (int i = 0; i < 5; ++i)
      if (mask & (1u << i)) {
        c[i] = 1;
        support.insert(i + 1);  // label by weight
      }
    if (wps_is_singular(ipoint(c))) singular_supports.insert(support);
  }
  std::set<std::set<int>> expect{{2}, {4}, {2, 4}, {3}, {5}};
  CHECK(singular_supports == expect);

  CHECK(wps_is_singular(ipoint({0, 9, 0, 8, 0})));
  CHECK(wps_is_singular(ipoint({0, 0, 1, 0, 0})));
  CHECK_FALSE(wps_is_singular(ipoint({1, 0, 0, 0, 0})));
  CHECK_FALSE(wps_is_singular(ipoint({-15, 5, 5, 10, 1})));
}

TEST_CASE("divisor membership at hand-evaluated points") {
  // Cayley: both sides of the boundary equation equal 4.
  WeightedPoint cayley = invariants_point({1, 1, 1, 1, Rat(1, 4)});
  {
    const auto& I = cayley.coords();
    Rat lhs = (I[0] * I[0] - 64 * I[1]) * (I[0] * I[0] - 64 * I[1]);
    Rat rhs = 16384 * I[3] + 2048 * I[0] * I[2];
    CHECK(lhs == 4);
    CHECK(rhs == 4);
  }
  DivisorFlags cf = divisor_membership(cayley);
  CHECK(cf.boundary);
  CHECK_FALSE(cf.kummer);
  CHECK_FALSE(cf.non_sylvester);
  CHECK_FALSE(cf.g_locus);

  // Clebsch: boundary sides are 9025 and 10240 — smooth surface.
  WeightedPoint clebsch = invariants_point({1, 1, 1, 1, 1});
  {
    const auto& I = clebsch.coords();
    Rat lhs = (I[0] * I[0] - 64 * I[1]) * (I[0] * I[0] - 64 * I[1]);
    CHECK(lhs == 9025);
    CHECK(16384 * I[3] + 2048 * I[0] * I[2] == 10240);
  }
  CHECK(divisor_membership(clebsch) == DivisorFlags{});

  DivisorFlags fermat = divisor_membership(ipoint({1, 0, 0, 0, 0}));
  CHECK(fermat.kummer);
  CHECK(fermat.non_sylvester);
  CHECK(fermat.ns2_locus);
  CHECK(fermat.cyclic_locus);
  CHECK(fermat.fermat_point);
  CHECK(fermat.g_locus);
  CHECK_FALSE(fermat.boundary);

  CHECK_THROWS_AS(divisor_membership(spoint({1, 0, 0, 0, 0})),
                  std::invalid_argument);

  // Flags agree with the defining polynomials on random points.
  std::mt19937 rng(4321);
  for (int it = 0; it < 100; ++it) {
    std::array<Rat, 5> c;
    bool nonzero = false;
    for (auto& x : c) {
      x = rnd_rat(rng);
      nonzero = nonzero || sgn(x) != 0;
    }
    if (!nonzero) c[0] = 1;
    WeightedPoint p = ipoint(c);
    DivisorFlags f = divisor_membership(p);
    CHECK(f.boundary == (ev_invariants(boundary_polynomial(), p) == 0));
    CHECK(f.kummer == (ev_invariants(kummer_polynomial(), p) == 0));
    CHECK(f.g_locus == (ev_invariants(g_polynomial(), p) == 0));
    CHECK(f.non_sylvester == (sgn(c[4]) == 0));
    CHECK(f.ns2_locus == (sgn(c[2]) == 0 && sgn(c[4]) == 0));
    CHECK(f.cyclic_locus == (f.ns2_locus && sgn(c[3]) == 0));
    CHECK(f.fermat_point == (f.cyclic_locus && sgn(c[1]) == 0));
  }
}

TEST_CASE("the boundary polynomial pulled back along the invariants is the "
          "degree-32 discriminant") {
  std::map<std::string, MultiPoly> in_lambda;
  std::array<MultiPoly, 5> inv = invariants_in_lambda();
  for (int n = 0; n < 5; ++n) in_lambda[invariant_vars()[n]] = inv[n];
  CHECK(boundary_polynomial().substitute(in_lambda) == disc32_symbolic());
}

TEST_CASE("invariant polynomials match the pointwise invariants") {
  std::array<MultiPoly, 5> in_sigma = invariants_in_sigma();
  std::array<MultiPoly, 5> in_lambda = invariants_in_lambda();
  std::mt19937 rng(11);
  for (int it = 0; it < 50; ++it) {
    std::vector<Rat> l;
    for (int i = 0; i < 5; ++i) l.push_back(rnd_rat(rng));
    std::array<Rat, 5> s = elementary_symmetric(l);
    if (sgn(s[3]) == 0 && sgn(s[4]) == 0) continue;
    WeightedPoint p = invariants_point(l);
    std::map<std::string, Rat> sat, lat;
    for (int k = 0; k < 5; ++k) {
      sat["s" + std::to_string(k + 1)] = s[k];
      lat["l" + std::to_string(k)] = l[k];
    }
    for (int n = 0; n < 5; ++n) {
      CHECK(ev(in_sigma[n], sat) == p.coords()[n]);
      CHECK(ev(in_lambda[n], lat) == p.coords()[n]);
    }
  }
}

TEST_CASE("tritangent polynomial: weights, normalization, factorization") {
  const TritangentPolynomial& t = tritangent_polynomial();
  CHECK(t.sigma_weight == 20);
  CHECK(t.pullback_weight == 320);
  CHECK(t.f_weight == 200);
  CHECK(t.weights_match_convention);
  CHECK(t.f.term_count() == 74);
  CHECK(t.quotient_scale == Rat(1, 256));
  CHECK(t.factor_constant == Rat(-1));
  CHECK(t.factorization_holds);
  CHECK(content_rational(t.f) == 1);

  // Graded-lex leading term: 16 * i8^4 i16^3 i40^3.
  const auto& lead = *t.f.terms().begin();
  CHECK(lead.first == std::vector<int>{4, 3, 0, 0, 3});
  CHECK(t.f.field().rational_value(lead.second) == 16);

  // The restriction to i40 = 0 is -(i24^3)(i8 i24 + 8 i32) g.
  MultiPoly f0 = t.f.substitute(
      {{"i40", MultiPoly::zero(t.f.field(), invariant_vars())}});
  MultiPoly i24 = MultiPoly::variable(t.f.field(), invariant_vars(), "i24");
  CHECK(f0 == -(i24.pow(3) * kummer_polynomial() * g_polynomial()));
}

TEST_CASE("tritangent polynomial vanishes exactly on surfaces with an "
          "Eckardt point") {
  const TritangentPolynomial& t = tritangent_polynomial();

  // scale * f(I(lambda)) = sigma5^36 prod_{i<j} (lambda_i - lambda_j)^2 as a
  // polynomial identity, sampled at random rational pentahedra.
  std::mt19937 rng(20260814);
  for (int it = 0; it < 20; ++it) {
    std::vector<Rat> l;
    for (int i = 0; i < 5; ++i) l.push_back(rnd_rat(rng));
    if (it % 4 == 0) l[4] = l[1];  // include repeated-coefficient samples
    std::array<Rat, 5> s = elementary_symmetric(l);
    std::array<Rat, 5> I{s[3] * s[3] - 4 * s[2] * s[4], rat_power(s[4], 3) * s[0],
                         rat_power(s[4], 4) * s[3], rat_power(s[4], 6) * s[1],
                         rat_power(s[4], 8)};
    std::map<std::string, Rat> at;
    for (int n = 0; n < 5; ++n) at[invariant_vars()[n]] = I[n];
    Rat lhs = t.quotient_scale * ev(t.f, at);
    Rat rhs = rat_power(s[4], 36);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) rhs *= (l[i] - l[j]) * (l[i] - l[j]);
    CHECK(lhs == rhs);
  }

  // Spot values.
  CHECK(ev_invariants(t.f, invariants_point({1, 1, 1, 1, 1})) == 0);
  CHECK(ev_invariants(t.f, invariants_point({1, 1, 2, 3, 4})) == 0);
  CHECK(ev_invariants(t.f, invariants_point({1, 2, 3, 4, 5})) != 0);

  // For nonzero coefficients (sigma5 != 0): f(I) = 0 iff some pair is equal
  // iff the surface has an Eckardt point.
  std::mt19937 rng2(555);
  for (int it = 0; it < 50; ++it) {
    std::vector<Rat> l;
    for (int i = 0; i < 5; ++i) l.push_back(rnd_nonzero(rng2));
    if (it % 2 == 0) {
      std::uniform_int_distribution<int> pick(0, 4);
      int i = pick(rng2), j = pick(rng2);
      while (j == i) j = pick(rng2);
      l[j] = l[i];
    }
    bool repeated = false;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) repeated = repeated || l[i] == l[j];
    EckardtData ed = eckardt_data(SylvesterSurface::rational(l));
    CHECK((ed.count >= 1) == repeated);
    CHECK((ev_invariants(t.f, invariants_point(l)) == 0) == repeated);
  }
}

TEST_CASE("tritangent checkpoint round-trips and survives corruption") {
  std::filesystem::path dir = fresh_cache_dir("tritangent_cache");
  TritangentPolynomial first = compute_tritangent(dir.string());
  CHECK(std::filesystem::exists(dir / "tritangent_f.json"));

  TritangentPolynomial second = compute_tritangent(dir.string());
  CHECK(second.f == first.f);
  CHECK(second.quotient_scale == first.quotient_scale);
  CHECK(second.sigma_weight == 20);
  CHECK(second.factorization_holds);
  CHECK(second.weights_match_convention);

  // Unreadable JSON: recomputed, then rewritten.
  {
    std::ofstream out(dir / "tritangent_f.json");
    out << "{ not json";
  }
  TritangentPolynomial third = compute_tritangent(dir.string());
  CHECK(third.f == first.f);
  CHECK(compute_tritangent(dir.string()).f == first.f);

  // Valid JSON holding the wrong polynomial: the identity validation
  // rejects it and the result is recomputed, not trusted.
  {
    nlohmann::json j;
    j["f"] = poly_to_json(kummer_polynomial());
    j["quotient_scale"] = "1/256";
    j["sigma_weight"] = 20;
    j["pullback_weight"] = 320;
    std::ofstream out(dir / "tritangent_f.json");
    out << j.dump();
  }
  TritangentPolynomial fourth = compute_tritangent(dir.string());
  CHECK(fourth.f == first.f);
  std::filesystem::remove_all(dir);
}

TEST_CASE("weighted limits of the three divisor-parametrizing families") {
  struct Case {
    const char* name;
    FamilySpec fam;
    std::array<MultiPoly, 5> expect;
    long e;
  };
  Case cases[] = {{"ns1", ns1_family(), ns1_limit_expected(), 18},
                  {"ns2", ns2_family(), ns2_limit_expected(), 30},
                  {"cyclic", cyclic_family(), cyclic_limit_expected(), 6}};
  for (const Case& c : cases) {
    CAPTURE(c.name);
    WeightedLimit lim = weighted_limit(c.fam);
    CHECK(lim.exponent == Rat(c.e));
    CHECK(lim.substitution_degree == 1);
    CHECK(wps_equal_symbolic(lim.coords, c.expect));
    CHECK_FALSE(lim.point().has_value());  // parameters remain

    // Reparametrizing t -> c t does not change the limit point.
    for (Rat s : {Rat(2), Rat(-1), Rat(1, 3)}) {
      WeightedLimit lim2 = weighted_limit(reparametrized(c.fam, s));
      CHECK(lim2.exponent == lim.exponent);
      CHECK(lim2.substitution_degree == 1);
      CHECK(wps_equal_symbolic(lim2.coords, c.expect));
    }
  }
}

TEST_CASE("weighted limits at sample parameters reach the expected points") {
  FamilySpec ns1 = specialize(ns1_family(),
                              {{"a0", 1}, {"a1", 1}, {"a2", 2}, {"a3", 3}});
  std::optional<WeightedPoint> p1 = weighted_limit(ns1).point();
  REQUIRE(p1.has_value());
  CHECK(wps_equal(*p1, ipoint({-143, 251, 432, 7776, 0})));

  FamilySpec ns2 = specialize(ns2_family(), {{"lam", 2}, {"mu", 3}});
  std::optional<WeightedPoint> p2 = weighted_limit(ns2).point();
  REQUIRE(p2.has_value());
  CHECK(wps_equal(*p2, ipoint({-16, 28, 0, 27, 0})));

  FamilySpec cyc = specialize(
      cyclic_family(), {{"c0", 1}, {"c1", 2}, {"c2", 3}, {"c3", 4}, {"c4", 5}});
  std::optional<WeightedPoint> p3 = weighted_limit(cyc).point();
  REQUIRE(p3.has_value());
  CHECK(wps_equal(*p3, ipoint({-860, 13824, 0, 0, 0})));

  // All-equal cyclic parameters degenerate onto the semi-stable wall
  // t^3 = xyz at (8:1:0:0:0).
  FamilySpec wall = specialize(
      cyclic_family(), {{"c0", 1}, {"c1", 1}, {"c2", 1}, {"c3", 1}, {"c4", 1}});
  std::optional<WeightedPoint> p4 = weighted_limit(wall).point();
  REQUIRE(p4.has_value());
  CHECK(p4->coords() == std::array<Rat, 5>{-8, 1, 0, 0, 0});
  CHECK(wps_equal(*p4, ipoint({8, 1, 0, 0, 0})));

  // lambda = (1,1,1,1,t) converges to the Fermat point with exponent 0: the
  // t-power only kills the higher invariants.
  CoeffField q = CoeffField::rationals();
  auto c = [&](const Rat& r) { return LaurentPoly::constant(q, {}, r); };
  FamilySpec fermat({c(1), c(1), c(1), c(1), LaurentPoly::t_power(q, {}, 1)});
  WeightedLimit lim = weighted_limit(fermat);
  CHECK(lim.exponent == Rat(0));
  CHECK(lim.substitution_degree == 1);
  std::optional<WeightedPoint> p5 = lim.point();
  REQUIRE(p5.has_value());
  CHECK(p5->coords() == std::array<Rat, 5>{1, 0, 0, 0, 0});
}

TEST_CASE("the limit engine picks the minimal substitution degree") {
  CoeffField q = CoeffField::rationals();
  LaurentPoly zero = LaurentPoly::zero(q, {});
  LaurentPoly tinv = LaurentPoly::t_power(q, {}, -1);

  // (0, 1/t, 0, 0, 1/t): e = max(1/2, 1/5) = 1/2 needs t = u^2.
  WeightedLimit lim = weighted_limit_of_invariants({zero, tinv, zero, zero, tinv});
  CHECK(lim.exponent == Rat(1, 2));
  CHECK(lim.substitution_degree == 2);
  std::optional<WeightedPoint> p = lim.point();
  REQUIRE(p.has_value());
  CHECK(p->coords() == std::array<Rat, 5>{0, 1, 0, 0, 0});

  // (0, 0, 1/t, 0, 1/t): e = max(1/3, 1/5) = 1/3, d = 3.
  WeightedLimit lim2 = weighted_limit_of_invariants({zero, zero, tinv, zero, tinv});
  CHECK(lim2.exponent == Rat(1, 3));
  CHECK(lim2.substitution_degree == 3);
  CHECK(lim2.point()->coords() == std::array<Rat, 5>{0, 0, 1, 0, 0});

  // A positive-valuation tuple has a negative exponent: (t^2, 0, 0, 0, t^5)
  // rescaled by t^{-1} is (t : 0 : 0 : 0 : 1); only the coordinate achieving
  // the max survives.
  LaurentPoly t2 = LaurentPoly::t_power(q, {}, 2);
  LaurentPoly t5 = LaurentPoly::t_power(q, {}, 5);
  WeightedLimit lim3 = weighted_limit_of_invariants({t2, zero, zero, zero, t5});
  CHECK(lim3.exponent == Rat(-1));
  CHECK(lim3.point()->coords() == std::array<Rat, 5>{0, 0, 0, 0, 1});

  CHECK_THROWS_AS(
      weighted_limit_of_invariants({zero, zero, zero, zero, zero}),
      std::invalid_argument);
}

TEST_CASE("family specs validate their coefficients") {
  CoeffField q = CoeffField::rationals();
  LaurentPoly zero = LaurentPoly::zero(q, {});
  LaurentPoly one = LaurentPoly::constant(q, {}, Rat(1));
  CHECK_THROWS_AS(FamilySpec({one, one, one, one, zero}), std::invalid_argument);

  LaurentPoly other = LaurentPoly::constant(q, {"a"}, Rat(1));
  CHECK_THROWS_AS(FamilySpec({one, one, one, one, other}), std::invalid_argument);

  // Specialization must not kill a coefficient.
  CHECK_THROWS_AS(
      specialize(cyclic_family(),
                 {{"c0", 1}, {"c1", 1}, {"c2", 1}, {"c3", 0}, {"c4", 1}}),
      std::invalid_argument);
  CHECK_THROWS_AS(specialize(ns1_family(),
                             {{"a0", 1}, {"a1", 0}, {"a2", 1}, {"a3", 1}}),
                  std::invalid_argument);
}

TEST_CASE("catalog entries reproduce their recorded data") {
  const std::vector<CatalogEntry>& cat = catalog();
  REQUIRE(cat.size() == 15);
  std::set<std::string> names;
  for (const CatalogEntry& e : cat) names.insert(e.name);
  CHECK(names.size() == cat.size());

  for (const CatalogEntry& e : cat) {
    CAPTURE(e.name);
    REQUIRE(e.point.has_value());
    CHECK(divisor_membership(*e.point) == e.flags);
    CHECK(wps_is_singular(*e.point) == e.singular_in_moduli);

    if (!e.lambda.empty()) {
      CHECK(wps_equal(invariants_point(e.lambda), *e.point));
      SylvesterSurface s = SylvesterSurface::rational(e.lambda);
      if (e.eckardt_count >= 0)
        CHECK(eckardt_data(s).count == std::size_t(e.eckardt_count));
      CubicForm f = sylvester_to_cubic(s);
      for (const auto& node : e.nodes) {
        std::vector<CoeffField::Elem> pt;
        for (const Rat& x : node) pt.push_back(f.field().from_rational(x));
        CHECK(singular_at(f, pt));
      }
    }

    if (e.family.has_value()) {
      WeightedLimit lim = weighted_limit(*e.family);
      CHECK(wps_equal_symbolic(lim.coords, as_array(e.limit)));
      std::optional<WeightedPoint> at_sample =
          weighted_limit(specialize(*e.family, e.sample_params)).point();
      REQUIRE(at_sample.has_value());
      CHECK(wps_equal(*at_sample, *e.point));
    }

    if (!e.transcendental.empty())
      CHECK_NOTHROW(build_configuration(e.transcendental));
  }
}

TEST_CASE("catalog transcendental tags stay aligned with the lattice side") {
  std::map<std::string, std::string> tags;
  for (const CatalogEntry& e : catalog())
    if (!e.transcendental.empty()) tags[e.name] = e.transcendental;
  CHECK(tags == std::map<std::string, std::string>{
                    {"clebsch", "clebsch"}, {"cayley", "cayley"},
                    {"x1n6", "x1n6"}, {"x1n4", "x1n4"}, {"x3n4", "x3n4"},
                    {"ns1", "ns1_cube"}, {"ns2", "ns2_square"}});
  // The mixed single-node cases also carry decomposition reports.
  for (const char* tag : {"x1n6", "x1n4", "x3n4"})
    CHECK_NOTHROW(analyze_mixed_case(tag));
}

TEST_CASE("omega surface: nodes, automorphism, invariant point") {
  CubicForm f = omega_surface_form();
  const CoeffField& F = f.field();
  CoeffField::Elem w = F.gen();
  CoeffField::Elem w2 = F.mul(w, w);
  // Conjugate nodes (+-1 : 1 : w : w^2), in ambient coordinates.
  CHECK(singular_at(f, {F.one(), F.one(), w, w2}));
  CHECK(singular_at(f, {F.from_rational(-1), F.one(), w, w2}));
  CHECK_FALSE(singular_at(f, {F.one(), F.one(), F.one(), F.one()}));

  ProjectiveMap m = omega_surface_automorphism();
  CHECK(is_automorphism(f, m.field, m.matrix));
  CHECK(projective_order(m.matrix, m.field, 10) == 3);
}

TEST_CASE("eta surface: node, automorphism, invariant point") {
  SylvesterSurface s = eta_pentahedron();
  const CoeffField& F = s.field;
  CubicForm f = sylvester_to_cubic(s);
  auto z = [&](unsigned k) { return F.pow(F.gen(), k); };
  // Node (1 : z^2 : z^4 : z : z^3) in the five pentahedral coordinates.
  CHECK(singular_at(f, {F.one(), z(2), z(4), z(1), z(3)}));
  CHECK_FALSE(singular_at(f, {F.one(), z(1), z(2), z(3), z(4)}));

  ProjectiveMap m = eta_surface_automorphism();
  CHECK(is_automorphism(f, m.field, m.matrix));
  CHECK(projective_order(m.matrix, m.field, 10) == 5);
}

TEST_CASE("S_mu pencil: Eckardt vertex data, automorphism, singular member") {
  // The order-4 symmetry fixes every member of the pencil.
  ProjectiveMap m = smu_surface_automorphism();
  for (Rat mu : {Rat(2), Rat(0), Rat(-1), Rat(1)}) {
    CAPTURE(to_string(mu));
    CHECK(is_automorphism(smu_surface_form(mu), m.field, m.matrix));
  }
  CHECK(projective_order(m.matrix, m.field, 10) == 4);

  // mu = 1 (mu^3 = 1) is singular at (0 : 1 : -1 : 1); the others are
  // smooth there.
  CoeffField q = CoeffField::rationals();
  auto pt = [&](const std::vector<Rat>& v) {
    std::vector<CoeffField::Elem> out;
    for (const Rat& x : v) out.push_back(q.from_rational(x));
    return out;
  };
  CHECK(singular_at(smu_surface_form(1), pt({0, 1, -1, 1})));
  CHECK(singular_at(smu_surface_form(1), pt({0, -1, 1, 1})));
  for (Rat mu : {Rat(2), Rat(0), Rat(-1)}) {
    CHECK_FALSE(singular_at(smu_surface_form(mu), pt({0, 1, -1, 1})));
    CHECK_FALSE(singular_at(smu_surface_form(mu), pt({0, -1, 1, 1})));
  }

  // The invariant points of the pencil: mu = 2 on the catalog sample,
  // mu = 0 and mu = -1 at the coordinate points.
  auto entry = [&](const std::string& n) {
    for (const CatalogEntry& e : catalog())
      if (e.name == n) return e;
    throw std::logic_error("missing catalog entry " + n);
  };
  CHECK(entry("smu_family").point->coords() == std::array<Rat, 5>{0, 9, 0, 8, 0});
  CHECK(wps_equal(*entry("smu_zero").point, ipoint({0, 1, 0, 0, 0})));
  CHECK(wps_equal(*entry("smu_cube_negative").point, ipoint({0, 0, 0, 1, 0})));
  // (0 : 1 + mu^3 : 0 : mu^3 : 0) at mu = 2 is (0 : 9 : 0 : 8 : 0).
  Rat mu = 2;
  Rat mu3 = mu * mu * mu;
  CHECK(wps_equal(ipoint({0, 1 + mu3, 0, mu3, 0}), *entry("smu_family").point));
}

TEST_CASE("moduli JSON forms") {
  WeightedPoint clebsch = invariants_point({1, 1, 1, 1, 1});
  nlohmann::json pj = weighted_point_to_json(clebsch);
  CHECK(pj == nlohmann::json({"-15", "5", "5", "10", "1"}));

  nlohmann::json report = invariant_report_json(clebsch);
  CHECK(report.at("catalog_name") == "clebsch");
  CHECK(report.at("flags").at("boundary") == false);
  CHECK(report.at("flags").at("g_locus") == false);
  CHECK(report.at("point") == pj);

  nlohmann::json generic =
      invariant_report_json(invariants_point({1, 2, 3, 4, 5}));
  CHECK_FALSE(generic.contains("catalog_name"));
  CHECK(generic.at("flags").at("boundary") == false);

  nlohmann::json fermat = invariant_report_json(ipoint({-7, 0, 0, 0, 0}));
  CHECK(fermat.at("catalog_name") == "fermat");
  CHECK(fermat.at("flags").at("fermat_point") == true);

  for (const char* name : {"ns1", "ns2", "cyclic"}) {
    CAPTURE(name);
    const CatalogEntry* e = nullptr;
    for (const CatalogEntry& c : catalog())
      if (c.name == name) e = &c;
    REQUIRE(e != nullptr);
    nlohmann::json fj = family_to_json(*e->family);
    FamilySpec back = family_from_json(fj);
    for (int i = 0; i < 5; ++i)
      CHECK(back.lambda()[i] == e->family->lambda()[i]);
  }

  CHECK_THROWS_AS(family_from_json(nlohmann::json{{"lambda", {1, 2}}}),
                  std::invalid_argument);
}
