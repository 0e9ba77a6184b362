#pragma once

// Exact sparse multivariate polynomial arithmetic over Q and over the small
// cyclotomic extensions Q(zeta_n). Everything is exact rational arithmetic;
// coefficients of extension elements are dense vectors reduced modulo the
// minimal polynomial. Monomials are kept in graded-lexicographic order
// (leading term first), which is also the canonical serialization order.

#include "hessk3/numeric.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hessk3 {

// ---------------------------------------------------------------------------
// Coefficient fields: Q, or Q[z]/(phi) for a monic phi (caller asserts
// irreducibility; the cyclotomic constructors supply correct minimal
// polynomials for orders 3, 4, 5, 9). Elements are dense coefficient vectors
// of length degree() in the power basis 1, z, ..., z^{degree()-1}.
// ---------------------------------------------------------------------------
class CoeffField {
 public:
  using Elem = std::vector<Rat>;

  // The rationals (degree 1; elements are single-entry vectors).
  static CoeffField rationals();

  // Q(zeta_order) for order in {3, 4, 5, 9}. `generator` names the root of
  // unity in printed/parsed element strings.
  static CoeffField cyclotomic(int order, std::string generator = "w");

  // Q[z]/(modulus) for a monic modulus of degree >= 2 given by its
  // coefficient list (constant term first, leading coefficient 1).
  static CoeffField extension(std::string generator, std::vector<Rat> modulus);

  CoeffField();  // the rationals

  std::size_t degree() const;
  bool is_rationals() const { return degree() == 1; }
  // Generator name; throws for Q.
  const std::string& generator() const;
  // Minimal polynomial, constant term first; throws for Q.
  const std::vector<Rat>& modulus() const;

  bool operator==(const CoeffField& o) const;
  bool operator!=(const CoeffField& o) const { return !(*this == o); }

  Elem zero() const;
  Elem one() const;
  Elem from_rational(const Rat& r) const;
  // The class of z; throws for Q.
  Elem gen() const;

  bool is_zero(const Elem& a) const;
  // True iff only the constant coordinate may be nonzero.
  bool is_rational_elem(const Elem& a) const;
  // The constant coordinate; throws if a has a nonzero non-constant part.
  Rat rational_value(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  // Multiplicative inverse via the extended Euclidean algorithm mod phi.
  // Throws on zero.
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, unsigned long n) const;

  // Canonical text form, e.g. "-1/2", "w^2-w+1/3". parse() accepts exactly
  // the printed grammar (sums of [rat][*gen[^k]] terms, optional whitespace).
  std::string to_string(const Elem& a) const;
  Elem parse(const std::string& text) const;

 private:
  struct Data;
  explicit CoeffField(std::shared_ptr<const Data> d);
  // Ensures a matches this field's degree.
  void check_elem(const Elem& a) const;
  std::shared_ptr<const Data> d_;
};

// Descending graded-lexicographic order on exponent vectors: higher total
// degree first, then lexicographically larger first. map::begin() is the
// leading term.
struct GradedLexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials over a CoeffField, in a fixed ordered list
// of variable names. Binary operations require identical variable contexts
// and equal fields and throw std::invalid_argument otherwise.
// ---------------------------------------------------------------------------
class MultiPoly {
 public:
  using TermMap = std::map<std::vector<int>, CoeffField::Elem, GradedLexGreater>;

  MultiPoly();  // zero polynomial over Q in no variables

  static MultiPoly zero(CoeffField field, std::vector<std::string> vars);
  static MultiPoly constant(CoeffField field, std::vector<std::string> vars,
                            CoeffField::Elem value);
  static MultiPoly constant(CoeffField field, std::vector<std::string> vars,
                            const Rat& value);
  static MultiPoly variable(CoeffField field, std::vector<std::string> vars,
                            const std::string& name);
  static MultiPoly monomial(CoeffField field, std::vector<std::string> vars,
                            std::vector<int> exponents, CoeffField::Elem coeff);
  // Parses sums of terms "c * v1^e1 * v2^e2" (any factor order; "-v", "3x"
  // without '*' are not accepted — multiplication is always explicit except
  // for a leading sign). Coefficient substrings go through field.parse.
  static MultiPoly parse(const CoeffField& field,
                         const std::vector<std::string>& vars,
                         const std::string& text);

  const CoeffField& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // -1 for the zero polynomial.
  long total_degree() const;
  long degree_in(const std::string& var) const;
  bool is_constant() const;
  // Constant term as a field element (field zero if absent); throws if a
  // non-constant term is present.
  CoeffField::Elem constant_value() const;
  std::size_t var_index(const std::string& name) const;

  // Mutating builder: adds coeff * x^exponents, merging and dropping zeros.
  void add_term(std::vector<int> exponents, CoeffField::Elem coeff);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const CoeffField::Elem& c) const;
  MultiPoly scaled(const Rat& c) const;
  MultiPoly pow(unsigned long n) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly derivative(const std::string& var) const;

  // The same polynomial with coefficients lifted into `target`, which must
  // equal the current field or extend Q (rational coefficients widen).
  MultiPoly with_field(const CoeffField& target) const;

  // Substitutes the assigned variables. All assigned values must share one
  // variable context (the output context); unassigned variables must exist
  // there by name. Powers of assignments are cached per call.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& assignments) const;

  // Full evaluation; every variable must be assigned.
  CoeffField::Elem evaluate(const std::map<std::string, CoeffField::Elem>& point) const;
  CoeffField::Elem evaluate_rational(const std::map<std::string, Rat>& point) const;

  // Coefficients of powers of `var`, as polynomials in the same context with
  // var-exponent zero; result[k] is the coefficient of var^k.
  std::vector<MultiPoly> coefficients_in(const std::string& var) const;

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;
  CoeffField field_;
  std::vector<std::string> vars_;
  TermMap terms_;
};

// Quotient and remainder of leading-term division by one divisor: terms of
// the remainder are not divisible by the leading term of q.
std::pair<MultiPoly, MultiPoly> divide_with_remainder(const MultiPoly& p,
                                                      const MultiPoly& q);

// Exact quotient p / q; throws std::invalid_argument describing the nonzero
// remainder when the division is not exact.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q);

// Determinant by cofactor expansion, at each step expanding along the row or
// column whose entries carry the fewest terms. Exercised at 4x4 (Hessian
// matrices) and 9x9 (Sylvester matrices); any square size is accepted.
MultiPoly det_poly_matrix(const std::vector<std::vector<MultiPoly>>& m);

// Discriminant of p, monic of degree 5 in `var`, with arbitrary polynomial
// coefficients in the remaining variables: (-1)^{5*4/2} Res(p, p') computed
// as a 9x9 Sylvester determinant. Throws if p is not monic of degree 5.
MultiPoly discriminant_univariate(const MultiPoly& p, const std::string& var);

// gcd of all rational coordinates of all coefficients (0 for the zero
// polynomial): the positive rational c with p/c integral and primitive.
Rat content_rational(const MultiPoly& p);

// p divided by +-content so that the content is 1 and the graded-lex leading
// coefficient is positive. Rational coefficients only; throws over
// extensions. Zero stays zero.
MultiPoly normalized_primitive(const MultiPoly& p);

// ---------------------------------------------------------------------------
// Laurent polynomials in one auxiliary variable t, with coefficients that are
// MultiPolys in a (possibly empty) list of parameter variables. Finite
// support; exponents may be negative.
// ---------------------------------------------------------------------------
class LaurentPoly {
 public:
  LaurentPoly();  // zero over Q with no parameters

  static LaurentPoly zero(CoeffField field, std::vector<std::string> params);
  static LaurentPoly constant(CoeffField field, std::vector<std::string> params,
                              const Rat& value);
  // coeff * t^exponent.
  static LaurentPoly term(MultiPoly coeff, long exponent);
  static LaurentPoly t_power(CoeffField field, std::vector<std::string> params,
                             long exponent);

  const CoeffField& field() const { return field_; }
  const std::vector<std::string>& params() const { return params_; }
  // Ascending t-exponent; all stored coefficients nonzero.
  const std::map<long, MultiPoly>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const MultiPoly& c) const;
  LaurentPoly scaled(const Rat& c) const;
  LaurentPoly pow(unsigned long n) const;
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Minimal t-exponent with nonzero coefficient; throws on zero input.
  long valuation() const;
  // Coefficient of t^valuation().
  MultiPoly leading_poly() const;
  // Same, as a field element; throws when parameters remain.
  CoeffField::Elem leading_at_zero() const;

  // t -> t^d for d >= 1 (exponents scale by d).
  LaurentPoly scale_exponents(long d) const;
  // Multiplication by t^k.
  LaurentPoly shifted(long k) const;
  // Value at t = 0: zero when the valuation is positive, the t^0 coefficient
  // when it is zero; throws when negative exponents remain.
  MultiPoly at_zero() const;

  std::string to_string() const;

 private:
  void check_compatible(const LaurentPoly& o) const;
  void prune();
  CoeffField field_;
  std::vector<std::string> params_;
  std::map<long, MultiPoly> terms_;
};

}  // namespace hessk3
