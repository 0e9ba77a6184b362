#pragma once

// Sylvester-form cubic surfaces and their Hessians: form construction, the
// closed Hessian formula, the degree-32 smoothness discriminant, Eckardt
// points with their new-line pairs, singular-point checks at given candidate
// points, and automorphism verification. Everything is exact; smoothness of
// arbitrary cubic forms is only tested at stated candidate points.

#include "hessk3/poly.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hessk3 {

// Coordinates on P^3 after eliminating x4 = -(x0+x1+x2+x3).
const std::vector<std::string>& cubic_vars();      // {"x0","x1","x2","x3"}
// The five Sylvester linear forms as formal variables.
const std::vector<std::string>& sylvester_vars();  // {"x0",...,"x4"}

// A cubic surface sum lambda_i x_i^3 = 0 with sum x_i = 0.
struct SylvesterSurface {
  CoeffField field;
  std::vector<CoeffField::Elem> lambda;  // exactly 5, not all zero

  SylvesterSurface(CoeffField f, std::vector<CoeffField::Elem> l);
  static SylvesterSurface rational(const std::vector<Rat>& l);
};

// A nonzero homogeneous cubic in x0..x3.
class CubicForm {
 public:
  explicit CubicForm(MultiPoly f);
  const MultiPoly& poly() const { return form_; }
  const CoeffField& field() const { return form_.field(); }

 private:
  MultiPoly form_;
};

// sum lambda_i x_i^3 with x4 = -(x0+x1+x2+x3) substituted.
CubicForm sylvester_to_cubic(const SylvesterSurface& s);

// Determinant of the 4x4 matrix of second partials (degree 4 when nonzero);
// nullopt when the Hessian vanishes identically (cones).
std::optional<MultiPoly> hessian_form(const CubicForm& f);

// The closed formula sum_i lambda_0...^lambda_i...lambda_4 *
// x_0...^x_i...x_4, with x4 eliminated; equals hessian_form / 1296.
MultiPoly hessian_sylvester_closed(const SylvesterSurface& s);

// Fully symbolic versions over Q in the context {l0..l4, x0..x3}:
// det of the second-partials matrix of sum l_i x_i^3, and the closed formula.
// They satisfy hessian_det_symbolic() == 1296 * hessian_closed_symbolic().
MultiPoly hessian_det_symbolic();
MultiPoly hessian_closed_symbolic();

// The degree-32 discriminant: with mu_i = lambda_0...^lambda_i...lambda_4
// and formal square roots s_i of the mu_i, the product over the 2^4 sign
// vectors of (s_0 +- s_1 +- s_2 +- s_3 +- s_4), which is even in every s_i
// and hence a polynomial in the mu_i. Zero iff the surface is singular.
CoeffField::Elem disc32(const SylvesterSurface& s);
// The same as a symmetric polynomial of degree 32 in {l0..l4} over Q.
MultiPoly disc32_symbolic();

// True iff f and all four partials vanish at the point. Accepts 4 affine
// coordinates (x0..x3) or 5 Sylvester coordinates summing to zero.
bool singular_at(const CubicForm& f, const std::vector<CoeffField::Elem>& point);

// One Eckardt point lambda_i = lambda_j with the pair of new lines through
// the opposite vertex. Ideals live in the five-variable Sylvester context.
struct EckardtPoint {
  std::size_t i, j;                      // the equal pair, i < j
  std::array<std::size_t, 3> klm;        // complementary indices, ascending
  std::vector<CoeffField::Elem> vertex;  // P_klm: x_i = 1, x_j = -1, rest 0
  MultiPoly plane;                       // x_k + x_l + x_m
  MultiPoly conic;                       // l_k l_l x_k x_l + l_k l_m x_k x_m + l_l l_m x_l x_m
  // The conic splits into two lines over split_field (the surface field or
  // a quadratic extension adjoined on demand):
  //   conic == lead * line_plus * line_minus  (mod plane).
  CoeffField split_field;
  CoeffField::Elem lead;
  MultiPoly line_plus, line_minus;
};

struct EckardtData {
  std::size_t count;                 // #{(i,j): i < j, lambda_i = lambda_j}
  std::vector<EckardtPoint> points;  // one entry per equal pair
};

// Requires all lambda_i nonzero (the Sylvester-smooth regime). New-line
// splitting is carried out for rational lambda; surfaces over extension
// fields are accepted only when no equal pair needs splitting.
EckardtData eckardt_data(const SylvesterSurface& s);

// True iff f(m x) = c f(x) for some nonzero scalar c. Throws on singular m.
// Matrix entries live in mfield; f and m coefficients widen from Q to the
// larger field when the fields differ.
bool is_automorphism(const CubicForm& f, const CoeffField& mfield,
                     const std::vector<std::vector<CoeffField::Elem>>& m);

// Smallest n in [1, max_order] with m^n a nonzero scalar matrix, if any.
std::optional<unsigned> projective_order(
    const std::vector<std::vector<CoeffField::Elem>>& m, const CoeffField& field,
    unsigned max_order);

}  // namespace hessk3
