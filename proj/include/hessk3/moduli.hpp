#pragma once

// Invariant-theoretic coordinates for pentahedral cubic surfaces: the five
// generating invariants I8..I40, the weighted projective space P(1,2,3,4,5)
// on both the coefficient (sigma) side and the invariant side, the rational
// maps phi/psi between them, membership in the named divisors of the
// invariant space, exact weighted limits of one-parameter degenerations, and
// a catalog of distinguished surfaces with their expected data.

#include "hessk3/cubic.hpp"
#include "hessk3/poly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hessk3 {

// Which copy of P(1,2,3,4,5) a point lives in: coefficient space with
// coordinates (sigma1..sigma5) or invariant space with coordinates
// (I8 : I16 : I24 : I32 : I40). Same weights, different meaning; operations
// reject the flavor they are not defined on.
enum class WpsFlavor { sigma, invariant };

// A point of P(1,2,3,4,5) with exact rational coordinates, not all zero. No
// canonical normalization is imposed; use wps_equal for comparison.
class WeightedPoint {
 public:
  WeightedPoint(WpsFlavor flavor, std::array<Rat, 5> coords);

  WpsFlavor flavor() const { return flavor_; }
  const std::array<Rat, 5>& coords() const { return coords_; }
  static const std::array<int, 5>& weights();  // (1, 2, 3, 4, 5)

  // Coordinates scaled by t^{w_i} for a nonzero rational t (same point).
  WeightedPoint rescaled(const Rat& t) const;
  std::string to_string() const;  // "(a : b : c : d : e)"

 private:
  WpsFlavor flavor_;
  std::array<Rat, 5> coords_;
};

// sigma_1..sigma_5 of five rational pentahedron coefficients.
std::array<Rat, 5> elementary_symmetric(const std::vector<Rat>& lambda);

// The invariant point (I8 : I16 : I24 : I32 : I40) of the pentahedral
// surface with coefficients lambda, through I8 = sigma4^2 - 4 sigma3 sigma5,
// I16 = sigma5^3 sigma1, I24 = sigma5^4 sigma4, I32 = sigma5^6 sigma2,
// I40 = sigma5^8. Throws std::invalid_argument when all five invariants
// vanish, which happens exactly for sigma4 = sigma5 = 0.
WeightedPoint invariants_point(const std::vector<Rat>& lambda);

// The same invariant tuple for coefficients in an extension field (the
// eta-pentahedron has coefficients that are fifth roots of unity). Returns
// the raw tuple; no nonzero check is applied.
std::array<CoeffField::Elem, 5> invariants_field(
    const CoeffField& field, const std::vector<CoeffField::Elem>& lambda);

// The invariants evaluated on a sigma-space point. Throws on invariant-space
// input and on the indeterminacy locus sigma4 = sigma5 = 0.
WeightedPoint phi(const WeightedPoint& sigma_point);

// The rational inverse (I16 : I32 : (I24^2 - I8 I40)/4 : I24 I40 : I40^2),
// invariant space back to sigma space. Throws on sigma-space input and at
// the unique base point (1:0:0:0:0).
WeightedPoint psi(const WeightedPoint& invariant_point);

// Equality in P(1,2,3,4,5) over the algebraic closure: equal zero patterns,
// and for each pair of nonzero coordinates the primitive cross-power
// condition p_i^{w_j/g} q_j^{w_i/g} = q_i^{w_j/g} p_j^{w_i/g} with
// g = gcd(w_i, w_j). For weights (1,2,3,4,5) the pairwise primitive
// relations generate the full relation lattice of every support, so this is
// exactly equality of orbits under the closure's scaling action. Throws when
// the flavors differ.
bool wps_equal(const WeightedPoint& p, const WeightedPoint& q);

// The same test for coordinate tuples that are polynomials in parameters
// (symbolic weighted limits). Both tuples must share one variable context
// and each must have a nonzero entry.
bool wps_equal_symbolic(const std::array<MultiPoly, 5>& p,
                        const std::array<MultiPoly, 5>& q);

// True iff the point lies in the singular locus of P(1,2,3,4,5): the gcd of
// the weights of its nonzero coordinates exceeds 1. The singular supports
// are exactly {2}, {4}, {2,4}, {3}, {5}, i.e. the union
// {(0:a:0:b:0)} u {(0:0:1:0:0)} u {(0:0:0:0:1)}.
bool wps_is_singular(const WeightedPoint& p);

// Membership of an invariant-space point in the named divisors and subloci.
// All tests are exact rational zero tests.
struct DivisorFlags {
  bool boundary = false;       // (I8^2 - 2^6 I16)^2 = 2^14 (I32 + 2^-3 I8 I24)
  bool kummer = false;         // I8 I24 + 8 I32 = 0
  bool non_sylvester = false;  // I40 = 0 (no pentahedral form)
  bool ns2_locus = false;      // I24 = I40 = 0
  bool cyclic_locus = false;   // I24 = I32 = I40 = 0
  bool fermat_point = false;   // I16 = I24 = I32 = I40 = 0
  bool g_locus = false;        // g = 0 (third factor of the tritangent
                               // polynomial on I40 = 0)
  bool operator==(const DivisorFlags&) const = default;
};

// Throws on sigma-space input.
DivisorFlags divisor_membership(const WeightedPoint& invariant_point);

// The invariant-space variable context ("i8", "i16", "i24", "i32", "i40")
// and the defining polynomials of the named divisors over it.
const std::vector<std::string>& invariant_vars();
MultiPoly boundary_polynomial();  // (i8^2-64 i16)^2 - 16384 i32 - 2048 i8 i24
MultiPoly kummer_polynomial();    // i8 i24 + 8 i32
MultiPoly g_polynomial();         // 16 i16^3 i24^2 + 27 i24^4 - 72 i16 i24^2 i32
                                  //   - 16 i16^2 i32^2 + 64 i32^3

// I8..I40 as polynomials in sigma ("s1".."s5") and in the pentahedron
// coefficients ("l0".."l4").
std::array<MultiPoly, 5> invariants_in_sigma();
std::array<MultiPoly, 5> invariants_in_lambda();

// ---------------------------------------------------------------------------
// The tritangent-divisor polynomial f = I100^2: discriminant of the monic
// quintic with coefficients sigma (weight 20), pulled back along psi
// (weight 320 in sigma units), divided exactly by I40^3 (weight 200).
// ---------------------------------------------------------------------------
struct TritangentPolynomial {
  // f over invariant_vars(), normalized to content 1 with positive
  // graded-lex leading coefficient.
  MultiPoly f;
  // Weighted degrees actually computed (sigma units: weight of sigma_k and
  // of I_{8k} both k, times 8 for invariant polynomials), and whether they
  // match the expected 20 / 320 / 200 bookkeeping.
  long sigma_weight = 0;
  long pullback_weight = 0;
  long f_weight = 0;
  bool weights_match_convention = false;
  // The raw quotient equals quotient_scale * f, so that
  // quotient_scale * f(invariants(lambda)) = sigma5^36 * prod_{i<j}
  // (lambda_i - lambda_j)^2 identically.
  Rat quotient_scale = 0;
  // f restricted to i40 = 0 equals factor_constant * i24^3 (i8 i24 + 8 i32) g.
  Rat factor_constant = 0;
  bool factorization_holds = false;
};

// Computes the pipeline above, checkpointing f to cache_dir/tritangent_f.json
// when cache_dir is nonempty (an existing checkpoint is validated against
// the factorization and a sample of the discriminant identity before use,
// and recomputed when invalid).
TritangentPolynomial compute_tritangent(const std::string& cache_dir);

// Cached per process; uses the HESSK3_CACHE_DIR environment variable as the
// checkpoint directory when set.
const TritangentPolynomial& tritangent_polynomial();

// ---------------------------------------------------------------------------
// Degenerating one-parameter families and their weighted limits.
// ---------------------------------------------------------------------------

// Five pentahedron coefficients lambda_i(t), Laurent polynomials in the
// degeneration parameter t with coefficients that are polynomials in the
// family's parameters. None may be identically zero, and all five must share
// one coefficient field and parameter context.
struct FamilySpec {
  explicit FamilySpec(std::array<LaurentPoly, 5> l);
  const std::array<LaurentPoly, 5>& lambda() const { return lambda_; }
  const CoeffField& field() const { return lambda_[0].field(); }
  const std::vector<std::string>& params() const { return lambda_[0].params(); }

 private:
  std::array<LaurentPoly, 5> lambda_;
};

// The family with every parameter fixed to a rational value, as a
// parameter-free family over Q. Requires rational coefficients, a value for
// every parameter, and that no lambda_i degenerates to zero.
FamilySpec specialize(const FamilySpec& fam, const std::map<std::string, Rat>& values);

// The exact limit point: coordinates are polynomials in the parameters,
// e is the rescaling exponent, d the substitution degree t = u^d.
struct WeightedLimit {
  std::array<MultiPoly, 5> coords;
  Rat exponent;                  // e = max_n (-valuation(I_n) / w_n)
  long substitution_degree = 1;  // minimal d with every d*e*w_n integral

  // The coordinates as a rational weighted point when parameter-free.
  std::optional<WeightedPoint> point() const;
};

// Limit engine on an invariant tuple I_n(t): substitutes t = u^d, rescales
// coordinate n by u^{d e w_n} and evaluates at u = 0. Throws when every
// coordinate is identically zero.
WeightedLimit weighted_limit_of_invariants(const std::array<LaurentPoly, 5>& inv);

// Invariants of the family through sigma, then the limit engine. The
// coordinate achieving e has a nonzero limit, so the result is a valid
// weighted point whenever the family is.
WeightedLimit weighted_limit(const FamilySpec& fam);

// The three degenerations used to parametrize the I40 = 0 divisor, with
// denominators cleared so the coefficients stay polynomial (clearing scales
// the invariant tuple by a weighted rescale, which wps_equal absorbs):
//   ns1:    ((a0 + 1/t) c^3, (a2 a3)^3/t^3, (a1 a3)^3/t^3, (a1 a2)^3/t^3,
//            c^3/t), c = a1 a2 a3, parameters a0..a3;
//   ns2:    (mu^3/t^2, 1/t^6, mu^3/t^6, mu^3 lam/4 + (mu^3/4)/t^2, mu^3/t^2),
//            parameters lam, mu;
//   cyclic: (c0, c1, c2, c3, c4/t^3), parameters c0..c4.
FamilySpec ns1_family();
FamilySpec ns2_family();
FamilySpec cyclic_family();

// Their expected limits, in the same parameter contexts:
//   ns1:    (-4 rho1 + a0^2 : rho2 : 2 rho3 : rho1 rho3 : 0), rho_k the
//           elementary symmetric functions of a1^3, a2^3, a3^3;
//   ns2:    (-8 lam : 1 + mu^3 : 0 : mu^3 : 0);
//   cyclic: (tau3^2 - 4 tau2 tau4 : tau4^3 : 0 : 0 : 0), tau_k elementary
//           symmetric in c0..c3.
std::array<MultiPoly, 5> ns1_limit_expected();
std::array<MultiPoly, 5> ns2_limit_expected();
std::array<MultiPoly, 5> cyclic_limit_expected();

// ---------------------------------------------------------------------------
// Catalog of distinguished surfaces.
// ---------------------------------------------------------------------------
struct CatalogEntry {
  std::string name;
  std::string description;

  // Pentahedron coefficients when the surface has a rational pentahedral
  // form; empty otherwise.
  std::vector<Rat> lambda;
  // Expected invariant point (for family entries: at sample_params).
  std::optional<WeightedPoint> point;

  // Degenerating family, its expected symbolic limit (5 entries), and the
  // sample parameter values behind `point`, when applicable.
  std::optional<FamilySpec> family;
  std::vector<MultiPoly> limit;
  std::map<std::string, Rat> sample_params;

  int eckardt_count = -1;  // -1 when not recorded
  // Expected singular points: 5 sum-zero pentahedral or 4 ambient
  // coordinates, as accepted by singular_at. Rational ones only.
  std::vector<std::vector<Rat>> nodes;
  // Order of the distinguished projective automorphism (0 when none is
  // recorded); the maps themselves come from the *_automorphism helpers.
  unsigned automorphism_order = 0;
  // Configuration tag of the curve/lattice modules ("" when none applies).
  std::string transcendental;

  DivisorFlags flags;              // expected membership at `point`
  bool singular_in_moduli = false; // expected wps_is_singular at `point`
};

const std::vector<CatalogEntry>& catalog();

// Explicit forms and distinguished automorphisms of the singular-locus
// witness surfaces in the catalog.
struct ProjectiveMap {
  CoeffField field;
  std::vector<std::vector<CoeffField::Elem>> matrix;
};

// x1^3 + w x2^3 + w^2 x3^3 - 3 x0^2 (x1 + x2 + x3) over Q(w), w^3 = 1: the
// surface at (0:0:1:0:0), with conjugate nodes (+-1 : 1 : w : w^2).
CubicForm omega_surface_form();
ProjectiveMap omega_surface_automorphism();  // (w x0 : x2 : x3 : x1), order 3

// Pentahedron (1, z, z^2, z^3, z^4) over Q(z), z^5 = 1: the surface at
// (0:0:0:0:1), with node (1 : z^2 : z^4 : z : z^3).
SylvesterSurface eta_pentahedron();
ProjectiveMap eta_surface_automorphism();  // coordinate rotation, order 5

// x1^3 + x2^3 - 3 x3 (mu x1 x3 + x2 x3 + x0^2): the pencil through
// (0 : 1 + mu^3 : 0 : mu^3 : 0); singular exactly when mu^3 = 1.
CubicForm smu_surface_form(const Rat& mu);
ProjectiveMap smu_surface_automorphism();  // (i x0 : x1 : x2 : -x3), order 4

}  // namespace hessk3
