#pragma once

// Even integral lattices: construction from spec strings, discriminant
// groups/forms, embedded sublattices (span, saturation, orthogonal
// complements), even overlattices via isotropic glue, reduction and
// enumeration of even positive-definite binary forms, and the constructive
// primitive embedding of a rank-2 even lattice into
// T = U + U(2) + A2(-2)  (quadratic form 2*x1*x2 + 4*x3*x4 - 4*(x5^2 + x6^2 - x5*x6)).
//
// All Gram matrices are integer, symmetric, with even diagonal. A lattice is
// allowed to be degenerate only when explicitly flagged; degenerate lattices
// appear as raw curve spans before basis extraction and support only span
// and rank/disc queries.

#include "hessk3/normal_forms.hpp"

#include <optional>
#include <string>

namespace hessk3 {

class Lattice {
 public:
  Lattice() = default;
  // Validates: square, symmetric, even diagonal; nondegenerate unless
  // allow_degenerate. Throws std::invalid_argument on violations.
  Lattice(std::string label, IntMat gram, bool allow_degenerate = false);

  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }
  const IntMat& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  bool degenerate() const { return degenerate_; }
  Int disc() const;  // det(gram); 0 iff degenerate

  // Gram pairing of two vectors given in basis coordinates.
  Int pair(const std::vector<Int>& v, const std::vector<Int>& w) const;
  Rat pair(const std::vector<Rat>& v, const std::vector<Rat>& w) const;

 private:
  std::string label_;
  IntMat gram_;
  bool degenerate_ = false;
};

// Build a lattice from a spec string. Grammar: sum of terms joined by '+',
// each term one of  U | <n> | Ak | E8 | K3 | Tgen  optionally followed by a
// twist "(m)" which scales the Gram by m. Examples: "U(2)", "<-12>",
// "A2(-2)", "E8(-1)+E8(-1)+U+U+U", "U+U(2)+A2(-2)".
// "K3" expands to E8(-1)^2 + U^3 and "Tgen" to U + U(2) + A2(-2).
// Throws std::invalid_argument on syntax errors or if the result is odd
// (e.g. "<3>") or degenerate (e.g. "U(0)").
Lattice make_lattice(const std::string& spec);

Lattice direct_sum(const Lattice& a, const Lattice& b);
// Scale the form by n (n != 0).
Lattice twist(const Lattice& a, const Int& n);

// Exact signature (n_plus, n_minus) via congruence diagonalization over Q.
// Requires nondegenerate.
std::pair<std::size_t, std::size_t> signature(const Lattice& l);

// ---------------------------------------------------------------------------
// Discriminant groups and forms
// ---------------------------------------------------------------------------

// The finite quadratic form (L^*/L, q, b) of a nondegenerate even lattice.
// Generators are rows of `generators` (rational vectors in L-basis
// coordinates), generator i has order invariant_factors[i] (only factors > 1
// are kept, in divisibility order), q values live in Q/2Z canonicalized to
// [0,2), pairwise b values in Q/Z canonicalized to [0,1).
struct DiscriminantData {
  std::vector<Int> invariant_factors;
  RatMat generators;
  std::vector<Rat> q_values;
  RatMat b_matrix;
  Int group_order = 1;

  // q of an arbitrary element given as generator-coefficient tuple.
  // (Computed from the generator vectors, exact.)
};

DiscriminantData discriminant_data(const Lattice& l);

// True iff there is a group isomorphism phi with q_b(phi x) = sign * q_a(x).
// sign must be +1 or -1. Exhaustive generator-image backtracking; intended
// for the small groups occurring here (order <= a few hundred).
bool disc_forms_isomorphic(const Lattice& a, const Lattice& b, int sign);
inline bool disc_forms_opposite(const Lattice& a, const Lattice& b) {
  return disc_forms_isomorphic(a, b, -1);
}

// ---------------------------------------------------------------------------
// Embedded sublattices
// ---------------------------------------------------------------------------

// A sublattice of `ambient` presented by basis rows in ambient coordinates.
// When the ambient is degenerate, everything is understood modulo the radical
// of the ambient pairing (curve classes): two ambient vectors with identical
// pairing against everything give the same class.
struct EmbeddedSublattice {
  IntMat basis;  // r x n, rows = basis vectors in ambient coordinates
  IntMat gram;   // r x r induced Gram
  bool degenerate = false;

  std::size_t rank() const { return basis.rows(); }
  Int disc() const { return gram.rows() ? det(gram) : Int(1); }
  Lattice as_lattice(std::string label) const {
    return Lattice(std::move(label), gram, degenerate);
  }
};

// Z-span of the given row vectors inside the ambient (modulo the ambient
// radical when degenerate). Throws std::invalid_argument for a zero span.
EmbeddedSublattice span_sublattice(const Lattice& ambient, const IntMat& vectors);

// True iff the subset (by row indices into `vectors`) spans the same
// sublattice as all of `vectors` (i.e. it is a basis of the span: the span
// has rank == subset size is implied when true and sizes match).
bool is_basis_of_span(const Lattice& ambient, const IntMat& vectors,
                      const std::vector<std::size_t>& subset);

// Primitive closure of s inside the ambient. disc(s) = index^2 * disc(sat).
EmbeddedSublattice saturate(const Lattice& ambient, const EmbeddedSublattice& s);

// Index of s inside its saturation.
Int sublattice_index(const Lattice& ambient, const EmbeddedSublattice& s);

// { x in ambient : x . s = 0 }. Requires nondegenerate ambient. The result is
// automatically saturated.
EmbeddedSublattice orthogonal_complement(const Lattice& ambient, const EmbeddedSublattice& s);
// Convenience: complement of the span of explicit vectors.
EmbeddedSublattice orthogonal_complement(const Lattice& ambient, const IntMat& vectors);

// Is v (ambient coordinates) in the Z-span of s (modulo radical)?
bool sublattice_contains(const Lattice& ambient, const EmbeddedSublattice& s,
                         const std::vector<Int>& v);

// ---------------------------------------------------------------------------
// Even overlattices
// ---------------------------------------------------------------------------

// An even overlattice L' of L with [L':L] = p, presented by the glue class:
// L' = L + Z*glue with glue in L^* (rational L-basis coordinates), p*glue in L.
struct Overlattice {
  IntMat gram;            // Gram of L' in the basis `basis` (rows, L-coords)
  RatMat basis;           // n x n rational rows: basis of L' in L coordinates
  std::vector<Rat> glue;  // the glue vector
};

// All even overlattices of prime index p, one per isotropic order-p subgroup
// of the discriminant form (q = 0 in Q/2Z). Returns an empty list when p^2
// does not divide disc(L). Requires nondegenerate L.
std::vector<Overlattice> even_overlattices(const Lattice& l, const Int& p);

// Distinct Gram matrices among a list of overlattices (presentation dedupe).
std::vector<IntMat> unique_grams(const std::vector<Overlattice>& list);

// True iff some nonzero multiple of the glue class is supported on the
// coordinate block S (fractional parts vanish outside S). When true, the
// overlattice meets block_S (x) Q in a vector outside L, i.e. the block
// spanned by those basis vectors is NOT primitively embedded in L'.
bool glue_meets_block(const Overlattice& o, const Int& p, const std::vector<std::size_t>& block);

// ---------------------------------------------------------------------------
// Even positive-definite binary forms
// ---------------------------------------------------------------------------

// Gauss-reduce an even positive definite binary Gram to the canonical
// representative with 0 <= 2b <= a <= c (improper equivalences allowed:
// lattices carry no orientation here).
IntMat reduce_even_binary(const IntMat& gram);

// All reduced even positive definite binary Grams of determinant d, sorted
// by (a, b). Every class appears exactly once.
std::vector<IntMat> enumerate_even_binary(const Int& d);

// ---------------------------------------------------------------------------
// Primitive rank-2 embeddings into T = U + U(2) + A2(-2)
// ---------------------------------------------------------------------------

// Constructive primitive embedding of the even lattice [[2n, a], [a, 2m]]
// into T. Exists iff at least one of n, m, a is even; returns the image
// basis (x, y) in T coordinates, or nullopt when n, m, a are all odd.
// Postconditions (verified internally): Gram of (x,y) = [[2n,a],[a,2m]],
// and the 2x6 coordinate matrix has SNF diag(1,1) (primitivity).
std::optional<std::pair<std::vector<Int>, std::vector<Int>>>
slh_embed(const Int& n, const Int& m, const Int& a);

}  // namespace hessk3
