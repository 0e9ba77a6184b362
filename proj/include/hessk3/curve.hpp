#pragma once

// (-2)-curve configurations on Hessian K3 surfaces.
//
// Curves are named by index words and meet according to combinatorial rules
// on the index sets:
//   Nab   (a<b, digits 0..4)   exceptional curves over the singular points
//   Nabc  (a<b<c, digits 0..4) strict transforms of the coordinate lines
//   Cabc  (cyclic word of distinct digits 0..4) "new lines" through an
//         Eckardt point; Cabc = Cbca = Ccab and Cacb is its partner line
//   Lab   (a<b, digits 0..3)   lines through two nodes
//   Ma    (digit 0..3)         exceptional curves over nodes
//
// A Configuration bundles a list of curves, their intersection matrix, and
// the nondegenerate lattice they span (the Neron-Severi lattice when the
// curves generate it). Two configurations are graph-shaped rather than
// rule-based: "square16" (a 16-cycle with a pendant vertex at each corner)
// and "cube20" (the cube graph with every edge subdivided).

#include "hessk3/lattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hessk3 {

enum class CurveKind { NPair, NTriple, CLine, LEdge, MNode };

struct Curve {
  CurveKind kind;
  std::vector<int> idx;  // canonical: sorted, except CLine = minimal rotation

  std::string label() const;
  friend bool operator==(const Curve&, const Curve&) = default;
};

// Accepts any representative ("N10" -> N01, "C423" -> C234); throws
// std::invalid_argument on malformed labels.
Curve parse_curve(const std::string& label);

// Apply a permutation of {0,...,4} (given as image list) to the indices.
// Throws if an L/M index leaves 0..3.
Curve permute_curve(const Curve& c, const std::vector<int>& perm);

// Intersection number: -2 on the diagonal, 0 or 1 otherwise.
Int intersection(const Curve& a, const Curve& b);

// ---------------------------------------------------------------------------
// Configurations
// ---------------------------------------------------------------------------

struct Configuration {
  std::string name;
  std::vector<std::string> labels;        // one per curve
  IntMat gram;                            // intersection matrix
  Lattice ambient;                        // the same matrix as a (usually
                                          // degenerate) lattice
  IntMat basis;                           // rows: curve-coefficient vectors
                                          // forming a basis of the span
  std::vector<std::string> basis_labels;  // set when the basis is a curve
                                          // subset (paper-named bases)
  Lattice ns;                             // the span in that basis
  IntMat classes;                         // curve -> coordinates in ns basis

  std::size_t size() const { return labels.size(); }
  std::size_t index_of(const std::string& label) const;  // throws if absent
  std::vector<Int> class_of(const std::string& label) const;
  // Class of an integer combination of curves, e.g. {{"C234",1},{"C243",-1}}.
  std::vector<Int> combination(
      const std::vector<std::pair<std::string, Int>>& terms) const;
};

// Known names:
//   "gen"        all 20 N-curves                       (rank 16, disc -48)
//   "clebsch"    N-curves + all 20 C-lines             (rank 20, disc -15)
//   "cayley"     N-curves + M0..M3 + all Lab           (rank 20, disc -12)
//   "nodal1"     N-curves + M0                         (rank 17, disc  96)
//   "nodal2"     N-curves + M0,M1 + L01                (rank 18, disc -48)
//   "nodal3"     N-curves + M0..M2 + L01,L02,L12       (rank 19, disc  24)
//   "x3n4"       N-curves + C012,C021 + M0..M2 + L's   (rank 20, disc -24)
//   "x1n6"       6-Eckardt NS basis + isolated node M0 (rank 20, disc -48)
//   "x1n4"       4-Eckardt NS basis + isolated node M0 (rank 20, disc -72)
//   "ns2_square" 16-cycle c0..c15 + pendants q0..q3    (rank 18, disc  -4)
//   "ns1_cube"   cube v.. + edge midpoints m..         (rank 17, disc  16)
// "square16" and "cube20" are accepted aliases for the two graph shapes.
Configuration build_configuration(const std::string& name);

// Difference class c_ij = Cabc - Cacb with {a<b<c} = {0..4} minus {i,j},
// in ns coordinates of a configuration containing the C-lines.
std::vector<Int> c_class(const Configuration& conf, int i, int j);

// Orthogonal complement in the Clebsch span cutting out the Neron-Severi
// lattice of the Hessian K3 with k Eckardt points. Tags: "6", "4", "3"
// (route via NS4), "3b" (route via NS6), "2" (via NS4), "2p" (via NS6),
// "1", "hess".
EmbeddedSublattice eckardt_sublattice(const Configuration& clebsch,
                                      const std::string& tag);

// Orthogonal complement of the node classes M_3,...,M_k in the Cayley span:
// the Neron-Severi lattice of the Hessian K3 with k nodes (1 <= k <= 3).
EmbeddedSublattice nodal_sublattice(const Configuration& cayley, int k);

// |disc NS| of an elliptic K3 surface with section from its singular fibers
// ("I<n>", "I<n>*", "II", "III", "IV", "II*", "III*", "IV*"), the rank of
// the Mordell-Weil group, and the order of its torsion subgroup: the product
// of the fiber-lattice discriminants divided by torsion^2, as an exact
// rational. Only mw_rank = 0 is supported (positive rank throws).
Rat shioda_tate_disc(const std::vector<std::string>& fibers, int mw_rank,
                     const Int& torsion_order);

}  // namespace hessk3
