#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <hessk3/curve.hpp>
#include <hessk3/lattice.hpp>

namespace hessk3 {

// ---------------------------------------------------------------------------
// E8(-1) root chains
// ---------------------------------------------------------------------------

// An E8(-1) Dynkin diagram as drawn in the configuration pictures: seven
// classes in a chain plus one branch class attached to the third chain node.
struct RootChain {
  std::array<std::string, 7> chain;
  std::string branch;
};

// Gram matrix of E8(-1) in the (chain[0..6], branch) ordering: -2 on the
// diagonal, +1 between chain neighbours and between chain[2] and the branch.
IntMat e8_minus_one_gram();

// True iff the eight classes all lie in the configuration and their induced
// Gram is exactly e8_minus_one_gram(). Throws on labels not in the
// configuration.
bool verify_root_chain(const Configuration& config, const RootChain& rc);

// The two chains drawn for a configuration ("clebsch", "cayley", "x3n4",
// "ns2_square"/"square16"). Throws for tags without drawn chains.
std::pair<RootChain, RootChain> printed_chains(const std::string& tag);

// Orthogonal complement of the sixteen chain classes inside config.ns, i.e.
// the residual R with span = E8(-1)^2 (+) R. Throws unless both chains
// verify and are mutually orthogonal. Checked postconditions:
// rank(R) = rank(ns) - 16 and disc(R) = disc(ns) (unimodular split).
EmbeddedSublattice split_off_e8_pair(const Configuration& config,
                                     const RootChain& a, const RootChain& b);

// ---------------------------------------------------------------------------
// Transcendental-lattice certificates
// ---------------------------------------------------------------------------

// True iff t is a valid transcendental lattice for ns inside the K3 lattice:
// rank(t) = 22 - rank(ns), signature(t) = (2, rank(t) - 2), |disc t| =
// |disc ns|, and the discriminant forms are opposite.
bool verify_transcendental_candidate(const Lattice& ns, const Lattice& t);

// All reduced even positive-definite binary forms of determinant |disc ns|
// passing verify_transcendental_candidate, as lattices. Requires
// rank(ns) = 20 (rank-2 transcendental lattice).
std::vector<Lattice> rank2_transcendental_enumerate(const Lattice& ns);

// ---------------------------------------------------------------------------
// Rank-20 mixed cases (nodes + Eckardt points)
// ---------------------------------------------------------------------------

// One possible Neron-Severi lattice for a mixed case, together with the
// surviving rank-2 transcendental candidates.
struct MixedBranch {
  std::string label;  // "index 1", "index 3", ...
  Lattice ns_model;
  std::vector<Lattice> transcendental;
};

// Result of the overlattice analysis for the rank-20 mixed cases. The
// visible lattice is the span of the specialized Neron-Severi lattice plus
// the node classes; the true NS is an even overlattice of prime index p or
// the visible lattice itself. Overlattices are enumerated honestly;
// `admissible` counts those compatible with the geometric side conditions
// (primitivity of summands under specialization, existence of a rank-2
// transcendental partner). One branch is reported per admissible
// possibility, the index-1 branch first.
struct MixedCaseReport {
  std::string tag;      // "x1n6" | "x1n4" | "x3n4"
  Lattice visible;      // rank-20, signature (1,19)
  Int index_prime;      // the only prime p with p^2 | disc(visible)
  std::size_t overlattice_count;   // even overlattices of index p
  std::size_t admissible_count;    // ... surviving the side conditions
  std::vector<MixedBranch> branches;
};

// Reproduce the lattice arguments for the three rank-20 mixed Hessian K3
// cases: one node + 6 Eckardt points (x1n6: the index-2 glue would make the
// <-24> summand imprimitive, so NS is the visible lattice and T = <2>(+)<24>
// is the unique candidate), one node + 4 Eckardt points (x1n4: the index-3
// glue cannot be excluded; both branches are reported with their candidates
// <6>(+)<12> and <2>(+)<4>), and three nodes + 4 Eckardt points (x3n4: an
// index-2 overlattice would need an even rank-2 lattice of determinant 6,
// which does not exist, so T = <4>(+)<6>).
MixedCaseReport analyze_mixed_case(const std::string& tag);

}  // namespace hessk3
