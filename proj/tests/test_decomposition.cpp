#include "doctest.h"

#include <hessk3/decomposition.hpp>

#include <stdexcept>

using namespace hessk3;

namespace {

IntMat binary(const Int& a, const Int& b, const Int& c) {
  IntMat g(2, 2);
  g(0, 0) = a;
  g(0, 1) = b;
  g(1, 0) = b;
  g(1, 1) = c;
  return g;
}

bool same_disc_data(const Lattice& a, const Lattice& b) {
  return a.rank() == b.rank() && a.disc() == b.disc() &&
         signature(a) == signature(b) && disc_forms_isomorphic(a, b, +1);
}

}  // namespace

TEST_CASE("E8(-1) gram and root-chain recognition") {
  const IntMat e8 = e8_minus_one_gram();
  CHECK(e8.rows() == 8);
  CHECK(det(e8) == 1);
  Lattice l("E8(-1)-chain", e8);
  CHECK(signature(l) == std::pair<std::size_t, std::size_t>{0, 8});
  CHECK(disc_forms_isomorphic(l, make_lattice("E8(-1)"), +1));

  // All printed diagrams verify inside their configurations.
  for (const char* tag : {"clebsch", "cayley", "x3n4", "ns2_square"}) {
    const Configuration conf = build_configuration(tag);
    const auto [a, b] = printed_chains(tag);
    CHECK(verify_root_chain(conf, a));
    CHECK(verify_root_chain(conf, b));
  }

  const Configuration clebsch = build_configuration("clebsch");
  auto [a, b] = printed_chains("clebsch");
  // Two adjacent labels with intersection 0: swap breaks the diagram.
  RootChain broken = a;
  std::swap(broken.chain[0], broken.chain[6]);
  CHECK_FALSE(verify_root_chain(clebsch, broken));
  // Wrong branch node.
  RootChain rebranched = a;
  rebranched.branch = b.branch;
  CHECK_FALSE(verify_root_chain(clebsch, rebranched));
  // Unknown label throws.
  RootChain unknown = a;
  unknown.branch = "M0";  // not a Clebsch curve
  CHECK_THROWS_AS(verify_root_chain(clebsch, unknown), std::invalid_argument);
  CHECK_THROWS_AS(printed_chains("gen"), std::invalid_argument);
}

TEST_CASE("splitting off the two E8(-1) chains") {
  const Configuration clebsch = build_configuration("clebsch");
  const Configuration cayley = build_configuration("cayley");
  const Configuration x3n4 = build_configuration("x3n4");
  const Configuration square = build_configuration("ns2_square");

  {
    const auto [a, b] = printed_chains("clebsch");
    const EmbeddedSublattice r = split_off_e8_pair(clebsch, a, b);
    CHECK(r.rank() == 4);
    CHECK(r.disc() == clebsch.ns.disc());
    // The residual is U (+) T10(-1): hyperbolic signature and the T10 form.
    const Lattice rl = r.as_lattice("clebsch-residual");
    CHECK(signature(rl) == std::pair<std::size_t, std::size_t>{1, 3});
    CHECK(disc_forms_opposite(rl, Lattice("T10", binary(4, 1, 4))));
    // The printed isotropic pair lies in the residual.
    const std::vector<Int> u1 = clebsch.combination(
        {{"N134", -2}, {"N124", -5}, {"N123", -1}, {"N034", 4},  {"N024", 5},
         {"N023", 1},  {"N014", 7},  {"N013", 6},  {"N012", 8},  {"N01", 13},
         {"N02", 2},   {"N04", 8},   {"N12", 1},   {"N13", -1},  {"C234", 5},
         {"C134", -3}, {"C124", -4}, {"C032", 1}});
    CHECK(sublattice_contains(clebsch.ns, r, u1));
  }
  {
    const auto [a, b] = printed_chains("cayley");
    const Lattice rl =
        split_off_e8_pair(cayley, a, b).as_lattice("cayley-residual");
    CHECK(same_disc_data(rl, make_lattice("U+<-2>+<-6>")));
  }
  {
    const auto [a, b] = printed_chains("x3n4");
    const Lattice rl =
        split_off_e8_pair(x3n4, a, b).as_lattice("x3n4-residual");
    CHECK(same_disc_data(rl, make_lattice("U+<-4>+<-6>")));
  }
  {
    const auto [a, b] = printed_chains("ns2_square");
    const Lattice rl =
        split_off_e8_pair(square, a, b).as_lattice("square-residual");
    CHECK(rl.rank() == 2);
    CHECK(same_disc_data(rl, make_lattice("U(2)")));
  }

  // Error paths: a chain paired with itself is not orthogonal; a broken
  // chain is rejected before orthogonality.
  const auto [a, b] = printed_chains("clebsch");
  CHECK_THROWS_AS(split_off_e8_pair(clebsch, a, a), std::invalid_argument);
  RootChain broken = b;
  std::swap(broken.chain[1], broken.chain[5]);
  CHECK_THROWS_AS(split_off_e8_pair(clebsch, a, broken),
                  std::invalid_argument);
}

TEST_CASE("transcendental-lattice certificates") {
  const Configuration gen = build_configuration("gen");
  const Configuration clebsch = build_configuration("clebsch");
  const Configuration cayley = build_configuration("cayley");

  CHECK(verify_transcendental_candidate(cayley.ns, make_lattice("<2>+<6>")));
  CHECK(verify_transcendental_candidate(clebsch.ns,
                                        Lattice("T10", binary(4, 1, 4))));
  // Same determinant, same group Z/15, different form.
  CHECK_FALSE(verify_transcendental_candidate(
      clebsch.ns, Lattice("other", binary(2, 1, 8))));
  // Wrong rank, wrong signature, wrong determinant.
  CHECK_FALSE(verify_transcendental_candidate(clebsch.ns, make_lattice("U")));
  CHECK_FALSE(verify_transcendental_candidate(
      clebsch.ns, Lattice("neg", binary(-4, -1, -4))));
  CHECK_FALSE(
      verify_transcendental_candidate(cayley.ns, make_lattice("<2>+<24>")));

  // The generic Hessian: T_gen against the 20-curve configuration.
  CHECK(verify_transcendental_candidate(gen.ns, make_lattice("Tgen")));

  // Eckardt strata: certificate for each table row.
  const struct {
    const char* tag;
    const char* t;
  } rows[] = {{"6", "U+<24>"},       {"4", "U(3)+<4>"},
              {"3", "U+U(6)"},       {"3b", "U+U(6)"},
              {"2", "U+<4>+<-12>"},  {"2p", "U+<4>+<-12>"},
              {"1", "U+U(2)+<-12>"}, {"hess", "Tgen"}};
  for (const auto& row : rows) {
    const Lattice ns =
        eckardt_sublattice(clebsch, row.tag).as_lattice("eckardt");
    CHECK(verify_transcendental_candidate(ns, make_lattice(row.t)));
  }

  // Nodal Cayley surfaces: T_kn = <2> (+) <6> (+) <-2>^(4-k).
  std::string t_kn = "<2>+<6>+<-2>+<-2>+<-2>";
  for (int k = 1; k <= 3; ++k) {
    const Lattice ns = nodal_sublattice(cayley, k).as_lattice("nodal");
    CHECK(verify_transcendental_candidate(ns, make_lattice(t_kn)));
    t_kn.resize(t_kn.size() - 5);  // drop one "+<-2>"
  }
  CHECK(verify_transcendental_candidate(cayley.ns, make_lattice(t_kn)));

  // Isometry invariance: reordering the summands changes nothing.
  CHECK(verify_transcendental_candidate(cayley.ns, make_lattice("<6>+<2>")));
}

TEST_CASE("rank-2 transcendental enumeration") {
  const Configuration clebsch = build_configuration("clebsch");
  const Configuration cayley = build_configuration("cayley");
  const Configuration x3n4 = build_configuration("x3n4");

  // det 15 has two classes; only the T10 form survives.
  const auto t10 = rank2_transcendental_enumerate(clebsch.ns);
  REQUIRE(t10.size() == 1);
  CHECK(t10[0].gram() == binary(4, 1, 4));
  CHECK(enumerate_even_binary(15).size() == 2);

  // det 12 has two classes; only <2> (+) <6> survives.
  const auto t4n = rank2_transcendental_enumerate(cayley.ns);
  REQUIRE(t4n.size() == 1);
  CHECK(t4n[0].gram() == binary(2, 0, 6));
  CHECK(enumerate_even_binary(12).size() == 2);

  // det 24 has two classes; only <4> (+) <6> survives.
  const auto t3n4 = rank2_transcendental_enumerate(x3n4.ns);
  REQUIRE(t3n4.size() == 1);
  CHECK(t3n4[0].gram() == binary(4, 0, 6));

  CHECK_THROWS_AS(rank2_transcendental_enumerate(make_lattice("U")),
                  std::invalid_argument);
}

TEST_CASE("mixed-case configurations: stratum basis plus isolated node") {
  for (const auto& [tag, disc] :
       {std::pair<const char*, int>{"x1n6", -48}, {"x1n4", -72}}) {
    const Configuration conf = build_configuration(tag);
    CHECK(conf.ns.rank() == 20);
    CHECK(conf.ns.disc() == disc);
    CHECK(signature(conf.ns) == std::pair<std::size_t, std::size_t>{1, 19});
    // The node class M0 is a (-2)-class meeting nothing.
    const std::size_t m0 = conf.index_of("M0");
    for (std::size_t j = 0; j < conf.size(); ++j)
      CHECK(conf.gram(m0, j) == (j == m0 ? -2 : 0));
  }

  // Graph tags: spec names and the legacy aliases agree.
  const Configuration sq = build_configuration("ns2_square");
  const Configuration sq_alias = build_configuration("square16");
  CHECK(sq.name == "ns2_square");
  CHECK(sq_alias.name == "ns2_square");
  CHECK(sq.gram == sq_alias.gram);
  CHECK(sq.labels == sq_alias.labels);
  const Configuration cube = build_configuration("ns1_cube");
  CHECK(cube.name == "ns1_cube");
  CHECK(build_configuration("cube20").gram == cube.gram);
}

TEST_CASE("mixed-case overlattice analyses") {
  // One node + six Eckardt points: the only even index-2 overlattice of
  // E8(-1)^2 (+) U (+) <-24> (+) <-2> glues along the <-24> summand, which
  // stays primitive under specialization, so nothing is admissible and the
  // transcendental lattice is the unique candidate <2> (+) <24>.
  {
    const MixedCaseReport r = analyze_mixed_case("x1n6");
    CHECK(r.visible.rank() == 20);
    CHECK(r.visible.disc() == -48);
    CHECK(r.index_prime == 2);
    CHECK(r.overlattice_count == 1);
    CHECK(r.admissible_count == 0);
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].label == "index 1");
    REQUIRE(r.branches[0].transcendental.size() == 1);
    CHECK(r.branches[0].transcendental[0].gram() == binary(2, 0, 24));
    // <2> (+) <24> is the unique candidate among all four det-48 classes.
    CHECK(enumerate_even_binary(48).size() == 4);
  }
  // One node + four Eckardt points: the index-3 glue lives in the U(3)
  // summand and cannot be excluded; both branches are reported.
  {
    const MixedCaseReport r = analyze_mixed_case("x1n4");
    CHECK(r.visible.disc() == -72);
    CHECK(r.index_prime == 3);
    CHECK(r.overlattice_count == 2);
    CHECK(r.admissible_count == 2);
    REQUIRE(r.branches.size() == 2);
    CHECK(r.branches[0].label == "index 1");
    CHECK(r.branches[0].ns_model.disc() == -72);
    REQUIRE(r.branches[0].transcendental.size() == 1);
    CHECK(r.branches[0].transcendental[0].gram() == binary(6, 0, 12));
    CHECK(r.branches[1].label == "index 3");
    CHECK(r.branches[1].ns_model.disc() == -8);
    REQUIRE(r.branches[1].transcendental.size() == 1);
    CHECK(r.branches[1].transcendental[0].gram() == binary(2, 0, 4));
    // The index-3 overlattice has the disc data of E8^2 (+) U (+) <-4> (+) <-2>.
    CHECK(same_disc_data(r.branches[1].ns_model,
                         make_lattice("E8(-1)+E8(-1)+U+<-4>+<-2>")));
  }
  // Three nodes + four Eckardt points: no even index-2 overlattice exists at
  // all (det 6 admits no even binary form), so the curve span is the full
  // Neron-Severi lattice and T = <4> (+) <6>.
  {
    const MixedCaseReport r = analyze_mixed_case("x3n4");
    CHECK(r.visible.disc() == -24);
    CHECK(r.overlattice_count == 0);
    CHECK(r.admissible_count == 0);
    CHECK(enumerate_even_binary(6).empty());
    REQUIRE(r.branches.size() == 1);
    REQUIRE(r.branches[0].transcendental.size() == 1);
    CHECK(r.branches[0].transcendental[0].gram() == binary(4, 0, 6));
  }
  CHECK_THROWS_AS(analyze_mixed_case("clebsch"), std::invalid_argument);
}
