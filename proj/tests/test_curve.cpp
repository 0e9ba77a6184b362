#include "hessk3/curve.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"

using namespace hessk3;

namespace {

using Terms = std::vector<std::pair<std::string, Int>>;

IntMat class_gram(const Configuration& conf,
                  const std::vector<std::vector<Int>>& classes) {
  IntMat g(classes.size(), classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      g(i, j) = conf.ns.pair(classes[i], classes[j]);
  return g;
}

std::vector<std::vector<Int>> classes_of(const Configuration& conf,
                                         const std::vector<std::string>& ls) {
  std::vector<std::vector<Int>> out;
  for (const auto& l : ls) out.push_back(conf.class_of(l));
  return out;
}

// Gram of an E8(-1) drawn as a 7-node chain with one branch node attached to
// the third chain node; order: chain nodes then the branch node.
IntMat chain_e8_gram() {
  IntMat g(8, 8);
  for (int i = 0; i < 8; ++i) g(i, i) = -2;
  for (int i = 0; i + 1 < 7; ++i) {
    g(i, i + 1) = 1;
    g(i + 1, i) = 1;
  }
  g(2, 7) = 1;
  g(7, 2) = 1;
  return g;
}

void check_chain(const Configuration& conf,
                 const std::vector<std::string>& chain) {
  REQUIRE(chain.size() == 8);
  CHECK(class_gram(conf, classes_of(conf, chain)) == chain_e8_gram());
}

void check_chains_orthogonal(const Configuration& conf,
                             const std::vector<std::string>& a,
                             const std::vector<std::string>& b) {
  for (const auto& la : a)
    for (const auto& lb : b)
      CHECK(conf.ns.pair(conf.class_of(la), conf.class_of(lb)) == 0);
}

Int pair_of(const std::string& a, const std::string& b) {
  return intersection(parse_curve(a), parse_curve(b));
}

}  // namespace

TEST_CASE("curve parsing and canonical labels") {
  CHECK(parse_curve("N01").label() == "N01");
  CHECK(parse_curve("N10").label() == "N01");
  CHECK(parse_curve("N432").label() == "N234");
  CHECK(parse_curve("C234").label() == "C234");
  CHECK(parse_curve("C423").label() == "C234");
  CHECK(parse_curve("C342").label() == "C234");
  CHECK(parse_curve("C243").label() == "C243");
  CHECK(parse_curve("C432").label() == "C243");
  CHECK(parse_curve("C032").label() == "C032");
  CHECK(parse_curve("L10").label() == "L01");
  CHECK(parse_curve("M3").label() == "M3");
  CHECK(parse_curve("N012") == parse_curve("N210"));
  CHECK_FALSE(parse_curve("C234") == parse_curve("C243"));

  for (const char* bad : {"N00", "N0", "N0123", "N05", "C12", "C125", "C112",
                          "L04", "L0", "M4", "M", "X01", "", "N"})
    CHECK_THROWS_AS(parse_curve(bad), std::invalid_argument);
}

TEST_CASE("intersection rules match the published tables") {
  // self-intersections
  for (const char* l : {"N01", "N012", "C234", "L01", "M0"})
    CHECK(pair_of(l, l) == -2);

  // N-N
  CHECK(pair_of("N01", "N012") == 1);
  CHECK(pair_of("N01", "N234") == 0);
  CHECK(pair_of("N01", "N02") == 0);
  CHECK(pair_of("N012", "N013") == 0);
  CHECK(pair_of("N23", "N123") == 1);

  // C-N: C_klm meets N_ab iff all five indices distinct, N_abc iff same set
  CHECK(pair_of("C234", "N01") == 1);
  CHECK(pair_of("C234", "N12") == 0);
  CHECK(pair_of("C234", "N234") == 1);
  CHECK(pair_of("C243", "N234") == 1);
  CHECK(pair_of("C234", "N012") == 0);

  // C-C: one shared ordered pair up to cyclic rotation
  CHECK(pair_of("C124", "C041") == 1);  // the paper's example
  CHECK(pair_of("C234", "C134") == 1);  // share (3,4)
  CHECK(pair_of("C234", "C143") == 0);
  CHECK(pair_of("C234", "C243") == 0);  // partner lines are disjoint
  CHECK(pair_of("C012", "C021") == 0);

  // L and M
  CHECK(pair_of("M0", "L01") == 1);
  CHECK(pair_of("M1", "L01") == 1);
  CHECK(pair_of("M2", "L01") == 0);
  CHECK(pair_of("L01", "N01") == 1);
  CHECK(pair_of("L01", "N02") == 0);
  CHECK(pair_of("L01", "N234") == 1);
  CHECK(pair_of("L01", "N023") == 0);
  CHECK(pair_of("L01", "L02") == 0);
  CHECK(pair_of("L01", "L23") == 0);
  CHECK(pair_of("M0", "M1") == 0);
  CHECK(pair_of("M0", "N01") == 0);
  CHECK(pair_of("M0", "N012") == 0);
  CHECK(pair_of("C012", "L01") == 0);
  CHECK(pair_of("C012", "M0") == 0);
}

TEST_CASE("permutation equivariance of the intersection rules") {
  auto check_equivariance = [](const std::vector<std::string>& labels,
                               const std::vector<int>& perm) {
    std::vector<Curve> curves, mapped;
    for (const auto& l : labels) {
      curves.push_back(parse_curve(l));
      mapped.push_back(permute_curve(curves.back(), perm));
    }
    for (std::size_t i = 0; i < curves.size(); ++i)
      for (std::size_t j = 0; j < curves.size(); ++j)
        CHECK(intersection(curves[i], curves[j]) ==
              intersection(mapped[i], mapped[j]));
  };

  Configuration clebsch = build_configuration("clebsch");
  Configuration cayley = build_configuration("cayley");

  std::mt19937 rng(20260814);
  std::vector<int> s5 = {0, 1, 2, 3, 4};
  std::vector<int> s4 = {0, 1, 2, 3};
  for (int rep = 0; rep < 4; ++rep) {
    std::shuffle(s5.begin(), s5.end(), rng);
    check_equivariance(clebsch.labels, s5);
    std::shuffle(s4.begin(), s4.end(), rng);
    std::vector<int> fix4 = s4;
    fix4.push_back(4);
    check_equivariance(cayley.labels, fix4);
  }

  CHECK(permute_curve(parse_curve("C234"), {1, 0, 2, 3, 4}).label() == "C234");
  CHECK(permute_curve(parse_curve("C234"), {0, 1, 3, 2, 4}).label() == "C243");
  CHECK_THROWS_AS(permute_curve(parse_curve("M3"), {0, 1, 2, 4, 3}),
                  std::invalid_argument);
}

TEST_CASE("the 20 N-curves span a rank 16 lattice of discriminant -48") {
  Configuration gen = build_configuration("gen");
  CHECK(gen.size() == 20);
  CHECK(gen.ns.rank() == 16);
  CHECK(gen.ns.disc() == -48);
  CHECK(gen.basis_labels.size() == 16);
  auto sig = signature(gen.ns);
  CHECK(sig.first == 1);
  CHECK(sig.second == 15);
  // Every curve class pairs with the basis exactly as the ambient matrix says.
  for (std::size_t i = 0; i < gen.size(); ++i)
    for (std::size_t j = 0; j < gen.size(); ++j)
      CHECK(gen.ns.pair(gen.classes.row(i), gen.classes.row(j)) ==
            gen.gram(i, j));
}

TEST_CASE("clebsch configuration: rank 20, disc -15, difference classes") {
  Configuration cl = build_configuration("clebsch");
  CHECK(cl.size() == 40);
  CHECK(cl.ns.rank() == 20);
  CHECK(cl.ns.disc() == -15);
  auto sig = signature(cl.ns);
  CHECK(sig.first == 1);
  CHECK(sig.second == 19);

  // Of the two even positive definite binary forms of determinant 15 only
  // [[4,1],[1,4]] has the opposite form; [[2,1],[1,8]] does not.
  Lattice t10("T10", IntMat{{4, 1}, {1, 4}});
  Lattice other("other-15", IntMat{{2, 1}, {1, 8}});
  CHECK(disc_forms_opposite(cl.ns, t10));
  CHECK_FALSE(disc_forms_opposite(cl.ns, other));

  // c_ij = Cabc - Cacb realize the A4 roots scaled by -2: the canonical
  // representative equals s_ij (e_i - e_j) with s_ij = (-1)^{j-i+1}, so
  // c_ij . c_kl = -2 s_ij s_kl (d_ik - d_il - d_jk + d_jl).  In particular
  // c01.c02 = 2 and disjoint pairs give 0.  All are orthogonal to the
  // N-curve classes.
  auto sgn = [](int i, int j) { return (j - i) % 2 == 0 ? -1 : 1; };
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
  CHECK(cl.ns.pair(c_class(cl, 0, 1), c_class(cl, 0, 2)) == 2);
  for (auto [i, j] : pairs) {
    auto cij = c_class(cl, i, j);
    for (auto [k, l] : pairs) {
      int inner = (i == k) - (i == l) - (j == k) + (j == l);
      CHECK(cl.ns.pair(cij, c_class(cl, k, l)) ==
            -2 * sgn(i, j) * sgn(k, l) * inner);
    }
    for (const auto& label : cl.labels)
      if (label[0] == 'N')
        CHECK(cl.ns.pair(cij, cl.class_of(label)) == 0);
  }

  // {c01, c12, c23, c34} is a basis of a copy of A4(-2).
  std::vector<std::vector<Int>> cb = {c_class(cl, 0, 1), c_class(cl, 1, 2),
                                      c_class(cl, 2, 3), c_class(cl, 3, 4)};
  CHECK(class_gram(cl, cb) == make_lattice("A4(-2)").gram());
}

TEST_CASE("published hyperbolic and T10(-1) bases inside the clebsch span") {
  Configuration cl = build_configuration("clebsch");

  const Terms u1_terms = {{"N134", -2}, {"N124", -5}, {"N123", -1},
                          {"N034", 4},  {"N024", 5},  {"N023", 1},
                          {"N014", 7},  {"N013", 6},  {"N012", 8},
                          {"N01", 13},  {"N02", 2},   {"N04", 8},
                          {"N12", 1},   {"N13", -1},  {"C234", 5},
                          {"C134", -3}, {"C124", -4}, {"C032", 1}};
  // u2 = u1 - C032: the C124 coefficient stays -4 (perpendicularity to the
  // chain classes C024, C124, C041 forces it) and only the C032 term drops.
  const Terms u2_terms = {{"N134", -2}, {"N124", -5}, {"N123", -1},
                          {"N034", 4},  {"N024", 5},  {"N023", 1},
                          {"N014", 7},  {"N013", 6},  {"N012", 8},
                          {"N01", 13},  {"N02", 2},   {"N04", 8},
                          {"N12", 1},   {"N13", -1},  {"C234", 5},
                          {"C134", -3}, {"C124", -4}};
  const Terms t1_terms = {{"N124", 2},  {"N123", 2}, {"N034", -5},
                          {"N024", -2}, {"N023", -2}, {"N014", -1},
                          {"N012", 2},  {"N01", 1},   {"N03", -3},
                          {"N04", -4},  {"N12", 3},   {"N13", 2},
                          {"N34", -3},  {"C234", 1},  {"C134", 1},
                          {"C032", -1}};
  const Terms t2_terms = {{"N134", -4}, {"N124", -9}, {"N123", -4},
                          {"N034", 8},  {"N024", 9},  {"N023", 4},
                          {"N014", 11}, {"N013", 9},  {"N012", 11},
                          {"N01", 19},  {"N02", 4},   {"N03", 2},
                          {"N04", 14},  {"N12", -1},  {"N13", -3},
                          {"C234", 7},  {"C134", -5}, {"C124", -6},
                          {"C032", 2}};

  auto u1 = cl.combination(u1_terms);
  auto u2 = cl.combination(u2_terms);
  auto t1 = cl.combination(t1_terms);
  auto t2 = cl.combination(t2_terms);

  CHECK(class_gram(cl, {u1, u2}) == make_lattice("U").gram());
  CHECK(class_gram(cl, {t1, t2}) == (IntMat{{-4, -1}, {-1, -4}}));
  for (const auto& u : {u1, u2})
    for (const auto& t : {t1, t2}) CHECK(cl.ns.pair(u, t) == 0);

  const std::vector<std::string> chain1 = {"N034", "N04",  "N024", "C024",
                                           "C124", "C041", "N23",  "N24"};
  const std::vector<std::string> chain2 = {"N12",  "N012", "N01",  "C234",
                                           "C142", "C143", "N134", "N013"};
  check_chain(cl, chain1);
  check_chain(cl, chain2);
  check_chains_orthogonal(cl, chain1, chain2);
  for (const auto& v : {u1, u2, t1, t2})
    for (const auto& chain : {chain1, chain2})
      for (const auto& l : chain) CHECK(cl.ns.pair(v, cl.class_of(l)) == 0);

  // The 16 chain curves plus u1,u2,t1,t2 span a full sublattice with the
  // same discriminant, certifying NS = E8(-1)^2 + U + T10(-1).
  std::vector<std::vector<Int>> all = classes_of(cl, chain1);
  for (const auto& v : classes_of(cl, chain2)) all.push_back(v);
  all.push_back(u1);
  all.push_back(u2);
  all.push_back(t1);
  all.push_back(t2);
  CHECK(det(class_gram(cl, all)) == -15);
}

TEST_CASE("eckardt sublattices have the discriminant data of the T-table") {
  Configuration cl = build_configuration("clebsch");
  struct Row {
    const char* tag;
    std::size_t rank;
    Int disc;
    const char* t_spec;
  };
  const std::vector<Row> table = {
      {"6", 19, 24, "U+<24>"},        {"4", 19, 36, "U(3)+<4>"},
      {"3", 18, -36, "U+U(6)"},       {"3b", 18, -36, "U+U(6)"},
      {"2", 18, -48, "U+<4>+<-12>"},  {"2p", 18, -48, "U+<4>+<-12>"},
      {"1", 17, 48, "U+U(2)+<-12>"},  {"hess", 16, -48, "Tgen"}};
  for (const auto& row : table) {
    CAPTURE(row.tag);
    auto ns = eckardt_sublattice(cl, row.tag);
    CHECK(ns.rank() == row.rank);
    CHECK(ns.disc() == row.disc);
    Lattice l = ns.as_lattice(std::string("ns-") + row.tag);
    auto sig = signature(l);
    CHECK(sig.first == 1);
    CHECK(sig.second == row.rank - 1);
    CHECK(disc_forms_opposite(l, make_lattice(row.t_spec)));
  }

  // The two routes to a given count give the same genus.
  auto ns3 = eckardt_sublattice(cl, "3").as_lattice("ns3");
  auto ns3b = eckardt_sublattice(cl, "3b").as_lattice("ns3b");
  CHECK(disc_forms_isomorphic(ns3, ns3b, +1));
  auto ns2 = eckardt_sublattice(cl, "2").as_lattice("ns2");
  auto ns2p = eckardt_sublattice(cl, "2p").as_lattice("ns2p");
  CHECK(disc_forms_isomorphic(ns2, ns2p, +1));

  // The fully generic route recovers the N-curve span.
  Configuration gen = build_configuration("gen");
  auto hess = eckardt_sublattice(cl, "hess").as_lattice("ns-hess");
  CHECK(hess.disc() == gen.ns.disc());
  CHECK(disc_forms_isomorphic(hess, gen.ns, +1));
}

TEST_CASE("cayley configuration: 30 curves, disc -12, T = <2>+<6>") {
  Configuration ca = build_configuration("cayley");
  CHECK(ca.size() == 30);
  CHECK(ca.ns.rank() == 20);
  CHECK(ca.ns.disc() == -12);
  auto sig = signature(ca.ns);
  CHECK(sig.first == 1);
  CHECK(sig.second == 19);

  const std::vector<std::string> chain1 = {"N012", "N02", "N024", "N24",
                                           "N234", "N34", "N134", "N04"};
  const std::vector<std::string> chain2 = {"N013", "N03", "L03", "M3",
                                           "L23",  "M2",  "L12", "M0"};
  check_chain(ca, chain1);
  check_chain(ca, chain2);
  check_chains_orthogonal(ca, chain1, chain2);

  // Residual after splitting off the two E8(-1)'s: U + <-2> + <-6>.
  std::vector<std::vector<Int>> chains = classes_of(ca, chain1);
  for (const auto& v : classes_of(ca, chain2)) chains.push_back(v);
  IntMat rows(chains.size(), ca.ns.rank());
  for (std::size_t i = 0; i < chains.size(); ++i) rows.set_row(i, chains[i]);
  auto resid = orthogonal_complement(ca.ns, rows);
  CHECK(resid.rank() == 4);
  CHECK(resid.disc() == -12);
  Lattice rl = resid.as_lattice("cayley-resid");
  auto rsig = signature(rl);
  CHECK(rsig.first == 1);
  CHECK(rsig.second == 3);
  CHECK(disc_forms_isomorphic(rl, make_lattice("U+<-2>+<-6>"), +1));

  // Rank-two candidates of determinant 12: only <2>+<6> matches.
  auto cands = enumerate_even_binary(12);
  REQUIRE(cands.size() == 2);
  std::vector<IntMat> matching;
  for (const auto& g : cands)
    if (disc_forms_opposite(ca.ns, Lattice("cand", g))) matching.push_back(g);
  REQUIRE(matching.size() == 1);
  CHECK(matching[0] == (IntMat{{2, 0}, {0, 6}}));

  // A2 itself does not embed into T (all three parameters odd).
  CHECK_FALSE(slh_embed(1, 1, 1).has_value());
}

TEST_CASE("nodal configurations match the perpendicular route") {
  Configuration ca = build_configuration("cayley");
  struct Row {
    int k;
    const char* name;
    std::size_t curves;
    std::size_t rank;
    Int disc;
    const char* t_spec;
  };
  const std::vector<Row> table = {
      {1, "nodal1", 21, 17, 96, "<2>+<6>+<-2>+<-2>+<-2>"},
      {2, "nodal2", 23, 18, -48, "<2>+<6>+<-2>+<-2>"},
      {3, "nodal3", 26, 19, 24, "<2>+<6>+<-2>"}};
  for (const auto& row : table) {
    CAPTURE(row.k);
    Configuration conf = build_configuration(row.name);
    CHECK(conf.size() == row.curves);
    CHECK(conf.ns.rank() == row.rank);
    CHECK(conf.ns.disc() == row.disc);
    auto sig = signature(conf.ns);
    CHECK(sig.first == 1);
    CHECK(sig.second == row.rank - 1);

    auto perp = nodal_sublattice(ca, row.k);
    CHECK(perp.rank() == row.rank);
    CHECK(perp.disc() == row.disc);
    Lattice pl = perp.as_lattice(std::string("ns-") + row.name);
    CHECK(disc_forms_isomorphic(pl, conf.ns, +1));
    CHECK(disc_forms_opposite(pl, make_lattice(row.t_spec)));
  }
  CHECK_THROWS_AS(nodal_sublattice(ca, 0), std::invalid_argument);
  CHECK_THROWS_AS(nodal_sublattice(ca, 4), std::invalid_argument);
}

TEST_CASE("three-nodal four-eckardt configuration: disc -24, T = <4>+<6>") {
  Configuration x = build_configuration("x3n4");
  CHECK(x.size() == 28);
  CHECK(x.ns.rank() == 20);
  CHECK(x.ns.disc() == -24);
  auto sig = signature(x.ns);
  CHECK(sig.first == 1);
  CHECK(sig.second == 19);

  const std::vector<std::string> chain1 = {"N23",  "N123", "N13", "N013",
                                           "N01",  "L01",  "M0",  "N134"};
  const std::vector<std::string> chain2 = {"N124", "N24", "N024", "N04",
                                           "N034", "L12", "M2",   "N02"};
  check_chain(x, chain1);
  check_chain(x, chain2);
  check_chains_orthogonal(x, chain1, chain2);

  std::vector<std::vector<Int>> chains = classes_of(x, chain1);
  for (const auto& v : classes_of(x, chain2)) chains.push_back(v);
  IntMat rows(chains.size(), x.ns.rank());
  for (std::size_t i = 0; i < chains.size(); ++i) rows.set_row(i, chains[i]);
  auto resid = orthogonal_complement(x.ns, rows);
  CHECK(resid.rank() == 4);
  CHECK(resid.disc() == -24);
  CHECK(disc_forms_isomorphic(resid.as_lattice("x3n4-resid"),
                              make_lattice("U+<-4>+<-6>"), +1));

  auto cands = enumerate_even_binary(24);
  REQUIRE(cands.size() == 2);
  std::vector<IntMat> matching;
  for (const auto& g : cands)
    if (disc_forms_opposite(x.ns, Lattice("cand", g))) matching.push_back(g);
  REQUIRE(matching.size() == 1);
  CHECK(matching[0] == (IntMat{{4, 0}, {0, 6}}));
}

TEST_CASE("graph configurations: square with pendants and subdivided cube") {
  Configuration sq = build_configuration("square16");
  CHECK(sq.size() == 20);
  CHECK(sq.ns.rank() == 18);
  CHECK(sq.ns.disc() == -4);
  auto sig = signature(sq.ns);
  CHECK(sig.first == 1);
  CHECK(sig.second == 17);

  const std::vector<std::string> chain1 = {"c14", "c15", "c0", "c1",
                                           "c2",  "c3",  "c4", "q0"};
  const std::vector<std::string> chain2 = {"c6",  "c7",  "c8",  "c9",
                                           "c10", "c11", "c12", "q2"};
  check_chain(sq, chain1);
  check_chain(sq, chain2);
  check_chains_orthogonal(sq, chain1, chain2);

  std::vector<std::vector<Int>> chains = classes_of(sq, chain1);
  for (const auto& v : classes_of(sq, chain2)) chains.push_back(v);
  IntMat rows(chains.size(), sq.ns.rank());
  for (std::size_t i = 0; i < chains.size(); ++i) rows.set_row(i, chains[i]);
  auto resid = orthogonal_complement(sq.ns, rows);
  CHECK(resid.rank() == 2);
  CHECK(resid.disc() == -4);
  Lattice rl = resid.as_lattice("square16-resid");
  auto rsig = signature(rl);
  CHECK(rsig.first == 1);
  CHECK(rsig.second == 1);
  CHECK(disc_forms_isomorphic(rl, make_lattice("U(2)"), +1));

  Configuration cube = build_configuration("cube20");
  CHECK(cube.size() == 20);
  CHECK(cube.ns.rank() == 17);
  CHECK(cube.ns.disc() == 16);
  auto csig = signature(cube.ns);
  CHECK(csig.first == 1);
  CHECK(csig.second == 16);
  Lattice tns1 = make_lattice("U+U(2)+<-4>");
  CHECK(disc_forms_opposite(cube.ns, tns1));

  // Difference of the opposite pendant curves (the exceptional curves over
  // the two blown-up plane points): its perp is the smaller Neron-Severi
  // lattice, matching the subdivided-cube span.
  std::vector<Int> diff = sq.class_of("q0");
  {
    auto q2v = sq.class_of("q2");
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= q2v[i];
  }
  IntMat dm(1, sq.ns.rank());
  dm.set_row(0, diff);
  auto perp = orthogonal_complement(sq.ns, dm);
  CHECK(perp.rank() == 17);
  CHECK(perp.disc() == 16);
  Lattice perpl = perp.as_lattice("square16-pendant-perp");
  CHECK(disc_forms_opposite(perpl, tns1));
  CHECK(disc_forms_isomorphic(perpl, cube.ns, +1));
}

TEST_CASE("shioda-tate discriminants of the named fibrations") {
  // 16-cycle family: I0*, I8* and four I1, Mordell-Weil Z/2.
  CHECK(shioda_tate_disc({"I0*", "I8*", "I1", "I1", "I1", "I1"}, 0, 2) == 4);
  // cube family: I4*, I4, I0* and four I1, Mordell-Weil Z/2.
  CHECK(shioda_tate_disc({"I4*", "I4", "I0*", "I1", "I1", "I1", "I1"}, 0, 2) ==
        16);
  // Cayley fibration: three I6 and three I2, torsion of order 12.
  CHECK(shioda_tate_disc({"I6", "I6", "I6", "I2", "I2", "I2"}, 0, 12) == 12);
  // E-type contributions.
  CHECK(shioda_tate_disc({"II*", "III*", "IV*", "II", "III", "IV"}, 0, 1) ==
        36);
  // A torsion order not dividing the fiber product squarely still yields the
  // exact rational value.
  CHECK(shioda_tate_disc({"I9"}, 0, 2) == Rat(9, 4));
  CHECK_THROWS_AS(shioda_tate_disc({"I1"}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(shioda_tate_disc({"I1"}, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(shioda_tate_disc({"I0"}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(shioda_tate_disc({"V2"}, 0, 1), std::invalid_argument);
}

TEST_CASE("norm -12 vector in T with complement U + U(2) + <-4>") {
  Lattice t = make_lattice("Tgen");
  std::vector<Int> v = {0, 0, 0, 0, 1, 2};
  CHECK(t.pair(v, v) == -12);
  IntMat vm(1, 6);
  vm.set_row(0, v);
  auto comp = orthogonal_complement(t, vm);
  CHECK(comp.rank() == 5);
  CHECK(comp.disc() == -16);
  Lattice target = make_lattice("U+U(2)+<-4>");
  CHECK(disc_forms_isomorphic(comp.as_lattice("comp"), target, +1));
  // The complement is exactly U + U(2) + <(1,0)> inside T.
  IntMat expl(5, 6);
  for (int i = 0; i < 4; ++i) expl(i, i) = 1;
  expl(4, 4) = 1;
  auto sub = span_sublattice(t, expl);
  CHECK(sub.gram == target.gram());
  CHECK(sub.disc() == comp.disc());
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(sublattice_contains(t, comp, expl.row(i)));
}
