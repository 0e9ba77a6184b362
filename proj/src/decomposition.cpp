#include <hessk3/decomposition.hpp>

#include <stdexcept>

namespace hessk3 {

namespace {

std::vector<std::string> chain_labels(const RootChain& rc) {
  std::vector<std::string> out(rc.chain.begin(), rc.chain.end());
  out.push_back(rc.branch);
  return out;
}

// Candidate label: "<a>+<c>" for diagonal Grams, the row list otherwise.
std::string binary_label(const IntMat& g) {
  if (g(0, 1) == 0)
    return "<" + g(0, 0).get_str() + ">+<" + g(1, 1).get_str() + ">";
  return "[[" + g(0, 0).get_str() + "," + g(0, 1).get_str() + "],[" +
         g(1, 0).get_str() + "," + g(1, 1).get_str() + "]]";
}

// Same genus data: rank, disc, signature and discriminant form.
bool lattices_match(const Lattice& a, const Lattice& b) {
  return a.rank() == b.rank() && a.disc() == b.disc() &&
         signature(a) == signature(b) && disc_forms_isomorphic(a, b, +1);
}

}  // namespace

IntMat e8_minus_one_gram() {
  IntMat g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  for (std::size_t i = 0; i + 1 < 7; ++i) {
    g(i, i + 1) = 1;
    g(i + 1, i) = 1;
  }
  g(2, 7) = 1;
  g(7, 2) = 1;
  return g;
}

bool verify_root_chain(const Configuration& config, const RootChain& rc) {
  const auto labels = chain_labels(rc);
  std::vector<std::size_t> idx;
  for (const auto& l : labels) idx.push_back(config.index_of(l));
  IntMat g(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) g(i, j) = config.gram(idx[i], idx[j]);
  return g == e8_minus_one_gram();
}

std::pair<RootChain, RootChain> printed_chains(const std::string& tag) {
  if (tag == "clebsch")
    return {RootChain{{"N034", "N04", "N024", "C024", "C124", "C041", "N23"},
                      "N24"},
            RootChain{{"N12", "N012", "N01", "C234", "C142", "C143", "N134"},
                      "N013"}};
  if (tag == "cayley")
    return {RootChain{{"N012", "N02", "N024", "N24", "N234", "N34", "N134"},
                      "N04"},
            RootChain{{"N013", "N03", "L03", "M3", "L23", "M2", "L12"}, "M0"}};
  if (tag == "x3n4")
    return {RootChain{{"N23", "N123", "N13", "N013", "N01", "L01", "M0"},
                      "N134"},
            RootChain{{"N124", "N24", "N024", "N04", "N034", "L12", "M2"},
                      "N02"}};
  if (tag == "ns2_square" || tag == "square16")
    return {RootChain{{"c14", "c15", "c0", "c1", "c2", "c3", "c4"}, "q0"},
            RootChain{{"c6", "c7", "c8", "c9", "c10", "c11", "c12"}, "q2"}};
  throw std::invalid_argument("no drawn chains for configuration: " + tag);
}

EmbeddedSublattice split_off_e8_pair(const Configuration& config,
                                     const RootChain& a, const RootChain& b) {
  if (!verify_root_chain(config, a) || !verify_root_chain(config, b))
    throw std::invalid_argument("split_off_e8_pair: chain is not E8(-1)");
  const auto la = chain_labels(a);
  const auto lb = chain_labels(b);
  for (const auto& x : la)
    for (const auto& y : lb)
      if (config.gram(config.index_of(x), config.index_of(y)) != 0)
        throw std::invalid_argument("split_off_e8_pair: chains not orthogonal");
  IntMat rows(16, config.ns.rank());
  for (std::size_t i = 0; i < 8; ++i) {
    rows.set_row(i, config.class_of(la[i]));
    rows.set_row(8 + i, config.class_of(lb[i]));
  }
  EmbeddedSublattice r = orthogonal_complement(config.ns, rows);
  if (r.rank() + 16 != config.ns.rank() || r.disc() != config.ns.disc())
    throw std::logic_error("split_off_e8_pair: unimodular split failed");
  return r;
}

bool verify_transcendental_candidate(const Lattice& ns, const Lattice& t) {
  if (ns.rank() + t.rank() != 22) return false;
  const auto [plus, minus] = signature(t);
  if (plus != 2 || minus + 2 != t.rank()) return false;
  if (abs(ns.disc()) != abs(t.disc())) return false;
  return disc_forms_opposite(ns, t);
}

std::vector<Lattice> rank2_transcendental_enumerate(const Lattice& ns) {
  if (ns.rank() != 20)
    throw std::invalid_argument(
        "rank2_transcendental_enumerate: need a rank-20 lattice");
  std::vector<Lattice> out;
  for (const IntMat& g : enumerate_even_binary(abs(ns.disc()))) {
    Lattice t(binary_label(g), g);
    if (verify_transcendental_candidate(ns, t)) out.push_back(t);
  }
  return out;
}

MixedCaseReport analyze_mixed_case(const std::string& tag) {
  MixedCaseReport rep;
  rep.tag = tag;
  if (tag == "x1n6" || tag == "x1n4") {
    const bool six = (tag == "x1n6");
    // The curve-level span: specialized Eckardt-stratum NS plus the isolated
    // node class, and the same lattice in split coordinates.
    const Configuration conf = build_configuration(tag);
    const Lattice nice = make_lattice(six ? "E8(-1)+E8(-1)+U+<-24>+<-2>"
                                          : "E8(-1)+E8(-1)+U(3)+<-4>+<-2>");
    if (!lattices_match(conf.ns, nice))
      throw std::logic_error("analyze_mixed_case: model mismatch for " + tag);
    rep.visible = nice;
    rep.index_prime = six ? 2 : 3;
    const auto overs = even_overlattices(nice, rep.index_prime);
    rep.overlattice_count = overs.size();
    // The <-24> summand (coordinate 18) is primitive in NS_6 and stays
    // primitive under specialization, so a glue class meeting that block is
    // excluded for x1n6. The x1n4 glue lies in the U(3) block and cannot be
    // excluded: index 1 and 3 both remain possible.
    std::vector<Overlattice> admissible;
    for (const auto& o : overs) {
      if (six && glue_meets_block(o, rep.index_prime, {18})) continue;
      admissible.push_back(o);
    }
    rep.admissible_count = admissible.size();
    rep.branches.push_back(
        {"index 1", nice, rank2_transcendental_enumerate(nice)});
    for (const IntMat& g : unique_grams(admissible)) {
      Lattice over("index-" + rep.index_prime.get_str() + " overlattice", g);
      rep.branches.push_back({"index " + rep.index_prime.get_str(), over,
                              rank2_transcendental_enumerate(over)});
    }
    return rep;
  }
  if (tag == "x3n4") {
    const Configuration conf = build_configuration("x3n4");
    const auto [a, b] = printed_chains("x3n4");
    const EmbeddedSublattice res = split_off_e8_pair(conf, a, b);
    if (!lattices_match(res.as_lattice("residual"),
                        make_lattice("U+<-4>+<-6>")))
      throw std::logic_error("analyze_mixed_case: x3n4 residual mismatch");
    rep.visible = conf.ns;
    rep.index_prime = 2;  // the only prime whose square divides disc -24
    const auto overs = even_overlattices(conf.ns, rep.index_prime);
    rep.overlattice_count = overs.size();
    // An index-2 overlattice would have discriminant -6 and therefore a
    // rank-2 even positive-definite transcendental lattice of determinant 6;
    // no such lattice exists, so only index 1 survives.
    std::vector<Overlattice> admissible;
    for (const auto& o : overs) {
      Lattice over("index-2 overlattice", o.gram);
      if (!rank2_transcendental_enumerate(over).empty()) admissible.push_back(o);
    }
    rep.admissible_count = admissible.size();
    rep.branches.push_back(
        {"index 1", conf.ns, rank2_transcendental_enumerate(conf.ns)});
    for (const IntMat& g : unique_grams(admissible)) {
      Lattice over("index-2 overlattice", g);
      rep.branches.push_back(
          {"index 2", over, rank2_transcendental_enumerate(over)});
    }
    return rep;
  }
  throw std::invalid_argument("unknown mixed case: " + tag);
}

}  // namespace hessk3
