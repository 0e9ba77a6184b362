#include "hessk3/curve.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace hessk3 {

namespace {

bool distinct(const std::vector<int>& v) {
  std::set<int> s(v.begin(), v.end());
  return s.size() == v.size();
}

bool in_range(const std::vector<int>& v, int hi) {
  return std::all_of(v.begin(), v.end(),
                     [&](int d) { return d >= 0 && d <= hi; });
}

std::vector<int> canonical_rotation(std::vector<int> w) {
  auto best = w;
  for (int r = 0; r < 2; ++r) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    if (w < best) best = w;
  }
  return best;
}

std::set<int> as_set(const std::vector<int>& v) {
  return std::set<int>(v.begin(), v.end());
}

bool share_ordered_pair(const std::vector<int>& a, const std::vector<int>& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a[i] == b[j] && a[(i + 1) % 3] == b[(j + 1) % 3]) return true;
  return false;
}

int kind_order(CurveKind k) { return static_cast<int>(k); }

}  // namespace

std::string Curve::label() const {
  static const char kind_char[] = {'N', 'N', 'C', 'L', 'M'};
  std::string s(1, kind_char[kind_order(kind)]);
  for (int d : idx) s += static_cast<char>('0' + d);
  return s;
}

Curve parse_curve(const std::string& label) {
  auto fail = [&]() -> Curve {
    throw std::invalid_argument("bad curve label: " + label);
  };
  if (label.size() < 2) return fail();
  std::vector<int> digits;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return fail();
    digits.push_back(label[i] - '0');
  }
  if (!distinct(digits)) return fail();
  Curve c;
  switch (label[0]) {
    case 'N':
      if (digits.size() != 2 && digits.size() != 3) return fail();
      if (!in_range(digits, 4)) return fail();
      std::sort(digits.begin(), digits.end());
      c.kind = digits.size() == 2 ? CurveKind::NPair : CurveKind::NTriple;
      c.idx = digits;
      return c;
    case 'C':
      if (digits.size() != 3 || !in_range(digits, 4)) return fail();
      c.kind = CurveKind::CLine;
      c.idx = canonical_rotation(digits);
      return c;
    case 'L':
      if (digits.size() != 2 || !in_range(digits, 3)) return fail();
      std::sort(digits.begin(), digits.end());
      c.kind = CurveKind::LEdge;
      c.idx = digits;
      return c;
    case 'M':
      if (digits.size() != 1 || !in_range(digits, 3)) return fail();
      c.kind = CurveKind::MNode;
      c.idx = digits;
      return c;
    default:
      return fail();
  }
}

Curve permute_curve(const Curve& c, const std::vector<int>& perm) {
  if (perm.size() != 5 || !distinct(perm) || !in_range(perm, 4))
    throw std::invalid_argument("permutation must list images of 0..4");
  std::vector<int> mapped;
  for (int d : c.idx) mapped.push_back(perm[d]);
  Curve out{c.kind, mapped};
  switch (c.kind) {
    case CurveKind::CLine:
      out.idx = canonical_rotation(mapped);
      break;
    case CurveKind::LEdge:
    case CurveKind::MNode:
      if (!in_range(mapped, 3))
        throw std::invalid_argument("permutation moves a node index beyond 3");
      [[fallthrough]];
    default:
      std::sort(out.idx.begin(), out.idx.end());
  }
  return out;
}

Int intersection(const Curve& a, const Curve& b) {
  if (a == b) return -2;
  const Curve& x = kind_order(a.kind) <= kind_order(b.kind) ? a : b;
  const Curve& y = kind_order(a.kind) <= kind_order(b.kind) ? b : a;
  auto sx = as_set(x.idx);
  auto sy = as_set(y.idx);
  switch (x.kind) {
    case CurveKind::NPair:
      switch (y.kind) {
        case CurveKind::NPair:
          return 0;
        case CurveKind::NTriple:  // N_P . N_T = 1 iff P inside T
          return std::includes(sy.begin(), sy.end(), sx.begin(), sx.end()) ? 1
                                                                           : 0;
        case CurveKind::CLine: {  // 1 iff all five indices distinct
          std::set<int> u = sx;
          u.insert(sy.begin(), sy.end());
          return u.size() == 5 ? 1 : 0;
        }
        case CurveKind::LEdge:  // 1 iff same index pair
          return sx == sy ? 1 : 0;
        case CurveKind::MNode:
          return 0;
      }
      break;
    case CurveKind::NTriple:
      switch (y.kind) {
        case CurveKind::NTriple:
          return 0;
        case CurveKind::CLine:  // 1 iff same support
          return sx == sy ? 1 : 0;
        case CurveKind::LEdge: {  // 1 iff all five indices distinct
          std::set<int> u = sx;
          u.insert(sy.begin(), sy.end());
          return u.size() == 5 ? 1 : 0;
        }
        case CurveKind::MNode:
          return 0;
        default:
          break;
      }
      break;
    case CurveKind::CLine:
      if (y.kind == CurveKind::CLine)
        return share_ordered_pair(x.idx, y.idx) ? 1 : 0;
      return 0;  // C meets neither L nor M
    case CurveKind::LEdge:
      if (y.kind == CurveKind::LEdge) return 0;
      // M_k . L_ij = 1 iff k in {i,j}
      return sx.count(y.idx[0]) ? 1 : 0;
    case CurveKind::MNode:
      return 0;
  }
  throw std::logic_error("unhandled curve pair");
}

// ---------------------------------------------------------------------------
// Configurations
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> n_labels() {
  std::vector<std::string> out;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      out.push_back("N" + std::to_string(a) + std::to_string(b));
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c)
        out.push_back("N" + std::to_string(a) + std::to_string(b) +
                      std::to_string(c));
  return out;
}

std::vector<std::string> c_line_labels() {
  std::vector<std::string> out;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) {
        std::string abc = std::to_string(a) + std::to_string(b) +
                          std::to_string(c);
        std::string acb = std::to_string(a) + std::to_string(c) +
                          std::to_string(b);
        out.push_back("C" + abc);
        out.push_back("C" + acb);
      }
  return out;
}

const std::vector<std::string> kGenBasis = {
    "N01",  "N02",  "N03",  "N04",  "N12",  "N13",  "N34",  "N012",
    "N013", "N014", "N023", "N024", "N034", "N123", "N124", "N134"};

struct ConfigSpec {
  std::vector<std::string> labels;
  std::vector<std::string> basis;  // empty: derive basis from the span
};

ConfigSpec rule_config_spec(const std::string& name) {
  ConfigSpec spec;
  spec.labels = n_labels();
  auto add = [&](std::initializer_list<const char*> more) {
    for (const char* l : more) spec.labels.push_back(l);
  };
  if (name == "gen") {
    spec.basis = kGenBasis;
  } else if (name == "clebsch") {
    for (const auto& l : c_line_labels()) spec.labels.push_back(l);
    spec.basis = kGenBasis;
    for (const char* l : {"C234", "C134", "C124", "C032"})
      spec.basis.push_back(l);
  } else if (name == "cayley") {
    add({"M0", "M1", "M2", "M3", "L01", "L02", "L03", "L12", "L13", "L23"});
    spec.basis = kGenBasis;
    for (const char* l : {"L01", "L02", "L03", "L12"}) spec.basis.push_back(l);
  } else if (name == "nodal1") {
    add({"M0"});
  } else if (name == "nodal2") {
    add({"M0", "M1", "L01"});
  } else if (name == "nodal3") {
    add({"M0", "M1", "M2", "L01", "L02", "L12"});
  } else if (name == "x3n4") {
    add({"C012", "C021", "M0", "M1", "M2", "L01", "L02", "L12"});
    spec.basis = kGenBasis;
    for (const char* l : {"C012", "L01", "L02", "L12"}) spec.basis.push_back(l);
  } else {
    throw std::invalid_argument("unknown configuration: " + name);
  }
  return spec;
}

// Graph-shaped configurations: labels plus edge list; gram = -2 I + A.
struct GraphSpec {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

GraphSpec graph_spec(const std::string& name) {
  GraphSpec g;
  if (name == "ns2_square") {
    for (int i = 0; i < 16; ++i) g.labels.push_back("c" + std::to_string(i));
    for (int k = 0; k < 4; ++k) g.labels.push_back("q" + std::to_string(k));
    for (std::size_t i = 0; i < 16; ++i) g.edges.push_back({i, (i + 1) % 16});
    for (std::size_t k = 0; k < 4; ++k) g.edges.push_back({16 + k, 4 * k});
    return g;
  }
  if (name == "ns1_cube") {
    auto bits = [](int v) {
      std::string s;
      for (int d = 2; d >= 0; --d) s += static_cast<char>('0' + ((v >> d) & 1));
      return s;
    };
    for (int v = 0; v < 8; ++v) g.labels.push_back("v" + bits(v));
    for (int v = 0; v < 8; ++v)
      for (int d = 2; d >= 0; --d) {
        int w = v ^ (1 << d);
        if (v < w) {
          std::size_t mid = g.labels.size();
          g.labels.push_back("m" + bits(v) + "." + bits(w));
          g.edges.push_back({static_cast<std::size_t>(v), mid});
          g.edges.push_back({static_cast<std::size_t>(w), mid});
        }
      }
    return g;
  }
  throw std::invalid_argument("unknown configuration: " + name);
}

Configuration finish_configuration(std::string name,
                                   std::vector<std::string> labels,
                                   IntMat gram,
                                   const std::vector<std::string>& basis) {
  Configuration conf;
  conf.name = std::move(name);
  conf.labels = std::move(labels);
  conf.gram = std::move(gram);
  conf.ambient = Lattice(conf.name + "-curves", conf.gram,
                         /*allow_degenerate=*/true);
  const std::size_t n = conf.labels.size();
  IntMat all = IntMat::identity(n);
  EmbeddedSublattice span = span_sublattice(conf.ambient, all);
  if (!basis.empty()) {
    std::vector<std::size_t> subset;
    for (const auto& l : basis) subset.push_back(conf.index_of(l));
    if (subset.size() != span.rank() ||
        !is_basis_of_span(conf.ambient, all, subset))
      throw std::logic_error("named curves do not form a basis of the span: " +
                             conf.name);
    conf.basis = IntMat(subset.size(), n);
    for (std::size_t r = 0; r < subset.size(); ++r)
      conf.basis(r, subset[r]) = 1;
    conf.basis_labels = basis;
  } else {
    conf.basis = span.basis;
  }
  IntMat bg = conf.basis * conf.gram;
  conf.ns = Lattice(conf.name + "-ns", bg * conf.basis.transpose());
  // Coordinates of every curve class in the chosen basis: the unique
  // rational solution of  G_ns x = (B G) e_i, integral because the basis
  // spans the full quotient-by-radical (to_int throws otherwise).
  RatMat sols = inverse(to_rat(conf.ns.gram())) * to_rat(bg);
  conf.classes = to_int(sols.transpose());
  return conf;
}

std::vector<Int> vec_add(std::vector<Int> a, const std::vector<Int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<Int> vec_sub(std::vector<Int> a, const std::vector<Int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

IntMat rows_to_mat(const std::vector<std::vector<Int>>& rows) {
  IntMat m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

}  // namespace

std::size_t Configuration::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw std::invalid_argument("no curve " + label + " in " + name);
}

std::vector<Int> Configuration::class_of(const std::string& label) const {
  return classes.row(index_of(label));
}

std::vector<Int> Configuration::combination(
    const std::vector<std::pair<std::string, Int>>& terms) const {
  std::vector<Int> out(ns.rank(), Int(0));
  for (const auto& [label, coeff] : terms) {
    auto row = class_of(label);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeff * row[i];
  }
  return out;
}

Configuration build_configuration(const std::string& name) {
  std::string canon = name;
  if (name == "square16") canon = "ns2_square";
  if (name == "cube20") canon = "ns1_cube";
  if (canon == "ns2_square" || canon == "ns1_cube") {
    GraphSpec g = graph_spec(canon);
    const std::size_t n = g.labels.size();
    IntMat gram(n, n);
    for (std::size_t i = 0; i < n; ++i) gram(i, i) = -2;
    for (auto [i, j] : g.edges) {
      gram(i, j) += 1;
      gram(j, i) += 1;
    }
    return finish_configuration(canon, std::move(g.labels), std::move(gram),
                                {});
  }
  if (name == "x1n6" || name == "x1n4") {
    // Specialized Eckardt-stratum Neron-Severi classes plus the class of the
    // curve over the node, which meets none of them ("does not lie on any of
    // the 10 lines").
    Configuration clebsch = build_configuration("clebsch");
    EmbeddedSublattice ek =
        eckardt_sublattice(clebsch, name == "x1n6" ? "6" : "4");
    const std::size_t r = ek.rank();
    IntMat gram(r + 1, r + 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) gram(i, j) = ek.gram(i, j);
    gram(r, r) = -2;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i)
      labels.push_back("b" + std::to_string(i + 1));
    labels.push_back("M0");
    return finish_configuration(name, std::move(labels), std::move(gram), {});
  }
  ConfigSpec spec = rule_config_spec(name);
  std::vector<Curve> curves;
  for (const auto& l : spec.labels) {
    curves.push_back(parse_curve(l));
    if (curves.back().label() != l)
      throw std::logic_error("non-canonical configuration label " + l);
  }
  const std::size_t n = curves.size();
  IntMat gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram(i, j) = intersection(curves[i], curves[j]);
  return finish_configuration(name, std::move(spec.labels), std::move(gram),
                              spec.basis);
}

std::vector<Int> c_class(const Configuration& conf, int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 4 || j > 4)
    throw std::invalid_argument("c_class needs two distinct indices in 0..4");
  std::vector<int> rest;
  for (int d = 0; d < 5; ++d)
    if (d != i && d != j) rest.push_back(d);
  std::string abc, acb;
  abc += static_cast<char>('0' + rest[0]);
  abc += static_cast<char>('0' + rest[1]);
  abc += static_cast<char>('0' + rest[2]);
  acb += static_cast<char>('0' + rest[0]);
  acb += static_cast<char>('0' + rest[2]);
  acb += static_cast<char>('0' + rest[1]);
  return conf.combination({{"C" + abc, Int(1)}, {"C" + acb, Int(-1)}});
}

EmbeddedSublattice eckardt_sublattice(const Configuration& clebsch,
                                      const std::string& tag) {
  auto c = [&](int i, int j) { return c_class(clebsch, i, j); };
  // In the root model the c_ij are the A4 roots (up to sign); the stratum with
  // lambda_0=..=lambda_3 is perpendicular to the sum over i<4 of the roots
  // through index 4, and the stratum lambda_0=lambda_1=lambda_2,
  // lambda_3=lambda_4 to the sum of the six roots joining {0,1,2} to {3,4}.
  // Expressed in the canonical curve differences those sums are v6 and v4.
  const std::vector<Int> v6 =
      vec_add(vec_sub(c(0, 4), c(1, 4)), vec_sub(c(2, 4), c(3, 4)));
  const std::vector<Int> v4 =
      vec_sub(vec_add(vec_sub(c(1, 4), c(2, 4)),
                      vec_add(vec_sub(c(0, 3), c(1, 3)), c(2, 3))),
              c(0, 4));
  std::vector<std::vector<Int>> vecs;
  if (tag == "6") {
    vecs = {v6};
  } else if (tag == "4") {
    vecs = {v4};
  } else if (tag == "3") {
    vecs = {v4, c(3, 4)};
  } else if (tag == "3b") {
    vecs = {v6, vec_add(vec_sub(c(2, 3), c(1, 3)), c(0, 3))};
  } else if (tag == "2") {
    vecs = {v4, vec_sub(c(0, 2), c(1, 2))};
  } else if (tag == "2p") {
    vecs = {v6, vec_sub(vec_sub(c(0, 2), c(0, 3)),
                        vec_sub(c(1, 2), c(1, 3)))};
  } else if (tag == "1") {
    vecs = {v4, vec_sub(c(0, 2), c(1, 2)), c(3, 4)};
  } else if (tag == "hess") {
    vecs = {v4, vec_sub(c(0, 2), c(1, 2)), c(3, 4), c(0, 1)};
  } else {
    throw std::invalid_argument("unknown Eckardt tag: " + tag);
  }
  return orthogonal_complement(clebsch.ns, rows_to_mat(vecs));
}

EmbeddedSublattice nodal_sublattice(const Configuration& cayley, int k) {
  if (k < 1 || k > 3)
    throw std::invalid_argument("nodal_sublattice needs 1 <= k <= 3");
  std::vector<std::vector<Int>> vecs;
  for (int m = 3; m >= k; --m)
    vecs.push_back(cayley.class_of("M" + std::to_string(m)));
  return orthogonal_complement(cayley.ns, rows_to_mat(vecs));
}

Rat shioda_tate_disc(const std::vector<std::string>& fibers, int mw_rank,
                     const Int& torsion_order) {
  if (mw_rank != 0)
    throw std::invalid_argument(
        "shioda_tate_disc: nonzero Mordell-Weil rank unsupported");
  if (torsion_order < 1)
    throw std::invalid_argument("shioda_tate_disc: torsion order must be >= 1");
  auto contribution = [](const std::string& f) -> Int {
    std::string s = f;
    bool star = false;
    if (!s.empty() && s.back() == '*') {
      star = true;
      s.pop_back();
    }
    if (s == "II") return 1;   // E8 resp. smooth-like: no lattice / E8
    if (s == "III") return 2;  // A1 resp. E7
    if (s == "IV") return 3;   // A2 resp. E6
    if (s.size() >= 2 && s[0] == 'I' &&
        std::all_of(s.begin() + 1, s.end(), [](char ch) {
          return std::isdigit(static_cast<unsigned char>(ch));
        })) {
      Int n = parse_int(s.substr(1));
      if (star) return 4;          // D_{n+4}
      if (n >= 1) return n;        // A_{n-1}
    }
    throw std::invalid_argument("unknown fiber type: " + f);
  };
  Int prod = 1;
  for (const auto& f : fibers) prod *= contribution(f);
  Rat out(prod, torsion_order * torsion_order);
  out.canonicalize();
  return out;
}

}  // namespace hessk3
