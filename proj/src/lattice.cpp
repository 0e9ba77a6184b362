#include "hessk3/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hessk3 {

namespace {

bool even_int(const Int& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

std::vector<Int> mul_row(const std::vector<Int>& v, const IntMat& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("mul_row: dimension mismatch");
  std::vector<Int> out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// v * G * w^T for rational rows.
Rat pair_rat(const std::vector<Rat>& v, const RatMat& g, const std::vector<Rat>& w) {
  return dot(row_times_mat(v, g), w);
}

IntMat cartan_a(long k) {
  IntMat m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (long i = 0; i < k; ++i) {
    m(i, i) = 2;
    if (i + 1 < k) {
      m(i, i + 1) = -1;
      m(i + 1, i) = -1;
    }
  }
  return m;
}

// E8 in Bourbaki numbering: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
IntMat e8_gram() {
  IntMat m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
  const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (auto [i, j] : edges) {
    m(i, j) = -1;
    m(j, i) = -1;
  }
  return m;
}

// Split a spec string on '+' at bracket depth zero, dropping whitespace.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == ' ' || c == '\t') continue;
    if (c == '(' || c == '<') ++depth;
    if (c == ')' || c == '>') --depth;
    if (c == '+' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

IntMat base_gram(const std::string& name) {
  if (name == "U") return IntMat{{0, 1}, {1, 0}};
  if (name == "E8") return e8_gram();
  if (name.size() >= 3 && name.front() == '<' && name.back() == '>')
    return IntMat{{parse_int(name.substr(1, name.size() - 2))}};
  if (name.size() >= 2 && name[0] == 'A') {
    Int k = parse_int(name.substr(1));
    if (k < 1 || k > 24) throw std::invalid_argument("make_lattice: A_k rank out of range: " + name);
    return cartan_a(k.get_si());
  }
  throw std::invalid_argument("make_lattice: unknown term '" + name + "'");
}

}  // namespace

Lattice::Lattice(std::string label, IntMat gram, bool allow_degenerate)
    : label_(std::move(label)), gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Lattice: Gram must be square");
  if (!gram_.is_symmetric()) throw std::invalid_argument("Lattice: Gram must be symmetric");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    if (!even_int(gram_(i, i)))
      throw std::invalid_argument("Lattice: form is odd (diagonal entry " + to_string(gram_(i, i)) +
                                  ") in '" + label_ + "'");
  degenerate_ = gram_.rows() > 0 && det(gram_) == 0;
  if (degenerate_ && !allow_degenerate)
    throw std::invalid_argument("Lattice: degenerate form in '" + label_ + "'");
}

Int Lattice::disc() const { return gram_.rows() ? det(gram_) : Int(1); }

Int Lattice::pair(const std::vector<Int>& v, const std::vector<Int>& w) const {
  if (v.size() != rank() || w.size() != rank())
    throw std::invalid_argument("Lattice::pair: dimension mismatch");
  Int s;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) s += v[i] * gram_(i, j) * w[j];
  }
  return s;
}

Rat Lattice::pair(const std::vector<Rat>& v, const std::vector<Rat>& w) const {
  if (v.size() != rank() || w.size() != rank())
    throw std::invalid_argument("Lattice::pair: dimension mismatch");
  return pair_rat(v, to_rat(gram_), w);
}

Lattice make_lattice(const std::string& spec) {
  auto terms = split_terms(spec);
  std::string normalized;
  Lattice acc;
  bool first = true;
  for (const auto& term : terms) {
    if (term.empty()) throw std::invalid_argument("make_lattice: empty term in '" + spec + "'");
    std::string base = term;
    Int tw = 1;
    if (term.back() == ')') {
      auto pos = term.rfind('(');
      if (pos == std::string::npos || pos == 0)
        throw std::invalid_argument("make_lattice: bad twist in '" + term + "'");
      base = term.substr(0, pos);
      tw = parse_int(term.substr(pos + 1, term.size() - pos - 2));
    }
    Lattice piece;
    if (base == "K3")
      piece = make_lattice("E8(-1)+E8(-1)+U+U+U");
    else if (base == "Tgen")
      piece = make_lattice("U+U(2)+A2(-2)");
    else
      piece = Lattice(base, base_gram(base));
    if (tw != 1) piece = twist(piece, tw);
    piece.set_label(term);
    acc = first ? piece : direct_sum(acc, piece);
    first = false;
    normalized += (normalized.empty() ? "" : "+") + term;
  }
  if (first) throw std::invalid_argument("make_lattice: empty spec");
  acc.set_label(normalized);
  return acc;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  IntMat g(a.rank() + b.rank(), a.rank() + b.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
  return Lattice(a.label() + "+" + b.label(), std::move(g), a.degenerate() || b.degenerate());
}

Lattice twist(const Lattice& a, const Int& n) {
  if (n == 0) throw std::invalid_argument("twist: scale must be nonzero");
  return Lattice(a.label() + "(" + to_string(n) + ")", a.gram().scaled(n), a.degenerate());
}

std::pair<std::size_t, std::size_t> signature(const Lattice& l) {
  if (l.degenerate()) throw std::invalid_argument("signature: degenerate lattice");
  RatMat a = to_rat(l.gram());
  const std::size_t n = a.rows();
  std::size_t pos = 0, neg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) == 0) {
      // Pull a nonzero diagonal entry into position i, creating one from an
      // off-diagonal pair if the whole trailing diagonal vanishes.
      std::size_t j = i;
      while (j < n && a(j, j) == 0) ++j;
      if (j == n) {
        bool found = false;
        for (std::size_t r = i; r < n && !found; ++r)
          for (std::size_t c = r + 1; c < n && !found; ++c)
            if (a(r, c) != 0) {
              a.add_row(r, c, Rat(1));
              a.add_col(r, c, Rat(1));  // a(r,r) becomes 2*a_old(r,c) != 0
              j = r;
              found = true;
            }
        if (!found) throw std::logic_error("signature: unexpected zero block");
      }
      if (j != i) {
        a.swap_rows(i, j);
        a.swap_cols(i, j);
      }
    }
    const Rat d = a(i, i);
    (d > 0 ? pos : neg) += 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(j, i) == 0) continue;
      Rat f = -a(j, i) / d;
      a.add_row(j, i, f);
      a.add_col(j, i, f);
    }
  }
  return {pos, neg};
}

// ---------------------------------------------------------------------------
// Discriminant forms
// ---------------------------------------------------------------------------

DiscriminantData discriminant_data(const Lattice& l) {
  if (l.degenerate()) throw std::invalid_argument("discriminant_data: degenerate lattice");
  DiscriminantData d;
  const std::size_t n = l.rank();
  if (n == 0) return d;
  const IntMat& g = l.gram();
  auto sn = snf(g);
  // Z^n / g Z^n = (+) Z/d_i via y -> u y; generator i lifts to u^{-1} e_i,
  // whose class in L^*/L is the rational vector g^{-1} u^{-1} e_i.
  RatMat m = inverse(to_rat(g)) * inverse(to_rat(sn.u));  // column i = generator i
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (sn.s(i, i) > 1) keep.push_back(i);
  d.generators = RatMat(keep.size(), n);
  RatMat grat = to_rat(g);
  for (std::size_t r = 0; r < keep.size(); ++r) {
    d.invariant_factors.push_back(sn.s(keep[r], keep[r]));
    for (std::size_t j = 0; j < n; ++j) d.generators(r, j) = m(j, keep[r]);
    d.group_order *= d.invariant_factors.back();
  }
  d.q_values.resize(keep.size());
  d.b_matrix = RatMat(keep.size(), keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    auto vr = d.generators.row(r);
    d.q_values[r] = mod_reduce(pair_rat(vr, grat, vr), 2);
    for (std::size_t s = 0; s < keep.size(); ++s)
      d.b_matrix(r, s) = mod_reduce(pair_rat(vr, grat, d.generators.row(s)), 1);
  }
  if (d.group_order != abs(l.disc()))
    throw std::logic_error("discriminant_data: group order != |disc|");
  return d;
}

namespace {

struct DiscElem {
  std::vector<Int> tuple;
  std::vector<Rat> vec;
  Int order = 1;
};

// All elements of the discriminant group as generator-coefficient tuples with
// their dual-vector representatives, in odometer order.
std::vector<DiscElem> enumerate_elements(const DiscriminantData& d, std::size_t ambient_rank) {
  std::vector<DiscElem> out;
  const std::size_t k = d.invariant_factors.size();
  std::vector<Int> t(k, 0);
  while (true) {
    DiscElem e;
    e.tuple = t;
    e.vec.assign(ambient_rank, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
      if (t[i] != 0)
        for (std::size_t j = 0; j < ambient_rank; ++j) e.vec[j] += Rat(t[i]) * d.generators(i, j);
      e.order = lcm(e.order, Int(d.invariant_factors[i] / gcd(t[i], d.invariant_factors[i])));
    }
    out.push_back(std::move(e));
    std::size_t i = k;
    while (i > 0) {
      --i;
      t[i] += 1;
      if (t[i] < d.invariant_factors[i]) break;
      t[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

}  // namespace

bool disc_forms_isomorphic(const Lattice& a, const Lattice& b, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("disc_forms_isomorphic: sign must be +1 or -1");
  DiscriminantData da = discriminant_data(a);
  DiscriminantData db = discriminant_data(b);
  if (da.invariant_factors != db.invariant_factors) return false;
  const std::size_t k = da.invariant_factors.size();
  if (k == 0) return true;
  if (db.group_order > 20000)
    throw std::runtime_error("disc_forms_isomorphic: discriminant group too large");

  const RatMat gb = to_rat(b.gram());
  auto elems = enumerate_elements(db, b.rank());

  // Candidate images for generator i: elements of the same order whose q
  // matches sign * q(g_i). Pairings are checked incrementally.
  std::vector<Rat> target_q(k);
  for (std::size_t i = 0; i < k; ++i) target_q[i] = mod_reduce(Rat(sign) * da.q_values[i], 2);
  std::vector<std::vector<std::size_t>> cands(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t e = 0; e < elems.size(); ++e)
      if (elems[e].order == da.invariant_factors[i] &&
          mod_reduce(pair_rat(elems[e].vec, gb, elems[e].vec), 2) == target_q[i])
        cands[i].push_back(e);

  std::vector<std::size_t> img(k);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == k) {
      // Surjectivity: tuples of the images together with the relations
      // d_j e_j must generate Z^k, i.e. SNF all ones.
      IntMat m(k, 2 * k);
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < k; ++r) m(r, c) = elems[img[c]].tuple[r];
      for (std::size_t r = 0; r < k; ++r) m(r, k + r) = db.invariant_factors[r];
      auto factors = snf(m).invariant_factors();
      if (factors.size() != k) return false;
      for (const auto& f : factors)
        if (f != 1) return false;
      return true;
    }
    for (std::size_t e : cands[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        Rat want = mod_reduce(Rat(sign) * da.b_matrix(i, j), 1);
        if (mod_reduce(pair_rat(elems[e].vec, gb, elems[img[j]].vec), 1) != want) ok = false;
      }
      if (!ok) continue;
      img[i] = e;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// ---------------------------------------------------------------------------
// Embedded sublattices
// ---------------------------------------------------------------------------

EmbeddedSublattice span_sublattice(const Lattice& ambient, const IntMat& vectors) {
  if (vectors.rows() == 0 || vectors.cols() != ambient.rank())
    throw std::invalid_argument("span_sublattice: bad vector matrix");
  IntMat p = vectors * ambient.gram();
  auto h = hnf(p);
  if (h.rank == 0)
    throw std::invalid_argument("span_sublattice: zero span (all vectors pair trivially)");
  // Row i of h.u lifts pairing row i of the HNF back to an ambient vector;
  // the first `rank` of these are a basis of the span (mod the radical).
  IntMat basis = h.u.slice_rows(0, h.rank) * vectors;
  IntMat gram = basis * ambient.gram() * basis.transpose();
  bool deg = det(gram) == 0;
  return EmbeddedSublattice{std::move(basis), std::move(gram), deg};
}

bool is_basis_of_span(const Lattice& ambient, const IntMat& vectors,
                      const std::vector<std::size_t>& subset) {
  IntMat sub(subset.size(), vectors.cols());
  for (std::size_t i = 0; i < subset.size(); ++i) sub.set_row(i, vectors.row(subset[i]));
  auto ha = hnf(vectors * ambient.gram());
  auto hs = hnf(sub * ambient.gram());
  return ha.rank == hs.rank && ha.rank == subset.size() &&
         ha.h.slice_rows(0, ha.rank) == hs.h.slice_rows(0, hs.rank);
}

EmbeddedSublattice saturate(const Lattice& ambient, const EmbeddedSublattice& s) {
  const IntMat& g = ambient.gram();
  auto hg = hnf(g);
  const std::size_t ra = hg.rank;
  IntMat pair_basis = hg.h.slice_rows(0, ra);  // basis of the ambient pairing lattice
  IntMat lifts = hg.u.slice_rows(0, ra);       // ambient vectors mapping onto it
  IntMat pb_t = pair_basis.transpose();
  IntMat z(s.basis.rows(), ra);
  for (std::size_t j = 0; j < s.basis.rows(); ++j) {
    auto sol = solve_integer(pb_t, mul_row(s.basis.row(j), g));
    if (!sol) throw std::logic_error("saturate: pairing row outside ambient pairing lattice");
    z.set_row(j, *sol);
  }
  IntMat ker = kernel(z);  // functionals vanishing on the span
  IntMat sat = ker.rows() == 0 ? IntMat::identity(ra) : kernel(ker);
  IntMat basis = sat * lifts;
  IntMat gram = basis * g * basis.transpose();
  bool deg = gram.rows() > 0 && det(gram) == 0;
  return EmbeddedSublattice{std::move(basis), std::move(gram), deg};
}

Int sublattice_index(const Lattice& ambient, const EmbeddedSublattice& s) {
  EmbeddedSublattice sat = saturate(ambient, s);
  if (sat.rank() != s.rank()) throw std::logic_error("sublattice_index: rank drop in saturation");
  IntMat m = (sat.basis * ambient.gram()).transpose();
  IntMat z(s.rank(), s.rank());
  for (std::size_t j = 0; j < s.basis.rows(); ++j) {
    auto sol = solve_integer(m, mul_row(s.basis.row(j), ambient.gram()));
    if (!sol) throw std::logic_error("sublattice_index: vector not in saturation");
    z.set_row(j, *sol);
  }
  return abs(det(z));
}

EmbeddedSublattice orthogonal_complement(const Lattice& ambient, const IntMat& vectors) {
  if (ambient.degenerate())
    throw std::invalid_argument("orthogonal_complement: degenerate ambient");
  if (vectors.cols() != ambient.rank())
    throw std::invalid_argument("orthogonal_complement: dimension mismatch");
  IntMat basis = kernel(vectors * ambient.gram());
  IntMat gram = basis * ambient.gram() * basis.transpose();
  bool deg = gram.rows() > 0 && det(gram) == 0;
  return EmbeddedSublattice{std::move(basis), std::move(gram), deg};
}

EmbeddedSublattice orthogonal_complement(const Lattice& ambient, const EmbeddedSublattice& s) {
  return orthogonal_complement(ambient, s.basis);
}

bool sublattice_contains(const Lattice& ambient, const EmbeddedSublattice& s,
                         const std::vector<Int>& v) {
  IntMat m = (s.basis * ambient.gram()).transpose();
  return solve_integer(m, mul_row(v, ambient.gram())).has_value();
}

// ---------------------------------------------------------------------------
// Even overlattices
// ---------------------------------------------------------------------------

std::vector<Overlattice> even_overlattices(const Lattice& l, const Int& p) {
  if (p < 2) throw std::invalid_argument("even_overlattices: index must be >= 2");
  if (l.degenerate()) throw std::invalid_argument("even_overlattices: degenerate lattice");
  std::vector<Overlattice> out;
  DiscriminantData d = discriminant_data(l);
  if (d.group_order % (p * p) != 0) return out;  // disc(L') = disc(L)/p^2 must be integral
  const std::size_t n = l.rank();
  const RatMat grat = to_rat(l.gram());
  for (auto& e : enumerate_elements(d, n)) {
    if (e.order != p) continue;
    // One representative per subgroup: the lexicographically least tuple
    // among the nonzero multiples k*t, k = 1..p-1.
    bool canonical = true;
    for (Int k = 2; k < p && canonical; ++k) {
      std::vector<Int> mult(e.tuple.size());
      for (std::size_t i = 0; i < e.tuple.size(); ++i)
        mult[i] = (k * e.tuple[i]) % d.invariant_factors[i];
      if (std::lexicographical_compare(mult.begin(), mult.end(), e.tuple.begin(), e.tuple.end()))
        canonical = false;
    }
    if (!canonical) continue;
    if (mod_reduce(pair_rat(e.vec, grat, e.vec), 2) != 0) continue;  // L' must stay even

    RatMat rows = vstack(to_rat(IntMat::identity(n)), RatMat(1, n));
    for (std::size_t j = 0; j < n; ++j) rows(n, j) = e.vec[j];
    auto [den, scaled] = clear_denominators(rows);
    if (den != p) throw std::logic_error("even_overlattices: glue denominator != p");
    auto h = hnf(scaled);
    if (h.rank != n) throw std::logic_error("even_overlattices: rank drop");
    RatMat basis(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) basis(i, j) = Rat(h.h(i, j)) / Rat(den);
    IntMat gram = to_int(basis * grat * basis.transpose());
    if (det(gram) * p * p != l.disc()) throw std::logic_error("even_overlattices: disc mismatch");
    out.push_back(Overlattice{std::move(gram), std::move(basis), e.vec});
  }
  return out;
}

std::vector<IntMat> unique_grams(const std::vector<Overlattice>& list) {
  std::vector<IntMat> out;
  for (const auto& o : list)
    if (std::find(out.begin(), out.end(), o.gram) == out.end()) out.push_back(o.gram);
  return out;
}

bool glue_meets_block(const Overlattice& o, const Int& p, const std::vector<std::size_t>& block) {
  for (Int k = 1; k < p; ++k) {
    bool outside_integral = true, fractional = false;
    for (std::size_t i = 0; i < o.glue.size() && outside_integral; ++i) {
      Rat f = mod_reduce(Rat(k) * o.glue[i], 1);
      if (f == 0) continue;
      fractional = true;
      if (std::find(block.begin(), block.end(), i) == block.end()) outside_integral = false;
    }
    if (outside_integral && fractional) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Even positive-definite binary forms
// ---------------------------------------------------------------------------

IntMat reduce_even_binary(const IntMat& gram) {
  if (gram.rows() != 2 || gram.cols() != 2 || !gram.is_symmetric())
    throw std::invalid_argument("reduce_even_binary: need a symmetric 2x2 Gram");
  Int a = gram(0, 0), b = gram(0, 1), c = gram(1, 1);
  if (!even_int(a) || !even_int(c)) throw std::invalid_argument("reduce_even_binary: form is odd");
  if (a <= 0 || a * c - b * b <= 0)
    throw std::invalid_argument("reduce_even_binary: form is not positive definite");
  for (int guard = 0; guard < 256; ++guard) {
    if (a > c) {
      std::swap(a, c);
      continue;
    }
    Int t = round_div(b, a);
    if (t != 0) {
      c += t * t * a - 2 * t * b;
      b -= t * a;
      continue;
    }
    break;
  }
  if (b < 0) b = -b;
  if (!(2 * b <= a && a <= c)) throw std::logic_error("reduce_even_binary: reduction failed");
  return IntMat{{a, b}, {b, c}};
}

std::vector<IntMat> enumerate_even_binary(const Int& d) {
  std::vector<IntMat> out;
  if (d <= 0) return out;
  for (Int a = 2; 3 * a * a <= 4 * d; a += 2)
    for (Int b = 0; 2 * b <= a; ++b) {
      if ((d + b * b) % a != 0) continue;
      Int c = (d + b * b) / a;
      if (!even_int(c) || c < a) continue;
      out.push_back(IntMat{{a, b}, {b, c}});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Rank-2 embeddings into T = U + U(2) + A2(-2)
// ---------------------------------------------------------------------------

std::optional<std::pair<std::vector<Int>, std::vector<Int>>>
slh_embed(const Int& n, const Int& m, const Int& a) {
  std::vector<Int> x, y;
  if (even_int(m)) {
    x = {n, 1, 0, 0, 0, 0};
    y = {a, 0, 1, m / 2, 0, 0};
  } else if (even_int(n)) {
    x = {a, 0, 1, n / 2, 0, 0};
    y = {m, 1, 0, 0, 0, 0};
  } else if (even_int(a)) {
    x = {n, 1, 0, 0, 0, 0};
    y = {a - n, 1, 1, (n + m - a) / 2, 0, 0};
  } else {
    return std::nullopt;  // all of n, m, a odd: no primitive embedding exists
  }
  static const Lattice t = make_lattice("Tgen");
  if (t.pair(x, x) != 2 * n || t.pair(y, y) != 2 * m || t.pair(x, y) != a)
    throw std::logic_error("slh_embed: Gram mismatch");
  IntMat coords(2, 6);
  coords.set_row(0, x);
  coords.set_row(1, y);
  auto factors = snf(coords).invariant_factors();
  if (factors != std::vector<Int>{1, 1}) throw std::logic_error("slh_embed: image not primitive");
  return std::make_pair(std::move(x), std::move(y));
}

}  // namespace hessk3
