#include "hessk3/numeric.hpp"

namespace hessk3 {

Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_int: empty string");
  mpz_class z;
  if (z.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_int: malformed integer '" + s + "'");
  return z;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_int(s));
  }
  Int p = parse_int(s.substr(0, slash));
  Int q = parse_int(s.substr(slash + 1));
  if (is_zero(q)) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& a) { return a.get_str(); }

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int floor_div(const Int& a, const Int& b) {
  if (is_zero(b)) throw std::domain_error("floor_div: division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int round_div(const Int& a, const Int& b) {
  // floor((2a + b) / (2b)) gives nearest with ties toward -inf for b > 0;
  // normalize the sign of b first so the rule is sign-independent.
  Int aa = a, bb = b;
  if (sgn(bb) < 0) { aa = -aa; bb = -bb; }
  return floor_div(2 * aa + bb, 2 * bb);
}

bool rat_is_square(const Rat& q, Rat* root) {
  if (sgn(q) < 0) return false;
  Int n = num(q), d = den(q);
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  if (root) *root = Rat(rn, rd);
  return true;
}

Int common_denominator(const std::vector<Rat>& qs) {
  Int l = 1;
  for (const auto& q : qs) {
    Int d = den(q);
    Int g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  return l;
}

Rat mod_reduce(const Rat& q, const Int& m) {
  if (sgn(m) <= 0) throw std::domain_error("mod_reduce: modulus must be positive");
  // q - floor(q/m)*m
  Rat qm = q / Rat(m);
  Int fl = floor_div(num(qm), den(qm));
  Rat r = q - Rat(fl * m);
  return r;
}

}  // namespace hessk3
