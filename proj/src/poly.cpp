#include "hessk3/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hessk3 {

namespace {

// ---- dense univariate arithmetic over Q (little-endian, trimmed) ----------
// Used only for modular reduction and inversion in extension fields.

void trim(std::vector<Rat>& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

// deg(v) with deg(0) = -1.
long poly_deg(const std::vector<Rat>& v) { return static_cast<long>(v.size()) - 1; }

std::vector<Rat> poly_sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  trim(out);
  return out;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Quotient of Euclidean division (b nonzero).
std::vector<Rat> poly_quot(std::vector<Rat> a, const std::vector<Rat>& b) {
  std::vector<Rat> q;
  const long db = poly_deg(b);
  while (poly_deg(a) >= db) {
    const long k = poly_deg(a) - db;
    Rat c = a.back() / b.back();
    if (q.size() < static_cast<std::size_t>(k + 1)) q.resize(k + 1);
    q[k] = c;
    for (long i = 0; i <= db; ++i) a[i + k] -= c * b[i];
    trim(a);
  }
  trim(q);
  return q;
}

Rat rat_gcd(const Rat& a, const Rat& b) {
  Int n = gcd(num(a), num(b));
  Int d = lcm(den(a), den(b));
  Rat out(n, d);
  out.canonicalize();
  return out;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

// ---------------------------------------------------------------------------
// CoeffField
// ---------------------------------------------------------------------------

struct CoeffField::Data {
  std::string gen;            // empty for Q
  std::vector<Rat> modulus;   // empty for Q; else monic, constant term first
  std::size_t degree;         // 1 for Q
};

CoeffField::CoeffField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

CoeffField::CoeffField() : d_(nullptr) {}

CoeffField CoeffField::rationals() { return CoeffField(); }

CoeffField CoeffField::extension(std::string generator, std::vector<Rat> modulus) {
  if (generator.empty() || !is_ident_start(generator[0]) ||
      !std::all_of(generator.begin(), generator.end(), is_ident_char))
    throw std::invalid_argument("CoeffField: generator must be an identifier");
  if (modulus.size() < 3)
    throw std::invalid_argument("CoeffField: extension modulus must have degree >= 2");
  if (modulus.back() != 1)
    throw std::invalid_argument("CoeffField: extension modulus must be monic");
  auto d = std::make_shared<Data>();
  d->gen = std::move(generator);
  d->degree = modulus.size() - 1;
  d->modulus = std::move(modulus);
  return CoeffField(std::move(d));
}

CoeffField CoeffField::cyclotomic(int order, std::string generator) {
  std::vector<Rat> phi;
  switch (order) {
    case 3: phi = {Rat(1), Rat(1), Rat(1)}; break;                          // z^2+z+1
    case 4: phi = {Rat(1), Rat(0), Rat(1)}; break;                          // z^2+1
    case 5: phi = {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}; break;          // z^4+...+1
    case 9: phi = {Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)}; break;  // z^6+z^3+1
    default:
      throw std::invalid_argument("CoeffField: cyclotomic order must be 3, 4, 5 or 9");
  }
  return extension(std::move(generator), std::move(phi));
}

std::size_t CoeffField::degree() const { return d_ ? d_->degree : 1; }

const std::string& CoeffField::generator() const {
  if (!d_) throw std::invalid_argument("CoeffField: the rationals have no generator");
  return d_->gen;
}

const std::vector<Rat>& CoeffField::modulus() const {
  if (!d_) throw std::invalid_argument("CoeffField: the rationals have no modulus");
  return d_->modulus;
}

bool CoeffField::operator==(const CoeffField& o) const {
  if (!d_ && !o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->gen == o.d_->gen && d_->modulus == o.d_->modulus;
}

CoeffField::Elem CoeffField::zero() const { return Elem(degree()); }

CoeffField::Elem CoeffField::one() const {
  Elem e(degree());
  e[0] = 1;
  return e;
}

CoeffField::Elem CoeffField::from_rational(const Rat& r) const {
  Elem e(degree());
  e[0] = r;
  return e;
}

CoeffField::Elem CoeffField::gen() const {
  if (!d_) throw std::invalid_argument("CoeffField: the rationals have no generator");
  Elem e(degree());
  e[1] = 1;
  return e;
}

void CoeffField::check_elem(const Elem& a) const {
  if (a.size() != degree())
    throw std::invalid_argument("CoeffField: element has wrong coordinate count");
}

bool CoeffField::is_zero(const Elem& a) const {
  check_elem(a);
  return std::all_of(a.begin(), a.end(), [](const Rat& c) { return sgn(c) == 0; });
}

bool CoeffField::is_rational_elem(const Elem& a) const {
  check_elem(a);
  for (std::size_t i = 1; i < a.size(); ++i)
    if (sgn(a[i]) != 0) return false;
  return true;
}

Rat CoeffField::rational_value(const Elem& a) const {
  if (!is_rational_elem(a))
    throw std::invalid_argument("CoeffField: element is not rational");
  return a[0];
}

CoeffField::Elem CoeffField::add(const Elem& a, const Elem& b) const {
  check_elem(a);
  check_elem(b);
  Elem out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

CoeffField::Elem CoeffField::sub(const Elem& a, const Elem& b) const {
  check_elem(a);
  check_elem(b);
  Elem out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

CoeffField::Elem CoeffField::neg(const Elem& a) const {
  check_elem(a);
  Elem out(a);
  for (auto& c : out) c = -c;
  return out;
}

CoeffField::Elem CoeffField::mul(const Elem& a, const Elem& b) const {
  check_elem(a);
  check_elem(b);
  const std::size_t d = degree();
  if (d == 1) return {a[0] * b[0]};
  std::vector<Rat> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
  }
  // Reduce modulo phi: z^d = -(phi_0 + ... + phi_{d-1} z^{d-1}).
  const std::vector<Rat>& phi = d_->modulus;
  for (std::size_t k = 2 * d - 2; k >= d; --k) {
    if (sgn(prod[k]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[k - d + j] -= prod[k] * phi[j];
    prod[k] = 0;
  }
  prod.resize(d);
  return prod;
}

CoeffField::Elem CoeffField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::invalid_argument("CoeffField: division by zero");
  if (degree() == 1) return {Rat(1) / a[0]};
  // Extended Euclid on (phi, a) over Q[z]; gcd is a nonzero constant.
  std::vector<Rat> r0 = d_->modulus;
  std::vector<Rat> r1(a);
  trim(r1);
  std::vector<Rat> t0, t1 = {Rat(1)};
  while (!r1.empty()) {
    std::vector<Rat> q = poly_quot(r0, r1);
    std::vector<Rat> r2 = poly_sub(r0, poly_mul(q, r1));
    std::vector<Rat> t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd (degree 0), t0 * a === r0 (mod phi).
  Elem out(degree());
  const Rat c = r0[0];
  for (std::size_t i = 0; i < t0.size() && i < out.size(); ++i) out[i] = t0[i] / c;
  return out;
}

CoeffField::Elem CoeffField::div(const Elem& a, const Elem& b) const {
  return mul(a, inv(b));
}

CoeffField::Elem CoeffField::pow(Elem a, unsigned long n) const {
  check_elem(a);
  Elem out = one();
  while (n > 0) {
    if (n & 1UL) out = mul(out, a);
    n >>= 1UL;
    if (n > 0) a = mul(a, a);
  }
  return out;
}

std::string CoeffField::to_string(const Elem& a) const {
  check_elem(a);
  if (is_rationals()) return hessk3::to_string(a[0]);
  std::string out;
  for (std::size_t k = degree(); k-- > 0;) {
    if (sgn(a[k]) == 0) continue;
    const bool negative = sgn(a[k]) < 0;
    Rat mag = negative ? Rat(-a[k]) : a[k];
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (k == 0) {
      out += hessk3::to_string(mag);
    } else {
      if (mag != 1) {
        out += hessk3::to_string(mag);
        out += '*';
      }
      out += d_->gen;
      if (k > 1) {
        out += '^';
        out += std::to_string(k);
      }
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

// Reads digits [ '/' digits ] starting at pos; advances pos.
Rat read_rational(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw std::invalid_argument("cannot parse rational in: " + s);
  std::string text = s.substr(start, pos - start);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) throw std::invalid_argument("cannot parse rational in: " + s);
    text += '/';
    text += s.substr(dstart, pos - dstart);
  }
  return parse_rat(text);
}

std::string read_identifier(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && is_ident_char(s[pos])) ++pos;
  return s.substr(start, pos - start);
}

unsigned long read_exponent(const std::string& s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '^') return 1;
  ++pos;
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw std::invalid_argument("missing exponent in: " + s);
  return std::stoul(s.substr(start, pos - start));
}

}  // namespace

CoeffField::Elem CoeffField::parse(const std::string& text) const {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("cannot parse empty field element");
  Elem acc = zero();
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("cannot parse field element: " + text);
    }
    Rat coeff(sign);
    unsigned long power = 0;
    bool saw_factor = false;
    bool starred = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff *= read_rational(s, pos);
      saw_factor = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        starred = true;
      }
    }
    if (starred && (pos >= s.size() || !is_ident_start(s[pos])))
      throw std::invalid_argument("cannot parse field element: " + text);
    if (pos < s.size() && is_ident_start(s[pos])) {
      std::string name = read_identifier(s, pos);
      if (!d_ || name != d_->gen)
        throw std::invalid_argument("unknown generator '" + name + "' in: " + text);
      power = read_exponent(s, pos);
      if (power >= degree())
        throw std::invalid_argument("generator power too large in: " + text);
      saw_factor = true;
    }
    if (!saw_factor) throw std::invalid_argument("cannot parse field element: " + text);
    acc[power] += coeff;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// GradedLexGreater
// ---------------------------------------------------------------------------

bool GradedLexGreater::operator()(const std::vector<int>& a,
                                  const std::vector<int>& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

MultiPoly::MultiPoly() : field_(CoeffField::rationals()) {}

MultiPoly MultiPoly::zero(CoeffField field, std::vector<std::string> vars) {
  MultiPoly p;
  p.field_ = std::move(field);
  p.vars_ = std::move(vars);
  return p;
}

MultiPoly MultiPoly::constant(CoeffField field, std::vector<std::string> vars,
                              CoeffField::Elem value) {
  MultiPoly p = zero(std::move(field), std::move(vars));
  p.add_term(std::vector<int>(p.vars_.size(), 0), std::move(value));
  return p;
}

MultiPoly MultiPoly::constant(CoeffField field, std::vector<std::string> vars,
                              const Rat& value) {
  CoeffField::Elem e = field.from_rational(value);
  return constant(std::move(field), std::move(vars), std::move(e));
}

MultiPoly MultiPoly::variable(CoeffField field, std::vector<std::string> vars,
                              const std::string& name) {
  MultiPoly p = zero(std::move(field), std::move(vars));
  std::vector<int> exps(p.vars_.size(), 0);
  exps[p.var_index(name)] = 1;
  p.add_term(std::move(exps), p.field_.one());
  return p;
}

MultiPoly MultiPoly::monomial(CoeffField field, std::vector<std::string> vars,
                              std::vector<int> exponents, CoeffField::Elem coeff) {
  MultiPoly p = zero(std::move(field), std::move(vars));
  p.add_term(std::move(exponents), std::move(coeff));
  return p;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end())
    throw std::invalid_argument("MultiPoly: unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

void MultiPoly::add_term(std::vector<int> exponents, CoeffField::Elem coeff) {
  if (exponents.size() != vars_.size())
    throw std::invalid_argument("MultiPoly: exponent vector has wrong length");
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("MultiPoly: negative exponent");
  if (field_.is_zero(coeff)) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exponents), std::move(coeff));
  } else {
    it->second = field_.add(it->second, coeff);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }
}

long MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const std::vector<int>& lead = terms_.begin()->first;
  return std::accumulate(lead.begin(), lead.end(), 0L);
}

long MultiPoly::degree_in(const std::string& var) const {
  const std::size_t idx = var_index(var);
  long deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<long>(e[idx]));
  return deg;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree() == 0);
}

CoeffField::Elem MultiPoly::constant_value() const {
  if (terms_.empty()) return field_.zero();
  if (!is_constant())
    throw std::invalid_argument("MultiPoly: polynomial is not constant");
  return terms_.begin()->second;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (field_ != o.field_)
    throw std::invalid_argument("MultiPoly: field mismatch");
  if (vars_ != o.vars_)
    throw std::invalid_argument("MultiPoly: variable context mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly out(*this);
  for (const auto& [e, c] : o.terms_) {
    auto it = out.terms_.find(e);
    if (it == out.terms_.end()) {
      out.terms_.emplace(e, c);
    } else {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) out.terms_.erase(it);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [e, c] : out.terms_) c = field_.neg(c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly out = zero(field_, vars_);
  const std::size_t n = vars_.size();
  std::vector<int> e(n);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      CoeffField::Elem prod = field_.mul(ca, cb);
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        if (!field_.is_zero(prod)) out.terms_.emplace(e, std::move(prod));
      } else {
        it->second = field_.add(it->second, prod);
        if (field_.is_zero(it->second)) out.terms_.erase(it);
      }
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const CoeffField::Elem& c) const {
  if (field_.is_zero(c)) return zero(field_, vars_);
  MultiPoly out(*this);
  for (auto& [e, v] : out.terms_) v = field_.mul(v, c);
  return out;
}

MultiPoly MultiPoly::scaled(const Rat& c) const { return scaled(field_.from_rational(c)); }

MultiPoly MultiPoly::pow(unsigned long n) const {
  MultiPoly out = constant(field_, vars_, Rat(1));
  MultiPoly base(*this);
  while (n > 0) {
    if (n & 1UL) out = out * base;
    n >>= 1UL;
    if (n > 0) base = base * base;
  }
  return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return field_ == o.field_ && vars_ == o.vars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  const std::size_t idx = var_index(var);
  MultiPoly out = zero(field_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    std::vector<int> de(e);
    CoeffField::Elem dc = field_.mul(c, field_.from_rational(Rat(e[idx])));
    --de[idx];
    out.terms_.emplace(std::move(de), std::move(dc));
  }
  return out;
}

MultiPoly MultiPoly::with_field(const CoeffField& target) const {
  if (target == field_) return *this;
  if (!field_.is_rationals())
    throw std::invalid_argument("MultiPoly: can only widen rational coefficients");
  MultiPoly out = zero(target, vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, target.from_rational(c[0]));
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& assignments) const {
  if (assignments.empty()) return *this;
  const MultiPoly& model = assignments.begin()->second;
  const CoeffField& out_field = model.field_;
  const std::vector<std::string>& out_vars = model.vars_;
  const bool widen = field_.is_rationals() && !out_field.is_rationals();
  if (field_ != out_field && !widen)
    throw std::invalid_argument("MultiPoly: field mismatch in substitution");
  for (const auto& [name, value] : assignments) {
    if (value.field_ != out_field || value.vars_ != out_vars)
      throw std::invalid_argument("MultiPoly: substitution values have mixed contexts");
    var_index(name);  // throws on unknown variable
  }
  // Per-variable assignment (identity for unassigned variables) + power cache.
  std::vector<const MultiPoly*> image(vars_.size(), nullptr);
  std::vector<MultiPoly> identity_images;
  identity_images.reserve(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = assignments.find(vars_[i]);
    if (it != assignments.end()) {
      image[i] = &it->second;
    } else {
      identity_images.push_back(variable(out_field, out_vars, vars_[i]));
      image[i] = &identity_images.back();
    }
  }
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  auto power_of = [&](std::size_t i, int e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(out_field, out_vars, Rat(1)));
    while (cache.size() <= static_cast<std::size_t>(e))
      cache.push_back(cache.back() * (*image[i]));
    return cache[e];
  };
  MultiPoly acc = zero(out_field, out_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(out_field, out_vars,
                              widen ? out_field.from_rational(c[0]) : c);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (e[i] > 0) term = term * power_of(i, e[i]);
    acc = acc + term;
  }
  return acc;
}

CoeffField::Elem MultiPoly::evaluate(
    const std::map<std::string, CoeffField::Elem>& point) const {
  std::vector<const CoeffField::Elem*> value(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end())
      throw std::invalid_argument("MultiPoly: unassigned variable '" + vars_[i] +
                                  "' in evaluation");
    value[i] = &it->second;
  }
  CoeffField::Elem acc = field_.zero();
  for (const auto& [e, c] : terms_) {
    CoeffField::Elem term = c;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (e[i] > 0)
        term = field_.mul(term, field_.pow(*value[i], static_cast<unsigned long>(e[i])));
    acc = field_.add(acc, term);
  }
  return acc;
}

CoeffField::Elem MultiPoly::evaluate_rational(const std::map<std::string, Rat>& point) const {
  std::map<std::string, CoeffField::Elem> lifted;
  for (const auto& [name, value] : point) lifted.emplace(name, field_.from_rational(value));
  return evaluate(lifted);
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
  const std::size_t idx = var_index(var);
  const long deg = degree_in(var);
  std::vector<MultiPoly> out(static_cast<std::size_t>(deg < 0 ? 0 : deg) + 1,
                             zero(field_, vars_));
  for (const auto& [e, c] : terms_) {
    std::vector<int> rest(e);
    const int k = rest[idx];
    rest[idx] = 0;
    out[static_cast<std::size_t>(k)].terms_.emplace(std::move(rest), c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) {
        mono += '^';
        mono += std::to_string(e[i]);
      }
    }
    if (field_.is_rational_elem(c)) {
      const Rat r = c[0];
      const bool negative = sgn(r) < 0;
      Rat mag = negative ? Rat(-r) : r;
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? '-' : '+';
      }
      if (mono.empty()) {
        out += hessk3::to_string(mag);
      } else {
        if (mag != 1) {
          out += hessk3::to_string(mag);
          out += '*';
        }
        out += mono;
      }
    } else {
      if (!out.empty()) out += '+';
      out += '(';
      out += field_.to_string(c);
      out += ')';
      if (!mono.empty()) {
        out += '*';
        out += mono;
      }
    }
  }
  return out;
}

MultiPoly MultiPoly::parse(const CoeffField& field, const std::vector<std::string>& vars,
                           const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("cannot parse empty polynomial");
  MultiPoly out = zero(field, vars);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("cannot parse polynomial: " + text);
    }
    CoeffField::Elem coeff = field.from_rational(Rat(sign));
    std::vector<int> exps(vars.size(), 0);
    bool expect_factor = true;
    while (expect_factor) {
      if (pos >= s.size()) throw std::invalid_argument("cannot parse polynomial: " + text);
      if (s[pos] == '(') {
        std::size_t depth = 1, start = ++pos;
        while (pos < s.size() && depth > 0) {
          if (s[pos] == '(') ++depth;
          if (s[pos] == ')') --depth;
          ++pos;
        }
        if (depth != 0) throw std::invalid_argument("unbalanced parentheses: " + text);
        coeff = field.mul(coeff, field.parse(s.substr(start, pos - 1 - start)));
      } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff = field.mul(coeff, field.from_rational(read_rational(s, pos)));
      } else if (is_ident_start(s[pos])) {
        std::string name = read_identifier(s, pos);
        unsigned long e = read_exponent(s, pos);
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it != vars.end()) {
          exps[static_cast<std::size_t>(it - vars.begin())] += static_cast<int>(e);
        } else if (!field.is_rationals() && name == field.generator()) {
          coeff = field.mul(coeff, field.pow(field.gen(), e));
        } else {
          throw std::invalid_argument("unknown name '" + name + "' in: " + text);
        }
      } else {
        throw std::invalid_argument("cannot parse polynomial: " + text);
      }
      expect_factor = pos < s.size() && s[pos] == '*';
      if (expect_factor) ++pos;
    }
    out.add_term(std::move(exps), std::move(coeff));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division, determinants, discriminants
// ---------------------------------------------------------------------------

std::pair<MultiPoly, MultiPoly> divide_with_remainder(const MultiPoly& p,
                                                      const MultiPoly& q) {
  if (q.is_zero())
    throw std::invalid_argument("divide_with_remainder: division by zero polynomial");
  if (p.field() != q.field() || p.vars() != q.vars())
    throw std::invalid_argument("divide_with_remainder: context mismatch");
  const CoeffField& f = p.field();
  const std::size_t n = p.vars().size();
  const auto& [qe, qc] = *q.terms().begin();
  MultiPoly::TermMap rest(p.terms());
  MultiPoly quot = MultiPoly::zero(f, p.vars());
  MultiPoly rem = MultiPoly::zero(f, p.vars());
  while (!rest.empty()) {
    const auto& [re, rc] = *rest.begin();
    bool divisible = true;
    for (std::size_t i = 0; i < n; ++i)
      if (re[i] < qe[i]) {
        divisible = false;
        break;
      }
    if (!divisible) {
      rem.add_term(re, rc);
      rest.erase(rest.begin());
      continue;
    }
    std::vector<int> me(n);
    for (std::size_t i = 0; i < n; ++i) me[i] = re[i] - qe[i];
    CoeffField::Elem mc = f.div(rc, qc);
    quot.add_term(me, mc);
    // rest -= (mc * x^me) * q
    std::vector<int> e(n);
    for (const auto& [be, bc] : q.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = me[i] + be[i];
      CoeffField::Elem delta = f.mul(mc, bc);
      auto it = rest.find(e);
      if (it == rest.end()) {
        rest.emplace(e, f.neg(delta));
      } else {
        it->second = f.sub(it->second, delta);
        if (f.is_zero(it->second)) rest.erase(it);
      }
    }
  }
  return {std::move(quot), std::move(rem)};
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) {
  auto [quot, rem] = divide_with_remainder(p, q);
  if (!rem.is_zero()) {
    std::string shown;
    if (rem.term_count() <= 8) {
      shown = rem.to_string();
    } else {
      const auto& [le, lc] = *rem.terms().begin();
      shown = "leading term " +
              MultiPoly::monomial(rem.field(), rem.vars(), le, lc).to_string() + " (" +
              std::to_string(rem.term_count()) + " terms)";
    }
    throw std::invalid_argument("exact_div: division not exact, remainder " + shown);
  }
  return quot;
}

namespace {

MultiPoly det_recursive(const std::vector<std::vector<MultiPoly>>& m,
                        std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  const std::size_t n = rows.size();
  const CoeffField& f = m[rows[0]][cols[0]].field();
  const std::vector<std::string>& vars = m[rows[0]][cols[0]].vars();
  if (n == 1) return m[rows[0]][cols[0]];
  // Greedy pivot line: fewest nonzero entries, then fewest total terms.
  std::size_t best_line = 0;
  bool best_is_row = true;
  std::pair<std::size_t, std::size_t> best_cost{SIZE_MAX, SIZE_MAX};
  for (std::size_t i = 0; i < n; ++i) {
    std::pair<std::size_t, std::size_t> row_cost{0, 0}, col_cost{0, 0};
    for (std::size_t j = 0; j < n; ++j) {
      const MultiPoly& r = m[rows[i]][cols[j]];
      if (!r.is_zero()) {
        ++row_cost.first;
        row_cost.second += r.term_count();
      }
      const MultiPoly& c = m[rows[j]][cols[i]];
      if (!c.is_zero()) {
        ++col_cost.first;
        col_cost.second += c.term_count();
      }
    }
    if (row_cost < best_cost) {
      best_cost = row_cost;
      best_line = i;
      best_is_row = true;
    }
    if (col_cost < best_cost) {
      best_cost = col_cost;
      best_line = i;
      best_is_row = false;
    }
  }
  if (best_cost.first == 0) return MultiPoly::zero(f, vars);
  MultiPoly acc = MultiPoly::zero(f, vars);
  for (std::size_t j = 0; j < n; ++j) {
    const MultiPoly& entry =
        best_is_row ? m[rows[best_line]][cols[j]] : m[rows[j]][cols[best_line]];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_rows(rows), sub_cols(cols);
    if (best_is_row) {
      sub_rows.erase(sub_rows.begin() + static_cast<long>(best_line));
      sub_cols.erase(sub_cols.begin() + static_cast<long>(j));
    } else {
      sub_rows.erase(sub_rows.begin() + static_cast<long>(j));
      sub_cols.erase(sub_cols.begin() + static_cast<long>(best_line));
    }
    MultiPoly minor = det_recursive(m, std::move(sub_rows), std::move(sub_cols));
    MultiPoly piece = entry * minor;
    if ((best_line + j) % 2 == 1) piece = -piece;
    acc = acc + piece;
  }
  return acc;
}

}  // namespace

MultiPoly det_poly_matrix(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("det_poly_matrix: empty matrix");
  for (const auto& row : m)
    if (row.size() != n)
      throw std::invalid_argument("det_poly_matrix: matrix is not square");
  for (const auto& row : m)
    for (const auto& entry : row)
      if (entry.field() != m[0][0].field() || entry.vars() != m[0][0].vars())
        throw std::invalid_argument("det_poly_matrix: mixed polynomial contexts");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  return det_recursive(m, idx, idx);
}

MultiPoly discriminant_univariate(const MultiPoly& p, const std::string& var) {
  std::vector<MultiPoly> a = p.coefficients_in(var);
  if (a.size() != 6)
    throw std::invalid_argument("discriminant_univariate: polynomial must have degree 5");
  if (!a[5].is_constant() || !(a[5].constant_value() == p.field().one()))
    throw std::invalid_argument("discriminant_univariate: polynomial must be monic");
  // p' coefficients: b_k = (k+1) a_{k+1}, k = 0..4.
  std::vector<MultiPoly> b;
  b.reserve(5);
  for (int k = 0; k < 5; ++k) b.push_back(a[static_cast<std::size_t>(k) + 1].scaled(Rat(k + 1)));
  const MultiPoly zero = MultiPoly::zero(p.field(), p.vars());
  std::vector<std::vector<MultiPoly>> syl(9, std::vector<MultiPoly>(9, zero));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k <= 5; ++k) syl[i][i + k] = a[5 - k];
  for (std::size_t j = 0; j < 5; ++j)
    for (std::size_t k = 0; k <= 4; ++k) syl[4 + j][j + k] = b[4 - k];
  // disc = (-1)^{5*4/2} Res(p, p') / lc(p) = +det(Sylvester).
  return det_poly_matrix(syl);
}

Rat content_rational(const MultiPoly& p) {
  Rat c(0);
  for (const auto& [e, coeff] : p.terms())
    for (const Rat& coord : coeff)
      if (sgn(coord) != 0) c = rat_gcd(c, coord);
  if (sgn(c) < 0) c = -c;
  return c;
}

MultiPoly normalized_primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  if (!p.field().is_rationals())
    throw std::invalid_argument("normalized_primitive: rational coefficients only");
  Rat c = content_rational(p);
  if (sgn(p.terms().begin()->second[0]) < 0) c = -c;
  return p.scaled(Rat(1) / c);
}

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly() : field_(CoeffField::rationals()) {}

LaurentPoly LaurentPoly::zero(CoeffField field, std::vector<std::string> params) {
  LaurentPoly p;
  p.field_ = std::move(field);
  p.params_ = std::move(params);
  return p;
}

LaurentPoly LaurentPoly::constant(CoeffField field, std::vector<std::string> params,
                                  const Rat& value) {
  return term(MultiPoly::constant(std::move(field), std::move(params), value), 0);
}

LaurentPoly LaurentPoly::term(MultiPoly coeff, long exponent) {
  LaurentPoly p = zero(coeff.field(), coeff.vars());
  if (!coeff.is_zero()) p.terms_.emplace(exponent, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::t_power(CoeffField field, std::vector<std::string> params,
                                 long exponent) {
  return term(MultiPoly::constant(std::move(field), std::move(params), Rat(1)), exponent);
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("LaurentPoly: field mismatch");
  if (params_ != o.params_)
    throw std::invalid_argument("LaurentPoly: parameter context mismatch");
}

void LaurentPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly out(*this);
  for (const auto& [k, c] : o.terms_) {
    auto it = out.terms_.find(k);
    if (it == out.terms_.end())
      out.terms_.emplace(k, c);
    else
      it->second = it->second + c;
  }
  out.prune();
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly out = zero(field_, params_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      MultiPoly prod = ca * cb;
      auto it = out.terms_.find(ka + kb);
      if (it == out.terms_.end())
        out.terms_.emplace(ka + kb, std::move(prod));
      else
        it->second = it->second + prod;
    }
  out.prune();
  return out;
}

LaurentPoly LaurentPoly::scaled(const MultiPoly& c) const {
  LaurentPoly out = zero(field_, params_);
  for (const auto& [k, v] : terms_) {
    MultiPoly prod = v * c;
    if (!prod.is_zero()) out.terms_.emplace(k, std::move(prod));
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  return scaled(MultiPoly::constant(field_, params_, c));
}

LaurentPoly LaurentPoly::pow(unsigned long n) const {
  LaurentPoly out = constant(field_, params_, Rat(1));
  LaurentPoly base(*this);
  while (n > 0) {
    if (n & 1UL) out = out * base;
    n >>= 1UL;
    if (n > 0) base = base * base;
  }
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return field_ == o.field_ && params_ == o.params_ && terms_ == o.terms_;
}

long LaurentPoly::valuation() const {
  if (terms_.empty())
    throw std::invalid_argument("LaurentPoly: valuation of the zero polynomial");
  return terms_.begin()->first;
}

MultiPoly LaurentPoly::leading_poly() const { return terms_.at(valuation()); }

CoeffField::Elem LaurentPoly::leading_at_zero() const {
  MultiPoly lead = leading_poly();
  if (!lead.is_constant())
    throw std::invalid_argument("LaurentPoly: leading coefficient is not constant");
  return lead.constant_value();
}

LaurentPoly LaurentPoly::scale_exponents(long d) const {
  if (d < 1) throw std::invalid_argument("LaurentPoly: scale factor must be positive");
  LaurentPoly out = zero(field_, params_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k * d, c);
  return out;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly out = zero(field_, params_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

MultiPoly LaurentPoly::at_zero() const {
  if (!terms_.empty() && terms_.begin()->first < 0)
    throw std::invalid_argument("LaurentPoly: value at t=0 undefined (negative valuation)");
  auto it = terms_.find(0);
  return it == terms_.end() ? MultiPoly::zero(field_, params_) : it->second;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += '(';
    out += c.to_string();
    out += ')';
    if (k != 0) {
      out += "*t";
      if (k != 1) {
        out += '^';
        out += std::to_string(k);
      }
    }
  }
  return out;
}

}  // namespace hessk3
