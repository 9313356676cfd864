#include "galdesc/numberfield.hpp"

#include <algorithm>
#include <sstream>

namespace galdesc {

Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw ParseError("bad rational literal: " + s);
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

namespace polyq {

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int deg(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(r);
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(r);
}

Poly mul(const Poly& a, const Poly& b) {
  if (deg(a) < 0 || deg(b) < 0) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

Poly scale(const Poly& a, const Rational& c) {
  Poly r = a;
  for (auto& x : r) x *= c;
  return trim(r);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  int db = deg(b);
  if (db < 0) throw Error("polynomial division by zero");
  Poly rem = trim(a);
  Poly quot(rem.size() > static_cast<size_t>(db) ? rem.size() - db : 0, Rational(0));
  while (deg(rem) >= db) {
    int dr = deg(rem);
    Rational c = rem[static_cast<size_t>(dr)] / b[static_cast<size_t>(db)];
    quot[static_cast<size_t>(dr - db)] = c;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<size_t>(dr - db + i)] -= c * b[static_cast<size_t>(i)];
    rem = trim(rem);
  }
  return {trim(quot), rem};
}

Poly mod(const Poly& a, const Poly& m) { return divmod(a, m).second; }

Poly inverse_mod(const Poly& a, const Poly& m) {
  // extended Euclid: s*a + t*m = g
  Poly r0 = trim(m), r1 = mod(a, m);
  Poly s0 = {}, s1 = {Rational(1)};
  if (deg(r1) < 0) throw Error("zero is not invertible");
  while (deg(r1) > 0) {
    auto [q, r2] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (deg(r1) != 0) throw Error("element is not invertible (gcd with minimal polynomial nontrivial)");
  return mod(scale(s1, Rational(1) / r1[0]), m);
}

Rational eval(const Poly& p, const Rational& x) {
  Rational r(0);
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) r = r * x + p[static_cast<size_t>(i)];
  return r;
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  mpz_class a = abs(n);
  if (a == 0) return out;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  return out;
}

// integer monic polynomial obtained from a monic rational one by x -> y/m
std::vector<mpz_class> integerize_monic(const Poly& p, int n) {
  mpz_class m = 1;
  for (const auto& c : p) m = lcm(m, c.get_den());
  std::vector<mpz_class> out(static_cast<size_t>(n) + 1);
  mpz_class pw = 1;  // m^(n-i)
  for (int i = n; i >= 0; --i) {
    Rational c = p[static_cast<size_t>(i)] * Rational(pw);
    out[static_cast<size_t>(i)] = c.get_num();  // integral by construction
    pw *= m;
  }
  return out;
}

mpz_class eval_int(const std::vector<mpz_class>& p, const mpz_class& x) {
  mpz_class r = 0;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) r = r * x + p[static_cast<size_t>(i)];
  return r;
}

bool has_integer_root(const std::vector<mpz_class>& p) {
  // monic, so integer roots divide the constant term
  if (p[0] == 0) return true;
  for (const auto& d : divisors(p[0])) {
    if (eval_int(p, d) == 0 || eval_int(p, -d) == 0) return true;
  }
  return false;
}

bool quartic_has_quadratic_factor(const std::vector<mpz_class>& p) {
  // monic integer quartic y^4 + a y^3 + b y^2 + c y + d =
  // (y^2 + py + q)(y^2 + ry + s): enumerate qs = d.
  const mpz_class a = p[3], b = p[2], c = p[1], d = p[0];
  std::vector<mpz_class> qs;
  if (d == 0) return true;  // y | p, caught earlier anyway
  for (const auto& q0 : divisors(d)) {
    qs.push_back(q0);
    qs.push_back(-q0);
  }
  for (const auto& q : qs) {
    mpz_class s = d / q;
    // p + r = a, p*r = b - q - s  => roots of t^2 - a t + (b - q - s)
    mpz_class disc = a * a - 4 * (b - q - s);
    if (disc < 0) continue;
    mpz_class rt = sqrt(disc);
    if (rt * rt != disc) continue;
    for (int sign : {-1, 1}) {
      mpz_class two_p = a + sign * rt;
      if (two_p % 2 != 0) continue;
      mpz_class pp = two_p / 2, rr = a - pp;
      if (pp * s + q * rr == c) return true;
    }
  }
  return false;
}

}  // namespace

bool irreducible_or_asserted(const Poly& monic, bool* decided) {
  int n = deg(monic);
  if (decided) *decided = (n <= 4);
  if (n <= 0) return false;
  if (n == 1) return true;
  if (n > 4) return true;  // asserted by the caller
  auto ip = integerize_monic(monic, n);
  if (has_integer_root(ip)) return false;
  if (n <= 3) return true;
  return !quartic_has_quadratic_factor(ip);
}

}  // namespace polyq

FieldPtr NumberField::make(Poly monic_minpoly) {
  Poly p = polyq::trim(std::move(monic_minpoly));
  int n = polyq::deg(p);
  if (n < 1) throw Error("minimal polynomial must have degree >= 1");
  if (p[static_cast<size_t>(n)] != 1) throw Error("minimal polynomial must be monic");
  bool decided = true;
  if (!polyq::irreducible_or_asserted(p, &decided))
    throw Error("minimal polynomial is reducible");
  return FieldPtr(new NumberField(std::move(p), !decided));
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->minpoly() == b->minpoly();
}

int field_degree(const FieldPtr& f) { return f ? f->degree() : 1; }

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_degree(field_))
    throw Error("coordinate vector length does not match field degree");
}

FieldElement FieldElement::constant(const FieldPtr& field, const Rational& c) {
  std::vector<Rational> v(static_cast<size_t>(field_degree(field)), Rational(0));
  v[0] = c;
  return FieldElement(field, std::move(v));
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  if (!field || field->degree() < 2) throw Error("field has no nontrivial generator");
  std::vector<Rational> v(static_cast<size_t>(field->degree()), Rational(0));
  v[1] = 1;
  return FieldElement(field, std::move(v));
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational FieldElement::rational_part() const {
  if (!is_rational()) throw Error("element does not lie in the rationals");
  return coords_[0];
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!same_field(a.field(), b.field())) throw FieldMismatch();
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(*this, o);
  std::vector<Rational> v = coords_;
  for (size_t i = 0; i < v.size(); ++i) v[i] += o.coords_[i];
  return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(*this, o);
  std::vector<Rational> v = coords_;
  for (size_t i = 0; i < v.size(); ++i) v[i] -= o.coords_[i];
  return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> v = coords_;
  for (auto& c : v) c = -c;
  return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(*this, o);
  if (!field_) return FieldElement(nullptr, {coords_[0] * o.coords_[0]});
  Poly prod = polyq::mod(polyq::mul(coords_, o.coords_), field_->minpoly());
  prod.resize(static_cast<size_t>(field_->degree()), Rational(0));
  return FieldElement(field_, std::move(prod));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (!field_) return FieldElement(nullptr, {Rational(1) / coords_[0]});
  Poly inv = polyq::inverse_mod(coords_, field_->minpoly());
  inv.resize(static_cast<size_t>(field_->degree()), Rational(0));
  return FieldElement(field_, std::move(inv));
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!same_field(field_, o.field_)) return false;
  return coords_ == o.coords_;
}

FieldElement FieldElement::scaled(const Rational& c) const {
  std::vector<Rational> v = coords_;
  for (auto& x : v) x *= c;
  return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::eval_poly(const std::vector<FieldElement>& coeffs, const FieldElement& x) {
  FieldElement r = FieldElement::constant(x.field(), 0);
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) r = r * x + coeffs[static_cast<size_t>(i)];
  return r;
}

std::string FieldElement::to_string() const {
  if (!field_) return rat_to_string(coords_[0]);
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ",";
    os << rat_to_string(coords_[i]);
  }
  os << "]";
  return os.str();
}

}  // namespace galdesc
