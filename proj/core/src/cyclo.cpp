#include "qfermat/cyclo.hpp"

#include "qfermat/errors.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qfermat {

namespace {

using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of integer polynomials by a monic divisor; throws if not exact.
IntPoly divide_exact_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("cyclotomic recursion: degree underflow");
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const mpz_class c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  for (const auto& r : num) {
    if (r != 0) throw std::logic_error("cyclotomic recursion: inexact division");
  }
  return quot;
}

// Remainder of p modulo a monic integer polynomial.
void reduce_mod(RatPoly& p, const IntPoly& mod) {
  const std::size_t d = mod.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    const mpq_class c = p[k];
    for (std::size_t i = 0; i <= d; ++i) p[k - d + i] -= c * mod[i];
  }
  p.resize(d, 0);
}

// Polynomial division over Q: returns the quotient, leaves the remainder in num.
RatPoly divmod(RatPoly& num, const RatPoly& den) {
  trim(num);
  if (num.size() < den.size()) return {};
  const std::size_t dd = den.size() - 1;
  RatPoly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    if (num[k] == 0) continue;
    const mpq_class c = num[k] / den.back();
    quot[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  trim(num);
  return quot;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

IntPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: conductor must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPoly num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) num = divide_exact_monic(std::move(num), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  cache.emplace(m, num);
  return num;
}

int euler_totient(int m) {
  if (m < 1) throw std::invalid_argument("euler_totient: argument must be positive");
  int result = m;
  int rest = m;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

CycloField::CycloField(int conductor) : conductor_(conductor), modulus_(cyclotomic_polynomial(conductor)) {
  const int d = degree();
  powers_.reserve(conductor_);
  for (int k = 0; k < conductor_; ++k) {
    RatPoly p(static_cast<std::size_t>(std::max(k + 1, d)), 0);
    p[k] = 1;
    reduce_mod(p, modulus_);
    powers_.push_back(std::move(p));
  }
}

FieldRef CycloField::get(int conductor) {
  if (conductor < 1) throw std::invalid_argument("CycloField: conductor must be positive");
  static std::mutex mu;
  static std::map<int, FieldRef> fields;
  std::lock_guard lock(mu);
  auto& slot = fields[conductor];
  if (!slot) slot = std::make_shared<const CycloField>(conductor);
  return slot;
}

std::span<const mpq_class> CycloField::power(int k) const {
  k %= conductor_;
  if (k < 0) k += conductor_;
  return powers_[static_cast<std::size_t>(k)];
}

Cyclotomic::Cyclotomic(FieldRef field) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("Cyclotomic: null field");
  coords_.assign(static_cast<std::size_t>(field_->degree()), 0);
}

Cyclotomic::Cyclotomic(FieldRef field, std::vector<mpq_class> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {}

Cyclotomic Cyclotomic::from_rational(const FieldRef& field, const mpq_class& value) {
  Cyclotomic out(field);
  out.coords_[0] = value;
  out.coords_[0].canonicalize();
  return out;
}

Cyclotomic Cyclotomic::from_coords(const FieldRef& field, std::vector<mpq_class> coords) {
  if (!field) throw std::invalid_argument("Cyclotomic: null field");
  if (coords.size() != static_cast<std::size_t>(field->degree())) {
    throw std::invalid_argument("Cyclotomic: expected " + std::to_string(field->degree()) +
                                " coordinates for conductor " + std::to_string(field->conductor()));
  }
  for (auto& c : coords) c.canonicalize();
  return Cyclotomic(field, std::move(coords));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coords_[0] == 1; }

void Cyclotomic::check_same_field(const Cyclotomic& rhs) const {
  if (field_->conductor() != rhs.field_->conductor()) {
    throw FieldMismatch("cyclotomic operands have conductors " + std::to_string(field_->conductor()) +
                        " and " + std::to_string(rhs.field_->conductor()));
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  RatPoly prod = poly_mul(coords_, rhs.coords_);
  if (prod.empty()) prod.assign(coords_.size(), 0);
  reduce_mod(prod, field_->modulus());
  coords_ = std::move(prod);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Extended Euclid on (Phi_m, a): track s with s*a == r (mod Phi_m).
  RatPoly r0(field_->modulus().begin(), field_->modulus().end());
  RatPoly r1 = coords_;
  trim(r1);
  RatPoly s0;
  RatPoly s1{1};
  while (r1.size() > 1) {
    RatPoly rem = r0;
    RatPoly q = divmod(rem, r1);
    RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw std::logic_error("Cyclotomic::inverse: modulus not irreducible");
  }
  const mpq_class scale = 1 / r1[0];
  for (auto& c : s1) c *= scale;
  reduce_mod(s1, field_->modulus());
  return Cyclotomic(field_, std::move(s1));
}

Cyclotomic Cyclotomic::pow(long long e) const {
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  Cyclotomic acc = one(field_);
  while (k) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.field_->conductor() == b.field_->conductor() && a.coords_ == b.coords_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const mpq_class& c = coords_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'w';
    if (k > 1) os << '^' << k;
  }
  if (first) return "0";
  return os.str();
}

Cyclotomic divide(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic root_of_unity(const FieldRef& field, long long e) {
  const int m = field->conductor();
  const auto k = static_cast<int>(((e % m) + m) % m);
  const auto p = field->power(k);
  return Cyclotomic::from_coords(field, std::vector<mpq_class>(p.begin(), p.end()));
}

Cyclotomic embed(const Cyclotomic& a, const FieldRef& target) {
  const int m = a.conductor();
  const int big = target->conductor();
  if (big % m != 0) {
    throw FieldMismatch("cannot embed conductor " + std::to_string(m) + " into " + std::to_string(big));
  }
  const int step = big / m;
  Cyclotomic out = Cyclotomic::zero(target);
  const auto coords = a.coords();
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    out += Cyclotomic::from_rational(target, coords[k]) * root_of_unity(target, static_cast<long long>(k) * step);
  }
  return out;
}

int root_of_unity_order(const Cyclotomic& a) {
  if (a.is_zero()) return 0;
  const int bound = 2 * a.conductor();
  Cyclotomic acc = a;
  for (int k = 1; k <= bound; ++k) {
    if (acc.is_one()) return k;
    acc *= a;
  }
  return 0;
}

std::string rational_to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace qfermat
