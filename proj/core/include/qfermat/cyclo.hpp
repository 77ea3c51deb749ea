#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// Elements are stored in the power basis 1, w, ..., w^(d-1) modulo the m-th
// cyclotomic polynomial, d = phi(m), with arbitrary-precision rational
// coordinates. The representation is canonical, so equality is coordinate-wise.

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qfermat {

/// Integer polynomial, coefficients stored low degree first.
using IntPoly = std::vector<mpz_class>;

/// Returns Phi_m, computed as (t^m - 1) divided by Phi_d over proper divisors d of m.
/// Throws std::invalid_argument for m < 1.
IntPoly cyclotomic_polynomial(int m);

int euler_totient(int m);

class CycloField;
using FieldRef = std::shared_ptr<const CycloField>;

class CycloField {
 public:
  /// Shared, immutable field of conductor m. Repeated calls return the same instance.
  static FieldRef get(int conductor);

  int conductor() const noexcept { return conductor_; }
  int degree() const noexcept { return static_cast<int>(modulus_.size()) - 1; }
  const IntPoly& modulus() const noexcept { return modulus_; }

  /// Coordinates of w^k for 0 <= k < conductor.
  std::span<const mpq_class> power(int k) const;

  explicit CycloField(int conductor);

 private:
  int conductor_;
  IntPoly modulus_;
  std::vector<std::vector<mpq_class>> powers_;
};

class Cyclotomic {
 public:
  explicit Cyclotomic(FieldRef field);

  static Cyclotomic zero(const FieldRef& field) { return Cyclotomic(field); }
  static Cyclotomic one(const FieldRef& field) { return from_rational(field, 1); }
  static Cyclotomic from_rational(const FieldRef& field, const mpq_class& value);
  /// Throws std::invalid_argument if coords.size() != phi(m).
  static Cyclotomic from_coords(const FieldRef& field, std::vector<mpq_class> coords);

  const FieldRef& field() const noexcept { return field_; }
  int conductor() const noexcept { return field_->conductor(); }
  std::span<const mpq_class> coords() const noexcept { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  /// True if the element lies in Q (all non-constant coordinates vanish).
  bool is_rational() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic operator-() const;

  /// Multiplicative inverse via extended gcd with Phi_m. Throws DivisionByZero on zero.
  Cyclotomic inverse() const;
  /// Integer power; negative exponents invert.
  Cyclotomic pow(long long e) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Human-readable basis expansion, e.g. "-1 - w + 1/2*w^3". Parses back under the
  /// coefficient grammar of expr.hpp.
  std::string to_string() const;

 private:
  Cyclotomic(FieldRef field, std::vector<mpq_class> coords);
  void check_same_field(const Cyclotomic& rhs) const;

  FieldRef field_;
  std::vector<mpq_class> coords_;
};

Cyclotomic divide(const Cyclotomic& a, const Cyclotomic& b);

/// w^e with w = exp(2 pi i / m); e is taken modulo m.
Cyclotomic root_of_unity(const FieldRef& field, long long e);

/// Maps a of conductor m into the field of conductor M (m | M) via w_m -> w_M^(M/m).
Cyclotomic embed(const Cyclotomic& a, const FieldRef& target);

/// Multiplicative order of a if a is a root of unity in its field, else 0.
int root_of_unity_order(const Cyclotomic& a);

/// Canonical "p/q" rendering of a rational (denominator always printed).
std::string rational_to_string(const mpq_class& q);

}  // namespace qfermat
