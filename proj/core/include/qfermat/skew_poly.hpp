#pragma once

// Exact arithmetic in the skew polynomial ring
//   B_n = k<x_1..x_n> / (x_i x_j = q_ij x_j x_i)
// and its Fermat quotient A_n = B_n / (x_1^n + ... + x_n^n).
//
// Elements are kept in the PBW basis x_1^a_1 ... x_n^a_n. For A_n the basis is
// restricted to a_n < n; since every x_k^n is central the rewrite
// x_n^n -> -(x_1^n + ... + x_{n-1}^n) is valid in any position.
//
// Phase convention: x_i x_j = w^(e_ij) x_j x_i with i the left factor.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qfermat/cyclo.hpp"
#include "qfermat/params.hpp"

namespace qfermat {

enum class Algebra { B, A };

std::string to_string(Algebra algebra);

/// Generator indices 0..n-1, left to right.
using Word = std::vector<int>;

struct Multidegree {
  std::vector<int> degs;

  int total() const;
  friend bool operator==(const Multidegree&, const Multidegree&) = default;
};

/// Graded-lexicographic order, larger first (x_1 > x_2 > ... within a degree).
struct GrlexGreater {
  bool operator()(const Multidegree& a, const Multidegree& b) const;
};

struct NormalOrdered {
  int phase;  // exponent of w, mod n
  Multidegree monomial;
};

/// x_{w_1} ... x_{w_k} = w^phase x^a, phase = sum of e_{w_a w_b} over inversions a < b, w_a > w_b.
NormalOrdered normal_order(const QuantumParams& params, std::span<const int> word);

/// Phase of x^a * x^b = w^phase x^(a+b): sum over i > j of a_i b_j e_ij, mod n.
int product_phase(const QuantumParams& params, const Multidegree& a, const Multidegree& b);

class SkewPoly {
 public:
  using Terms = std::map<Multidegree, Cyclotomic, GrlexGreater>;

  /// The zero element. The coefficient field conductor must be a positive multiple of n.
  SkewPoly(QuantumParams params, Algebra algebra, FieldRef field);
  SkewPoly(QuantumParams params, Algebra algebra);

  static SkewPoly constant(QuantumParams params, Algebra algebra, const Cyclotomic& c);
  static SkewPoly generator(QuantumParams params, Algebra algebra, int index);
  /// c * x^a, reduced when the algebra is A.
  static SkewPoly monomial(QuantumParams params, Algebra algebra, Multidegree a, const Cyclotomic& c);

  const QuantumParams& params() const noexcept { return params_; }
  Algebra algebra() const noexcept { return algebra_; }
  const FieldRef& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const;

  /// w_n^k expressed in the coefficient field.
  Cyclotomic phase(int k) const;

  SkewPoly& operator+=(const SkewPoly& rhs);
  SkewPoly& operator-=(const SkewPoly& rhs);
  friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }
  friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) { return a -= b; }
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
  SkewPoly operator-() const;
  SkewPoly scaled(const Cyclotomic& c) const;

  /// Adds c * x^a without reduction.
  void add_term(const Multidegree& a, const Cyclotomic& c);

  friend bool operator==(const SkewPoly& a, const SkewPoly& b);

  /// Canonical text: terms in descending grlex order, e.g. "x1^2 + (1 - w)*x1*x2".
  std::string to_string() const;

 private:
  void check_compatible(const SkewPoly& rhs) const;

  QuantumParams params_;
  Algebra algebra_;
  FieldRef field_;
  Terms terms_;
};

SkewPoly multiply(const SkewPoly& f, const SkewPoly& g);

/// Normal form in A_n. Requires algebra A.
SkewPoly reduce_A(const SkewPoly& f);

/// x_1^n + ... + x_n^n.
SkewPoly fermat_element(const QuantumParams& params, Algebra algebra);
/// x_1 x_2 ... x_n.
SkewPoly product_element(const QuantumParams& params, Algebra algebra);

/// Diagonal automorphism x_j -> c_j x_j.
struct DiagAutomorphism {
  std::vector<Cyclotomic> scalars;

  bool is_scalar() const;
  bool is_identity() const;
};

bool is_central(const SkewPoly& f);

/// Returns c with f x_j = c_j x_j f for every j, if such scalars exist.
std::optional<DiagAutomorphism> normalizing_automorphism(const SkewPoly& f);

/// Number of PBW monomials of total degree d (restricted to a_n < n for A).
std::uint64_t graded_dimension(const QuantumParams& params, Algebra algebra, int d);

/// All multidegrees of total degree d on n generators, descending grlex.
std::vector<Multidegree> monomials_of_degree(int n, int d);

}  // namespace qfermat
