#pragma once

// Calabi-Yau decision for proj(A_n) and the Koszul-dual machinery behind it.
//
// The Koszul dual of B_n is the twisted exterior algebra
//   B^! = k<y_1..y_n> / (q_ij y_i y_j + y_j y_i, y_k^2),
// a Frobenius algebra whose Nakayama automorphism phi^! satisfies
// a b = phi^!(b) a for a, b of complementary degree. Dualizing phi^! gives the
// diagonal twist x_j -> prod_i q_ij^{-1} x_j of the dualizing complex; the
// Serre functor on tails(A_n) is a pure shift exactly when that twist is a
// scalar, i.e. when all column products prod_i q_ij agree.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qfermat/cyclo.hpp"
#include "qfermat/params.hpp"
#include "qfermat/skew_poly.hpp"

namespace qfermat {

struct CyReport {
  bool is_cy = false;
  std::vector<int> column_sums;   // s_j = sum_i e_ij mod n
  std::optional<int> common_value;
  DiagAutomorphism serre_twist;   // x_j -> w^(-s_j) x_j
  bool twist_is_scalar = false;
};

CyReport cy_criterion(const QuantumParams& params);

/// Element of the twisted exterior algebra. Basis y_S is indexed by the bitmask of S,
/// factors in increasing index order. Coefficients have conductor 2n.
struct ExtElement {
  QuantumParams params;
  std::map<std::uint32_t, Cyclotomic> terms;

  static ExtElement basis(const QuantumParams& params, std::uint32_t subset);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

/// Conductor 2n field holding the signs of B^!.
FieldRef exterior_field(const QuantumParams& params);

/// Product computed by rewriting the concatenated word with the defining relations
/// (adjacent swaps y_a y_b -> -q_ba y_b y_a for a > b, y_k y_k -> 0).
ExtElement ext_multiply(const ExtElement& a, const ExtElement& b);

/// Nakayama scalars found by brute force in B^!: c_j with y_{S_j} y_j = c_j y_j y_{S_j},
/// S_j the complement of {j}; then checks a b = phi(b) a on every complementary
/// pair of basis monomials. Throws std::logic_error if no consistent scalar exists.
DiagAutomorphism frobenius_bruteforce(const QuantumParams& params);

/// c_j = prod_i (-q_ji), conductor 2n.
DiagAutomorphism frobenius_closedform(const QuantumParams& params);

struct FrobeniusComparison {
  bool agree_mod_scalar = false;
  std::optional<Cyclotomic> ratio;  // common bruteforce/closedform ratio when it exists
  DiagAutomorphism bruteforce;
  DiagAutomorphism closedform;
};

FrobeniusComparison compare_frobenius(const QuantumParams& params);

/// Returns d with e_ij = d_i - d_j mod n (normalized so d_1 = 0), or nothing.
std::optional<std::vector<int>> is_twist_realizable(const QuantumParams& params);

/// Centrality of x_1^n + ... + x_n^n + phi x_1...x_n for symbolic phi.
bool deformation_central(const QuantumParams& params, bool include_product_term);

/// Commutation data of the affine patch obtained by inverting one generator.
struct PatchParams {
  int modulus = 0;                // exponents live in Z/modulus (modulus = original n)
  int inverted = 0;               // 0-based index of the inverted generator
  std::vector<int> labels;        // surviving original generators, 0-based, in order
  std::vector<int> exps;          // (n-1) x (n-1), X_i X_j = w^(e'_ij) X_j X_i
  std::vector<int> printed_exps;  // q_ij / (q_mi q_mj) taken literally
  bool printed_antisymmetric = false;

  int size() const { return static_cast<int>(labels.size()); }
  int e(int i, int j) const { return exps[static_cast<std::size_t>(i * size() + j)]; }
  bool antisymmetric() const;
};

/// X_i = x_i x_m^{-1}: e'_ij = e_ij + e_mi + e_jm mod n.
PatchParams dehomogenize(const QuantumParams& params, int inverted);

}  // namespace qfermat
