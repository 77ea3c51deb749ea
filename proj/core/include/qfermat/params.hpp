#pragma once

// Quantum parameters q_ij = w^(e_ij), w a primitive n-th root of unity.
//
// Generators are indexed 0..n-1 in the API; text and JSON formats use 1..n.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qfermat/errors.hpp"

namespace qfermat {

/// Raised when a parameter matrix violates e_ii = 0 or e_ij + e_ji = 0 (mod n).
/// Row and column are reported 1-based.
class InvalidParams : public InputError {
 public:
  InvalidParams(const std::string& what, int row, int col)
      : InputError(what), row_(row), col_(col) {}
  int row() const noexcept { return row_; }
  int col() const noexcept { return col_; }

 private:
  int row_;
  int col_;
};

inline int mod_n(long long value, int n) {
  const long long r = value % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

class QuantumParams {
 public:
  /// Commutative parameters (all exponents zero). Requires n >= 2.
  explicit QuantumParams(int n);

  int n() const noexcept { return n_; }
  /// Exponent e_ij in [0, n).
  int e(int i, int j) const { return exps_[static_cast<std::size_t>(i * n_ + j)]; }
  std::span<const int> exps() const noexcept { return exps_; }

  std::vector<std::vector<int>> matrix() const;

  /// Column sums s_j = sum_i e_ij mod n.
  std::vector<int> column_sums() const;

  friend bool operator==(const QuantumParams&, const QuantumParams&) = default;

 private:
  friend QuantumParams validate_params(int n, const std::vector<std::vector<long long>>& raw);
  friend QuantumParams from_twist(std::span<const long long> twist);
  friend QuantumParams from_upper_triangle(int n, std::span<const int> upper);

  int n_;
  std::vector<int> exps_;
};

/// Reduces entries mod n and checks the zero diagonal and antisymmetry.
/// Throws InputError for shape problems and InvalidParams naming the failing entry.
QuantumParams validate_params(int n, const std::vector<std::vector<long long>>& raw);

/// e_ij = d_i - d_j mod n, the parameters of a twisted commutative coordinate ring.
QuantumParams from_twist(std::span<const long long> twist);

/// Builds params from the strict upper triangle read row-major (e_12, e_13, ..., e_{n-1,n}).
QuantumParams from_upper_triangle(int n, std::span<const int> upper);

/// Strict upper triangle read row-major.
std::vector<int> upper_triangle(const QuantumParams& params);

/// Applies a relabeling: result.e(perm[i], perm[j]) == params.e(i, j).
QuantumParams permute(const QuantumParams& params, std::span<const int> perm);

}  // namespace qfermat
