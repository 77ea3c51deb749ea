#pragma once

// Exhaustive census over all antisymmetric exponent matrices mod n.
//
// Matrices are enumerated by reading the strict upper triangle row-major
// (e_12, e_13, ..., e_{n-1,n}) as a base-n counter, e_12 most significant.
// The index range is split into contiguous chunks; each chunk yields a tally
// and the tallies are merged in chunk order, so results do not depend on the
// number of workers.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qfermat/params.hpp"

namespace qfermat {

/// n^(n(n-1)/2). Throws CapacityError unless 3 <= n <= 6.
std::uint64_t census_size(int n);

/// Parameters at a position of the canonical order.
QuantumParams params_at(int n, std::uint64_t index);
std::uint64_t index_of(const QuantumParams& params);

/// Visits every matrix once in canonical order; stop early by returning false.
void enumerate(int n, const std::function<bool(const QuantumParams&)>& visit);

struct CensusOptions {
  int workers = 1;
  std::size_t witness_limit = 8;
  std::size_t counterexample_limit = 16;
};

struct CensusReport {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t count_cy = 0;
  std::uint64_t count_generic = 0;
  std::uint64_t count_generic_and_cy = 0;

  // Alternative readings of the generic CY count.
  std::uint64_t count_zero_column_sums = 0;
  std::uint64_t count_generic_and_zero_column_sums = 0;
  std::vector<std::uint64_t> generic_cy_by_common_value;  // indexed by the common column sum

  // generic and CY implies every column sum is 0.
  bool all_generic_cy_have_zero_column_sums = true;
  std::uint64_t implication_counterexample_count = 0;
  std::vector<QuantumParams> implication_counterexamples;

  // Shape of the face complex over CY matrices.
  std::uint64_t cy_full = 0;
  std::uint64_t cy_one_skeleton = 0;
  std::uint64_t cy_intermediate = 0;
  std::optional<bool> n4_dichotomy_holds;
  std::vector<QuantumParams> dichotomy_counterexamples;

  // Full face complex (all triangles zero) versus twist-realizability.
  std::uint64_t count_twist_realizable = 0;
  std::uint64_t full_vs_realizable_mismatches = 0;

  std::vector<QuantumParams> witnesses;  // first generic CY matrices in canonical order

  /// The claims the census is meant to confirm: the generic CY implication for n = 5,
  /// the dichotomy for n = 4. Other n have no claim.
  bool claims_hold() const;
};

CensusReport run_census(int n, const CensusOptions& options = {});

/// Conjunction of optional constraints; unset fields are unconstrained.
struct WitnessQuery {
  std::optional<bool> cy;
  std::optional<bool> generic;
  std::optional<bool> full;
  std::optional<bool> zero_column_sums;
  std::optional<bool> twist_realizable;

  bool matches(const QuantumParams& params) const;
};

/// First matrix in canonical order satisfying the query.
std::optional<QuantumParams> find_witness(int n, const WitnessQuery& query);

}  // namespace qfermat
