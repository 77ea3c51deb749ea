#include "qfermat/census.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <thread>

#include "qfermat/hilb1.hpp"
#include "qfermat/koszul.hpp"

namespace qfermat {

namespace {

constexpr int kMaxN = 6;

int pair_count(int n) { return n * (n - 1) / 2; }

// Flat matrix kernel: everything the census needs is computed from the digits of
// the upper triangle without allocating.
struct Kernel {
  int n;
  int pairs;
  std::array<std::array<int, kMaxN>, kMaxN> pair_index{};  // (i, j), i < j -> digit
  std::vector<std::array<int, 3>> triangles;

  explicit Kernel(int n_) : n(n_), pairs(pair_count(n_)) {
    int k = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pair_index[i][j] = k++;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int l = j + 1; l < n; ++l) triangles.push_back({i, j, l});
      }
    }
  }

  int e(const int* digits, int i, int j) const {
    if (i == j) return 0;
    if (i < j) return digits[pair_index[i][j]];
    const int v = digits[pair_index[j][i]];
    return v == 0 ? 0 : n - v;
  }
};

struct Tally {
  std::uint64_t cy = 0, generic = 0, generic_cy = 0, zero_sums = 0, generic_zero_sums = 0;
  std::array<std::uint64_t, kMaxN> generic_cy_by_value{};
  std::uint64_t implication_failures = 0;
  std::vector<std::uint64_t> implication_examples;
  std::uint64_t cy_full = 0, cy_one_skeleton = 0, cy_intermediate = 0;
  std::vector<std::uint64_t> dichotomy_examples;
  std::uint64_t realizable = 0, full_mismatch = 0;
  std::vector<std::uint64_t> witnesses;
};

void decode(int n, int pairs, std::uint64_t index, int* digits) {
  for (int k = pairs - 1; k >= 0; --k) {
    digits[k] = static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
}

void increment(int n, int pairs, int* digits) {
  for (int k = pairs - 1; k >= 0; --k) {
    if (++digits[k] < n) return;
    digits[k] = 0;
  }
}

void tally_range(const Kernel& kernel, std::uint64_t begin, std::uint64_t end, const CensusOptions& options,
                 Tally& t) {
  const int n = kernel.n;
  std::array<int, kMaxN * (kMaxN - 1) / 2> digits{};
  decode(n, kernel.pairs, begin, digits.data());
  std::array<int, kMaxN> sums{};
  for (std::uint64_t idx = begin; idx < end; ++idx, increment(n, kernel.pairs, digits.data())) {
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int i = 0; i < n; ++i) s += kernel.e(digits.data(), i, j);
      sums[j] = s % n;
    }
    bool cy = true;
    bool zero = sums[0] == 0;
    for (int j = 1; j < n; ++j) {
      cy = cy && sums[j] == sums[0];
      zero = zero && sums[j] == 0;
    }
    int zero_triangles = 0;
    for (const auto& tri : kernel.triangles) {
      const int v = (kernel.e(digits.data(), tri[0], tri[1]) + kernel.e(digits.data(), tri[1], tri[2]) +
                     kernel.e(digits.data(), tri[2], tri[0])) %
                    n;
      zero_triangles += v == 0;
    }
    const bool generic = zero_triangles == 0;
    const bool full = zero_triangles == static_cast<int>(kernel.triangles.size());

    // Twist-realizable: d_i = e_i1 reproduces every entry.
    bool realizable = true;
    for (int i = 0; i < n && realizable; ++i) {
      for (int j = i + 1; j < n && realizable; ++j) {
        const int d = kernel.e(digits.data(), i, 0) - kernel.e(digits.data(), j, 0);
        realizable = ((d % n) + n) % n == kernel.e(digits.data(), i, j);
      }
    }
    t.realizable += realizable;
    t.full_mismatch += realizable != full;

    t.generic += generic;
    t.zero_sums += zero;
    if (generic && zero) ++t.generic_zero_sums;
    if (!cy) continue;
    ++t.cy;
    if (full) {
      ++t.cy_full;
    } else if (generic) {
      ++t.cy_one_skeleton;
    } else {
      ++t.cy_intermediate;
      if (t.dichotomy_examples.size() < options.counterexample_limit) t.dichotomy_examples.push_back(idx);
    }
    if (!generic) continue;
    ++t.generic_cy;
    ++t.generic_cy_by_value[sums[0]];
    if (t.witnesses.size() < options.witness_limit) t.witnesses.push_back(idx);
    if (!zero) {
      ++t.implication_failures;
      if (t.implication_examples.size() < options.counterexample_limit) t.implication_examples.push_back(idx);
    }
  }
}

void append_bounded(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, std::size_t limit) {
  for (auto v : src) {
    if (dst.size() >= limit) return;
    dst.push_back(v);
  }
}

}  // namespace

std::uint64_t census_size(int n) {
  if (n < 3 || n > kMaxN) {
    throw CapacityError("census supports 3 <= n <= " + std::to_string(kMaxN) + ", got n = " + std::to_string(n));
  }
  std::uint64_t total = 1;
  for (int k = 0; k < pair_count(n); ++k) total *= static_cast<std::uint64_t>(n);
  return total;
}

QuantumParams params_at(int n, std::uint64_t index) {
  if (index >= census_size(n)) throw std::out_of_range("census index out of range");
  std::vector<int> digits(static_cast<std::size_t>(pair_count(n)));
  decode(n, pair_count(n), index, digits.data());
  return from_upper_triangle(n, digits);
}

std::uint64_t index_of(const QuantumParams& params) {
  std::uint64_t index = 0;
  for (int v : upper_triangle(params)) index = index * static_cast<std::uint64_t>(params.n()) + static_cast<std::uint64_t>(v);
  return index;
}

void enumerate(int n, const std::function<bool(const QuantumParams&)>& visit) {
  const std::uint64_t total = census_size(n);
  std::vector<int> digits(static_cast<std::size_t>(pair_count(n)), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (!visit(from_upper_triangle(n, digits))) return;
    increment(n, pair_count(n), digits.data());
  }
}

bool CensusReport::claims_hold() const {
  if (n == 5 && !all_generic_cy_have_zero_column_sums) return false;
  if (n4_dichotomy_holds && !*n4_dichotomy_holds) return false;
  return true;
}

CensusReport run_census(int n, const CensusOptions& options) {
  const std::uint64_t total = census_size(n);
  const Kernel kernel(n);
  const int workers = std::max(1, options.workers);

  // Contiguous ranges, one per worker. Each range keeps its own first witnesses, and
  // ranges are merged in order, so every partition gives the same report.
  const auto parts = static_cast<std::uint64_t>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));
  std::vector<Tally> tallies(parts);
  auto bound = [&](std::uint64_t p) { return total / parts * p + std::min(p, total % parts); };
  if (parts == 1) {
    tally_range(kernel, 0, total, options, tallies[0]);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t p = 0; p < parts; ++p) {
      pool.emplace_back([&, p] { tally_range(kernel, bound(p), bound(p + 1), options, tallies[p]); });
    }
  }

  Tally sum;
  for (const auto& t : tallies) {
    sum.cy += t.cy;
    sum.generic += t.generic;
    sum.generic_cy += t.generic_cy;
    sum.zero_sums += t.zero_sums;
    sum.generic_zero_sums += t.generic_zero_sums;
    for (int v = 0; v < n; ++v) sum.generic_cy_by_value[v] += t.generic_cy_by_value[v];
    sum.implication_failures += t.implication_failures;
    append_bounded(sum.implication_examples, t.implication_examples, options.counterexample_limit);
    sum.cy_full += t.cy_full;
    sum.cy_one_skeleton += t.cy_one_skeleton;
    sum.cy_intermediate += t.cy_intermediate;
    append_bounded(sum.dichotomy_examples, t.dichotomy_examples, options.counterexample_limit);
    sum.realizable += t.realizable;
    sum.full_mismatch += t.full_mismatch;
    append_bounded(sum.witnesses, t.witnesses, options.witness_limit);
  }

  CensusReport report;
  report.n = n;
  report.total = total;
  report.count_cy = sum.cy;
  report.count_generic = sum.generic;
  report.count_generic_and_cy = sum.generic_cy;
  report.count_zero_column_sums = sum.zero_sums;
  report.count_generic_and_zero_column_sums = sum.generic_zero_sums;
  report.generic_cy_by_common_value.assign(sum.generic_cy_by_value.begin(), sum.generic_cy_by_value.begin() + n);
  report.implication_counterexample_count = sum.implication_failures;
  report.all_generic_cy_have_zero_column_sums = sum.implication_failures == 0;
  for (auto idx : sum.implication_examples) report.implication_counterexamples.push_back(params_at(n, idx));
  report.cy_full = sum.cy_full;
  report.cy_one_skeleton = sum.cy_one_skeleton;
  report.cy_intermediate = sum.cy_intermediate;
  if (n == 4) report.n4_dichotomy_holds = sum.cy_intermediate == 0;
  for (auto idx : sum.dichotomy_examples) report.dichotomy_counterexamples.push_back(params_at(n, idx));
  report.count_twist_realizable = sum.realizable;
  report.full_vs_realizable_mismatches = sum.full_mismatch;
  for (auto idx : sum.witnesses) report.witnesses.push_back(params_at(n, idx));
  return report;
}

bool WitnessQuery::matches(const QuantumParams& params) const {
  if (cy && cy_criterion(params).is_cy != *cy) return false;
  if (generic && is_generic(params) != *generic) return false;
  if (full && face_complex(params).is_full != *full) return false;
  if (zero_column_sums) {
    const auto sums = params.column_sums();
    const bool zero = std::all_of(sums.begin(), sums.end(), [](int s) { return s == 0; });
    if (zero != *zero_column_sums) return false;
  }
  if (twist_realizable && is_twist_realizable(params).has_value() != *twist_realizable) return false;
  return true;
}

std::optional<QuantumParams> find_witness(int n, const WitnessQuery& query) {
  std::optional<QuantumParams> found;
  enumerate(n, [&](const QuantumParams& p) {
    if (!query.matches(p)) return true;
    found = p;
    return false;
  });
  return found;
}

}  // namespace qfermat
