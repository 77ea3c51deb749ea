#include "qfermat/params.hpp"

#include <stdexcept>

namespace qfermat {

QuantumParams::QuantumParams(int n) : n_(n) {
  if (n < 2) throw InputError("quantum parameters need n >= 2, got " + std::to_string(n));
  exps_.assign(static_cast<std::size_t>(n) * n, 0);
}

std::vector<std::vector<int>> QuantumParams::matrix() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[i][j] = e(i, j);
  }
  return out;
}

std::vector<int> QuantumParams::column_sums() const {
  std::vector<int> sums(n_, 0);
  for (int j = 0; j < n_; ++j) {
    int s = 0;
    for (int i = 0; i < n_; ++i) s += e(i, j);
    sums[j] = s % n_;
  }
  return sums;
}

QuantumParams validate_params(int n, const std::vector<std::vector<long long>>& raw) {
  QuantumParams out(n);
  if (raw.size() != static_cast<std::size_t>(n)) {
    throw InputError("exponent matrix has " + std::to_string(raw.size()) + " rows, expected " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (raw[i].size() != static_cast<std::size_t>(n)) {
      throw InvalidParams("exponent matrix row " + std::to_string(i + 1) + " has " +
                              std::to_string(raw[i].size()) + " entries, expected " + std::to_string(n),
                          i + 1, 0);
    }
    for (int j = 0; j < n; ++j) out.exps_[static_cast<std::size_t>(i * n + j)] = mod_n(raw[i][j], n);
  }
  for (int i = 0; i < n; ++i) {
    if (out.e(i, i) != 0) {
      throw InvalidParams("diagonal entry e_" + std::to_string(i + 1) + std::to_string(i + 1) +
                              " must be 0 mod " + std::to_string(n),
                          i + 1, i + 1);
    }
    for (int j = i + 1; j < n; ++j) {
      if ((out.e(i, j) + out.e(j, i)) % n != 0) {
        throw InvalidParams("antisymmetry violated at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                "): e_ij + e_ji = " + std::to_string(raw[i][j] + raw[j][i]) + " is not 0 mod " +
                                std::to_string(n),
                            i + 1, j + 1);
      }
    }
  }
  return out;
}

QuantumParams from_twist(std::span<const long long> twist) {
  const int n = static_cast<int>(twist.size());
  QuantumParams out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.exps_[static_cast<std::size_t>(i * n + j)] = mod_n(twist[i] - twist[j], n);
  }
  return out;
}

QuantumParams from_upper_triangle(int n, std::span<const int> upper) {
  QuantumParams out(n);
  if (upper.size() != static_cast<std::size_t>(n * (n - 1) / 2)) {
    throw std::invalid_argument("from_upper_triangle: wrong number of entries");
  }
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const int v = mod_n(upper[k], n);
      out.exps_[static_cast<std::size_t>(i * n + j)] = v;
      out.exps_[static_cast<std::size_t>(j * n + i)] = mod_n(-v, n);
    }
  }
  return out;
}

std::vector<int> upper_triangle(const QuantumParams& params) {
  std::vector<int> out;
  const int n = params.n();
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.push_back(params.e(i, j));
  }
  return out;
}

QuantumParams permute(const QuantumParams& params, std::span<const int> perm) {
  const int n = params.n();
  std::vector<std::vector<long long>> raw(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) raw[perm[i]][perm[j]] = params.e(i, j);
  }
  return validate_params(n, raw);
}

}  // namespace qfermat
