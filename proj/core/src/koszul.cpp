#include "qfermat/koszul.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace qfermat {

CyReport cy_criterion(const QuantumParams& params) {
  const int n = params.n();
  CyReport report;
  report.column_sums = params.column_sums();
  report.is_cy = true;
  for (int j = 1; j < n; ++j) {
    if (report.column_sums[j] != report.column_sums[0]) report.is_cy = false;
  }
  if (report.is_cy) report.common_value = report.column_sums[0];
  const FieldRef field = CycloField::get(n);
  for (int j = 0; j < n; ++j) report.serre_twist.scalars.push_back(root_of_unity(field, -report.column_sums[j]));
  report.twist_is_scalar = report.serre_twist.is_scalar();
  return report;
}

FieldRef exterior_field(const QuantumParams& params) { return CycloField::get(2 * params.n()); }

ExtElement ExtElement::basis(const QuantumParams& params, std::uint32_t subset) {
  ExtElement out{params, {}};
  out.terms.emplace(subset, Cyclotomic::one(exterior_field(params)));
  return out;
}

namespace {

std::vector<int> letters_of(std::uint32_t subset) {
  std::vector<int> out;
  for (int i = 0; subset; ++i, subset >>= 1) {
    if (subset & 1U) out.push_back(i);
  }
  return out;
}

// y_S * y_T by bubble-sorting the concatenated word. Returns the phase exponent
// (mod 2n) and the resulting subset, or nothing when the product vanishes.
std::optional<std::pair<int, std::uint32_t>> basis_product(const QuantumParams& params, std::uint32_t s,
                                                          std::uint32_t t) {
  const int n = params.n();
  std::vector<int> word = letters_of(s);
  const auto right = letters_of(t);
  word.insert(word.end(), right.begin(), right.end());
  int phase = 0;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      const int a = word[k];
      const int b = word[k + 1];
      if (a == b) return std::nullopt;
      if (a > b) {
        // y_a y_b = -q_ba y_b y_a; -1 = w_{2n}^n and q_ba = w_{2n}^(2 e_ba).
        phase = (phase + n + 2 * params.e(b, a)) % (2 * n);
        std::swap(word[k], word[k + 1]);
        swapped = true;
      }
    }
  }
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    if (word[k] == word[k + 1]) return std::nullopt;
  }
  return std::pair{phase, s | t};
}

Cyclotomic top_coefficient(const ExtElement& x, std::uint32_t top) {
  auto it = x.terms.find(top);
  if (it == x.terms.end()) return Cyclotomic::zero(exterior_field(x.params));
  return it->second;
}

ExtElement apply_diag(const ExtElement& x, const DiagAutomorphism& phi) {
  ExtElement out{x.params, {}};
  for (const auto& [subset, c] : x.terms) {
    Cyclotomic scale = c;
    for (int i : letters_of(subset)) scale *= phi.scalars[i];
    out.terms.emplace(subset, std::move(scale));
  }
  return out;
}

}  // namespace

ExtElement ext_multiply(const ExtElement& a, const ExtElement& b) {
  if (!(a.params == b.params)) throw FieldMismatch("exterior elements have different quantum parameters");
  const FieldRef field = exterior_field(a.params);
  ExtElement out{a.params, {}};
  for (const auto& [s, cs] : a.terms) {
    for (const auto& [t, ct] : b.terms) {
      auto prod = basis_product(a.params, s, t);
      if (!prod) continue;
      Cyclotomic c = cs * ct * root_of_unity(field, prod->first);
      auto [it, inserted] = out.terms.try_emplace(prod->second, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  }
  return out;
}

DiagAutomorphism frobenius_bruteforce(const QuantumParams& params) {
  const int n = params.n();
  if (n > 16) throw CapacityError("exterior algebra brute force limited to n <= 16");
  const std::uint32_t top = (1U << n) - 1;
  DiagAutomorphism phi;
  for (int j = 0; j < n; ++j) {
    const auto yj = ExtElement::basis(params, 1U << j);
    const auto rest = ExtElement::basis(params, top & ~(1U << j));
    // a b = phi(b) a with a = y_{S_j} of degree n-1 and b = y_j.
    const Cyclotomic ab = top_coefficient(ext_multiply(rest, yj), top);
    const Cyclotomic ba = top_coefficient(ext_multiply(yj, rest), top);
    if (ab.is_zero() || ba.is_zero()) {
      throw std::logic_error("frobenius_bruteforce: degenerate top-degree pairing at generator " +
                             std::to_string(j + 1));
    }
    phi.scalars.push_back(divide(ab, ba));
  }
  for (std::uint32_t s = 0; s <= top; ++s) {
    const int deg = std::popcount(s);
    for (std::uint32_t t = 0; t <= top; ++t) {
      if (std::popcount(t) != n - deg) continue;
      const auto a = ExtElement::basis(params, s);
      const auto b = ExtElement::basis(params, t);
      if (!(ext_multiply(a, b) == ext_multiply(apply_diag(b, phi), a))) {
        throw std::logic_error("frobenius_bruteforce: a b != phi(b) a for basis pair (" + std::to_string(s) + ", " +
                               std::to_string(t) + ")");
      }
    }
  }
  return phi;
}

DiagAutomorphism frobenius_closedform(const QuantumParams& params) {
  const int n = params.n();
  const FieldRef field = exterior_field(params);
  const Cyclotomic minus_one = Cyclotomic::from_rational(field, -1);
  DiagAutomorphism phi;
  for (int j = 0; j < n; ++j) {
    Cyclotomic c = Cyclotomic::one(field);
    for (int i = 0; i < n; ++i) c *= minus_one * root_of_unity(field, 2LL * params.e(j, i));
    phi.scalars.push_back(std::move(c));
  }
  return phi;
}

FrobeniusComparison compare_frobenius(const QuantumParams& params) {
  FrobeniusComparison out;
  out.bruteforce = frobenius_bruteforce(params);
  out.closedform = frobenius_closedform(params);
  std::vector<Cyclotomic> ratios;
  for (std::size_t j = 0; j < out.bruteforce.scalars.size(); ++j) {
    ratios.push_back(divide(out.bruteforce.scalars[j], out.closedform.scalars[j]));
  }
  out.agree_mod_scalar = DiagAutomorphism{ratios}.is_scalar();
  if (out.agree_mod_scalar) out.ratio = ratios.front();
  return out;
}

std::optional<std::vector<int>> is_twist_realizable(const QuantumParams& params) {
  const int n = params.n();
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) d[i] = params.e(i, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (mod_n(d[i] - d[j], n) != params.e(i, j)) return std::nullopt;
    }
  }
  return d;
}

bool deformation_central(const QuantumParams& params, bool include_product_term) {
  if (!is_central(fermat_element(params, Algebra::B))) return false;
  if (!include_product_term) return true;
  return is_central(product_element(params, Algebra::B));
}

bool PatchParams::antisymmetric() const {
  const int k = size();
  for (int i = 0; i < k; ++i) {
    if (e(i, i) != 0) return false;
    for (int j = 0; j < k; ++j) {
      if ((e(i, j) + e(j, i)) % modulus != 0) return false;
    }
  }
  return true;
}

PatchParams dehomogenize(const QuantumParams& params, int inverted) {
  const int n = params.n();
  if (inverted < 0 || inverted >= n) throw InputError("dehomogenize: generator index out of range");
  PatchParams out;
  out.modulus = n;
  out.inverted = inverted;
  for (int i = 0; i < n; ++i) {
    if (i != inverted) out.labels.push_back(i);
  }
  const int k = out.size();
  const int m = inverted;
  out.exps.assign(static_cast<std::size_t>(k * k), 0);
  out.printed_exps.assign(static_cast<std::size_t>(k * k), 0);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const int i = out.labels[a];
      const int j = out.labels[b];
      out.exps[static_cast<std::size_t>(a * k + b)] = mod_n(params.e(i, j) + params.e(m, i) + params.e(j, m), n);
      out.printed_exps[static_cast<std::size_t>(a * k + b)] =
          a == b ? 0 : mod_n(params.e(i, j) - params.e(m, i) - params.e(m, j), n);
    }
  }
  out.printed_antisymmetric = true;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if ((out.printed_exps[static_cast<std::size_t>(a * k + b)] + out.printed_exps[static_cast<std::size_t>(b * k + a)]) %
              n !=
          0) {
        out.printed_antisymmetric = false;
      }
    }
  }
  return out;
}

}  // namespace qfermat
