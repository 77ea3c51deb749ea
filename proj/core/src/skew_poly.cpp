#include "qfermat/skew_poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qfermat {

std::string to_string(Algebra algebra) { return algebra == Algebra::A ? "A" : "B"; }

int Multidegree::total() const { return std::accumulate(degs.begin(), degs.end(), 0); }

bool GrlexGreater::operator()(const Multidegree& a, const Multidegree& b) const {
  const int ta = a.total();
  const int tb = b.total();
  if (ta != tb) return ta > tb;
  return a.degs > b.degs;
}

NormalOrdered normal_order(const QuantumParams& params, std::span<const int> word) {
  const int n = params.n();
  NormalOrdered out{0, Multidegree{std::vector<int>(n, 0)}};
  // Letters seen so far, by index; each later letter j must pass every earlier i > j.
  long long phase = 0;
  for (int letter : word) {
    if (letter < 0 || letter >= n) throw std::out_of_range("normal_order: generator index out of range");
    for (int i = letter + 1; i < n; ++i) phase += static_cast<long long>(out.monomial.degs[i]) * params.e(i, letter);
    ++out.monomial.degs[letter];
  }
  out.phase = mod_n(phase, n);
  return out;
}

int product_phase(const QuantumParams& params, const Multidegree& a, const Multidegree& b) {
  const int n = params.n();
  long long phase = 0;
  for (int i = 0; i < n; ++i) {
    if (a.degs[i] == 0) continue;
    for (int j = 0; j < i; ++j) phase += static_cast<long long>(a.degs[i]) * b.degs[j] * params.e(i, j);
  }
  return mod_n(phase, n);
}

SkewPoly::SkewPoly(QuantumParams params, Algebra algebra, FieldRef field)
    : params_(std::move(params)), algebra_(algebra), field_(std::move(field)) {
  if (!field_ || field_->conductor() % params_.n() != 0) {
    throw FieldMismatch("coefficient conductor must be a multiple of n = " + std::to_string(params_.n()));
  }
}

SkewPoly::SkewPoly(QuantumParams params, Algebra algebra)
    : SkewPoly(params, algebra, CycloField::get(params.n())) {}

SkewPoly SkewPoly::constant(QuantumParams params, Algebra algebra, const Cyclotomic& c) {
  const int n = params.n();
  return monomial(std::move(params), algebra, Multidegree{std::vector<int>(n, 0)}, c);
}

SkewPoly SkewPoly::generator(QuantumParams params, Algebra algebra, int index) {
  const int n = params.n();
  if (index < 0 || index >= n) throw std::out_of_range("generator index out of range");
  Multidegree a{std::vector<int>(n, 0)};
  a.degs[index] = 1;
  return monomial(std::move(params), algebra, std::move(a), Cyclotomic::one(CycloField::get(n)));
}

SkewPoly SkewPoly::monomial(QuantumParams params, Algebra algebra, Multidegree a, const Cyclotomic& c) {
  if (a.degs.size() != static_cast<std::size_t>(params.n())) {
    throw std::invalid_argument("multidegree length does not match n");
  }
  SkewPoly out(std::move(params), algebra, c.field());
  out.add_term(a, c);
  return algebra == Algebra::A ? reduce_A(out) : out;
}

int SkewPoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.total();
}

Cyclotomic SkewPoly::phase(int k) const {
  return root_of_unity(field_, static_cast<long long>(k) * (field_->conductor() / params_.n()));
}

void SkewPoly::add_term(const Multidegree& a, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void SkewPoly::check_compatible(const SkewPoly& rhs) const {
  if (!(params_ == rhs.params_)) throw FieldMismatch("skew polynomials have different quantum parameters");
  if (algebra_ != rhs.algebra_) throw FieldMismatch("skew polynomials live in different algebras (B vs A)");
  if (field_->conductor() != rhs.field_->conductor()) {
    throw FieldMismatch("skew polynomials have different coefficient fields");
  }
}

SkewPoly& SkewPoly::operator+=(const SkewPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, c);
  return *this;
}

SkewPoly& SkewPoly::operator-=(const SkewPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, -c);
  return *this;
}

SkewPoly SkewPoly::operator-() const {
  SkewPoly out(*this);
  for (auto& [a, c] : out.terms_) c = -c;
  return out;
}

SkewPoly SkewPoly::scaled(const Cyclotomic& c) const {
  SkewPoly out(params_, algebra_, field_);
  for (const auto& [a, coeff] : terms_) out.add_term(a, coeff * c);
  return out;
}

SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) { return multiply(f, g); }

bool operator==(const SkewPoly& a, const SkewPoly& b) {
  return a.params_ == b.params_ && a.algebra_ == b.algebra_ &&
         a.field_->conductor() == b.field_->conductor() && a.terms_ == b.terms_;
}

std::string SkewPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < a.degs.size(); ++i) {
      if (a.degs[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'x' + std::to_string(i + 1);
      if (a.degs[i] > 1) mono += '^' + std::to_string(a.degs[i]);
    }
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      const mpq_class& v = c.coords()[0];
      negative = v < 0;
      const mpq_class mag = abs(v);
      if (mono.empty()) {
        coeff = mag.get_str();
      } else if (mag != 1) {
        coeff = mag.get_str() + "*";
      }
    } else {
      coeff = "(" + c.to_string() + ")";
      if (!mono.empty()) coeff += '*';
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << coeff << mono;
  }
  return os.str();
}

SkewPoly multiply(const SkewPoly& f, const SkewPoly& g) {
  if (!(f.params() == g.params())) throw FieldMismatch("skew polynomials have different quantum parameters");
  if (f.algebra() != g.algebra()) throw FieldMismatch("skew polynomials live in different algebras (B vs A)");
  if (f.field()->conductor() != g.field()->conductor()) {
    throw FieldMismatch("skew polynomials have different coefficient fields");
  }
  const auto& params = f.params();
  const int n = params.n();
  SkewPoly out(params, f.algebra(), f.field());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      Multidegree sum{std::vector<int>(n)};
      for (int i = 0; i < n; ++i) sum.degs[i] = a.degs[i] + b.degs[i];
      out.add_term(sum, ca * cb * out.phase(product_phase(params, a, b)));
    }
  }
  return f.algebra() == Algebra::A ? reduce_A(out) : out;
}

SkewPoly reduce_A(const SkewPoly& f) {
  if (f.algebra() != Algebra::A) throw std::invalid_argument("reduce_A requires a polynomial in A_n");
  const int n = f.params().n();
  SkewPoly out(f.params(), Algebra::A, f.field());
  // Work list of terms still carrying x_n^n. Rewriting lowers the x_n degree by n,
  // so the loop terminates; phases vanish because (w^e)^n = 1.
  std::vector<std::pair<Multidegree, Cyclotomic>> pending(f.terms().begin(), f.terms().end());
  while (!pending.empty()) {
    auto [a, c] = std::move(pending.back());
    pending.pop_back();
    if (a.degs[n - 1] < n) {
      out.add_term(a, c);
      continue;
    }
    a.degs[n - 1] -= n;
    for (int k = 0; k < n - 1; ++k) {
      Multidegree b = a;
      b.degs[k] += n;
      pending.emplace_back(std::move(b), -c);
    }
  }
  return out;
}

SkewPoly fermat_element(const QuantumParams& params, Algebra algebra) {
  const int n = params.n();
  SkewPoly out(params, algebra);
  const auto one = Cyclotomic::one(out.field());
  for (int k = 0; k < n; ++k) {
    Multidegree a{std::vector<int>(n, 0)};
    a.degs[k] = n;
    out.add_term(a, one);
  }
  return algebra == Algebra::A ? reduce_A(out) : out;
}

SkewPoly product_element(const QuantumParams& params, Algebra algebra) {
  const int n = params.n();
  return SkewPoly::monomial(params, algebra, Multidegree{std::vector<int>(n, 1)},
                            Cyclotomic::one(CycloField::get(n)));
}

bool DiagAutomorphism::is_scalar() const {
  for (std::size_t j = 1; j < scalars.size(); ++j) {
    if (!(scalars[j] == scalars[0])) return false;
  }
  return true;
}

bool DiagAutomorphism::is_identity() const {
  for (const auto& c : scalars) {
    if (!c.is_one()) return false;
  }
  return true;
}

namespace {

SkewPoly generator_in(const SkewPoly& f, int j) {
  Multidegree unit{std::vector<int>(f.params().n(), 0)};
  unit.degs[j] = 1;
  return SkewPoly::monomial(f.params(), f.algebra(), std::move(unit), Cyclotomic::one(f.field()));
}

}  // namespace

bool is_central(const SkewPoly& f) {
  for (int j = 0; j < f.params().n(); ++j) {
    const SkewPoly x = generator_in(f, j);
    if (!(multiply(x, f) == multiply(f, x))) return false;
  }
  return true;
}

std::optional<DiagAutomorphism> normalizing_automorphism(const SkewPoly& f) {
  if (f.is_zero()) return std::nullopt;
  const int n = f.params().n();
  DiagAutomorphism nu;
  for (int j = 0; j < n; ++j) {
    const SkewPoly x = generator_in(f, j);
    const SkewPoly fx = multiply(f, x);
    const SkewPoly xf = multiply(x, f);
    if (xf.is_zero()) {
      if (!fx.is_zero()) return std::nullopt;
      nu.scalars.push_back(Cyclotomic::one(f.field()));
      continue;
    }
    // f x_j = c x_j f: read c off the leading term, then check the whole polynomial.
    const auto& [lead, lead_coeff] = *xf.terms().begin();
    auto it = fx.terms().find(lead);
    if (it == fx.terms().end()) return std::nullopt;
    Cyclotomic c = divide(it->second, lead_coeff);
    if (!(xf.scaled(c) == fx)) return std::nullopt;
    nu.scalars.push_back(std::move(c));
  }
  return nu;
}

std::vector<Multidegree> monomials_of_degree(int n, int d) {
  std::vector<Multidegree> out;
  std::vector<int> degs(n, 0);
  // Recursive fill in lexicographically descending order.
  auto fill = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      degs[pos] = remaining;
      out.push_back(Multidegree{degs});
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      degs[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  if (d < 0) return out;
  fill(fill, 0, d);
  return out;
}

std::uint64_t graded_dimension(const QuantumParams& params, Algebra algebra, int d) {
  if (d < 0) throw std::invalid_argument("graded_dimension: degree must be nonnegative");
  const int n = params.n();
  std::uint64_t count = 0;
  for (const auto& a : monomials_of_degree(n, d)) {
    if (algebra == Algebra::A && a.degs[n - 1] >= n) continue;
    ++count;
  }
  return count;
}

}  // namespace qfermat
