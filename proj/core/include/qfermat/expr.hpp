#pragma once

// Text front end: skew-polynomial expressions and quantum-parameter documents.
//
// Polynomial grammar (whitespace ignored):
//   poly    := [sign] term (sign term)*
//   term    := atom ('*' atom)*
//   atom    := 'x' INT ['^' INT] | scalar
//   scalar  := INT ['/' INT] | 'w' ['^' INT] | '(' cexpr ')' ['^' INT]
//   cexpr   := [sign] cterm (sign cterm)*
//   cterm   := scalar ('*' scalar)*
//   sign    := '+' | '-'
// Generators are x1..xn; w is the primitive root of unity of the coefficient
// conductor. Generator factors keep their written order; scalars commute.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qfermat/errors.hpp"
#include "qfermat/params.hpp"
#include "qfermat/skew_poly.hpp"

namespace qfermat {

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct CoeffExpr {
  enum class Kind { Rational, Root, Sum, Product, Power, Negate };
  Kind kind = Kind::Rational;
  mpq_class value;      // Rational
  long exponent = 1;    // Root, Power
  std::vector<CoeffExpr> args;
};

struct Factor {
  int generator = 0;  // 0-based
  int power = 1;
  std::size_t position = 0;
};

struct Term {
  bool negative = false;
  std::vector<CoeffExpr> scalars;
  std::vector<Factor> factors;
  std::size_t position = 0;
};

struct PolyAst {
  int n = 0;
  int conductor = 0;
  std::vector<Term> terms;
};

/// Throws ParseError (with byte position) on malformed input, unknown generators,
/// bad exponents, or empty input; InputError if conductor is not a positive multiple of n.
PolyAst parse_poly(std::string_view text, int n, int conductor);
PolyAst parse_poly(std::string_view text, int n);

Cyclotomic evaluate(const CoeffExpr& expr, const FieldRef& field);

/// Normal-orders every word and accumulates phases; reduces in A.
SkewPoly lower(const PolyAst& ast, const QuantumParams& params, Algebra algebra);

/// Canonical text form, re-parseable by parse_poly.
std::string print_poly(const SkewPoly& poly);

/// Accepts {"n", "exponents": [[...]]}, {"n", "twist": [...]} or
/// {"n", "entries": [{"i", "j", "e"}, ...]} (1-based, completed antisymmetrically).
/// Errors name the offending JSON path.
QuantumParams params_from_json(const nlohmann::json& doc);
QuantumParams parse_params(std::string_view document);

/// Canonical document {"n": n, "exponents": [[...]]} with entries in [0, n).
nlohmann::ordered_json params_to_json(const QuantumParams& params);
std::string print_params(const QuantumParams& params);

}  // namespace qfermat
