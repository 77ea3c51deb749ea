#include "qfermat/expr.hpp"

#include <cctype>
#include <cstdio>
#include <set>

namespace qfermat {

namespace {

constexpr long kMaxScalarExponent = 4096;
constexpr long kMaxGeneratorPower = 100000;

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  std::vector<Term> parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = take() == '-';
    }
    terms.push_back(parse_term(negative));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected character '") + printable(c) + "'", pos_);
      take();
      terms.push_back(parse_term(c == '-'));
    }
    return terms;
  }

 private:
  static std::string printable(char c) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isprint(u)) return std::string(1, c);
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\x%02x", u);
    return buf;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (at_end()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  std::string digits(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    return std::string(text_.substr(start, pos_ - start));
  }

  long small_int(const char* what, long max) {
    const std::size_t start = pos_;
    const std::string d = digits(what);
    if (d.size() > 9 || std::stol(d) > max) {
      throw ParseError(std::string(what) + " " + d + " exceeds limit " + std::to_string(max), start);
    }
    return std::stol(d);
  }

  Term parse_term(bool negative) {
    skip_space();
    Term term;
    term.negative = negative;
    term.position = pos_;
    do {
      parse_atom(term);
    } while (accept('*'));
    return term;
  }

  void parse_atom(Term& term) {
    skip_space();
    if (at_end()) throw ParseError("expected a factor but input ended", pos_);
    if (peek() == 'x') {
      Factor f;
      f.position = pos_;
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected generator index after 'x'", pos_);
      }
      const std::size_t idx_pos = pos_;
      const std::string d = digits("generator index");
      if (d.size() > 9 || std::stol(d) < 1 || std::stol(d) > n_) {
        throw ParseError("unknown generator x" + d + " (valid: x1..x" + std::to_string(n_) + ")", idx_pos);
      }
      f.generator = static_cast<int>(std::stol(d)) - 1;
      if (accept('^')) {
        const std::size_t exp_pos = pos_;
        f.power = static_cast<int>(small_int("exponent", kMaxGeneratorPower));
        if (f.power < 1) throw ParseError("generator exponent must be at least 1", exp_pos);
      }
      term.factors.push_back(f);
      return;
    }
    term.scalars.push_back(parse_scalar());
  }

  CoeffExpr parse_scalar() {
    skip_space();
    if (at_end()) throw ParseError("expected a coefficient but input ended", pos_);
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      CoeffExpr r;
      r.kind = CoeffExpr::Kind::Rational;
      mpz_class num(digits("integer"), 10);
      mpz_class den = 1;
      if (accept('/')) {
        const std::size_t den_pos = pos_;
        den = mpz_class(digits("denominator"), 10);
        if (den == 0) throw ParseError("zero denominator", den_pos);
      }
      r.value = mpq_class(num, den);
      r.value.canonicalize();
      return r;
    }
    if (c == 'w') {
      ++pos_;
      CoeffExpr r;
      r.kind = CoeffExpr::Kind::Root;
      if (accept('^')) r.exponent = small_int("exponent", kMaxScalarExponent);
      return r;
    }
    if (c == '(') {
      ++pos_;
      CoeffExpr inner = parse_cexpr();
      expect(')');
      if (accept('^')) {
        CoeffExpr p;
        p.kind = CoeffExpr::Kind::Power;
        p.exponent = small_int("exponent", kMaxScalarExponent);
        p.args.push_back(std::move(inner));
        return p;
      }
      return inner;
    }
    throw ParseError(std::string("unexpected character '") + printable(c) + "'", pos_);
  }

  CoeffExpr parse_cexpr() {
    CoeffExpr sum;
    sum.kind = CoeffExpr::Kind::Sum;
    skip_space();
    bool negative = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) negative = take() == '-';
    while (true) {
      CoeffExpr prod;
      prod.kind = CoeffExpr::Kind::Product;
      do {
        prod.args.push_back(parse_scalar());
      } while (accept('*'));
      if (negative) {
        CoeffExpr neg;
        neg.kind = CoeffExpr::Kind::Negate;
        neg.args.push_back(std::move(prod));
        sum.args.push_back(std::move(neg));
      } else {
        sum.args.push_back(std::move(prod));
      }
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
      negative = take() == '-';
    }
    return sum;
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

std::string path_join(const std::string& base, const std::string& key) { return base + "/" + key; }

long long json_int(const nlohmann::json& v, const std::string& path) {
  if (!v.is_number_integer()) throw InputError("expected an integer at " + path);
  return v.get<long long>();
}

}  // namespace

PolyAst parse_poly(std::string_view text, int n, int conductor) {
  if (n < 2) throw InputError("polynomial parsing needs n >= 2");
  if (conductor < 1 || conductor % n != 0) {
    throw InputError("conductor " + std::to_string(conductor) + " is not a positive multiple of n = " +
                     std::to_string(n));
  }
  PolyAst ast;
  ast.n = n;
  ast.conductor = conductor;
  ast.terms = Parser(text, n).parse();
  return ast;
}

PolyAst parse_poly(std::string_view text, int n) { return parse_poly(text, n, n); }

Cyclotomic evaluate(const CoeffExpr& expr, const FieldRef& field) {
  switch (expr.kind) {
    case CoeffExpr::Kind::Rational: return Cyclotomic::from_rational(field, expr.value);
    case CoeffExpr::Kind::Root: return root_of_unity(field, expr.exponent);
    case CoeffExpr::Kind::Power: return evaluate(expr.args.front(), field).pow(expr.exponent);
    case CoeffExpr::Kind::Negate: return -evaluate(expr.args.front(), field);
    case CoeffExpr::Kind::Sum: {
      Cyclotomic acc = Cyclotomic::zero(field);
      for (const auto& a : expr.args) acc += evaluate(a, field);
      return acc;
    }
    case CoeffExpr::Kind::Product: {
      Cyclotomic acc = Cyclotomic::one(field);
      for (const auto& a : expr.args) acc *= evaluate(a, field);
      return acc;
    }
  }
  throw std::logic_error("evaluate: unknown coefficient node");
}

SkewPoly lower(const PolyAst& ast, const QuantumParams& params, Algebra algebra) {
  const int n = params.n();
  if (n != ast.n) {
    throw InputError("expression parsed for n = " + std::to_string(ast.n) + " but parameters have n = " +
                     std::to_string(n));
  }
  const FieldRef field = CycloField::get(ast.conductor);
  SkewPoly out(params, algebra, field);
  for (const auto& term : ast.terms) {
    Cyclotomic c = Cyclotomic::one(field);
    for (const auto& s : term.scalars) c *= evaluate(s, field);
    if (term.negative) c = -c;
    Multidegree a{std::vector<int>(n, 0)};
    long long phase = 0;
    for (const auto& f : term.factors) {
      long long passed = 0;
      for (int i = f.generator + 1; i < n; ++i) passed += static_cast<long long>(a.degs[i]) * params.e(i, f.generator);
      phase += passed % n * f.power;
      phase %= n;
      a.degs[f.generator] += f.power;
    }
    SkewPoly mono(params, algebra, field);
    mono.add_term(a, c * mono.phase(mod_n(phase, n)));
    out += algebra == Algebra::A ? reduce_A(mono) : mono;
  }
  return out;
}

std::string print_poly(const SkewPoly& poly) { return poly.to_string(); }

QuantumParams params_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("parameter document must be a JSON object at /");
  static const std::set<std::string> known{"n", "exponents", "twist", "entries"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw InputError("unknown field at " + path_join("", key));
  }
  if (!doc.contains("n")) throw InputError("missing required field /n");
  const long long n_raw = json_int(doc["n"], "/n");
  if (n_raw < 2 || n_raw > 64) throw InputError("/n must be between 2 and 64, got " + std::to_string(n_raw));
  const int n = static_cast<int>(n_raw);
  const int forms = static_cast<int>(doc.contains("exponents")) + static_cast<int>(doc.contains("twist")) +
                    static_cast<int>(doc.contains("entries"));
  if (forms != 1) throw InputError("exactly one of /exponents, /twist, /entries is required");

  if (doc.contains("twist")) {
    const auto& t = doc["twist"];
    if (!t.is_array()) throw InputError("/twist must be an array");
    if (t.size() != static_cast<std::size_t>(n)) {
      throw InputError("/twist has " + std::to_string(t.size()) + " entries, expected " + std::to_string(n));
    }
    std::vector<long long> d;
    for (std::size_t i = 0; i < t.size(); ++i) d.push_back(json_int(t[i], "/twist/" + std::to_string(i)));
    return from_twist(d);
  }

  std::vector<std::vector<long long>> raw(n, std::vector<long long>(n, 0));
  if (doc.contains("exponents")) {
    const auto& m = doc["exponents"];
    if (!m.is_array() || m.size() != static_cast<std::size_t>(n)) {
      throw InputError("/exponents must be an array of " + std::to_string(n) + " rows");
    }
    for (int i = 0; i < n; ++i) {
      const std::string row_path = "/exponents/" + std::to_string(i);
      if (!m[i].is_array() || m[i].size() != static_cast<std::size_t>(n)) {
        throw InputError(row_path + " must be an array of " + std::to_string(n) + " integers");
      }
      for (int j = 0; j < n; ++j) raw[i][j] = json_int(m[i][j], row_path + "/" + std::to_string(j));
    }
  } else {
    const auto& entries = doc["entries"];
    if (!entries.is_array()) throw InputError("/entries must be an array");
    std::vector<std::vector<bool>> set(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const std::string path = "/entries/" + std::to_string(k);
      const auto& en = entries[k];
      if (!en.is_object() || !en.contains("i") || !en.contains("j") || !en.contains("e")) {
        throw InputError(path + " must be an object with fields i, j, e");
      }
      const long long i = json_int(en["i"], path + "/i");
      const long long j = json_int(en["j"], path + "/j");
      const long long e = json_int(en["e"], path + "/e");
      if (i < 1 || i > n) throw InputError(path + "/i out of range 1.." + std::to_string(n));
      if (j < 1 || j > n) throw InputError(path + "/j out of range 1.." + std::to_string(n));
      const int a = static_cast<int>(i - 1);
      const int b = static_cast<int>(j - 1);
      const int v = mod_n(e, n);
      if (a == b && v != 0) throw InputError(path + ": diagonal entry must be 0 mod " + std::to_string(n));
      if ((set[a][b] && mod_n(raw[a][b], n) != v) || (set[b][a] && mod_n(raw[b][a], n) != mod_n(-v, n))) {
        throw InputError(path + ": conflicts with an earlier entry for (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
      raw[a][b] = v;
      raw[b][a] = mod_n(-v, n);
      set[a][b] = set[b][a] = true;
    }
  }
  try {
    return validate_params(n, raw);
  } catch (const InvalidParams& err) {
    throw InvalidParams(std::string(err.what()) + " (at /exponents/" + std::to_string(err.row() - 1) + "/" +
                            std::to_string(std::max(err.col() - 1, 0)) + ")",
                        err.row(), err.col());
  }
}

QuantumParams parse_params(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what(), err.byte == 0 ? 0 : err.byte - 1);
  }
  return params_from_json(doc);
}

nlohmann::ordered_json params_to_json(const QuantumParams& params) {
  nlohmann::ordered_json out;
  out["n"] = params.n();
  out["exponents"] = params.matrix();
  return out;
}

std::string print_params(const QuantumParams& params) { return params_to_json(params).dump(); }

}  // namespace qfermat
