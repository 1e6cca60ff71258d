#include "beltrami/algebra/format.hpp"

#include <cctype>

#include "beltrami/algebra/error.hpp"

namespace beltrami {

namespace {

std::string mono_text(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += '*';
    s += text_name(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

std::string mono_latex(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += ' ';
    std::string name = latex_name(v);
    if (e > 1) {
      // Primed or trig names need braces before an exponent.
      if (name.find('\'') != std::string::npos || name.find(' ') != std::string::npos) name = "{" + name + "}";
      s += name + "^{" + std::to_string(e) + "}";
    } else {
      s += name;
    }
  }
  return s;
}

std::string scalar_latex(const Scalar& c) {
  if (is_integer(c)) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

template <typename MonoFn, typename CoeffFn>
std::string poly_string(const MultiPoly& p, MonoFn mono, CoeffFn coeff, const char* times) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = sgn(t.coeff) < 0;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    Scalar a = abs(t.coeff);
    if (t.mono.is_one()) {
      s += coeff(a);
    } else if (a == 1) {
      s += mono(t.mono);
    } else {
      s += coeff(a) + times + mono(t.mono);
    }
  }
  return s;
}

bool needs_parens(const MultiPoly& p) {
  if (p.size() != 1) return true;
  const Term& t = p.lead();
  return t.coeff != 1 || t.mono.factors().size() != 1;
}

}  // namespace

std::string to_text(const MultiPoly& p) {
  return poly_string(p, mono_text, [](const Scalar& c) { return to_string(c); }, "*");
}

std::string to_text(const Expr& e) {
  if (e.is_polynomial()) return to_text(e.numerator());
  std::string s = e.numerator().is_monomial() ? to_text(e.numerator()) : "(" + to_text(e.numerator()) + ")";
  for (const auto& f : e.denominator_factors()) {
    s += '/';
    s += needs_parens(*f.atom) ? "(" + to_text(*f.atom) + ")" : to_text(*f.atom);
    if (f.exp > 1) s += '^' + std::to_string(f.exp);
  }
  return s;
}

std::string to_text(const ExtElement& x, std::string_view root_name) {
  if (x.is_rational()) return to_text(x.rational_part());
  const Expr& qe = x.root_part();
  std::string q = qe.is_polynomial() && qe.numerator().is_monomial() ? to_text(qe) : "(" + to_text(qe) + ")";
  q = q == "1" ? std::string(root_name) : q + "*" + std::string(root_name);
  if (x.rational_part().is_zero()) return q;
  return to_text(x.rational_part()) + " + " + q;
}

std::string to_latex(const MultiPoly& p) { return poly_string(p, mono_latex, scalar_latex, " "); }

std::string to_latex(const Expr& e) {
  if (e.is_polynomial()) return to_latex(e.numerator());
  std::string den;
  for (const auto& f : e.denominator_factors()) {
    if (!den.empty()) den += ' ';
    std::string a = to_latex(*f.atom);
    bool paren = f.atom->size() != 1 || (f.exp > 1 && f.atom->lead().mono.factors().size() != 1);
    if (f.exp > 1) {
      den += (paren ? "\\left(" + a + "\\right)" : a) + "^{" + std::to_string(f.exp) + "}";
    } else {
      den += e.denominator_factors().size() > 1 && f.atom->size() != 1 ? "\\left(" + a + "\\right)" : a;
    }
  }
  return "\\frac{" + to_latex(e.numerator()) + "}{" + den + "}";
}

std::string to_latex(const ExtElement& x, std::string_view root_name) {
  if (x.is_rational()) return to_latex(x.rational_part());
  std::string q = "\\left(" + to_latex(x.root_part()) + "\\right) " + std::string(root_name);
  if (x.rational_part().is_zero()) return q;
  return to_latex(x.rational_part()) + " + " + q;
}

SymbolTable SymbolTable::standard() {
  SymbolTable t;
  for (const char* n : {"s", "t", "u", "v"}) t.add(chart_var(n));
  for (const char* n : {"a", "b", "c", "h", "p", "q", "r"}) t.add(parameter(n));
  for (const char* n : {"zeta", "eta", "mu", "nu", "xi", "A", "sigma", "rho"}) t.add(differential(n));
  for (int i = 0; i < 16; ++i) t.add(differential("g" + std::to_string(i)));
  return t;
}

SymbolTable& SymbolTable::add(Var v) {
  by_name_[v->name] = v;
  return *this;
}

Var SymbolTable::resolve(std::string_view name, int primes) const {
  auto it = by_name_.find(name);
  if (it != by_name_.end()) {
    Var v = it->second;
    if (primes == 0) return v;
    if (v->kind != VarKind::Differential)
      throw Error(ErrorKind::Parse, "prime on non-differential symbol " + std::string(name));
    return differential(v->name, v->order + primes);
  }
  if (primes > 0) return differential(name, primes);
  return free_symbol(name);
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& symbols) : s_(text), symbols_(symbols) {}

  Expr parse() {
    Expr e = sum();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // '**' is accepted as a synonym for '^'.
  bool accept_power() {
    skip_space();
    if (s_.compare(pos_, 2, "**") == 0) {
      pos_ += 2;
      return true;
    }
    return accept('^');
  }

  Expr sum() {
    Expr e = term();
    for (;;) {
      if (accept('+')) {
        e += term();
      } else if (accept('-')) {
        e -= term();
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = signed_power();
    for (;;) {
      skip_space();
      if (s_.compare(pos_, 2, "**") == 0) return e;
      if (accept('*')) {
        auto [base, k] = power();
        e *= base.pow(k);
      } else if (accept('/')) {
        // Division by base^k is done one factor at a time so that an
        // irreducible base stays a single denominator atom.
        auto [base, k] = power();
        if (k < 0) {
          e *= base.pow(-k);
        } else {
          if (k > 0 && base.is_zero()) throw Error(ErrorKind::MalformedExpression, "division by zero");
          for (int i = 0; i < k; ++i) e /= base;
        }
      } else {
        return e;
      }
    }
  }

  Expr signed_power() {
    if (accept('-')) return -signed_power();
    if (accept('+')) return signed_power();
    auto [base, k] = power();
    if (k < 0 && base.is_zero()) throw Error(ErrorKind::MalformedExpression, "division by zero");
    return base.pow(k);
  }

  std::pair<Expr, int> power() {
    Expr base = primary();
    if (!accept_power()) return {base, 1};
    bool neg = false;
    bool paren = accept('(');
    if (accept('-')) neg = true;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int k = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return {base, neg ? -k : k};
  }

  Expr primary() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Expr(parse_scalar(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      if ((name == "cos" || name == "sin") && accept('(')) {
        skip_space();
        std::string arg = identifier();
        if (arg.empty()) fail("expected variable name");
        if (!accept(')')) fail("expected ')'");
        Var x = symbols_.resolve(arg, 0);
        if (x->kind != VarKind::Chart) fail(name + " of non-chart variable " + arg);
        return Expr::variable(name == "cos" ? cos_of(arg) : sin_of(arg));
      }
      int primes = 0;
      while (pos_ < s_.size() && s_[pos_] == '\'') {
        ++primes;
        ++pos_;
      }
      return Expr::variable(symbols_.resolve(name, primes));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  const SymbolTable& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, const SymbolTable& symbols) { return Parser(text, symbols).parse(); }

}  // namespace beltrami
