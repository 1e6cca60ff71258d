#include "beltrami/algebra/expr.hpp"

#include <algorithm>
#include <unordered_map>

#include "beltrami/algebra/error.hpp"

namespace beltrami {

using AtomPtr = std::shared_ptr<const MultiPoly>;
using Den = std::vector<DenFactor>;

class ExprAccess {
 public:
  static Expr make(MultiPoly num, Den den) {
    Expr e;
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    if (e.num_.is_zero()) e.den_.clear();
    return e;
  }
  static MultiPoly& num(Expr& e) { return e.num_; }
  static Den& den(Expr& e) { return e.den_; }
};

namespace {

int atom_compare(const AtomPtr& a, const AtomPtr& b) {
  if (a == b) return 0;
  return a->compare(*b);
}

Var single_variable(const MultiPoly& atom) {
  if (!atom.is_monomial()) return nullptr;
  const auto& f = atom.lead().mono.factors();
  if (f.size() == 1 && f[0].second == 1) return f[0].first;
  return nullptr;
}

std::uint32_t min_degree_in(const MultiPoly& p, Var v) {
  std::uint32_t d = UINT32_MAX;
  for (const auto& t : p.terms()) {
    d = std::min(d, t.mono.degree_in(v));
    if (d == 0) break;
  }
  return d;
}

// Divides num by as many copies of each atom as possible.
void cancel(MultiPoly& num, Den& den) {
  if (num.is_zero()) {
    den.clear();
    return;
  }
  for (auto& f : den) {
    if (Var v = single_variable(*f.atom)) {
      std::uint32_t k = std::min<std::uint32_t>(static_cast<std::uint32_t>(f.exp), min_degree_in(num, v));
      if (k > 0) {
        num = num.div_monomial(Monomial::of(v, k));
        f.exp -= static_cast<int>(k);
      }
      continue;
    }
    while (f.exp > 0) {
      auto q = num.exact_div(*f.atom);
      if (!q) break;
      num = std::move(*q);
      --f.exp;
    }
  }
  den.erase(std::remove_if(den.begin(), den.end(), [](const DenFactor& f) { return f.exp <= 0; }), den.end());
}

MultiPoly expand(const Den& den) {
  MultiPoly p(1);
  for (const auto& f : den) p = p * f.atom->pow(static_cast<unsigned>(f.exp));
  return p;
}

void insert_factor(Den& den, const AtomPtr& atom, int exp) {
  for (auto& f : den) {
    if (atom_compare(f.atom, atom) == 0) {
      f.exp += exp;
      return;
    }
  }
  auto pos = std::find_if(den.begin(), den.end(), [&](const DenFactor& f) { return atom_compare(atom, f.atom) < 0; });
  den.insert(pos, DenFactor{atom, exp});
}

struct Factored {
  Scalar unit;
  Den factors;
};

// p = unit * prod(factors), peeling known atoms first.
Factored factor_over(const MultiPoly& p, const std::vector<AtomPtr>& hints) {
  Factored out{1, {}};
  if (p.is_constant()) {
    out.unit = p.constant_value();
    return out;
  }
  out.unit = p.content();
  MultiPoly q = p.scaled(1 / out.unit);
  Monomial m = q.monomial_content();
  if (!m.is_one()) {
    q = q.div_monomial(m);
    for (const auto& [v, e] : m.factors())
      insert_factor(out.factors, std::make_shared<const MultiPoly>(MultiPoly::variable(v)), static_cast<int>(e));
  }
  for (const auto& h : hints) {
    if (q.is_constant()) break;
    if (single_variable(*h)) continue;
    int count = 0;
    while (!q.is_constant() && q.total_degree() >= h->total_degree()) {
      auto d = q.exact_div(*h);
      if (!d) break;
      q = std::move(*d);
      ++count;
    }
    if (count > 0) insert_factor(out.factors, h, count);
  }
  if (!q.is_constant()) {
    Scalar c = q.content();
    if (c != 1) {
      out.unit *= c;
      q = q.scaled(1 / c);
    }
    insert_factor(out.factors, std::make_shared<const MultiPoly>(std::move(q)), 1);
  } else {
    out.unit *= q.constant_value();
  }
  return out;
}

std::vector<AtomPtr> atoms_of(const Den& a, const Den& b = {}) {
  std::vector<AtomPtr> out;
  for (const auto& f : a) out.push_back(f.atom);
  for (const auto& f : b)
    if (std::none_of(out.begin(), out.end(), [&](const AtomPtr& x) { return atom_compare(x, f.atom) == 0; }))
      out.push_back(f.atom);
  return out;
}

Expr inverse_with_hints(const Expr& e, const std::vector<AtomPtr>& hints) {
  if (e.is_zero()) throw Error(ErrorKind::EvaluationPole, "division by zero");
  Factored f = factor_over(e.numerator(), hints);
  MultiPoly num = expand(e.denominator_factors()).scaled(1 / f.unit);
  Den den = std::move(f.factors);
  cancel(num, den);
  return ExprAccess::make(std::move(num), std::move(den));
}

}  // namespace

Expr Expr::fraction(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::MalformedExpression, "zero denominator");
  return Expr(num) / Expr(den);
}

MultiPoly Expr::denominator() const { return expand(den_); }

Expr Expr::reciprocal_denominator() const { return ExprAccess::make(MultiPoly(1), den_); }

Expr Expr::from_factored(MultiPoly num, std::vector<DenFactor> den) {
  if (num.is_zero()) return Expr();
  Den sorted;
  for (const auto& f : den) {
    if (f.exp == 0) continue;
    if (f.exp < 0 || f.atom->is_constant())
      throw Error(ErrorKind::MalformedExpression, "invalid denominator factor");
    insert_factor(sorted, f.atom, f.exp);
  }
  cancel(num, sorted);
  return ExprAccess::make(std::move(num), std::move(sorted));
}

bool Expr::contains(Var v) const {
  if (num_.contains(v)) return true;
  for (const auto& f : den_)
    if (f.atom->contains(v)) return true;
  return false;
}

Expr Expr::operator-() const {
  Expr r = *this;
  r.num_ = -r.num_;
  return r;
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr();
  if (a.den_.empty() && b.den_.empty()) return Expr(a.num_ * b.num_);
  MultiPoly na = a.num_, nb = b.num_;
  Den da = a.den_, db = b.den_;
  cancel(na, db);
  cancel(nb, da);
  Den den = std::move(da);
  for (const auto& f : db) insert_factor(den, f.atom, f.exp);
  return ExprAccess::make(na * nb, std::move(den));
}

namespace {
bool same_den(const Den& a, const Den& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].exp != b[i].exp || atom_compare(a[i].atom, b[i].atom) != 0) return false;
  return true;
}

Expr add_impl(const Expr& a, const Expr& b, bool subtract) {
  const Den& da = a.denominator_factors();
  const Den& db = b.denominator_factors();
  if (same_den(da, db)) {
    MultiPoly num = subtract ? a.numerator() - b.numerator() : a.numerator() + b.numerator();
    Den den = da;
    cancel(num, den);
    return ExprAccess::make(std::move(num), std::move(den));
  }
  Den lcm = da;
  for (const auto& f : db) {
    auto it = std::find_if(lcm.begin(), lcm.end(), [&](const DenFactor& g) { return atom_compare(g.atom, f.atom) == 0; });
    if (it == lcm.end()) insert_factor(lcm, f.atom, f.exp);
    else it->exp = std::max(it->exp, f.exp);
  }
  auto cofactor = [&](const Den& d) {
    MultiPoly p(1);
    for (const auto& f : lcm) {
      int have = 0;
      for (const auto& g : d)
        if (atom_compare(g.atom, f.atom) == 0) have = g.exp;
      if (f.exp > have) p = p * f.atom->pow(static_cast<unsigned>(f.exp - have));
    }
    return p;
  };
  MultiPoly left = a.numerator() * cofactor(da);
  MultiPoly right = b.numerator() * cofactor(db);
  MultiPoly num = subtract ? left - right : left + right;
  cancel(num, lcm);
  return ExprAccess::make(std::move(num), std::move(lcm));
}
}  // namespace

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.empty() && b.den_.empty()) return Expr(a.num_ + b.num_);
  return add_impl(a, b, false);
}

Expr operator-(const Expr& a, const Expr& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  if (a.den_.empty() && b.den_.empty()) return Expr(a.num_ - b.num_);
  return add_impl(a, b, true);
}

Expr Expr::inverse() const { return inverse_with_hints(*this, atoms_of(den_)); }

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw Error(ErrorKind::EvaluationPole, "division by zero");
  if (b.is_constant()) {
    Expr r = a;
    r.num_ = r.num_.scaled(1 / b.num_.constant_value());
    return r;
  }
  return a * inverse_with_hints(b, atoms_of(a.den_, b.den_));
}

Expr Expr::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  if (n == 0) return Expr(1);
  Den den = den_;
  for (auto& f : den) f.exp *= n;
  return ExprAccess::make(num_.pow(static_cast<unsigned>(n)), std::move(den));
}

bool Expr::same_form(const Expr& other) const { return num_ == other.num_ && same_den(den_, other.den_); }

int Expr::degree_in(Var v) const {
  if (is_zero()) return kDegreeNegInf;
  for (const auto& f : den_)
    if (f.atom->contains(v)) return kDegreePosInf;
  return num_.degree_in(v);
}

namespace {

bool all_polynomial(const Bindings& b) {
  for (const auto& [v, e] : b)
    if (!e.is_polynomial()) return false;
  return true;
}

// Groups terms by their bound part so each distinct power product of bound
// values is computed once.
template <typename Value>
Value substitute_into(const MultiPoly& p, const Bindings& b, auto value_of) {
  std::map<Monomial, std::vector<Term>, bool (*)(const Monomial&, const Monomial&)> groups(
      [](const Monomial& x, const Monomial& y) { return x.compare(y) > 0; });
  for (const auto& t : p.terms()) {
    Monomial bound, free;
    for (const auto& [v, e] : t.mono.factors()) {
      if (b.count(v)) bound = bound * Monomial::of(v, e);
      else free = free * Monomial::of(v, e);
    }
    groups[bound].push_back(Term{free, t.coeff});
  }
  std::map<std::pair<Var, std::uint32_t>, Value> powers;
  Value result{};
  for (auto& [bound, rest] : groups) {
    Value factor(1);
    for (const auto& [v, e] : bound.factors()) {
      auto key = std::make_pair(v, e);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, value_of(b.at(v)).pow(e)).first;
      factor = factor * it->second;
    }
    result = result + factor * Value(MultiPoly::from_terms(std::move(rest)));
  }
  return result;
}

Expr substitute_poly(const MultiPoly& p, const Bindings& b) {
  bool touches = false;
  for (const auto& [v, e] : b) touches = touches || p.contains(v);
  if (!touches) return Expr(p);
  if (all_polynomial(b))
    return Expr(substitute_into<MultiPoly>(p, b, [](const Expr& e) { return e.numerator(); }));
  return substitute_into<Expr>(p, b, [](const Expr& e) { return e; });
}

}  // namespace

Expr Expr::substitute(const Bindings& bindings) const {
  Expr num = substitute_poly(num_, bindings);
  if (den_.empty()) return num;
  Expr den(1);
  for (const auto& f : den_) {
    Expr a = substitute_poly(*f.atom, bindings);
    if (a.is_zero())
      throw Error(ErrorKind::EvaluationPole, "denominator vanishes after substitution");
    den = den * a.pow(f.exp);
  }
  return num / den;
}

Expr Expr::substitute(Var v, const Expr& value) const {
  Bindings b = make_bindings();
  b.emplace(v, value);
  return substitute(b);
}

bool eq(const Expr& a, const Expr& b) {
  if (a.same_form(b)) return true;
  return (a - b).is_zero();
}

Expr normalize(const Expr& e) {
  Expr r = e;
  MultiPoly& num = ExprAccess::num(r);
  Den& den = ExprAccess::den(r);
  cancel(num, den);
  return r;
}

Expr coefficient_in(const Expr& e, Var v, int k) {
  if (e.degree_in(v) == kDegreePosInf) throw Error(ErrorKind::Usage, "variable occurs in the denominator");
  if (k < 0) return Expr(0);
  return Expr(e.numerator().coefficient_of(v, static_cast<std::uint32_t>(k))) * e.reciprocal_denominator();
}

}  // namespace beltrami
