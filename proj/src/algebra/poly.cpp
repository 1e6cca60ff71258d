#include "beltrami/algebra/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "beltrami/algebra/error.hpp"

namespace beltrami {

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono.compare(b.mono) > 0; }

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.compare(b) > 0; }
};

bool needs_trig_reduction(const std::vector<Term>& terms) {
  for (const auto& t : terms)
    for (const auto& [v, e] : t.mono.factors())
      if (v->kind == VarKind::Cos && e >= 2) return true;
  return false;
}

std::vector<Term> multiply_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1 || b.size() == 1) {
    const auto& one = a.size() == 1 ? a : b;
    const auto& many = a.size() == 1 ? b : a;
    std::vector<Term> out;
    out.reserve(many.size());
    for (const auto& t : many) out.push_back(Term{t.mono * one[0].mono, t.coeff * one[0].coeff});
    // Multiplying every monomial by a fixed monomial preserves the order.
    return out;
  }
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
  for (const auto& x : a)
    for (const auto& y : b) {
      auto [it, inserted] = acc.try_emplace(x.mono * y.mono);
      if (inserted) it->second = x.coeff * y.coeff;
      else it->second += x.coeff * y.coeff;
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.push_back(Term{m, std::move(c)});
  std::sort(out.begin(), out.end(), term_greater);
  return out;
}

}  // namespace

MultiPoly::MultiPoly(const Scalar& c) {
  if (sgn(c) != 0) terms_.push_back(Term{Monomial(), c});
}

MultiPoly MultiPoly::variable(Var v) { return monomial(Monomial::of(v)); }

MultiPoly MultiPoly::monomial(const Monomial& m, const Scalar& c) {
  MultiPoly p;
  if (sgn(c) != 0) p.terms_.push_back(Term{m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Scalar MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw Error(ErrorKind::Usage, "constant_value of a nonconstant polynomial");
  return terms_[0].coeff;
}

Scalar MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono.compare(key) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {
template <bool Subtract>
MultiPoly merge(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    int c = i->mono.compare(j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back(Term{j->mono, Subtract ? Scalar(-j->coeff) : j->coeff});
      ++j;
    } else {
      Scalar s = Subtract ? Scalar(i->coeff - j->coeff) : Scalar(i->coeff + j->coeff);
      if (sgn(s) != 0) out.push_back(Term{i->mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i != a.end(); ++i) out.push_back(*i);
  for (; j != b.end(); ++j) out.push_back(Term{j->mono, Subtract ? Scalar(-j->coeff) : j->coeff});
  return MultiPoly::from_terms(std::move(out));
}
}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge<false>(a.terms_, b.terms_);
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) return a;
  return merge<true>(a.terms_, b.terms_);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly p;
  p.terms_ = multiply_terms(a.terms_, b.terms_);
  if (needs_trig_reduction(p.terms_)) return p.reduced();
  return p;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  if (sgn(c) == 0) return {};
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::times(const Monomial& m, const Scalar& c) const {
  return *this * monomial(m, c);
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(1), base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::partial(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono.degree_in(v);
    if (e == 0) continue;
    out.push_back(Term{t.mono.lowered(v, 1), t.coeff * e});
  }
  return from_terms(std::move(out));
}

int MultiPoly::degree_in(Var v) const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(v));
  return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().mono.degree());
}

std::set<Var, bool (*)(Var, Var)> MultiPoly::variables() const {
  std::set<Var, bool (*)(Var, Var)> vars(&var_less);
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) vars.insert(f.first);
  return vars;
}

bool MultiPoly::contains(Var v) const {
  for (const auto& t : terms_)
    if (t.mono.degree_in(v) > 0) return true;
  return false;
}

std::map<std::uint32_t, MultiPoly> MultiPoly::coefficients_in(Var v) const {
  std::map<std::uint32_t, std::vector<Term>> groups;
  for (const auto& t : terms_) groups[t.mono.degree_in(v)].push_back(Term{t.mono.without(v), t.coeff});
  std::map<std::uint32_t, MultiPoly> out;
  for (auto& [e, ts] : groups) out.emplace(e, from_terms(std::move(ts)));
  return out;
}

MultiPoly MultiPoly::coefficient_of(Var v, std::uint32_t exp) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.mono.degree_in(v) == exp) ts.push_back(Term{t.mono.without(v), t.coeff});
  return from_terms(std::move(ts));
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  if (!contains(v)) return *this;
  auto groups = coefficients_in(v);
  MultiPoly result;
  MultiPoly power(1);
  std::uint32_t at = 0;
  for (auto& [e, coeff] : groups) {
    while (at < e) {
      power = power * value;
      ++at;
    }
    result += coeff * power;
  }
  return result;
}

Scalar MultiPoly::content() const {
  if (terms_.empty()) return 1;
  Integer g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Scalar c(g, l);
  c.canonicalize();
  if (sgn(terms_.front().coeff) < 0) c = -c;
  return c;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return {};
  return scaled(1 / content());
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) {
    if (g.is_one()) break;
    g = gcd(g, t.mono);
  }
  return g;
}

MultiPoly MultiPoly::div_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  MultiPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{m.quotient_of(t.mono), t.coeff});
  // Dividing by a common monomial preserves the graded-lex order.
  return r;
}

std::optional<MultiPoly> MultiPoly::exact_div(const MultiPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::EvaluationPole, "division by the zero polynomial");
  if (is_zero()) return MultiPoly();
  if (d.is_constant()) return scaled(1 / d.constant_value());
  if (d.is_monomial()) {
    const Term& dt = d.terms_.front();
    for (const auto& t : terms_)
      if (!dt.mono.divides(t.mono)) return std::nullopt;
    return div_monomial(dt.mono).scaled(1 / dt.coeff);
  }
  if (!d.lead().mono.divides(lead().mono)) return std::nullopt;
  if (!d.terms_.back().mono.divides(terms_.back().mono)) return std::nullopt;
  for (const auto& [v, e] : d.lead().mono.factors()) {
    (void)e;
    if (degree_in(v) < d.degree_in(v)) return std::nullopt;
  }
  for (const auto& t : d.terms_)
    for (const auto& [v, e] : t.mono.factors())
      if (static_cast<int>(e) > degree_in(v)) return std::nullopt;

  std::map<Monomial, Scalar, MonoGreater> rem;
  for (const auto& t : terms_) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  const Term& dl = d.lead();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!dl.mono.divides(top->first)) return std::nullopt;
    Monomial qm = dl.mono.quotient_of(top->first);
    if (qm.degree() + d.terms_.back().mono.degree() < terms_.back().mono.degree()) return std::nullopt;
    Scalar qc = top->second / dl.coeff;
    rem.erase(top);
    for (std::size_t k = 1; k < d.terms_.size(); ++k) {
      const Term& dt = d.terms_[k];
      auto [it, inserted] = rem.try_emplace(qm * dt.mono);
      if (inserted) {
        it->second = -qc * dt.coeff;
      } else {
        it->second -= qc * dt.coeff;
        if (sgn(it->second) == 0) rem.erase(it);
      }
    }
    quotient.push_back(Term{std::move(qm), std::move(qc)});
  }
  MultiPoly q;
  q.terms_ = std::move(quotient);  // generated in decreasing order
  return q;
}

MultiPoly MultiPoly::reduced() const {
  if (!needs_trig_reduction(terms_)) return *this;
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial rest;
    std::vector<std::pair<Var, std::uint32_t>> cos_powers;
    for (const auto& [v, e] : t.mono.factors()) {
      if (v->kind == VarKind::Cos && e >= 2) cos_powers.emplace_back(v, e);
      else rest = rest * Monomial::of(v, e);
    }
    if (cos_powers.empty()) {
      out.push_back(t);
      continue;
    }
    std::vector<Term> acc{Term{rest, t.coeff}};
    for (const auto& [c, e] : cos_powers) {
      Var s = sin_of(c->name);
      std::vector<Term> factor;
      if (e % 2) factor.push_back(Term{Monomial::of(c), 1});
      else factor.push_back(Term{Monomial(), 1});
      // (1 - sin^2)^(e/2)
      std::vector<Term> one_minus_s2{Term{Monomial(), 1}, Term{Monomial::of(s, 2), -1}};
      std::sort(one_minus_s2.begin(), one_minus_s2.end(), term_greater);
      for (std::uint32_t k = 0; k < e / 2; ++k) factor = multiply_terms(factor, one_minus_s2);
      acc = multiply_terms(acc, factor);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return from_terms(std::move(out));
}

int MultiPoly::compare(const MultiPoly& o) const {
  std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = terms_[i].mono.compare(o.terms_[i].mono);
    if (c != 0) return c;
    int k = cmp(terms_[i].coeff, o.terms_[i].coeff);
    if (k != 0) return k < 0 ? -1 : 1;
  }
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
  return 0;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::size_t MultiPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h ^= t.mono.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= mpz_get_ui(t.coeff.get_num_mpz_t()) + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace beltrami
