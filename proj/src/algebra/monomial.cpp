#include "beltrami/algebra/monomial.hpp"

#include <functional>

namespace beltrami {

Monomial Monomial::of(Var v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.factors_.emplace_back(v, exp);
    m.degree_ = exp;
  }
  return m;
}

std::uint32_t Monomial::degree_in(Var v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto it = other.factors_.begin();
  const auto end = other.factors_.end();
  for (const auto& [v, e] : factors_) {
    while (it != end && it->first != v && var_less(it->first, v)) ++it;
    if (it == end || it->first != v || it->second < e) return false;
    ++it;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  auto it = factors_.begin();
  for (const auto& [v, e] : other.factors_) {
    std::uint32_t sub = 0;
    if (it != factors_.end() && it->first == v) {
      sub = it->second;
      ++it;
    }
    if (e > sub) q.factors_.emplace_back(v, e - sub);
  }
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  for (const auto& f : factors_)
    if (f.first != v) m.factors_.push_back(f);
  m.degree_ = degree_ - degree_in(v);
  return m;
}

Monomial Monomial::lowered(Var v, std::uint32_t by) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first != v) {
      m.factors_.push_back(f);
    } else if (f.second > by) {
      m.factors_.emplace_back(v, f.second - by);
    }
  }
  m.degree_ = degree_ - by;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first == j->first) {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i, ++j;
    } else if (var_less(i->first, j->first)) {
      m.factors_.push_back(*i++);
    } else {
      m.factors_.push_back(*j++);
    }
  }
  m.factors_.insert(m.factors_.end(), i, a.factors_.end());
  m.factors_.insert(m.factors_.end(), j, b.factors_.end());
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first == j->first) {
      std::uint32_t e = std::min(i->second, j->second);
      m.factors_.emplace_back(i->first, e);
      m.degree_ += e;
      ++i, ++j;
    } else if (var_less(i->first, j->first)) {
      ++i;
    } else {
      ++j;
    }
  }
  return m;
}

// Graded lex: total degree first, then the exponent of the earliest variable
// in global order decides.
int Monomial::compare(const Monomial& o) const {
  if (degree_ != o.degree_) return degree_ < o.degree_ ? -1 : 1;
  auto i = factors_.begin(), j = o.factors_.begin();
  for (; i != factors_.end() && j != o.factors_.end(); ++i, ++j) {
    if (i->first != j->first) return var_less(i->first, j->first) ? 1 : -1;
    if (i->second != j->second) return i->second < j->second ? -1 : 1;
  }
  if (i != factors_.end()) return 1;
  if (j != o.factors_.end()) return -1;
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = degree_;
  for (const auto& [v, e] : factors_) {
    h ^= std::hash<const void*>()(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace beltrami
