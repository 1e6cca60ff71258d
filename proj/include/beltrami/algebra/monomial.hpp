#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <utility>

#include "beltrami/algebra/indeterminate.hpp"

namespace beltrami {

/// Power product over interned variables, factors sorted by var_less.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;
  using Factors = boost::container::small_vector<Factor, 4>;

  Monomial() = default;
  static Monomial of(Var v, std::uint32_t exp = 1);

  const Factors& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree_in(Var v) const;

  bool divides(const Monomial& other) const;
  /// Requires divides(other): returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  /// Drops the factor for v (returns the cofactor of v^degree_in(v)).
  Monomial without(Var v) const;
  Monomial lowered(Var v, std::uint32_t by) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  /// Graded lexicographic comparison: -1, 0, 1.
  int compare(const Monomial& other) const;
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.factors_ == b.factors_;
  }
  std::size_t hash() const;

 private:
  Factors factors_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace beltrami
