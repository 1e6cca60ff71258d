#include "beltrami/algebra/roots.hpp"

#include <algorithm>

#include "beltrami/algebra/error.hpp"

namespace beltrami {

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Synthetic division by (x - r); returns false if r is not a root.
bool divide_root(std::vector<Scalar>& c, const Scalar& r) {
  std::size_t n = c.size() - 1;
  std::vector<Scalar> q(n);
  Scalar acc = 0;
  for (std::size_t i = n + 1; i-- > 0;) {
    acc = acc * r + c[i];
    if (i > 0) q[i - 1] = acc;
  }
  if (sgn(acc) != 0) return false;
  c = std::move(q);
  return true;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const std::vector<Scalar>& coeffs) {
  std::vector<Scalar> c = coeffs;
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  if (c.empty()) throw Error(ErrorKind::Usage, "roots of the zero polynomial");
  std::vector<RationalRoot> roots;
  int zero_mult = 0;
  while (c.size() > 1 && sgn(c.front()) == 0) {
    c.erase(c.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.push_back({Scalar(0), zero_mult});
  if (c.size() <= 1) return roots;

  Integer l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  Integer a0 = Integer(c.front() * l);
  Integer an = Integer(c.back() * l);
  auto ps = divisors(a0);
  auto qs = divisors(an);
  std::vector<Scalar> candidates;
  for (const auto& p : ps)
    for (const auto& q : qs) {
      Scalar r(p, q);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    int m = 0;
    while (c.size() > 1 && divide_root(c, r)) ++m;
    if (m > 0) roots.push_back({r, m});
  }
  std::sort(roots.begin(), roots.end(), [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return roots;
}

std::vector<RationalRoot> rational_roots(const MultiPoly& p, Var v) {
  int deg = p.degree_in(v);
  if (deg < 0) throw Error(ErrorKind::Usage, "roots of the zero polynomial");
  std::vector<Scalar> coeffs(static_cast<std::size_t>(deg) + 1, Scalar(0));
  for (const auto& [e, c] : p.coefficients_in(v)) {
    if (!c.is_constant()) throw Error(ErrorKind::Usage, "polynomial is not univariate in " + text_name(v));
    coeffs[e] = c.constant_value();
  }
  return rational_roots(coeffs);
}

}  // namespace beltrami
