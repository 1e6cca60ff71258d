#include "beltrami/algebra/linear.hpp"

#include <unordered_map>

#include "beltrami/algebra/error.hpp"

namespace beltrami {

std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Scalar inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Scalar f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Max exponent per atom over all entries of one component.
std::vector<DenFactor> common_denominator(const std::vector<const Expr*>& entries) {
  std::vector<DenFactor> lcm;
  for (const Expr* e : entries) {
    for (const auto& f : e->denominator_factors()) {
      bool found = false;
      for (auto& g : lcm) {
        if (g.atom == f.atom || g.atom->compare(*f.atom) == 0) {
          g.exp = std::max(g.exp, f.exp);
          found = true;
          break;
        }
      }
      if (!found) lcm.push_back(f);
    }
  }
  return lcm;
}

// numerator(e) * lcm / denominator(e), computed from exponent differences.
MultiPoly scaled_numerator(const Expr& e, const std::vector<DenFactor>& lcm) {
  MultiPoly p = e.numerator();
  for (const auto& g : lcm) {
    int have = 0;
    for (const auto& f : e.denominator_factors())
      if (f.atom == g.atom || f.atom->compare(*g.atom) == 0) have = f.exp;
    if (g.exp > have) p = p * g.atom->pow(static_cast<unsigned>(g.exp - have));
  }
  return p;
}

void normalize_relation(std::vector<Scalar>& c) {
  Integer l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  Integer g = 0;
  for (auto& x : c) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
  }
  int sign = 0;
  for (const auto& x : c)
    if (sgn(x) != 0) {
      sign = sgn(x);
      break;
    }
  if (g == 0) return;
  Scalar f = Scalar(sign, 1) / Scalar(g);
  for (auto& x : c) x *= f;
}

}  // namespace

std::vector<std::vector<Scalar>> rational_nullspace(const std::vector<ExprVector>& vectors) {
  const std::size_t n = vectors.size();
  if (n == 0) throw Error(ErrorKind::Usage, "no vectors given");
  const std::size_t dim = vectors[0].size();
  for (const auto& v : vectors)
    if (v.size() != dim) throw Error(ErrorKind::Usage, "vectors of different lengths");

  std::vector<std::vector<Scalar>> rows;
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<const Expr*> entries;
    for (const auto& v : vectors) entries.push_back(&v[j]);
    auto lcm = common_denominator(entries);
    std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
    for (std::size_t i = 0; i < n; ++i) {
      MultiPoly p = scaled_numerator(vectors[i][j], lcm);
      for (const auto& t : p.terms()) {
        auto [it, inserted] = row_of.try_emplace(t.mono, rows.size());
        if (inserted) rows.emplace_back(n, Scalar(0));
        rows[it->second][i] += t.coeff;
      }
    }
  }
  auto basis = nullspace(std::move(rows), n);
  for (auto& b : basis) normalize_relation(b);
  return basis;
}

std::optional<std::vector<Scalar>> linear_dependence(const std::vector<ExprVector>& vectors) {
  auto basis = rational_nullspace(vectors);
  if (basis.empty()) return std::nullopt;
  return basis.front();
}

std::vector<ExprVector> flatten(const std::vector<std::vector<ExtElement>>& vectors) {
  std::vector<ExprVector> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) {
    ExprVector f;
    f.reserve(2 * v.size());
    for (const auto& x : v) f.push_back(x.rational_part());
    for (const auto& x : v) f.push_back(x.root_part());
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace beltrami
