#include "beltrami/finite_type/finite_type.hpp"

#include "beltrami/algebra/error.hpp"
#include "beltrami/algebra/format.hpp"
#include "beltrami/algebra/linear.hpp"

namespace beltrami {

Iterates compute_iterates(const Vec3& x, const BeltramiOperator& op, int k_max) {
  if (k_max < 1) throw Error(ErrorKind::Usage, "k_max must be at least 1");
  Iterates out{x};
  for (int k = 1; k <= k_max; ++k) out.push_back(apply_vector(op, out.back()));
  return out;
}

Scalar TypeRelation::p_coefficient(int j) const {
  if (j == k) return 1;
  return constants[static_cast<std::size_t>(k - 1 - j)];
}

std::string TypeRelation::to_text() const {
  auto power = [](int e) { return e == 1 ? std::string("D x") : "D^" + std::to_string(e) + " x"; };
  std::string s = power(k + 1);
  for (int i = 1; i <= k; ++i) {
    const Scalar& c = constants[static_cast<std::size_t>(i - 1)];
    if (sgn(c) == 0) continue;
    s += sgn(c) < 0 ? " - " : " + ";
    Scalar a = abs(c);
    if (a != 1) s += beltrami::to_string(a) + "*";
    s += power(k + 1 - i);
  }
  return s + " = 0";
}

namespace {

ExprVector flatten(const Vec3& v) {
  ExprVector out;
  for (const auto& c : v) out.push_back(c.rational_part());
  for (const auto& c : v) out.push_back(c.root_part());
  return out;
}

ExprVector unit(int i) {
  ExprVector out(6, Expr(0));
  out[static_cast<std::size_t>(i)] = Expr(1);
  return out;
}

TypeRelation make_relation(int k, const std::vector<Scalar>& null_vector) {
  // null_vector = (d_0..d_k, constants...), scaled so d_k = 1.
  TypeRelation r;
  r.k = k;
  Scalar top = null_vector[static_cast<std::size_t>(k)];
  std::vector<Scalar> p(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) p[static_cast<std::size_t>(j)] = null_vector[static_cast<std::size_t>(j)] / top;
  for (int i = 1; i <= k; ++i) r.constants.push_back(p[static_cast<std::size_t>(k - i)]);
  r.eigenvalues = rational_roots(p);
  int distinct = 0;
  bool simple = true;
  for (const auto& root : r.eigenvalues) {
    ++distinct;
    simple = simple && root.multiplicity == 1;
    if (sgn(root.value) == 0) r.null = true;
  }
  r.split = simple && distinct == k;
  return r;
}

Vec3 combine(const Iterates& it, const std::vector<Scalar>& coeffs, int shift) {
  Vec3 out{ExtElement(0), ExtElement(0), ExtElement(0)};
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (sgn(coeffs[j]) == 0) continue;
    out = add(out, scale(ExtElement(Expr(coeffs[j])), it[j + static_cast<std::size_t>(shift)]));
  }
  return out;
}

// Coefficients of prod_{j != skip} (L - roots[j]) in increasing powers of L.
std::vector<Scalar> product_poly(const std::vector<Scalar>& roots, std::size_t skip) {
  std::vector<Scalar> p{Scalar(1)};
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (j == skip) continue;
    std::vector<Scalar> q(p.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= roots[j] * p[i];
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace

std::optional<TypeRelation> detect_relation(const Iterates& iterates, int max_k) {
  if (iterates.empty()) throw Error(ErrorKind::Usage, "no iterates");
  const int limit = std::min(max_k, static_cast<int>(iterates.size()) - 2);
  for (int k = 1; k <= limit; ++k) {
    std::vector<ExprVector> vectors;
    for (int j = 0; j <= k; ++j) vectors.push_back(flatten(iterates[static_cast<std::size_t>(j)]));
    for (int i = 0; i < 6; ++i) vectors.push_back(unit(i));
    for (const auto& null_vector : rational_nullspace(vectors)) {
      if (sgn(null_vector[static_cast<std::size_t>(k)]) != 0) return make_relation(k, null_vector);
    }
  }
  return std::nullopt;
}

std::optional<TypeRelation> detect_relation(const Iterates& iterates) {
  return detect_relation(iterates, static_cast<int>(iterates.size()) - 2);
}

bool verify_relation(const TypeRelation& relation, const Iterates& iterates) {
  if (static_cast<int>(iterates.size()) < relation.k + 2) return false;
  std::vector<Scalar> p;
  for (int j = 0; j <= relation.k; ++j) p.push_back(relation.p_coefficient(j));
  return is_zero(combine(iterates, p, 1));
}

std::optional<EigenSplit> eigen_split(const TypeRelation& relation, const Iterates& iterates,
                                      const BeltramiOperator& op) {
  if (!relation.split || static_cast<int>(iterates.size()) < relation.k + 1) return std::nullopt;
  std::vector<Scalar> roots;
  for (const auto& r : relation.eigenvalues) roots.push_back(r.value);
  const Vec3& x = iterates[0];
  EigenSplit out;
  Vec3 rest = x;
  std::optional<std::size_t> null_index;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out.eigenvalues.push_back(roots[i]);
    if (sgn(roots[i]) == 0) {
      null_index = i;
      out.components.push_back(Vec3{});
      continue;
    }
    // y_i = prod_{j != i} (D - l_j) y / prod_{j != i} (l_i - l_j), y = D x.
    std::vector<Scalar> p = product_poly(roots, i);
    Scalar denom = 1;
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != i) denom *= roots[i] - roots[j];
    for (auto& c : p) c /= denom * roots[i];
    Vec3 xi = combine(iterates, p, 1);
    out.components.push_back(xi);
    rest = sub(rest, xi);
  }
  bool ok = true;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (null_index && i == *null_index) continue;
    const Vec3& xi = out.components[i];
    ok = ok && eq(apply_vector(op, xi), scale(ExtElement(Expr(roots[i])), xi));
  }
  if (null_index) {
    out.components[*null_index] = rest;
    ok = ok && is_zero(apply_vector(op, rest));
  } else {
    for (const auto& c : rest) {
      ok = ok && differentiate(c, op.u1, op.env).is_zero() && differentiate(c, op.u2, op.env).is_zero();
    }
    out.x0 = rest;
  }
  out.verified = ok;
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::FiniteType: return "finite-type";
    case Verdict::NullType: return "null-type";
    case Verdict::InfiniteCertificate: return "infinite-type-certificate";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

int chart_degree(const ExtElement& e, Var u1, Var u2) {
  int best = kDegreeNegInf;
  for (const Expr* part : {&e.rational_part(), &e.root_part()}) {
    if (part->is_zero()) continue;
    for (const auto& f : part->denominator_factors())
      if (f.atom->contains(u1) || f.atom->contains(u2)) return kDegreePosInf;
    for (const auto& t : part->numerator().terms())
      best = std::max(best, static_cast<int>(t.mono.degree_in(u1) + t.mono.degree_in(u2)));
  }
  return best;
}

bool is_growth_certificate(const std::vector<int>& degrees, const std::vector<Expr>& coefficients) {
  if (degrees.empty() || degrees.size() != coefficients.size()) return false;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (coefficients[i].is_zero()) return false;
    if (i > 0 && degrees[i] <= degrees[i - 1]) return false;
  }
  return true;
}

ClassificationReport classify(const SurfaceChart& chart, int k_max) {
  ClassificationReport report;
  report.surface = chart.name;
  report.k_max = k_max;
  FundamentalForm third = third_form(chart);
  BeltramiOperator op = beltrami_operator(third, chart.u1, chart.u2, chart.env);
  Iterates it = compute_iterates(chart.x, op, k_max);
  for (int k = 1; k <= k_max; ++k) {
    DegreeRow row{k, {}};
    for (const auto& c : it[static_cast<std::size_t>(k)]) row.degrees.push_back(chart_degree(c, chart.u1, chart.u2));
    report.degree_table.push_back(row);
  }
  report.relation = detect_relation(it);
  if (!report.relation) {
    report.verdict = Verdict::Inconclusive;
    report.summary = "no relation up to depth " + std::to_string(k_max);
    return report;
  }
  const TypeRelation& rel = *report.relation;
  report.verdict = rel.null ? Verdict::NullType : Verdict::FiniteType;
  report.cross_checks.push_back(std::string("relation re-verified: ") + (verify_relation(rel, it) ? "yes" : "no"));
  report.cross_checks.push_back(std::string("minimal: ") +
                                (rel.k == 1 || !detect_relation(it, rel.k - 1) ? "yes" : "no"));
  report.split = eigen_split(rel, it, op);
  if (report.split)
    report.cross_checks.push_back(std::string("eigen split verified: ") + (report.split->verified ? "yes" : "no"));
  report.summary = std::string(rel.null ? "finite null III-type " : "finite III-type ") + std::to_string(rel.k);
  return report;
}

}  // namespace beltrami
