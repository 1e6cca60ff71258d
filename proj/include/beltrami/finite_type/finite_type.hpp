#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beltrami/algebra/roots.hpp"
#include "beltrami/geometry/operator.hpp"

namespace beltrami {

/// iterates[k] = Delta^k x, k = 0..k_max.
using Iterates = std::vector<Vec3>;

Iterates compute_iterates(const Vec3& x, const BeltramiOperator& op, int k_max);

/// Delta^{k+1} x + c_1 Delta^k x + ... + c_k Delta x = 0, found as the monic
/// p(L) = L^k + c_1 L^{k-1} + ... + c_k of least degree with p(Delta) x
/// constant.
struct TypeRelation {
  int k = 0;
  std::vector<Scalar> constants;          // c_1..c_k
  std::vector<RationalRoot> eigenvalues;  // rational roots of p
  bool null = false;                      // 0 is an eigenvalue
  bool split = false;                     // k distinct rational eigenvalues

  /// Coefficient of Delta^j x in p(Delta) x, j = 0..k.
  Scalar p_coefficient(int j) const;
  std::string to_text() const;
};

/// Least k <= iterates.size() - 2 with a relation, or nullopt. Constants are
/// solved over Q; the system has coefficients in Q(params), so a real solution
/// exists exactly when a rational one does for rational parameters.
std::optional<TypeRelation> detect_relation(const Iterates& iterates);
/// As above with k bounded by max_k.
std::optional<TypeRelation> detect_relation(const Iterates& iterates, int max_k);

/// Assembles sum over the relation and checks that it vanishes exactly;
/// needs iterates up to k + 1.
bool verify_relation(const TypeRelation& relation, const Iterates& iterates);

struct EigenSplit {
  std::optional<Vec3> x0;  // absent when a null eigenvalue absorbs it
  std::vector<Vec3> components;
  std::vector<Scalar> eigenvalues;
  bool verified = false;  // Delta x_i = lambda_i x_i and x0 constant
};

/// Decomposition x = x0 + sum x_i with Delta x_i = lambda_i x_i; requires a
/// split relation (otherwise nullopt).
std::optional<EigenSplit> eigen_split(const TypeRelation& relation, const Iterates& iterates,
                                      const BeltramiOperator& op);

enum class Verdict { FiniteType, NullType, InfiniteCertificate, Inconclusive };
const char* to_string(Verdict v);

struct DegreeRow {
  int k = 0;
  std::vector<int> degrees;  // per component; kDegreePosInf if not polynomial
};

struct ClassificationReport {
  std::string surface;
  int k_max = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<TypeRelation> relation;
  std::optional<EigenSplit> split;
  std::vector<DegreeRow> degree_table;
  /// Certificate data: leading degrees and coefficients of the tracked
  /// coordinate, k = 1..k_max.
  std::vector<int> leading_degrees;
  std::vector<std::string> leading_coefficients;
  std::vector<std::string> constraints;
  std::vector<std::string> cross_checks;
  std::vector<std::string> notes;
  std::string summary;
};

/// Total degree in the chart variables of a vector's components (rational and
/// root parts); kDegreeNegInf for 0, kDegreePosInf if a chart variable occurs in
/// a denominator.
int chart_degree(const ExtElement& e, Var u1, Var u2);

/// Operator build, iterates, relation detection and eigen split. Without a
/// relation the verdict is Inconclusive; family classifiers upgrade it.
ClassificationReport classify(const SurfaceChart& chart, int k_max);

/// A certificate needs strictly increasing degrees and nonzero coefficients.
bool is_growth_certificate(const std::vector<int>& degrees, const std::vector<Expr>& coefficients);

}  // namespace beltrami
