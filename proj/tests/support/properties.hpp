#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "beltrami/algebra/sqrt_ext.hpp"

namespace beltrami::testing {

/// Small random rational functions in u, v and the parameter a.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Scalar rational(int range = 5);
  /// Nonzero rational in [1/den, range].
  Scalar positive(int range = 5);
  MultiPoly poly(int max_terms = 4, int max_exp = 3, bool with_param = true);
  /// Polynomial over a denominator of simple atoms (or 1).
  Expr expr();

 private:
  std::mt19937_64 rng_;
};

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

PropertyResult ring_axioms(std::uint64_t seed, int n);
PropertyResult normalize_idempotent(std::uint64_t seed, int n);
PropertyResult print_parse_roundtrip(std::uint64_t seed, int n);
PropertyResult schwarz_symmetry(std::uint64_t seed, int n);
PropertyResult degree_law(std::uint64_t seed, int n);
PropertyResult conjugate_product(std::uint64_t seed, int n);
PropertyResult operator_linearity(std::uint64_t seed, int n);
PropertyResult constant_annihilation(std::uint64_t seed, int n);
PropertyResult catalog_w_free(std::uint64_t seed, int n);

std::vector<PropertyResult> all_properties(std::uint64_t seed, int n);

}  // namespace beltrami::testing
