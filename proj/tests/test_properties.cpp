#include <gtest/gtest.h>

#include "properties.hpp"

using namespace beltrami::testing;

namespace {

constexpr int kCases = 1000;

void expect_clean(const PropertyResult& r) {
  EXPECT_EQ(r.cases, kCases);
  EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
}

}  // namespace

TEST(Properties, RingAxioms) { expect_clean(ring_axioms(11, kCases)); }
TEST(Properties, NormalizeIdempotent) { expect_clean(normalize_idempotent(12, kCases)); }
TEST(Properties, PrintParseRoundTrip) { expect_clean(print_parse_roundtrip(13, kCases)); }
TEST(Properties, SchwarzSymmetry) { expect_clean(schwarz_symmetry(14, kCases)); }
TEST(Properties, DegreeLaw) { expect_clean(degree_law(15, kCases)); }
TEST(Properties, ConjugateProduct) { expect_clean(conjugate_product(16, kCases)); }
TEST(Properties, OperatorLinearity) { expect_clean(operator_linearity(17, kCases)); }
TEST(Properties, ConstantAnnihilation) { expect_clean(constant_annihilation(18, kCases)); }
TEST(Properties, CatalogOperatorsRadicalFree) { expect_clean(catalog_w_free(19, kCases)); }
