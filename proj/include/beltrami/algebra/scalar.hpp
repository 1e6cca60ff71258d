#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace beltrami {

/// Arbitrary-precision rational; mpq_class keeps numerator/denominator
/// canonical (denominator > 0, coprime, zero is 0/1) after every operation.
using Scalar = mpq_class;
using Integer = mpz_class;

Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& x);

inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }

/// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Scalar> exact_sqrt(const Scalar& x);

}  // namespace beltrami
