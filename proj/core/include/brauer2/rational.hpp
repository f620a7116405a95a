#pragma once

#include <gmpxx.h>

#include <string>

namespace brauer2 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical total order on rationals: by absolute value, then by value.
/// Used wherever output must be deterministic (factor lists, place sets).
int canonical_compare(const Rational& a, const Rational& b);

std::string to_string(const Rational& q);

inline bool is_atomic(const Rational&) { return true; }

/// Squarefree integer s with q = s * r^2 for some nonzero rational r.
/// The sign is kept. q must be nonzero.
Integer squarefree_kernel(const Rational& q);

bool is_square(const Rational& q);

/// Returns r with r^2 = q; q must be a rational square.
Rational exact_sqrt(const Rational& q);

} // namespace brauer2
