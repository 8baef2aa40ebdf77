#pragma once

#include "eisrel/rational.hpp"

namespace eisrel {

/// n-th Bernoulli number under the B_1 = -1/2 convention. Computed by the
/// defining convolution recurrence and memoized; safe to call concurrently.
Rational bernoulli(unsigned n);

/// Binomial coefficient C(n, k) for n >= 0. Returns 0 for k < 0 or k > n;
/// this zero extension is what truncates the relation sums. Negative n is
/// a domain error.
Integer binomial(long n, long k);

/// n! as an arbitrary-precision integer.
Integer factorial(unsigned n);

/// Sum of the k-th powers of the positive divisors of n (trial division).
/// n = 0 is a domain error.
Integer sigma(unsigned k, unsigned long n);

}  // namespace eisrel
