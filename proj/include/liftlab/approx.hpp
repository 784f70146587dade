#pragma once

#include "liftlab/rational.hpp"

namespace liftlab {

// Exact harmonic number H(k) = 1 + 1/2 + ... + 1/k.
Rational harmonic_number(unsigned k);

// Rational bracket for ln(n): ln_lower <= ln(n) <= ln_upper with
// ln_upper - ln_lower <= eps. Computed from the atanh series
// ln(n) = 2 * sum z^(2j+1)/(2j+1), z = (n-1)/(n+1), whose tail after J
// terms is below 2 z^(2J+3) / ((2J+3)(1-z^2)).
Rational ln_lower_bound(unsigned n, const Rational& eps);
Rational ln_upper_bound(unsigned n, const Rational& eps);

// Binomial coefficient as an exact integer rational.
Rational binomial(unsigned n, unsigned k);

}  // namespace liftlab
