#include "liftlab/approx.hpp"

#include <stdexcept>
#include <utility>

namespace liftlab {

Rational harmonic_number(unsigned k) {
    Rational h = 0;
    for (unsigned j = 1; j <= k; ++j) h += Rational(1, (long)j);
    return h;
}

namespace {

// Returns (partial sum, tail bound) of the atanh series for ln(n).
std::pair<Rational, Rational> ln_bracket(unsigned n, const Rational& eps) {
    if (n == 0) throw std::domain_error("ln: n must be positive");
    if (eps <= Rational(0)) throw std::invalid_argument("ln: eps must be positive");
    if (n == 1) return {Rational(0), Rational(0)};
    Rational z((long)n - 1, (long)n + 1);
    Rational z2 = z * z;
    Rational geom = Rational(1) - z2;  // 1 - z^2 > 0
    Rational term = z;                 // z^(2j+1)
    Rational sum = 0;
    unsigned long j = 0;
    while (true) {
        sum += Rational(2) * term / Rational(2 * (long)j + 1);
        Rational next = term * z2;  // z^(2j+3)
        Rational tail = Rational(2) * next / (Rational(2 * (long)j + 3) * geom);
        if (tail < eps) return {sum, tail};
        term = next;
        ++j;
        if (j > 100000) throw std::logic_error("ln: series failed to converge");
    }
}

}  // namespace

Rational ln_lower_bound(unsigned n, const Rational& eps) { return ln_bracket(n, eps).first; }

Rational ln_upper_bound(unsigned n, const Rational& eps) {
    auto [sum, tail] = ln_bracket(n, eps);
    return sum + tail;
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(c);
}

}  // namespace liftlab
