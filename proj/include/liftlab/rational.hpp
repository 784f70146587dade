#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace liftlab {

// Exact rational scalar. Canonical form is maintained at all times:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1. All arithmetic is
// exact; there is no floating-point mode anywhere in this library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, integers embed
    Rational(int n) : v_(n) {}   // NOLINT
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Parses "p/q" or the integer shorthand "p". Throws on malformed input
    // or zero denominator.
    static Rational from_string(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    // -1, 0, +1
    int cmp(const Rational& o) const {
        return v_ < o.v_ ? -1 : (v_ == o.v_ ? 0 : 1);
    }

    // "p" when den == 1, else "p/q".
    std::string str() const;

    // Fixed-point decimal rendering (round toward zero), e.g. "1.3862".
    // Computed with integer arithmetic only; used for human-readable reports.
    std::string decimal(int digits) const;

    static Rational pow2(int e);  // 2^e, e may be negative

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

Rational max(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);

// max{0, r}
inline Rational pos_part(const Rational& r) { return r.is_negative() ? Rational(0) : r; }

}  // namespace liftlab
