#include "liftlab/rational.hpp"

namespace liftlab {

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(s));
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("Rational: denominator must be positive in '" + s + "'");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: malformed fraction '" + s + "'");
    }
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::decimal(int digits) const {
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpz_class scaled = num() * scale / den();  // truncates toward zero
    bool neg = scaled < 0;
    mpz_class a = neg ? mpz_class(-scaled) : scaled;
    std::string d = a.get_str();
    if ((int)d.size() <= digits) d = std::string(digits + 1 - d.size(), '0') + d;
    std::string out = d.substr(0, d.size() - digits);
    if (digits > 0) out += "." + d.substr(d.size() - digits);
    return (neg ? "-" : "") + out;
}

Rational Rational::pow2(int e) {
    mpz_class p = 1;
    p <<= (e >= 0 ? e : -e);
    return e >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }

}  // namespace liftlab
