#include "hsf/rational.hpp"

#include <ostream>

namespace hsf {

Rational Rational::from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    v.canonicalize();
    return Rational(v);
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

}  // namespace hsf
