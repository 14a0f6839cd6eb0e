#include "qyl/rational.hpp"

namespace qyl {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
    if (v.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::pow(long k) const {
    if (k == 0) return Rational(1);
    bool neg = k < 0;
    unsigned long e = neg ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    if (neg && is_zero()) throw std::domain_error("Rational::pow: negative power of zero");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    mpq_class r = neg ? mpq_class(den, num) : mpq_class(num, den);
    r.canonicalize();
    return Rational(std::move(r));
}

}  // namespace qyl
