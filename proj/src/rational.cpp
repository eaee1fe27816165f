#include "pn/rational.hpp"

#include <ostream>

namespace pn {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0)
        throw DomainError("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DomainError("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Integer Rational::to_integer() const {
    if (!is_integer())
        throw DomainError("rational: " + str() + " is not an integer");
    return num();
}

std::string Rational::str() const {
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Integer binomial(const Integer& m, unsigned long k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), m.get_mpz_t(), k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer pow_int(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace pn
