#ifndef PN_RATIONAL_HPP
#define PN_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace pn {

using Integer = mpz_class;

// Thrown when an operation leaves its mathematical domain (division by
// zero, odd q where an even one is required, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact fraction. Always canonical: coprime parts, positive denominator,
// zero stored as 0/1. All scalar quantities in this library are Rational.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Integer floor() const;
    Integer ceil() const;

    // Requires is_integer(); used where a value is provably integral.
    Integer to_integer() const;

    // "p" when the denominator is 1, otherwise "p/q". Never decimal.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

  private:
    mpq_class v_;  // kept canonical by construction
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// m(m-1)...(m-k+1)/k!. Zero when 0 <= m < k, one when k = 0; negative m
// follows the polynomial convention and may give a negative result.
Integer binomial(const Integer& m, unsigned long k);

Integer factorial(unsigned long n);

// b^e for a nonnegative integer exponent.
Integer pow_int(const Integer& b, unsigned long e);

}  // namespace pn

#endif
