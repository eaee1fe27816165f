#ifndef PN_UNIPOLY_HPP
#define PN_UNIPOLY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "pn/rational.hpp"

namespace pn {

// Univariate polynomial with Rational coefficients, coefficient of x^i at
// index i. Trailing zeros are trimmed, so the top coefficient is nonzero
// unless the polynomial is zero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int i) const;
    Rational leading_coefficient() const;

    Rational eval(const Rational& x) const;  // exact Horner

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Rational& c) const;

    // p(x+1), used for discrete monotonicity checks.
    UniPoly shift_by_one() const;

    // Drops the coefficient of x^i (keeps everything else).
    UniPoly without_term(int i) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const;  // e.g. "1/8*x^2 + 5/4*x + 3"

  private:
    std::vector<Rational> coeffs_;
    void trim();
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

// scale * binomial(x/2 + shift, k) expanded as a polynomial in x, i.e.
// scale/k! * prod_{j=0}^{k-1} (x/2 + shift - j). Degree k; at any even
// nonnegative x it reproduces the binomial value exactly.
UniPoly expand_half_binomial(const Integer& shift, unsigned long k, const Rational& scale);

enum class MonotoneCertificate {
    AllCoefficientsNonnegative,  // nonconstant, every coefficient >= 0
    ScannedToBound,              // p(k+1) >= p(k) checked past the Cauchy root bound
    Constant,                    // degree <= 0, weakly increasing
};

struct MonotoneCheck {
    bool increasing = false;  // weakly increasing on the nonnegative integers
    MonotoneCertificate certificate = MonotoneCertificate::Constant;
    Integer scan_limit = 0;   // last k compared when the scan route was used

    bool is_constant() const { return certificate == MonotoneCertificate::Constant; }
};

const char* to_string(MonotoneCertificate c);

// Decides whether p(k+1) >= p(k) for every integer k >= 0, and says how it
// knows. Nonnegative coefficients settle it immediately; otherwise the
// difference polynomial is scanned up to one past its Cauchy root bound,
// beyond which its sign is fixed. Never returns an unverified true.
MonotoneCheck is_increasing_on_nonneg_integers(const UniPoly& p);

}  // namespace pn

#endif
