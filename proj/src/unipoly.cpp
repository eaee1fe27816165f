#include "pn/unipoly.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace pn {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::constant(const Rational& c) {
    return UniPoly(std::vector<Rational>{c});
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational UniPoly::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

Rational UniPoly::leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_)
        c.push_back(-a);
    return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    return a + (-b);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero())
        return UniPoly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& c) const {
    std::vector<Rational> r;
    r.reserve(coeffs_.size());
    for (const auto& a : coeffs_)
        r.push_back(a * c);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::shift_by_one() const {
    // Horner on coefficients: p(x+1) built highest term first.
    UniPoly r;
    const UniPoly x_plus_1(std::vector<Rational>{Rational(1), Rational(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * x_plus_1 + UniPoly::constant(*it);
    return r;
}

UniPoly UniPoly::without_term(int i) const {
    std::vector<Rational> c = coeffs_;
    if (i >= 0 && i < static_cast<int>(c.size()))
        c[static_cast<size_t>(i)] = Rational(0);
    return UniPoly(std::move(c));
}

std::string UniPoly::str() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c.is_zero())
            continue;
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        const Rational a = c.sign() < 0 ? -c : c;
        if (i == 0) {
            os << a.str();
        } else {
            if (!(a == Rational(1)))
                os << a.str() << "*";
            os << "x";
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    return os << p.str();
}

UniPoly expand_half_binomial(const Integer& shift, unsigned long k, const Rational& scale) {
    if (k == 0)
        throw DomainError("expand_half_binomial: k must be >= 1");
    UniPoly p = UniPoly::constant(Rational(1));
    for (unsigned long j = 0; j < k; ++j) {
        // factor (x/2 + shift - j)
        UniPoly lin(std::vector<Rational>{Rational(shift - Integer(j)), Rational(1, 2)});
        p = p * lin;
    }
    return p.scaled(scale / Rational(factorial(k)));
}

const char* to_string(MonotoneCertificate c) {
    switch (c) {
        case MonotoneCertificate::AllCoefficientsNonnegative: return "all-coefficients-nonnegative";
        case MonotoneCertificate::ScannedToBound: return "scanned-to-bound";
        case MonotoneCertificate::Constant: return "constant";
    }
    return "?";
}

namespace {

// 1 + max_i |c_i| / |c_m|; every real root of p lies inside this radius.
Rational cauchy_root_bound(const UniPoly& p) {
    const int m = p.degree();
    const Rational lead = p.leading_coefficient();
    Rational mx(0);
    for (int i = 0; i < m; ++i) {
        Rational a = p.coefficient(i) / lead;
        if (a.sign() < 0)
            a = -a;
        if (a > mx)
            mx = a;
    }
    return Rational(1) + mx;
}

}  // namespace

MonotoneCheck is_increasing_on_nonneg_integers(const UniPoly& p) {
    MonotoneCheck out;
    if (p.degree() <= 0) {
        out.increasing = true;
        out.certificate = MonotoneCertificate::Constant;
        return out;
    }
    bool all_nonneg = true;
    for (const auto& c : p.coefficients())
        if (c.sign() < 0)
            all_nonneg = false;
    if (all_nonneg) {
        out.increasing = true;
        out.certificate = MonotoneCertificate::AllCoefficientsNonnegative;
        return out;
    }

    // d(x) = p(x+1) - p(x) has degree >= 0 and the same eventual sign as
    // its leading coefficient; past the Cauchy bound there are no roots
    // left, so a scan through floor(bound)+1 settles every k >= 0.
    const UniPoly d = p.shift_by_one() - p;
    const Integer limit = cauchy_root_bound(d).floor() + 1;
    out.certificate = MonotoneCertificate::ScannedToBound;
    out.scan_limit = limit;
    for (Integer k = 0; k <= limit; ++k) {
        if (d.eval(Rational(k)).sign() < 0) {
            out.increasing = false;
            return out;
        }
    }
    out.increasing = true;
    return out;
}

}  // namespace pn
