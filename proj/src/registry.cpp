#include "pn/registry.hpp"

#include <sstream>
#include <stdexcept>

namespace pn {

const char* to_string(HKType t) {
    switch (t) {
        case HKType::K3n: return "k3n";
        case HKType::Kummer: return "kummer";
        case HKType::OG6: return "og6";
        case HKType::M10: return "m10";
    }
    return "?";
}

std::optional<HKType> parse_hk_type(const std::string& s) {
    if (s == "k3n") return HKType::K3n;
    if (s == "kummer") return HKType::Kummer;
    if (s == "og6") return HKType::OG6;
    if (s == "m10") return HKType::M10;
    return std::nullopt;
}

DeformationType::DeformationType(HKType tag, int n) : tag_(tag), n_(n) {
    switch (tag) {
        case HKType::K3n:
        case HKType::Kummer:
            if (n < 2)
                throw DomainError(std::string(to_string(tag)) + ": n must be >= 2 (dimension >= 4)");
            break;
        case HKType::OG6:
            if (n != 3)
                throw DomainError("og6 has dimension 6, so n = 3");
            break;
        case HKType::M10:
            if (n != 5)
                throw DomainError("m10 has dimension 10, so n = 5");
            break;
    }
}

std::string DeformationType::name() const {
    if (tag_ == HKType::OG6 || tag_ == HKType::M10)
        return to_string(tag_);
    std::ostringstream os;
    os << to_string(tag_) << "[" << n_ << "]";
    return os.str();
}

namespace {

[[noreturn]] void reject_m10() {
    throw DomainError("m10: Riemann-Roch coefficients unknown");
}

}  // namespace

Rational fujiki_constant(const DeformationType& t) {
    const unsigned long n = static_cast<unsigned long>(t.n());
    const Rational base(factorial(2 * n), factorial(n) * pow_int(2, n));
    switch (t.tag()) {
        case HKType::K3n:
            return base;
        case HKType::Kummer:
        case HKType::OG6:  // same Riemann-Roch data as kummer[3]
            return Rational(t.n() + 1) * base;
        case HKType::M10:
            reject_m10();
    }
    throw std::logic_error("unreachable");
}

UniPoly rr_polynomial(const DeformationType& t) {
    const unsigned long n = static_cast<unsigned long>(t.n());
    switch (t.tag()) {
        case HKType::K3n:
            // chi = binomial(q/2 + n+1, n)
            return expand_half_binomial(Integer(t.n() + 1), n, Rational(1));
        case HKType::Kummer:
        case HKType::OG6:
            // chi = (n+1) * binomial(q/2 + n, n)
            return expand_half_binomial(Integer(t.n()), n, Rational(t.n() + 1));
        case HKType::M10:
            reject_m10();
    }
    throw std::logic_error("unreachable");
}

HKProfile build_profile(const DeformationType& t) {
    HKProfile p{t, t.dim(), fujiki_constant(t), rr_polynomial(t), UniPoly(), 2};
    p.r_poly = p.rr.without_term(t.n());

    const Rational expected_lead = p.fujiki / Rational(factorial(static_cast<unsigned long>(p.dim)));
    if (!(p.rr.degree() == t.n() && p.rr.leading_coefficient() == expected_lead)) {
        std::ostringstream os;
        os << t.name() << ": leading coefficient of RR is " << p.rr.leading_coefficient().str()
           << ", expected fujiki/(2n)! = " << expected_lead.str();
        throw std::logic_error(os.str());
    }
    if (!(p.rr.eval(Rational(0)) == Rational(t.n() + 1))) {
        std::ostringstream os;
        os << t.name() << ": RR(0) = " << p.rr.eval(Rational(0)).str()
           << ", expected chi(O) = n+1 = " << t.n() + 1;
        throw std::logic_error(os.str());
    }
    return p;
}

namespace {

void require_admissible_square(const HKProfile& p, const Integer& q) {
    if (sgn(q) <= 0 || !mpz_divisible_ui_p(q.get_mpz_t(), 2))
        throw DomainError(p.type.name() + ": Beauville square must be a positive even integer, got " + q.get_str());
    if (q < p.alpha_min)
        throw DomainError(p.type.name() + ": Beauville square " + q.get_str() +
                          " is below the ample minimum " + p.alpha_min.get_str());
}

}  // namespace

Integer h0(const HKProfile& p, const Integer& q) {
    require_admissible_square(p, q);
    return p.rr.eval(Rational(q)).to_integer();
}

Integer top_intersection(const HKProfile& p, const Integer& q) {
    require_admissible_square(p, q);
    return (p.fujiki * Rational(pow_int(q, static_cast<unsigned long>(p.n())))).to_integer();
}

HypothesisCheck hypothesis_check(const HKProfile& p) {
    HypothesisCheck h;
    h.increasing = is_increasing_on_nonneg_integers(p.r_poly);
    h.r_at_alpha = p.r_poly.eval(Rational(p.alpha_min));
    h.rr_at_alpha = p.rr.eval(Rational(p.alpha_min));
    h.r_at_alpha_gt_2n = h.r_at_alpha > Rational(p.dim);
    h.rr_at_alpha_ge_4n = h.rr_at_alpha >= Rational(2 * p.dim);
    return h;
}

std::string serialize_profile(const HKProfile& p) {
    std::ostringstream os;
    os << to_string(p.type.tag()) << " n=" << p.n() << " fujiki=" << p.fujiki.str() << " rr=[";
    const auto& cs = p.rr.coefficients();
    for (size_t i = 0; i < cs.size(); ++i)
        os << (i ? "," : "") << cs[i].str();
    os << "]";
    return os.str();
}

}  // namespace pn
