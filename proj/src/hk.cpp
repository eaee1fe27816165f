#include "pn/hk.hpp"

#include <algorithm>
#include <sstream>

namespace pn {

const char* to_string(ConeExclusionRoute r) {
    switch (r) {
        case ConeExclusionRoute::NotExcluded: return "not-excluded";
        case ConeExclusionRoute::SectionsAtLeast4n: return "h0-at-least-4n";
        case ConeExclusionRoute::TopIntersectionTooSmall: return "top-intersection-too-small";
    }
    return "?";
}

PolarizedHK::PolarizedHK(HKProfile p, Integer q_in) : profile(std::move(p)), q(std::move(q_in)) {
    const Integer sections = h0(profile, q);  // validates q as well
    if (sections < 2 * profile.n() + 2)
        throw std::logic_error(profile.type.name() + ": h0 = " + sections.get_str() +
                               " < 2n+2, Riemann-Roch invariant broken");
}

namespace {

void require_degree_bound_hypotheses(const PolarizedHK& p) {
    const HypothesisCheck h = hypothesis_check(p.profile);
    if (!h.degree_bound_hypotheses())
        throw DomainError(p.profile.type.name() +
                          ": degree bound needs R increasing on the nonnegative integers and R(alpha) > 2n");
}

std::vector<std::string> standard_assumptions() {
    return {
        "h0 equals chi: an ample and globally generated class has no higher cohomology",
        "alpha bound: the minimum Beauville square of an ample class is taken as 2",
        "fibration axiom: the base of any fibre space structure has dimension n, so no map to P^1 exists and smooth scroll images are impossible",
        "covering degree must exceed 1: a birational map onto a rational normal image is impossible for trivial canonical class",
    };
}

}  // namespace

Integer degree_upper_bound(const PolarizedHK& p) {
    require_degree_bound_hypotheses(p);
    const Integer sections = h0(p.profile, p.q);
    const Integer gap = sections - 2 * p.n();
    if (sgn(gap) <= 0)
        throw DomainError(p.profile.type.name() + ": h0 - 2n must be positive");
    const Integer sharp = (Rational(top_intersection(p.profile, p.q)) / Rational(gap)).floor();
    const Integer coarse = factorial(static_cast<unsigned long>(p.dim())) - 1;
    return sharp < coarse ? sharp : coarse;
}

ConeExclusion cone_over_curve_excluded(const PolarizedHK& p) {
    require_degree_bound_hypotheses(p);
    const Integer sections = h0(p.profile, p.q);
    const Integer top = top_intersection(p.profile, p.q);
    const int n = p.n();

    ConeExclusion out;
    if (sections >= 4 * n) {
        out.excluded = true;
        out.route = ConeExclusionRoute::SectionsAtLeast4n;
        std::ostringstream os;
        os << "h0 = " << sections << " >= 4n = " << 4 * n << ", so (h0-2n)^(2n-1) >= (2n)^(2n-1) >= (2n)!";
        out.reason = os.str();
        return out;
    }
    const Integer rhs =
        pow_int(p.profile.alpha_min, static_cast<unsigned long>(n)) *
        pow_int(sections - 2 * n, static_cast<unsigned long>(2 * n));
    if (top < rhs) {
        out.excluded = true;
        out.route = ConeExclusionRoute::TopIntersectionTooSmall;
        std::ostringstream os;
        os << "B^(2n) = " << top << " < alpha^n (h0-2n)^(2n) = " << rhs;
        out.reason = os.str();
        return out;
    }
    out.reason = "not excluded by these criteria";
    return out;
}

namespace {

// Applies the elimination rules to one minimal-degree candidate and, when
// it survives, attaches the covering degree it would force.
std::optional<AdmissibleImage> survives(const EmbeddedVMD& cand, const Integer& sections,
                                        const Integer& top, int dim, const ConeExclusion& cone) {
    if (std::holds_alternative<SmoothScroll>(cand.cls))
        return std::nullopt;  // fibration axiom
    if (!admissible_for_smooth_source(cand))
        return std::nullopt;
    if (std::holds_alternative<ConeOverScroll>(cand.cls) && cone.excluded)
        return std::nullopt;
    if (std::holds_alternative<Quadric>(cand.cls) && sections != dim + 2)
        return std::nullopt;  // quadric image forces h0 = 2n+2
    if (std::holds_alternative<ConeOverVeronese>(cand.cls) && sections != dim + 4)
        return std::nullopt;  // Veronese cone forces h0 = 2n+4
    if (std::holds_alternative<ProjectiveSpace>(cand.cls) || std::holds_alternative<Veronese>(cand.cls))
        return std::nullopt;  // h0 >= 2n+2 rules out codim 0, and dim >= 4 rules out the surface
    if (!mpz_divisible_p(top.get_mpz_t(), cand.degree.get_mpz_t()))
        return std::nullopt;
    Integer implied = top / cand.degree;
    if (implied <= 1)
        return std::nullopt;
    return AdmissibleImage{cand, std::move(implied)};
}

// Past this image degree the full scroll enumeration is pointless: the
// rules above kill every shape except (0,...,0,d), so the three possible
// survivors are materialized directly.
constexpr long kEnumerableDegree = 32;

}  // namespace

std::vector<AdmissibleImage> eliminate_images(const PolarizedHK& p) {
    require_degree_bound_hypotheses(p);
    const Integer sections = h0(p.profile, p.q);
    const Integer top = top_intersection(p.profile, p.q);
    const int dim = p.dim();
    const Integer image_degree = sections - dim;  // 1 + codim for the image of |B|
    const ConeExclusion cone = cone_over_curve_excluded(p);

    std::vector<AdmissibleImage> out;
    if (image_degree <= kEnumerableDegree) {
        const int r = static_cast<int>(sections.get_si()) - 1;
        for (const EmbeddedVMD& cand : classify(dim, r)) {
            if (auto img = survives(cand, sections, top, dim, cone))
                out.push_back(std::move(*img));
        }
        return out;
    }

    // Large image degree: h0 is far past 2n+4, so quadrics and Veronese
    // cones are already gone; only the cone over a rational normal curve
    // remains, and only when the exclusion did not fire.
    if (!cone.excluded) {
        if (!image_degree.fits_sint_p())
            throw DomainError(p.profile.type.name() + ": image candidate too large to materialize");
        const int d = static_cast<int>(image_degree.get_si());
        std::vector<int> shape(static_cast<size_t>(dim) - 1, 0);
        shape.push_back(d);
        const EmbeddedVMD cand{ConeOverScroll{shape, dim - 2}, dim, dim + d - 1, image_degree};
        if (auto img = survives(cand, sections, top, dim, cone))
            out.push_back(std::move(*img));
    }
    return out;
}

namespace {

// Even q with RR(q) = target, found by scanning upward; the increasing
// certificate makes the first overshoot a proof of completeness.
std::vector<Integer> solve_rr_equals(const HKProfile& p, const Integer& target) {
    const MonotoneCheck mono = is_increasing_on_nonneg_integers(p.rr);
    if (!mono.increasing)
        throw std::logic_error(p.type.name() + ": RR is not increasing, monotone scan would not terminate");
    std::vector<Integer> qs;
    for (Integer q = p.alpha_min;; q += 2) {
        const Rational val = p.rr.eval(Rational(q));
        if (val > Rational(target))
            break;
        if (val == Rational(target))
            qs.push_back(q);
    }
    return qs;
}

}  // namespace

std::vector<ExceptionalCase> enumerate_exceptional(HKType tag, int n_max) {
    if (tag == HKType::M10)
        throw DomainError("m10: Riemann-Roch coefficients unknown");
    if (n_max < 2)
        throw DomainError("enumerate_exceptional: n_max must be >= 2");
    std::vector<int> ns;
    if (tag == HKType::OG6) {
        if (n_max >= 3)
            ns.push_back(3);
    } else {
        for (int n = 2; n <= n_max; ++n)
            ns.push_back(n);
    }

    std::vector<ExceptionalCase> out;
    for (int n : ns) {
        const HKProfile profile = build_profile(DeformationType(tag, n));
        std::vector<Integer> qs;
        for (const Integer& target : {Integer(2 * n + 2), Integer(2 * n + 4)})
            for (const Integer& q : solve_rr_equals(profile, target))
                qs.push_back(q);
        std::sort(qs.begin(), qs.end());
        for (const Integer& q : qs)
            for (const AdmissibleImage& img : eliminate_images(PolarizedHK(profile, q)))
                out.push_back(ExceptionalCase{n, q, img});
    }
    return out;
}

HKAnalysis theorem_b_verdict(const PolarizedHK& p) {
    HKAnalysis a;
    a.h0 = h0(p.profile, p.q);
    a.top = top_intersection(p.profile, p.q);
    a.degree_bound = degree_upper_bound(p);
    a.admissible_images = eliminate_images(p);
    a.assumptions = standard_assumptions();
    if (a.admissible_images.empty()) {
        a.pn_guaranteed_from = p.dim() - 1;
    } else {
        a.pn_guaranteed_from = p.dim();
        a.pn_conditional = ConditionalCase{p.dim() - 1, a.admissible_images};
    }
    return a;
}

SecantBound secant_length_bound() {
    SecantBound s;
    s.deg_bound = factorial(4) - 1;  // the incidence variety is fourfold: 2n = 4
    Integer k = 2;
    while (binomial(k + 1, 2) <= s.deg_bound)
        k += 1;
    s.max_length = k;
    s.witness_next = binomial(k + 1, 2);
    return s;
}

HilbertSquareExampleCheck hilbert_square_example_check() {
    HilbertSquareExampleCheck c;
    const HKProfile profile = build_profile(DeformationType::k3n(2));

    // c * q^2 = 6 * deg(quadric in P^5); scan even q until c*q^2 passes it.
    const Integer target = 6 * minimal_degree(4, 5);
    std::vector<Integer> sols;
    for (Integer q = 2;; q += 2) {
        const Integer val = (profile.fujiki * Rational(q * q)).to_integer();
        if (val > target)
            break;
        if (val == target)
            sols.push_back(q);
    }
    c.q_unique = sols.size() == 1;
    c.forced_q = c.q_unique ? sols.front() : Integer(0);
    c.h0_value = c.q_unique ? h0(profile, c.forced_q) : Integer(0);
    c.h0_matches_plucker = c.h0_value == 6;
    c.pair_count = binomial(4, 2);
    return c;
}

}  // namespace pn
