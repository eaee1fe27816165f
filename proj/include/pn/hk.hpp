#ifndef PN_HK_HPP
#define PN_HK_HPP

#include <optional>
#include <string>
#include <vector>

#include "pn/registry.hpp"
#include "pn/vmd.hpp"

namespace pn {

// A deformation type polarized by an ample, globally generated class with
// Beauville square q. Construction recomputes h0 = RR(q) and insists on
// h0 >= 2n+2, which Riemann-Roch gives for every admissible q here.
struct PolarizedHK {
    HKProfile profile;
    Integer q;

    PolarizedHK(HKProfile p, Integer q_in);

    int n() const { return profile.n(); }
    int dim() const { return profile.dim; }
};

// A minimal-degree image candidate that survived elimination, with the
// covering degree it would force (top intersection / image degree).
struct AdmissibleImage {
    EmbeddedVMD image;
    Integer implied_degree;
};

enum class ConeExclusionRoute { NotExcluded, SectionsAtLeast4n, TopIntersectionTooSmall };

struct ConeExclusion {
    bool excluded = false;
    ConeExclusionRoute route = ConeExclusionRoute::NotExcluded;
    std::string reason;
};

struct ConditionalCase {
    int multiple = 0;  // the tensor power whose normality is conditional
    std::vector<AdmissibleImage> images;
};

// Full verdict for one polarized type.
struct HKAnalysis {
    Integer h0;
    Integer top;           // B^{2n}
    Integer degree_bound;  // for the map given by |B|, when generically finite
    std::vector<AdmissibleImage> admissible_images;
    int pn_guaranteed_from = 0;  // every multiple >= this is projectively normal
    std::optional<ConditionalCase> pn_conditional;
    std::vector<std::string> assumptions;
};

struct ExceptionalCase {
    int n = 0;
    Integer q;
    AdmissibleImage image;
};

// min( floor(B^{2n} / (h0 - 2n)), (2n)! - 1 ): the sharp degree-vs-codim
// inequality capped by the factorial bound. Requires the profile's
// monotonicity and R(alpha) > 2n hypotheses.
Integer degree_upper_bound(const PolarizedHK& p);

// Can the image be a cone over a rational normal curve? Excluded when
// h0 >= 4n (then (h0-2n)^{2n-1} >= (2n)^{2n-1} >= (2n)! beats the degree
// bound) or when B^{2n} < alpha^n (h0-2n)^{2n}.
ConeExclusion cone_over_curve_excluded(const PolarizedHK& p);

// Minimal-degree image candidates that survive every elimination step:
// smooth scrolls never occur (the base of any fibration has dimension n,
// never 1), scroll cones need vertex codimension 2 and fall to the cone
// exclusion, quadrics need h0 = 2n+2, Veronese cones need h0 = 2n+4, and
// the forced covering degree must be an integer > 1.
std::vector<AdmissibleImage> eliminate_images(const PolarizedHK& p);

// All (n, q, image) with n <= n_max for which a minimal-degree image
// survives. The Diophantine solves RR(q) = 2n+2 and RR(q) = 2n+4 scan even
// q upward and stop once RR passes the target (RR is increasing).
std::vector<ExceptionalCase> enumerate_exceptional(HKType tag, int n_max);

// The headline verdict: multiples >= 2n are always projectively normal;
// 2n-1 joins them when no image survives, otherwise it is conditional on
// the image really being one of the survivors.
HKAnalysis theorem_b_verdict(const PolarizedHK& p);

// Secant-line constants for the Hilbert square of a K3 surface (dimension
// four): the incidence map has degree <= 23 = 4!-1, so a general secant
// line meets the surface in at most 7 points (binomial(8,2) = 28 > 23).
struct SecantBound {
    Integer deg_bound;
    Integer max_length;
    Integer witness_next;  // binomial(max_length+1, 2), the first value past the bound
};

SecantBound secant_length_bound();

// Consistency check for the classical degree-6 example: the Hilbert square
// of a quartic K3 mapping to Gr(2,4) in Plucker space P^5. The claimed
// degree forces q = 2 as the only positive even solution of c*q^2 = 6*2,
// and h0 must be 6.
struct HilbertSquareExampleCheck {
    Integer forced_q;
    bool q_unique = false;
    Integer h0_value;
    bool h0_matches_plucker = false;  // h0 = 6 = dim of Plucker space + 1
    Integer pair_count;               // binomial(4,2)
    bool consistent() const { return q_unique && h0_matches_plucker && pair_count == 6; }
};

HilbertSquareExampleCheck hilbert_square_example_check();

const char* to_string(ConeExclusionRoute r);

}  // namespace pn

#endif
