#ifndef PN_REGISTRY_HPP
#define PN_REGISTRY_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "pn/rational.hpp"
#include "pn/unipoly.hpp"

namespace pn {

// Known hyperkahler deformation types. M10 is representable so the CLI can
// name it, but every numeric operation rejects it: its Riemann-Roch
// coefficients are unknown.
enum class HKType { K3n, Kummer, OG6, M10 };

const char* to_string(HKType t);
std::optional<HKType> parse_hk_type(const std::string& s);

// Type tag plus n (half the complex dimension). OG6 forces n = 3, M10
// forces n = 5; the Beauville families need n >= 2 here (dimension >= 4).
class DeformationType {
  public:
    DeformationType(HKType tag, int n);
    static DeformationType k3n(int n) { return {HKType::K3n, n}; }
    static DeformationType kummer(int n) { return {HKType::Kummer, n}; }
    static DeformationType og6() { return {HKType::OG6, 3}; }

    HKType tag() const { return tag_; }
    int n() const { return n_; }
    int dim() const { return 2 * n_; }

    std::string name() const;  // e.g. "k3n[2]", "og6"

    friend bool operator==(const DeformationType&, const DeformationType&) = default;

  private:
    HKType tag_;
    int n_;
};

// Everything the analyzers need about one deformation type: the Fujiki
// constant c, the Riemann-Roch polynomial RR in x = q(B), its truncation R
// (RR minus the top term c/(2n)! x^n), and the lower bound for the minimum
// Beauville square of an ample class.
struct HKProfile {
    DeformationType type;
    int dim = 0;          // 2n
    Rational fujiki;
    UniPoly rr;
    UniPoly r_poly;
    Integer alpha_min = 2;

    int n() const { return type.n(); }
};

struct HypothesisCheck {
    MonotoneCheck increasing;     // R restricted to the nonnegative integers
    Rational r_at_alpha;          // R(alpha_min)
    Rational rr_at_alpha;         // RR(alpha_min)
    bool r_at_alpha_gt_2n = false;
    bool rr_at_alpha_ge_4n = false;

    // The degree bound needs exactly these two.
    bool degree_bound_hypotheses() const { return increasing.increasing && r_at_alpha_gt_2n; }
};

Rational fujiki_constant(const DeformationType& t);

// Degree-n polynomial in the Beauville square; chi(B) = RR(q(B)).
UniPoly rr_polynomial(const DeformationType& t);

// Builds the profile and cross-checks it: the top coefficient of RR must be
// fujiki/(2n)! and RR(0) must be n+1 (= chi of the trivial bundle). A
// failed identity throws, naming it.
HKProfile build_profile(const DeformationType& t);

// chi(B) = RR(q) for even q >= alpha_min, returned as the section count:
// ample and globally generated B is assumed to have no higher cohomology.
Integer h0(const HKProfile& p, const Integer& q);

// B^{2n} = fujiki * q^n.
Integer top_intersection(const HKProfile& p, const Integer& q);

HypothesisCheck hypothesis_check(const HKProfile& p);

// Canonical one-line text form: tag, n, fujiki, RR coefficients low to high.
std::string serialize_profile(const HKProfile& p);

}  // namespace pn

#endif
