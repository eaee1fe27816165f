#ifndef PN_CY4_HPP
#define PN_CY4_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pn/rational.hpp"

namespace pn {

// Intersection numbers of an ample class A on a K-trivial fourfold: A^4
// and A^2.c2. The second Chern pairing is nonnegative for these varieties,
// enforced here; chi integrality is recorded, not enforced.
struct Cy4Numerics {
    Integer a4;      // A^4 >= 1
    Rational a2c2;   // A^2.c2 >= 0

    Cy4Numerics(Integer a4_in, Rational a2c2_in);

    bool chi_integral() const;  // chi(A) = A^4/24 + A^2.c2/24 + 2 lands in Z
};

// chi(nA) = n^4 A^4/24 + n^2 A^2.c2/24 + 2.
Rational chi_multiple(long n, const Cy4Numerics& v);

struct H0Difference {
    Rational value;        // chi(nA) - chi((n-1)A)
    bool at_least_5 = false;
};

H0Difference h0_difference(long n, const Cy4Numerics& v);

// floor(24(r-1)/(r-3)) for h0(B) = r+1 >= 5: the degree cap for a finite
// map onto a minimal-degree fourfold image.
Integer minimal_image_degree_cap(int r);

// All r >= 6 admitting a triple cone over a rational normal curve as
// image: (r-3)^3 <= 24(r-1). The gap grows monotonically, so the scan
// stops at the first failure.
std::vector<int> singular_cone_r_range();

// (H-R)^4 = sum(a) - 4 on a fourfold scroll S(a0..a3); positive exactly
// when sum(a) >= 5, i.e. r >= 8, making H-R big (it is always nef).
struct ScrollPositivity {
    Integer value;
    bool big_and_nef = false;
};

ScrollPositivity scroll_positivity(const std::array<int, 4>& a);

enum class DegreeParity { Any, Even, Odd };

struct Cy4Case {
    std::string label;   // a1..a4, b1, b2
    std::string image;
    Integer degree_lo;
    Integer degree_hi;
    DegreeParity parity = DegreeParity::Any;
    std::vector<std::string> conditions;
};

struct Cy4CaseReport {
    int r = 0;
    Integer global_degree_bound;
    std::vector<Cy4Case> cases;
};

// The case list for a fourfold with trivial canonical class mapping onto a
// minimal-degree variety in P^r by a complete linear series. h0_fibre
// (sections of B on a general fibre) is required for r in {6,7};
// regular_fibre sharpens those bounds and splits them by parity.
Cy4CaseReport classify_minimal_degree_image(int r, std::optional<Integer> h0_fibre,
                                            bool regular_fibre);

struct TraceStep {
    std::string id;
    std::string statement;
    std::string check;  // the exact comparison backing the step
    bool pass = false;
};

struct EffectiveNormalityTrace {
    bool regular = false;
    std::vector<TraceStep> steps;
    int normal_from = 0;  // nA is projectively normal for n >= this
    std::vector<std::string> notes;

    bool all_pass() const;
};

// Replays the arithmetic behind the effective projective-normality bound:
// with B = 5A, the image of |B| cannot have minimal degree (its forced
// covering degree 125 beats the cap 26), so 3B = 15A is projectively
// normal when the fourfold is regular; without regularity the multiple
// schedule gives n >= 16.
EffectiveNormalityTrace effective_normality_trace(bool regular);

const char* to_string(DegreeParity p);

}  // namespace pn

#endif
