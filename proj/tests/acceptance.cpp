// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Criterion 11 runs the CLI twice; pass its path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pn/cy4.hpp"
#include "pn/hk.hpp"
#include "pn/registry.hpp"
#include "pn/report.hpp"
#include "pn/verify.hpp"

using namespace pn;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << label << "\n";
    if (!ok)
        ++failures;
}

long shape_count_oracle(int sum, int parts, int min_part) {
    if (parts == 0)
        return sum == 0 ? 1 : 0;
    long total = 0;
    for (int v = min_part; v * parts <= sum; ++v)
        total += shape_count_oracle(sum - v, parts - 1, v);
    return total;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    // 1. Fujiki constants
    {
        const bool ok = fujiki_constant(DeformationType::k3n(2)) == Rational(3) &&
                        fujiki_constant(DeformationType::k3n(3)) == Rational(15) &&
                        fujiki_constant(DeformationType::kummer(2)) == Rational(9) &&
                        fujiki_constant(DeformationType::og6()) == Rational(60);
        criterion(1, "fujiki constants: k3n[2] = 3, k3n[3] = 15, kummer[2] = 9, og6 = 60", ok);
    }

    // 2. Riemann-Roch section counts and their ambient spaces
    {
        const Integer a = h0(build_profile(DeformationType::k3n(2)), 2);
        const Integer b = h0(build_profile(DeformationType::k3n(3)), 2);
        criterion(2, "section counts at q = 2: 6 (target P^5) and 10 (target P^9)",
                  a == 6 && b == 10);
    }

    // 3. Exceptional enumeration
    {
        const auto k3n = enumerate_exceptional(HKType::K3n, 10);
        const bool k3n_ok = k3n.size() == 2 && k3n[0].n == 2 && k3n[0].q == 2 &&
                            token(k3n[0].image.image) == "quadric@P5" &&
                            k3n[0].image.implied_degree == 6 && k3n[1].n == 3 && k3n[1].q == 2 &&
                            token(k3n[1].image.image) == "cone-veronese(v=3)@P9" &&
                            k3n[1].image.implied_degree == 30;
        const bool others_ok = enumerate_exceptional(HKType::Kummer, 10).empty() &&
                               enumerate_exceptional(HKType::OG6, 3).empty();
        bool cli_ok = true;
        if (!cli.empty()) {
            const std::string f = "acceptance_enumerate.json";
            cli_ok = std::system((cli + " hk enumerate --type k3n --max-n 10 --out " + f +
                                  " > /dev/null 2>&1").c_str()) == 0;
            if (cli_ok) {
                const std::string payload = slurp(f);
                cli_ok = payload.find("\"n\": 2") != std::string::npos &&
                         payload.find("\"n\": 3") != std::string::npos &&
                         payload.find("quadric@P5") != std::string::npos &&
                         payload.find("cone-veronese(v=3)@P9") != std::string::npos;
            }
            std::remove(f.c_str());
        }
        criterion(3, "exceptional cases: exactly (2,2,quadric,6) and (3,2,cone-veronese,30); kummer and og6 empty",
                  k3n_ok && others_ok && cli_ok);
    }

    // 4. Degree bounds and hypothesis checks
    {
        const auto b2 = degree_upper_bound(PolarizedHK(build_profile(DeformationType::k3n(2)), 2));
        const auto b3 = degree_upper_bound(PolarizedHK(build_profile(DeformationType::k3n(3)), 2));
        bool hyp = true;
        for (int n = 2; n <= 50 && hyp; ++n) {
            for (const auto t : {DeformationType::k3n(n), DeformationType::kummer(n)}) {
                const auto h = hypothesis_check(build_profile(t));
                hyp = hyp && h.increasing.increasing && h.r_at_alpha_gt_2n;
            }
        }
        {
            const auto h = hypothesis_check(build_profile(DeformationType::og6()));
            hyp = hyp && h.increasing.increasing && h.r_at_alpha_gt_2n;
        }
        criterion(4, "degree bounds 6 and 30, both below (2n)!; hypotheses hold for n in [2,50]",
                  b2 == 6 && b3 == 30 && b2 < factorial(4) && b3 < factorial(6) && hyp);
    }

    // 5. The R(2) > 2n inequality and the recorded display discrepancy
    {
        bool exact_ok = true;
        for (int n = 2; n <= 50 && exact_ok; ++n) {
            const auto hilb = build_profile(DeformationType::k3n(n));
            const auto kum = build_profile(DeformationType::kummer(n));
            const Rational hv = hilb.r_poly.eval(Rational(2));
            const Rational kv = kum.r_poly.eval(Rational(2));
            const Rational kummer_closed = Rational(Integer(n + 1) * Integer(n + 1)) -
                                           Rational(n + 1, factorial(static_cast<unsigned long>(n)));
            exact_ok = hv > Rational(2 * n) && kv > Rational(2 * n) && kv == kummer_closed;
        }
        bool flag_ok = false;
        for (const auto& it : verify_claims())
            if (it.id == "rmk36-kummer-display")
                flag_ok = it.status == ClaimStatus::Flagged && it.expected == "17/2" &&
                          it.computed == "15/2";
        criterion(5, "R(2) > 2n exactly for n in [2,50]; kummer value (n+1)^2-(n+1)/n!, display gap flagged",
                  exact_ok && flag_ok);
    }

    // 6. Secant-length constants
    {
        const auto s = secant_length_bound();
        criterion(6, "secant bound 23, maximal length 7, witness C(8,2) = 28 > 23",
                  s.deg_bound == 23 && s.max_length == 7 && binomial(8, 2) == 28 &&
                      binomial(8, 2) > s.deg_bound);
    }

    // 7. Fourfold classification arithmetic
    {
        bool threshold_ok = true;
        for (int a0 = 0; a0 <= 30 && threshold_ok; ++a0)
            for (int a1 = a0; a0 + a1 <= 30 && threshold_ok; ++a1)
                for (int a2 = a1; a0 + a1 + a2 <= 30 && threshold_ok; ++a2)
                    for (int a3 = std::max(a2, 1); a0 + a1 + a2 + a3 <= 30; ++a3) {
                        const int sum = a0 + a1 + a2 + a3;
                        const auto sp = scroll_positivity({a0, a1, a2, a3});
                        if (sp.big_and_nef != (sum >= 5) || sp.big_and_nef != (sum + 3 >= 8)) {
                            threshold_ok = false;
                            break;
                        }
                    }
        bool r9_ok = false;
        for (const auto& c : classify_minimal_degree_image(9, std::nullopt, false).cases)
            if (c.degree_lo == 2 && c.degree_hi == 18)
                r9_ok = true;
        criterion(7, "cap(27) = 26; singular cones at r in {6,7,8}; positivity iff r >= 8; r = 9 gives [2,18]",
                  minimal_image_degree_cap(27) == 26 &&
                      singular_cone_r_range() == std::vector<int>{6, 7, 8} && threshold_ok && r9_ok);
    }

    // 8. The effective-normality chain
    {
        const auto reg = effective_normality_trace(true);
        const auto gen = effective_normality_trace(false);
        bool steps_ok = reg.all_pass() && reg.normal_from == 15 && gen.all_pass() &&
                        gen.normal_from == 16;
        steps_ok = steps_ok && chi_multiple(5, Cy4Numerics(1, Rational(0))) == Rational(673, 24) &&
                   Rational(673, 24) >= Rational(28) && minimal_image_degree_cap(27) == 26 &&
                   Integer(125) > Integer(26);
        criterion(8, "trace: 673/24 >= 28, cap 26, forced degree 125, contradiction; 15A regular / 16A general",
                  steps_ok);
    }

    // 9. Section-jump inequalities
    {
        const Cy4Numerics corner(1, Rational(0));
        bool ok = h0_difference(5, corner).value == Rational(123, 8);
        for (long n = 5; n <= 50 && ok; ++n)
            ok = h0_difference(n, corner).at_least_5;
        for (long n = 2; n <= 50 && ok; ++n)
            ok = chi_multiple(n, corner) - chi_multiple(n - 1, corner) == h0_difference(n, corner).value;
        criterion(9, "jump >= 5 for n in [5,50] with 123/8 at n = 5; differences telescope", ok);
    }

    // 10. Oracle equivalence
    {
        bool rr_ok = true;
        for (int n = 2; n <= 20 && rr_ok; ++n) {
            const auto hilb = build_profile(DeformationType::k3n(n));
            const auto kum = build_profile(DeformationType::kummer(n));
            for (long q = 2; q <= 100 && rr_ok; q += 2) {
                rr_ok = h0(hilb, q) == binomial(Integer(q / 2 + n + 1), static_cast<unsigned long>(n)) &&
                        h0(kum, q) == Integer(n + 1) *
                                          binomial(Integer(q / 2 + n), static_cast<unsigned long>(n));
            }
        }
        bool classify_ok = true;
        for (int dim = 1; dim <= 8 && classify_ok; ++dim)
            for (int r = dim; r <= 14 && classify_ok; ++r) {
                long expect = shape_count_oracle(r - dim + 1, dim, 0);
                if (r == dim)
                    expect = 1;
                else {
                    if (r - dim == 1)
                        expect += 1;  // quadric
                    if (dim == 2 && r == 5)
                        expect += 1;  // Veronese surface
                    if (r - dim == 3 && dim >= 3)
                        expect += 1;  // Veronese cone
                }
                classify_ok = static_cast<long>(classify(dim, r).size()) == expect;
            }
        bool enum_ok = true;
        for (const auto tag : {HKType::K3n, HKType::Kummer, HKType::OG6}) {
            const auto fast = enumerate_exceptional(tag, 10);
            std::vector<ExceptionalCase> slow;
            std::vector<int> ns = tag == HKType::OG6 ? std::vector<int>{3}
                                                     : std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9, 10};
            for (int n : ns) {
                const auto p = build_profile(DeformationType(tag, n));
                for (long q = 2; q <= 40; q += 2) {
                    const Rational val = p.rr.eval(Rational(q));
                    if (val == Rational(2 * n + 2) || val == Rational(2 * n + 4))
                        for (const auto& img : eliminate_images(PolarizedHK(p, q)))
                            slow.push_back(ExceptionalCase{n, Integer(q), img});
                }
            }
            enum_ok = enum_ok && fast.size() == slow.size();
            for (size_t i = 0; enum_ok && i < fast.size(); ++i)
                enum_ok = fast[i].n == slow[i].n && fast[i].q == slow[i].q &&
                          token(fast[i].image.image) == token(slow[i].image.image);
        }
        criterion(10, "oracles: direct binomials for q <= 100, partition counts to r = 14, blind scan to q = 40",
                  rr_ok && classify_ok && enum_ok);
    }

    // 11. Determinism of the verification payload
    {
        bool ok = false;
        if (!cli.empty()) {
            const std::string f1 = "acceptance_verify_run1.json";
            const std::string f2 = "acceptance_verify_run2.json";
            const std::string quiet = " > /dev/null 2>&1";
            const int rc1 = std::system((cli + " verify-paper --out " + f1 + quiet).c_str());
            const int rc2 = std::system((cli + " verify-paper --out " + f2 + quiet).c_str());
            const std::string p1 = slurp(f1), p2 = slurp(f2);
            ok = rc1 == 0 && rc2 == 0 && !p1.empty() && p1 == p2;
            std::remove(f1.c_str());
            std::remove(f2.c_str());
        } else {
            // library-level fallback when no CLI path is supplied
            const auto payload = [] {
                Json arr = Json::array();
                for (const auto& it : verify_claims())
                    arr.push_back(Json{{"claimId", it.id},
                                       {"expected", it.expected},
                                       {"computed", it.computed},
                                       {"status", to_string(it.status)}});
                return canonical_text(make_report("verify-paper", Json::object(),
                                                  Json{{"items", arr}}));
            };
            ok = payload() == payload();
        }
        criterion(11, "verify-paper twice: byte-identical canonical payloads", ok);
    }

    if (failures == 0) {
        std::cout << "all 11 criteria pass\n";
        return 0;
    }
    std::cout << failures << " criteria FAILED\n";
    return 1;
}
