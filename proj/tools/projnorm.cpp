// projnorm: exact-arithmetic analysis of projective-normality bounds for
// K-trivial fourfolds and polarized hyperkahler varieties.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pn/cy4.hpp"
#include "pn/hk.hpp"
#include "pn/registry.hpp"
#include "pn/report.hpp"
#include "pn/verify.hpp"

namespace {

using pn::Integer;
using pn::Json;

int g_exit = 0;

void write_report(const std::string& path, const Json& report) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open " + path + " for writing");
    os << pn::canonical_text(report);
}

pn::DeformationType resolve_type(const std::string& type_name, std::optional<int> n) {
    const auto tag = pn::parse_hk_type(type_name);
    if (!tag)
        throw pn::DomainError("unknown type '" + type_name + "' (expected k3n, kummer, og6 or m10)");
    switch (*tag) {
        case pn::HKType::OG6:
            if (n && *n != 3)
                throw pn::DomainError("og6 has dimension 6, so n = 3");
            return pn::DeformationType(*tag, 3);
        case pn::HKType::M10:
            if (n && *n != 5)
                throw pn::DomainError("m10 has dimension 10, so n = 5");
            return pn::DeformationType(*tag, 5);
        default:
            if (!n)
                throw pn::DomainError("--n is required for type '" + type_name + "'");
            return pn::DeformationType(*tag, *n);
    }
}

void print_hypotheses(const pn::HKProfile& p) {
    const auto h = pn::hypothesis_check(p);
    std::cout << "hypotheses:  increasing: " << (h.increasing.increasing ? "yes" : "no") << " ("
              << pn::to_string(h.increasing.certificate) << ")"
              << "; R(" << p.alpha_min << ") = " << h.r_at_alpha << " > " << p.dim << ": "
              << (h.r_at_alpha_gt_2n ? "yes" : "no") << "; RR(" << p.alpha_min << ") = "
              << h.rr_at_alpha << " >= " << 2 * p.dim << ": " << (h.rr_at_alpha_ge_4n ? "yes" : "no")
              << "\n";
}

void cmd_registry_show(const std::string& type_name, std::optional<int> n,
                       const std::string& out_path) {
    const auto profile = pn::build_profile(resolve_type(type_name, n));
    std::cout << "type:        " << profile.type.name() << "  (dimension " << profile.dim << ")\n"
              << "fujiki:      " << profile.fujiki << "\n"
              << "rr:          " << profile.rr << "\n"
              << "r:           " << profile.r_poly << "\n"
              << "alpha min:   " << profile.alpha_min << "\n"
              << "canonical:   " << pn::serialize_profile(profile) << "\n";
    print_hypotheses(profile);
    if (!out_path.empty()) {
        Json results{{"profile", pn::to_json(profile)},
                     {"hypotheses", pn::to_json(pn::hypothesis_check(profile))},
                     {"canonical", pn::serialize_profile(profile)}};
        write_report(out_path, pn::make_report(
                                   "registry show",
                                   Json{{"type", type_name}, {"n", profile.n()}}, results));
    }
}

void cmd_hk_analyze(const std::string& type_name, std::optional<int> n, long q,
                    const std::string& out_path) {
    const auto profile = pn::build_profile(resolve_type(type_name, n));
    const pn::PolarizedHK pol(profile, Integer(q));
    const pn::HKAnalysis a = pn::theorem_b_verdict(pol);

    std::cout << "polarized " << profile.type.name() << ", q = " << q << "\n"
              << "  h0 = " << a.h0 << ", top intersection B^" << profile.dim << " = " << a.top << "\n"
              << "  degree bound for |B| (generically finite): " << a.degree_bound << "\n";
    if (a.admissible_images.empty()) {
        std::cout << "  admissible minimal-degree images: none\n";
    } else {
        std::cout << "  admissible minimal-degree images:\n";
        for (const auto& img : a.admissible_images) {
            std::cout << "    " << pn::token(img.image) << "  (image degree " << img.image.degree
                      << ", covering degree " << img.implied_degree;
            if (const auto* quad = std::get_if<pn::Quadric>(&img.image.cls); quad && !quad->note.empty())
                std::cout << ", " << quad->note;
            std::cout << ")\n";
        }
    }
    std::cout << "  projectively normal: every multiple l >= " << a.pn_guaranteed_from << "\n";
    if (a.pn_conditional)
        std::cout << "  conditional: l = " << a.pn_conditional->multiple
                  << " unless the image of |B| really is one of the listed varieties\n";
    std::cout << "  assumptions:\n";
    for (const auto& s : a.assumptions)
        std::cout << "   - " << s << "\n";

    if (!out_path.empty())
        write_report(out_path,
                     pn::make_report("hk analyze",
                                     Json{{"type", type_name}, {"n", profile.n()}, {"q", pn::to_json(Integer(q))}},
                                     pn::to_json(a), a.assumptions));
}

void cmd_hk_enumerate(const std::string& type_name, int max_n, const std::string& out_path) {
    const auto tag = pn::parse_hk_type(type_name);
    if (!tag)
        throw pn::DomainError("unknown type '" + type_name + "'");
    const auto cases = pn::enumerate_exceptional(*tag, max_n);

    std::cout << "exceptional polarizations for " << type_name << ", n <= " << max_n << ":\n";
    if (cases.empty()) {
        std::cout << "  (none)\n";
    } else {
        for (const auto& c : cases)
            std::cout << "  n=" << c.n << " q=" << c.q << " " << pn::token(c.image.image)
                      << " degree " << c.image.implied_degree << "\n";
    }
    if (!out_path.empty()) {
        Json arr = Json::array();
        for (const auto& c : cases)
            arr.push_back(pn::to_json(c));
        write_report(out_path, pn::make_report("hk enumerate",
                                               Json{{"type", type_name}, {"maxN", max_n}},
                                               Json{{"exceptional", arr}}));
    }
}

void cmd_cy4_classify(int r, std::optional<long> h0g, bool regular, const std::string& out_path) {
    std::optional<Integer> fibre;
    if (h0g)
        fibre = Integer(*h0g);
    const auto rep = pn::classify_minimal_degree_image(r, fibre, regular);

    std::cout << "minimal-degree image cases for h0(B) = " << r + 1 << " (r = " << r
              << "); global degree cap " << rep.global_degree_bound << "\n";
    for (const auto& c : rep.cases) {
        std::cout << "  " << c.label << ": " << c.image << "; d in [" << c.degree_lo << ", "
                  << c.degree_hi << "]";
        if (c.parity != pn::DegreeParity::Any)
            std::cout << " (" << pn::to_string(c.parity) << " d)";
        std::cout << "\n";
        for (const auto& cond : c.conditions)
            std::cout << "      - " << cond << "\n";
    }
    if (!out_path.empty()) {
        Json params{{"r", r}, {"regular", regular}};
        params["h0g"] = h0g ? Json(*h0g) : Json(nullptr);
        write_report(out_path, pn::make_report("cy4 classify", params, pn::to_json(rep)));
    }
}

void cmd_cy4_theorem_a(bool regular, const std::string& out_path) {
    const auto trace = pn::effective_normality_trace(regular);
    std::cout << "effective projective normality, " << (regular ? "regular" : "general")
              << " K-trivial fourfold:\n";
    for (const auto& s : trace.steps) {
        std::cout << "  [" << (s.pass ? "ok" : "FAIL") << "] " << s.id << ": " << s.statement << "\n"
                  << "        " << s.check << "\n";
    }
    for (const auto& note : trace.notes)
        std::cout << "  note: " << note << "\n";
    if (!trace.all_pass()) {
        std::cout << "trace INCOMPLETE\n";
        g_exit = 1;
    } else {
        std::cout << trace.normal_from << "A projectively normal";
        if (!regular)
            std::cout << " (and every higher multiple)";
        std::cout << "\n";
    }
    if (!out_path.empty())
        write_report(out_path, pn::make_report("cy4 theorem-a", Json{{"regular", regular}},
                                               pn::to_json(trace), {}, trace.notes));
}

void cmd_secant(const std::string& out_path) {
    const auto s = pn::secant_length_bound();
    std::cout << "K3 surface, very ample embedding; lines meeting it in length >= 2:\n"
              << "  incidence-map degree bound: " << s.deg_bound << "\n"
              << "  general secant length:      <= " << s.max_length << "\n"
              << "  maximality witness:         C(" << s.max_length + 1 << ",2) = " << s.witness_next
              << " > " << s.deg_bound << "\n";
    if (!out_path.empty())
        write_report(out_path, pn::make_report("secant", Json::object(), pn::to_json(s)));
}

void cmd_verify(const std::string& out_path) {
    const auto items = pn::verify_claims();
    size_t pass = 0, fail = 0, flag = 0;
    for (const auto& it : items) {
        switch (it.status) {
            case pn::ClaimStatus::Pass: ++pass; break;
            case pn::ClaimStatus::Fail: ++fail; break;
            case pn::ClaimStatus::Flagged: ++flag; break;
        }
        std::cout << (it.status == pn::ClaimStatus::Fail ? "FAIL " : it.status == pn::ClaimStatus::Flagged ? "flag " : "pass ")
                  << it.id << ": expected " << it.expected << ", computed " << it.computed << "  ["
                  << it.location << "]\n";
    }
    std::cout << items.size() << " claims: " << pass << " pass, " << fail << " fail, " << flag
              << " flagged\n";
    if (fail > 0)
        g_exit = 1;

    if (!out_path.empty()) {
        Json arr = Json::array();
        for (const auto& it : items)
            arr.push_back(Json{{"claimId", it.id},
                               {"location", it.location},
                               {"expected", it.expected},
                               {"computed", it.computed},
                               {"status", pn::to_string(it.status)}});
        write_report(out_path, pn::make_report("verify-paper", Json::object(),
                                               Json{{"items", arr},
                                                    {"pass", pass},
                                                    {"fail", fail},
                                                    {"flagged", flag}}));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of projective-normality numerics for K-trivial fourfolds "
                 "and hyperkahler varieties"};
    app.require_subcommand(1);

    std::string type_name, out_path;
    std::optional<int> n_opt;
    long q = 0;
    int max_n = 10;
    int r = 0;
    std::optional<long> h0g;
    bool regular = false;

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write the machine-readable report to this file");
    };

    auto* registry = app.add_subcommand("registry", "deformation-type data");
    auto* show = registry->add_subcommand("show", "print one type's profile");
    show->add_option("--type", type_name, "k3n | kummer | og6 | m10")->required();
    show->add_option("--n", n_opt, "half the complex dimension");
    add_out(show);
    show->callback([&] { cmd_registry_show(type_name, n_opt, out_path); });

    auto* hk = app.add_subcommand("hk", "polarized hyperkahler analysis");
    auto* analyze = hk->add_subcommand("analyze", "verdict for one polarization");
    analyze->add_option("--type", type_name, "k3n | kummer | og6")->required();
    analyze->add_option("--n", n_opt, "half the complex dimension");
    analyze->add_option("--q", q, "Beauville square of the polarization (positive even)")->required();
    add_out(analyze);
    analyze->callback([&] { cmd_hk_analyze(type_name, n_opt, q, out_path); });

    auto* enumerate = hk->add_subcommand("enumerate", "all exceptional polarizations up to n");
    enumerate->add_option("--type", type_name, "k3n | kummer | og6")->required();
    enumerate->add_option("--max-n", max_n, "largest n to scan (>= 2)")->required();
    add_out(enumerate);
    enumerate->callback([&] { cmd_hk_enumerate(type_name, max_n, out_path); });

    auto* cy4 = app.add_subcommand("cy4", "K-trivial fourfold analysis");
    auto* classify = cy4->add_subcommand("classify", "minimal-degree image cases for h0(B) = r+1");
    classify->add_option("--r", r, "ambient dimension (h0(B) - 1, at least 4)")->required();
    classify->add_option("--h0g", h0g, "sections of B on the general fibre (required for r in {6,7})");
    classify->add_flag("--regular", regular, "the general fibre is regular");
    add_out(classify);
    classify->callback([&] { cmd_cy4_classify(r, h0g, regular, out_path); });

    auto* thma = cy4->add_subcommand("theorem-a", "replay the effective-normality chain");
    thma->add_flag("--regular", regular, "assume H^1(O) = 0");
    add_out(thma);
    thma->callback([&] { cmd_cy4_theorem_a(regular, out_path); });

    auto* secant = app.add_subcommand("secant", "secant-length constants for embedded K3 surfaces");
    add_out(secant);
    secant->callback([&] { cmd_secant(out_path); });

    auto* verify = app.add_subcommand("verify-paper", "recompute the full numeric claim suite");
    add_out(verify);
    verify->callback([&] { cmd_verify(out_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const pn::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
