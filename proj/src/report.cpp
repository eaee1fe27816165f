#include "pn/report.hpp"

namespace pn {

Json to_json(const Rational& r) { return r.str(); }
Json to_json(const Integer& z) { return z.get_str(); }

Json to_json(const AdmissibleImage& img) {
    Json j{{"image", token(img.image)},
           {"imageDegree", to_json(img.image.degree)},
           {"impliedDegree", to_json(img.implied_degree)}};
    if (const auto* q = std::get_if<Quadric>(&img.image.cls); q && !q->note.empty())
        j["note"] = q->note;
    return j;
}

Json to_json(const HKAnalysis& a) {
    Json images = Json::array();
    for (const auto& img : a.admissible_images)
        images.push_back(to_json(img));
    Json out{{"h0", to_json(a.h0)},
             {"top", to_json(a.top)},
             {"degreeBound", to_json(a.degree_bound)},
             {"admissibleImages", images},
             {"pnGuaranteedFrom", a.pn_guaranteed_from},
             {"assumptions", a.assumptions}};
    Json conditional = Json::array();
    if (a.pn_conditional) {
        Json imgs = Json::array();
        for (const auto& img : a.pn_conditional->images)
            imgs.push_back(to_json(img));
        conditional.push_back(Json{{"multiple", a.pn_conditional->multiple}, {"images", imgs}});
    }
    out["conditionalCases"] = conditional;
    return out;
}

Json to_json(const ExceptionalCase& c) {
    return Json{{"n", c.n},
                {"q", to_json(c.q)},
                {"image", token(c.image.image)},
                {"degree", to_json(c.image.implied_degree)}};
}

Json to_json(const HKProfile& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.rr.coefficients())
        coeffs.push_back(c.str());
    Json rcoeffs = Json::array();
    for (const auto& c : p.r_poly.coefficients())
        rcoeffs.push_back(c.str());
    return Json{{"type", to_string(p.type.tag())},
                {"n", p.n()},
                {"dim", p.dim},
                {"fujiki", to_json(p.fujiki)},
                {"rrCoefficients", coeffs},
                {"rCoefficients", rcoeffs},
                {"alphaMin", to_json(p.alpha_min)}};
}

Json to_json(const HypothesisCheck& h) {
    return Json{{"increasing", h.increasing.increasing},
                {"certificate", to_string(h.increasing.certificate)},
                {"rAtAlpha", to_json(h.r_at_alpha)},
                {"rrAtAlpha", to_json(h.rr_at_alpha)},
                {"rAtAlphaGt2n", h.r_at_alpha_gt_2n},
                {"rrAtAlphaGe4n", h.rr_at_alpha_ge_4n}};
}

Json to_json(const Cy4Case& c) {
    return Json{{"label", c.label},
                {"image", c.image},
                {"degreeLo", to_json(c.degree_lo)},
                {"degreeHi", to_json(c.degree_hi)},
                {"parity", to_string(c.parity)},
                {"conditions", c.conditions}};
}

Json to_json(const Cy4CaseReport& r) {
    Json cases = Json::array();
    for (const auto& c : r.cases)
        cases.push_back(to_json(c));
    return Json{{"r", r.r},
                {"globalDegreeBound", to_json(r.global_degree_bound)},
                {"cases", cases}};
}

Json to_json(const EffectiveNormalityTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back(Json{{"id", s.id},
                             {"statement", s.statement},
                             {"check", s.check},
                             {"pass", s.pass}});
    return Json{{"regular", t.regular},
                {"steps", steps},
                {"normalFrom", t.normal_from},
                {"allPass", t.all_pass()},
                {"notes", t.notes}};
}

Json to_json(const SecantBound& s) {
    return Json{{"degBound", to_json(s.deg_bound)},
                {"maxLength", to_json(s.max_length)},
                {"witnessNext", to_json(s.witness_next)}};
}

Json make_report(const std::string& command, Json parameters, Json results,
                 std::vector<std::string> assumptions, std::vector<std::string> notes) {
    return Json{{"command", command},
                {"parameters", std::move(parameters)},
                {"assumptions", assumptions},
                {"results", std::move(results)},
                {"notes", notes}};
}

std::string canonical_text(const Json& report) {
    return report.dump(2) + "\n";
}

}  // namespace pn
