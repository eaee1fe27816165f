#ifndef PN_REPORT_HPP
#define PN_REPORT_HPP

#include <json.hpp>

#include <string>

#include "pn/cy4.hpp"
#include "pn/hk.hpp"
#include "pn/registry.hpp"

namespace pn {

using Json = nlohmann::json;

// Exact values always serialize as strings ("p" or "p/q"), never decimals,
// so report payloads are bit-exact and diffable.
Json to_json(const Rational& r);
Json to_json(const Integer& z);
Json to_json(const AdmissibleImage& img);
Json to_json(const HKAnalysis& a);
Json to_json(const ExceptionalCase& c);
Json to_json(const HKProfile& p);
Json to_json(const HypothesisCheck& h);
Json to_json(const Cy4Case& c);
Json to_json(const Cy4CaseReport& r);
Json to_json(const EffectiveNormalityTrace& t);
Json to_json(const SecantBound& s);

// The single top-level payload every command emits: {command, parameters,
// assumptions, results, notes}. Canonical text = 2-space indent + newline;
// key order is alphabetical, so identical runs are byte-identical.
Json make_report(const std::string& command, Json parameters, Json results,
                 std::vector<std::string> assumptions = {},
                 std::vector<std::string> notes = {});

std::string canonical_text(const Json& report);

}  // namespace pn

#endif
