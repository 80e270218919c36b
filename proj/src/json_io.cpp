#include "sfs/json_io.hpp"

#include "sfs/error.hpp"
#include "sfs/notation.hpp"

namespace sfs::io {

json to_json(const Rational& r) {
    return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

json to_json(const GenusInterval& g) {
    return json{{"lo", g.lo}, {"hi", g.hi}, {"exact", g.exact}};
}

json to_json(const ChiInterval& c) {
    return json{{"lo", c.lo}, {"hi", c.hi}, {"exact", c.exact}};
}

json to_json(const RationalInterval& iv) {
    return json{{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}, {"exact", iv.exact()}};
}

json to_json(const GradientTerm& t) {
    RationalInterval chi_abs{t.chi_over_d.lo * Rational(t.d), t.chi_over_d.hi * Rational(t.d)};
    return json{{"i", t.index},
                {"d", t.d},
                {"m", t.m},
                {"l", t.l},
                {"chi", to_json(chi_abs)},
                {"chi_over_d", to_json(t.chi_over_d)},
                {"genus_over_d", to_json(t.genus_over_d)}};
}

json to_json(const GradientReport& report) {
    json terms = json::array();
    for (const auto& t : report.terms) terms.push_back(to_json(t));
    return json{{"schema_version", kSchemaVersion},
                {"base", print_manifold(report.base)},
                {"family", report.family},
                {"finite_family", report.finite_family},
                {"chi_kind", report.strong ? "chi_sh" : "chi_h"},
                {"verdict", to_string(report.verdict)},
                {"certificate_kind", to_string(report.certificate_kind)},
                {"certificate", report.certificate},
                {"inf_lower_bound", to_json(report.inf_lower_bound)},
                {"inf_upper_bound", to_json(report.inf_upper_bound)},
                {"upper_ends_nonincreasing", report.upper_ends_nonincreasing},
                {"strictly_decreasing_from", report.strictly_decreasing_from},
                {"terms", terms}};
}

json to_json(const CoverDescriptor& cover) {
    return json{{"sfs", print_manifold(cover.total())},
                {"d", cover.d()},
                {"m", cover.m()},
                {"l", cover.l()}};
}

namespace {

long long int_field(const json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_number_integer())
        throw Error(ErrorCode::Parse,
                    std::string("cover descriptor needs integer field '") + name + "'");
    return j[name].get<long long>();
}

} // namespace

CoverDescriptor cover_from_json(const SeifertInvariants& base, const json& j) {
    if (!j.is_object() || !j.contains("sfs") || !j["sfs"].is_string())
        throw Error(ErrorCode::Parse, "cover descriptor needs a string field 'sfs'");
    SeifertInvariants total = parse_manifold(j["sfs"].get<std::string>());
    return CoverDescriptor(base, std::move(total), int_field(j, "d"), int_field(j, "m"),
                           int_field(j, "l"));
}

std::vector<CoverDescriptor> covers_from_json(const SeifertInvariants& base, const json& j) {
    if (!j.is_array())
        throw Error(ErrorCode::Parse, "explicit family file must hold a JSON array");
    std::vector<CoverDescriptor> covers;
    covers.reserve(j.size());
    for (const auto& item : j) covers.push_back(cover_from_json(base, item));
    return covers;
}

} // namespace sfs::io
