#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "crankforge/cranks.hpp"
#include "crankforge/numeric.hpp"
#include "crankforge/partitions.hpp"
#include "crankforge/quasimod.hpp"
#include "crankforge/series.hpp"

namespace crankforge {

inline constexpr int kSchemaVersion = 1;

inline nlohmann::json to_json(const Series& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (long n = 0; n <= s.order(); ++n) coeffs.push_back(rational_to_string(s[n]));
    return {{"trunc_order", s.order()}, {"coeffs", coeffs}};
}

inline Series series_from_json(const nlohmann::json& j) {
    const long order = j.at("trunc_order").get<long>();
    const auto& coeffs = j.at("coeffs");
    if (static_cast<long>(coeffs.size()) != order + 1)
        throw std::invalid_argument("coefficient count does not match trunc_order");
    std::vector<Rational> parsed;
    parsed.reserve(coeffs.size());
    for (const auto& c : coeffs) parsed.push_back(rational_from_string(c.get<std::string>()));
    return Series(std::move(parsed));
}

/// Overlined parts render as "3o" tokens, plain parts as "3".
inline nlohmann::json to_json(const Overpartition& o) {
    nlohmann::json tokens = nlohmann::json::array();
    for (const auto& e : o.entries)
        tokens.push_back(std::to_string(e.part) + (e.overlined ? "o" : ""));
    return tokens;
}

inline nlohmann::json to_json(const CrankTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (long n = 0; n <= t.trunc; ++n)
        for (const auto& [m, count] : t.counts[static_cast<std::size_t>(n)])
            rows.push_back({{"k", t.k}, {"n", n}, {"m", m}, {"count", count}});
    return {{"schema", kSchemaVersion}, {"k", t.k}, {"trunc", t.trunc}, {"rows", rows}};
}

inline void write_table_csv(std::ostream& os, const CrankTable& t) {
    os << "k,n,m,count\n";
    for (long n = 0; n <= t.trunc; ++n)
        for (const auto& [m, count] : t.counts[static_cast<std::size_t>(n)])
            os << t.k << "," << n << "," << m << "," << count << "\n";
}

inline void write_moments_csv(std::ostream& os, const MomentSeries& m) {
    os << "k,ell,n,value\n";
    for (long n = 0; n <= m.series.order(); ++n)
        os << m.k << "," << m.ell << "," << n << "," << rational_to_string(m.series[n]) << "\n";
}

inline nlohmann::json to_json(const MomentSeries& m) {
    nlohmann::json values = nlohmann::json::array();
    for (long n = 0; n <= m.series.order(); ++n)
        values.push_back({{"n", n}, {"value", rational_to_string(m.series[n])}});
    return {{"schema", kSchemaVersion}, {"k", m.k}, {"ell", m.ell}, {"values", values}};
}

inline nlohmann::json to_json(const MembershipCertificate& cert) {
    nlohmann::json coords = nlohmann::json::object();
    for (std::size_t i = 0; i < cert.span.size(); ++i)
        if (cert.coordinates[i] != 0) coords[cert.span[i].name()] = rational_to_string(cert.coordinates[i]);
    return {{"schema", kSchemaVersion},
            {"target", cert.target_description},
            {"coordinates", coords},
            {"residual_order", cert.residual_order},
            {"constant_term", rational_to_string(cert.constant_term())}};
}

inline nlohmann::json to_json(const Representation& rep) {
    nlohmann::json alpha = nlohmann::json::object();
    for (const auto& [exps, value] : rep.alpha) {
        std::string key = "(";
        for (std::size_t i = 0; i < exps.size(); ++i)
            key += (i ? "," : "") + std::to_string(exps[i]);
        key += ")";
        if (value.fits_slong_p())
            alpha[key] = value.get_si();
        else
            alpha[key] = value.get_str();
    }
    return {{"schema", kSchemaVersion},
            {"k", rep.k},
            {"j", rep.j},
            {"alpha", alpha},
            {"residual_order", rep.residual_order}};
}

inline nlohmann::json to_json(const TransformReport& r) {
    return {{"defect", r.defect}, {"tolerance", r.tolerance}, {"pass", r.pass}};
}

inline nlohmann::json to_json(const InequalityScanReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n},
                        {"lhs", row.lhs.get_str()},
                        {"rhs", row.rhs.get_str()},
                        {"holds", row.holds},
                        {"equal", row.equal}});
    return {{"schema", kSchemaVersion}, {"d", r.d},       {"k", r.k},
            {"ell", r.ell},             {"rows", rows},   {"equality_set", r.equality_set},
            {"all_hold", r.all_hold}};
}

}  // namespace crankforge
