#include "qrep/json_io.hpp"

namespace qrep {

using nlohmann::json;

json poly_json(const LaurentPoly& p, std::string_view var) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, rat_str(c)}));
    return json{{"var", std::string(var)}, {"terms", terms}, {"str", p.str(var)}};
}

json ratfunc_json(const RatFunc& f, std::string_view var) {
    if (f.is_polynomial()) return poly_json(f.num(), var);
    json j = json{{"var", std::string(var)},
                  {"num", poly_json(f.num(), var)},
                  {"den", poly_json(f.den(), var)},
                  {"str", f.str(var)}};
    return j;
}

json quiver_json(const Quiver& q) {
    json arrows = json::array();
    for (const Arrow& a : q.arrows()) arrows.push_back(json::array({a.source + 1, a.target + 1}));
    return json{{"vertices", q.vertex_count()},
                {"arrows", arrows},
                {"connected", q.connected()},
                {"extended", q.extended()}};
}

json classify_json(const ClassifyCounts& counts, const DimVector& v, uint32_t p) {
    return json{{"q", p},
                {"dim", v},
                {"total", counts.total},
                {"nilpotent", counts.nilpotent},
                {"monomorphic", counts.monomorphic},
                {"epimorphic", counts.epimorphic},
                {"conservative", counts.conservative}};
}

json factorization_report_json(const FactorizationReport& report) {
    json entries = json::array();
    for (const FactorizationEntry& e : report.entries)
        entries.push_back(json{{"dim", e.v},
                               {"residual_mono_nil", e.residual_mono_nil.str()},
                               {"residual_nil_epi", e.residual_nil_epi.str()}});
    json j{{"quiver", quiver_json(report.quiver)},
           {"max_degree", report.max_degree},
           {"extended", report.was_extended},
           {"entries", entries},
           {"pass", report.pass()}};
    if (report.specialization_checked) j["specialization_ok"] = report.specialization_ok;
    return j;
}

json conservative_fit_json(const ConservativeFit& fit) {
    json points = json::array();
    for (const auto& [p, count] : fit.points) points.push_back(json::array({p, count}));
    return json{{"dim", fit.dim},
                {"points", points},
                {"skipped_primes", fit.skipped_primes},
                {"poly", poly_json(fit.poly, "q")},
                {"validated", fit.validated()},
                {"status", std::string(fit_status_name(fit.status))}};
}

json kac_json(const KacResult& s_result, const KacResult& a_result, const CountTable& table) {
    json per_dim = json::array();
    for (size_t i = 0; i < s_result.entries.size(); ++i) {
        const KacEntry& s = s_result.entries[i];
        const KacEntry& a = a_result.entries[i];
        json row{{"dim", s.v},
                 {"c", conservative_fit_json(table.fit(s.v))},
                 {"s", ratfunc_json(s.value, "q")},
                 {"a", ratfunc_json(a.value, "q")},
                 {"integer_coeffs", s.integer_coeffs && a.integer_coeffs},
                 {"s_polynomial", s.polynomial},
                 {"a_polynomial", a.polynomial},
                 {"roundtrip_residual_zero",
                  s_result.roundtrip_residual_zero && a_result.roundtrip_residual_zero}};
        per_dim.push_back(row);
    }
    return json{{"entries", per_dim},
                {"s_roundtrip_residual_zero", s_result.roundtrip_residual_zero},
                {"a_roundtrip_residual_zero", a_result.roundtrip_residual_zero}};
}

} // namespace qrep
