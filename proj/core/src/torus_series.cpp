#include "qrep/torus_series.hpp"

#include <algorithm>

namespace qrep {

TorusSeries::TorusSeries(Quiver quiver, int max_degree)
    : quiver_(std::move(quiver)), max_degree_(max_degree) {
    if (max_degree < 0) throw precondition_error("negative truncation degree");
}

TorusSeries TorusSeries::unit(Quiver quiver, int max_degree) {
    TorusSeries s(std::move(quiver), max_degree);
    s.set_coeff(DimVector(static_cast<size_t>(s.quiver_.vertex_count()), 0), RatFunc(1));
    return s;
}

RatFunc TorusSeries::coeff(const DimVector& v) const {
    auto it = coef_.find(v);
    return it == coef_.end() ? RatFunc() : it->second;
}

void TorusSeries::set_coeff(const DimVector& v, RatFunc c) {
    quiver_.check_sized(v);
    if (dim_total(v) > max_degree_)
        throw dimension_mismatch("coefficient beyond truncation degree at " + dim_str(v));
    if (c.is_zero())
        coef_.erase(v);
    else
        coef_[v] = std::move(c);
}

void TorusSeries::check_compatible(const TorusSeries& o) const {
    if (quiver_ != o.quiver_) throw dimension_mismatch("series over different quivers");
    if (max_degree_ != o.max_degree_) throw dimension_mismatch("series with different truncation");
}

TorusSeries& TorusSeries::operator+=(const TorusSeries& o) {
    check_compatible(o);
    for (const auto& [v, c] : o.coef_) set_coeff(v, coeff(v) + c);
    return *this;
}

TorusSeries& TorusSeries::operator-=(const TorusSeries& o) {
    check_compatible(o);
    for (const auto& [v, c] : o.coef_) set_coeff(v, coeff(v) - c);
    return *this;
}

TorusSeries TorusSeries::mul(const TorusSeries& o) const {
    check_compatible(o);
    TorusSeries out(quiver_, max_degree_);
    for (const auto& [v, cv] : coef_) {
        long long dv = dim_total(v);
        for (const auto& [w, cw] : o.coef_) {
            if (dv + dim_total(w) > max_degree_) continue;
            DimVector u = dim_add(v, w);
            RatFunc twist{LaurentPoly::monomial(static_cast<int>(-quiver_.euler_form(v, w)))};
            out.set_coeff(u, out.coeff(u) + twist * cv * cw);
        }
    }
    return out;
}

TorusSeries TorusSeries::inverse() const {
    const DimVector zero(static_cast<size_t>(quiver_.vertex_count()), 0);
    if (!(coeff(zero) == RatFunc(1)))
        throw precondition_error("series inverse requires constant term 1");
    TorusSeries inv(quiver_, max_degree_);
    inv.set_coeff(zero, RatFunc(1));
    // inv[u] = -sum over nonzero v <= u of t^(-<v, u-v>) this[v] inv[u-v],
    // by increasing total degree so every inv[u-v] is already known.
    std::vector<DimVector> keys = dim_vectors_up_to(quiver_.vertex_count(), max_degree_);
    std::stable_sort(keys.begin(), keys.end(), [](const DimVector& a, const DimVector& b) {
        return dim_total(a) < dim_total(b);
    });
    for (const DimVector& u : keys) {
        if (dim_is_zero(u)) continue;
        RatFunc acc;
        for (const auto& [v, cv] : coef_) {
            if (dim_is_zero(v) || !dim_leq(v, u)) continue;
            DimVector w = dim_sub(u, v);
            RatFunc rest = inv.coeff(w);
            if (rest.is_zero()) continue;
            RatFunc twist{LaurentPoly::monomial(static_cast<int>(-quiver_.euler_form(v, w)))};
            acc += twist * cv * rest;
        }
        inv.set_coeff(u, -acc);
    }
    return inv;
}

bool TorusSeries::is_unit() const { return *this == unit(quiver_, max_degree_); }

bool TorusSeries::operator==(const TorusSeries& o) const {
    return quiver_ == o.quiver_ && max_degree_ == o.max_degree_ && coef_ == o.coef_;
}

TorusSeries series_from_counts(const Quiver& q, CountKind kind, int max_degree) {
    Quiver qe = q.sink_source_free() ? q : q.extend();
    TorusSeries s(qe, max_degree);
    for (const DimVector& v : dim_vectors_up_to(qe.vertex_count(), max_degree))
        s.set_coeff(v, RatFunc(count_poly(qe, kind, v)) / RatFunc(gl_poly(v)));
    return s;
}

TorusSeries specialize_drop_last(const TorusSeries& s) {
    const Quiver& qe = s.quiver();
    if (!qe.extended())
        throw precondition_error("specialize_drop_last requires a series over an extended quiver");
    int n = qe.vertex_count() - 1;
    std::vector<Arrow> arrows;
    for (const Arrow& a : qe.arrows())
        if (a.source < n && a.target < n) arrows.push_back(a);
    Quiver q(n, std::move(arrows));
    TorusSeries out(q, s.max_degree());
    for (const auto& [v, c] : s.coefficients()) {
        if (v.back() != 0) continue;
        DimVector w(v.begin(), v.end() - 1);
        out.set_coeff(w, c);
    }
    return out;
}

bool FactorizationReport::pass() const {
    for (const FactorizationEntry& e : entries)
        if (!e.residual_mono_nil.is_zero() || !e.residual_nil_epi.is_zero()) return false;
    return !specialization_checked || specialization_ok;
}

FactorizationReport verify_factorizations(const Quiver& q, int max_degree) {
    FactorizationReport report;
    report.was_extended = !q.sink_source_free();
    report.max_degree = max_degree;

    TorusSeries all = series_from_counts(q, CountKind::all, max_degree);
    TorusSeries nil = series_from_counts(q, CountKind::nilpotent, max_degree);
    TorusSeries mono = series_from_counts(q, CountKind::monomorphic, max_degree);
    TorusSeries epi = series_from_counts(q, CountKind::epimorphic, max_degree);
    report.quiver = all.quiver();

    TorusSeries mn = mono * nil;
    TorusSeries ne = nil * epi;
    for (const DimVector& v : dim_vectors_up_to(report.quiver.vertex_count(), max_degree))
        report.entries.push_back({v, all.coeff(v) - mn.coeff(v), all.coeff(v) - ne.coeff(v)});

    if (report.was_extended) {
        report.specialization_checked = true;
        TorusSeries all_q = specialize_drop_last(all);
        TorusSeries mn_q = specialize_drop_last(mono) * specialize_drop_last(nil);
        TorusSeries ne_q = specialize_drop_last(nil) * specialize_drop_last(epi);
        // The specialized R-series must equal the one built directly from r
        // over the original quiver.
        TorusSeries direct(all_q.quiver(), max_degree);
        for (const DimVector& v : dim_vectors_up_to(q.vertex_count(), max_degree))
            direct.set_coeff(v, RatFunc(r_poly(q, v)) / RatFunc(gl_poly(v)));
        report.specialization_ok = all_q == mn_q && all_q == ne_q && all_q == direct;
    }
    return report;
}

} // namespace qrep
