#include "qrep/plethystic.hpp"

namespace qrep {
namespace {

void require_sink_source_free(const Quiver& q, const char* who) {
    if (!q.sink_source_free())
        throw precondition_error(std::string(who) + " requires a sink/source-free quiver");
}

void require_table(const CountTable& table, const Quiver& q, int max_degree, const char* who) {
    if (table.quiver() != q)
        throw precondition_error(std::string(who) + ": count table built for a different quiver");
    if (table.max_degree() < max_degree)
        throw precondition_error(std::string(who) + ": count table covers total degree " +
                                 std::to_string(table.max_degree()) + " < " +
                                 std::to_string(max_degree));
}

/// (1 - q) as a polynomial in the series variable.
LaurentPoly one_minus_q() {
    return LaurentPoly::one() - LaurentPoly::monomial(1);
}

KacEntry make_entry(const DimVector& v, RatFunc value) {
    KacEntry e;
    e.v = v;
    e.polynomial = value.is_polynomial();
    e.integer_coeffs = e.polynomial && value.num().integer_coeffs();
    e.value = std::move(value);
    return e;
}

} // namespace

TorusSeries adams_twisted(const TorusSeries& f, int k) {
    if (k < 1) throw precondition_error("adams operation requires k >= 1");
    TorusSeries out(f.quiver(), f.max_degree());
    for (const auto& [v, c] : f.coefficients()) {
        DimVector kv = dim_scale(k, v);
        if (dim_total(kv) > f.max_degree()) continue;
        out.set_coeff(kv, c.adams(k));
    }
    return out;
}

namespace {

TorusSeries exp_series_twisted(const TorusSeries& f) {
    TorusSeries out = TorusSeries::unit(f.quiver(), f.max_degree());
    TorusSeries power = out;
    Rat factorial(1);
    for (int j = 1; j <= f.max_degree(); ++j) {
        power = power * f;
        factorial *= j;
        RatFunc scale{Rat(1) / factorial};
        for (const auto& [v, c] : power.coefficients()) out.set_coeff(v, out.coeff(v) + c * scale);
    }
    return out;
}

TorusSeries log_series_twisted(const TorusSeries& g) {
    TorusSeries x = g - TorusSeries::unit(g.quiver(), g.max_degree());
    TorusSeries out(g.quiver(), g.max_degree());
    TorusSeries power = TorusSeries::unit(g.quiver(), g.max_degree());
    for (int j = 1; j <= g.max_degree(); ++j) {
        power = power * x;
        RatFunc scale{Rat(j % 2 ? 1 : -1, j)};
        for (const auto& [v, c] : power.coefficients())
            out.set_coeff(v, out.coeff(v) + c * scale);
    }
    return out;
}

} // namespace

TorusSeries exp_pleth_twisted(const TorusSeries& f) {
    const DimVector zero(static_cast<size_t>(f.quiver().vertex_count()), 0);
    if (!f.coeff(zero).is_zero())
        throw precondition_error("exp_pleth_twisted requires zero constant term");
    TorusSeries arg(f.quiver(), f.max_degree());
    for (int k = 1; k <= f.max_degree(); ++k) {
        TorusSeries ad = adams_twisted(f, k);
        RatFunc scale{Rat(1, k)};
        for (const auto& [v, c] : ad.coefficients()) arg.set_coeff(v, arg.coeff(v) + c * scale);
    }
    return exp_series_twisted(arg);
}

TorusSeries log_pleth_twisted(const TorusSeries& g) {
    const DimVector zero(static_cast<size_t>(g.quiver().vertex_count()), 0);
    if (!(g.coeff(zero) == RatFunc(1)))
        throw precondition_error("log_pleth_twisted requires constant term 1");
    TorusSeries l = log_series_twisted(g);
    TorusSeries out(g.quiver(), g.max_degree());
    for (int k = 1; k <= g.max_degree(); ++k) {
        int mu = moebius(k);
        if (!mu) continue;
        TorusSeries ad = adams_twisted(l, k);
        RatFunc scale{Rat(mu, k)};
        for (const auto& [v, c] : ad.coefficients()) out.set_coeff(v, out.coeff(v) + c * scale);
    }
    return out;
}

KacResult solve_s(const Quiver& q, const CountTable& table, int max_degree) {
    require_sink_source_free(q, "solve_s");
    require_table(table, q, max_degree, "solve_s");

    TorusSeries c_series(q, max_degree);
    for (const DimVector& v : dim_vectors_up_to(q.vertex_count(), max_degree))
        c_series.set_coeff(v, RatFunc(table.poly(v)) / RatFunc(gl_poly(v)));

    TorusSeries s_series = log_pleth_twisted(c_series.inverse());

    KacResult result;
    const RatFunc denom{one_minus_q()};
    for (const DimVector& v : dim_vectors_up_to(q.vertex_count(), max_degree)) {
        if (dim_is_zero(v)) continue;
        result.entries.push_back(make_entry(v, denom * s_series.coeff(v)));
    }

    // Round trip from the reported values: rebuild sum s(v,q)/(1-q) X^v,
    // exponentiate, and multiply back against the c-series.
    TorusSeries rebuilt(q, max_degree);
    for (const KacEntry& e : result.entries) rebuilt.set_coeff(e.v, e.value / denom);
    result.roundtrip_residual_zero = (c_series * exp_pleth_twisted(rebuilt)).is_unit();
    return result;
}

CommSeries build_hua_lhs(const Quiver& q, const CountTable& table, int max_degree,
                         int max_parts) {
    require_sink_source_free(q, "build_hua_lhs");
    require_table(table, q, max_degree, "build_hua_lhs");
    int n = q.vertex_count();
    if (max_parts < 0) max_parts = max_degree;   // position s > D cannot contribute

    CommSeries out = CommSeries::one(n, max_degree);
    std::vector<DimVector> parts;

    auto contribute = [&]() {
        // Suffix sums beta^s = sum_{i >= s} v^i.
        size_t r = parts.size();
        std::vector<DimVector> beta(r, DimVector(static_cast<size_t>(n), 0));
        beta[r - 1] = parts[r - 1];
        for (size_t s = r - 1; s-- > 0;) beta[s] = dim_add(parts[s], beta[s + 1]);
        RatFunc factor(1);
        DimVector monomial(static_cast<size_t>(n), 0);
        for (size_t s = 0; s < r; ++s) {
            long long e = q.euler_form(parts[s], parts[s]) - q.euler_form(beta[s], beta[s]);
            factor *= RatFunc(LaurentPoly::monomial(static_cast<int>(e))) *
                      RatFunc(table.poly(parts[s])) / RatFunc(gl_poly(parts[s]));
            monomial = dim_add(monomial, dim_scale(static_cast<int>(s) + 1, parts[s]));
        }
        out.set_coeff(monomial, out.coeff(monomial) + factor);
    };

    // Position s contributes s * |v^s| to the monomial degree, so the
    // remaining budget bounds both the part and the recursion depth.
    auto rec = [&](auto&& self, int s, int budget) -> void {
        if (s > max_parts) return;
        for (const DimVector& w : dim_vectors_up_to(n, budget / s)) {
            parts.push_back(w);
            if (!dim_is_zero(w)) contribute();
            int rest = budget - s * static_cast<int>(dim_total(w));
            if (rest >= s + 1) self(self, s + 1, rest);
            parts.pop_back();
        }
    };
    rec(rec, 1, max_degree);
    return out;
}

KacResult solve_a(const Quiver& q, const CountTable& table, int max_degree) {
    CommSeries lhs = build_hua_lhs(q, table, max_degree);
    CommSeries log = log_pleth(lhs);

    KacResult result;
    const RatFunc denom{LaurentPoly::monomial(1) - LaurentPoly::one()};   // q - 1
    for (const DimVector& v : dim_vectors_up_to(q.vertex_count(), max_degree)) {
        if (dim_is_zero(v)) continue;
        result.entries.push_back(make_entry(v, denom * log.coeff(v)));
    }

    CommSeries rebuilt(q.vertex_count(), max_degree);
    for (const KacEntry& e : result.entries) rebuilt.set_coeff(e.v, e.value / denom);
    result.roundtrip_residual_zero = exp_pleth(rebuilt) == lhs;
    return result;
}

} // namespace qrep
