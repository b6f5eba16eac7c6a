#include "qrep/count_formulas.hpp"

#include "qrep/ratfunc.hpp"

namespace qrep {
namespace {

/// Formulas are stated for sink/source-free quivers; extend and pad
/// otherwise.
std::pair<Quiver, DimVector> formula_domain(const Quiver& q, const DimVector& v) {
    q.check_sized(v);
    if (q.sink_source_free()) return {q, v};
    DimVector padded(v);
    padded.push_back(0);
    return {q.extend(), padded};
}

LaurentPoly ratio_of_gl(const DimVector& num, const DimVector& den) {
    return gl_poly(num).div_exact(gl_poly(den));
}

} // namespace

LaurentPoly gl_factor(int s) {
    if (s < 0) throw precondition_error("gl of negative size");
    LaurentPoly out = LaurentPoly::one();
    for (int i = 0; i < s; ++i)
        out *= LaurentPoly::monomial(s) - LaurentPoly::monomial(i);
    return out;
}

LaurentPoly gl_poly(const DimVector& v) {
    LaurentPoly out = LaurentPoly::one();
    for (int x : v) out *= gl_factor(x);
    return out;
}

LaurentPoly r_poly(const Quiver& q, const DimVector& v) {
    auto [qe, ve] = formula_domain(q, v);
    long long e = dim_dot(ve, ve) - qe.euler_form(ve, ve);
    return LaurentPoly::monomial(static_cast<int>(e));
}

LaurentPoly m_poly(const Quiver& q, const DimVector& v) {
    auto [qe, ve] = formula_domain(q, v);
    DimVector out = qe.dot_out(ve);
    if (!dim_leq(ve, out)) return LaurentPoly::zero();
    LaurentPoly p = ratio_of_gl(out, dim_sub(out, ve))
                        .shifted(static_cast<int>(qe.euler_form(ve, ve)));
    if (p.min_exponent() < 0)
        throw error("m_poly produced negative exponents at v = " + dim_str(v));
    return p;
}

LaurentPoly e_poly(const Quiver& q, const DimVector& v) {
    auto [qe, ve] = formula_domain(q, v);
    DimVector in = qe.dot_in(ve);
    if (!dim_leq(ve, in)) return LaurentPoly::zero();
    LaurentPoly p = ratio_of_gl(in, dim_sub(in, ve))
                        .shifted(static_cast<int>(qe.euler_form(ve, ve)));
    if (p.min_exponent() < 0)
        throw error("e_poly produced negative exponents at v = " + dim_str(v));
    return p;
}

LaurentPoly h_func(const Quiver& q, const DimVector& v, const DimVector& w) {
    q.check_sized(v);
    q.check_sized(w);
    DimVector in = q.dot_in(v);
    if (!dim_leq(w, in))
        throw precondition_error("h_func requires v_in >= w: v_in = " + dim_str(in) +
                                 ", w = " + dim_str(w));
    DimVector diff = dim_sub(in, w);
    long long e = dim_dot(diff, diff) - dim_dot(in, in);
    return ratio_of_gl(in, diff).shifted(static_cast<int>(e));
}

std::vector<std::vector<DimVector>> enumerate_tuples(const Quiver& q, const DimVector& v) {
    q.check_sized(v);
    std::vector<std::vector<DimVector>> out;
    std::vector<DimVector> parts;
    // Depth-first over nonzero parts; the next part is bounded by both the
    // remainder and v_in of the previous part.
    auto rec = [&](auto&& self, const DimVector& remaining, const DimVector* cap) -> void {
        if (dim_is_zero(remaining)) {
            out.push_back(parts);
            return;
        }
        DimVector bound = remaining;
        if (cap)
            for (size_t i = 0; i < bound.size(); ++i)
                bound[i] = std::min(bound[i], (*cap)[i]);
        DimVector part(bound.size(), 0);
        auto next_part = [&]() {
            size_t i = 0;
            while (i < part.size() && ++part[i] > bound[i]) part[i++] = 0;
            return i < part.size();
        };
        while (next_part()) {
            parts.push_back(part);
            DimVector in = q.dot_in(part);
            self(self, dim_sub(remaining, part), &in);
            parts.pop_back();
        }
    };
    rec(rec, v, nullptr);
    return out;
}

LaurentPoly n_poly(const Quiver& q, const DimVector& v) {
    auto [qe, ve] = formula_domain(q, v);
    const DimVector zero(static_cast<size_t>(qe.vertex_count()), 0);
    RatFunc sum;
    for (const std::vector<DimVector>& tuple : enumerate_tuples(qe, ve)) {
        long long twist = 0;
        for (size_t k = 0; k < tuple.size(); ++k)
            for (size_t l = k + 1; l < tuple.size(); ++l)
                twist -= qe.euler_form(tuple[k], tuple[l]);
        RatFunc term{LaurentPoly::monomial(static_cast<int>(twist))};
        for (size_t k = 0; k < tuple.size(); ++k) {
            const DimVector& next = k + 1 < tuple.size() ? tuple[k + 1] : zero;
            term *= RatFunc(h_func(qe, tuple[k], next)) / RatFunc(gl_poly(tuple[k]));
        }
        sum += term;
    }
    LaurentPoly n = (RatFunc(gl_poly(ve)) * sum).as_laurent();
    if (n.min_exponent() < 0)
        throw error("n_poly produced negative exponents at v = " + dim_str(v));
    return n;
}

LaurentPoly count_poly(const Quiver& q, CountKind kind, const DimVector& v) {
    switch (kind) {
        case CountKind::all: return r_poly(q, v);
        case CountKind::nilpotent: return n_poly(q, v);
        case CountKind::monomorphic: return m_poly(q, v);
        case CountKind::epimorphic: return e_poly(q, v);
    }
    throw precondition_error("unknown count kind");
}

} // namespace qrep
