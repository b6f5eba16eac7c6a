#include "qrep/ffrep.hpp"

#include <algorithm>

namespace qrep {
namespace {

/// Pivot columns of an RREF basis (first nonzero entry per row).
std::vector<int> pivot_cols(const MatModP& basis) {
    std::vector<int> pivots;
    pivots.reserve(static_cast<size_t>(basis.rows()));
    for (int r = 0; r < basis.rows(); ++r) {
        for (int c = 0; c < basis.cols(); ++c) {
            if (basis.at(r, c)) {
                pivots.push_back(c);
                break;
            }
        }
    }
    return pivots;
}

/// Reduce y against an RREF basis in place; y ends up zero iff it was in
/// the row space.
void reduce_by_basis(std::vector<uint8_t>& y, const MatModP& basis, const std::vector<int>& pivots,
                     const PrimeField& f) {
    for (int r = 0; r < basis.rows(); ++r) {
        uint32_t c = y[static_cast<size_t>(pivots[static_cast<size_t>(r)])];
        if (!c) continue;
        uint32_t neg = f.p - c;
        for (int j = 0; j < basis.cols(); ++j) {
            uint32_t v = y[static_cast<size_t>(j)] + neg * basis.at(r, j) % f.p;
            y[static_cast<size_t>(j)] = static_cast<uint8_t>(v % f.p);
        }
    }
}

bool in_span(const std::vector<uint8_t>& vec, const MatModP& basis, const PrimeField& f) {
    std::vector<uint8_t> y(vec);
    reduce_by_basis(y, basis, pivot_cols(basis), f);
    return std::all_of(y.begin(), y.end(), [](uint8_t x) { return x == 0; });
}

/// Linear constraints cutting out the row space of an RREF basis:
/// one row per non-pivot column c, namely y_c - sum_i y_{p_i} basis[i][c] = 0.
MatModP span_constraints(const MatModP& basis, const PrimeField& f) {
    std::vector<int> pivots = pivot_cols(basis);
    std::vector<char> is_pivot(static_cast<size_t>(basis.cols()), 0);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
    MatModP k(basis.cols() - basis.rows(), basis.cols());
    int row = 0;
    for (int c = 0; c < basis.cols(); ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        k.at(row, c) = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            k.at(row, pivots[i]) = static_cast<uint8_t>(f.neg(basis.at(static_cast<int>(i), c)));
        ++row;
    }
    return k;
}

uint64_t checked_pow(uint64_t base, long long exp, uint64_t budget, const char* what) {
    uint64_t r = 1;
    for (long long i = 0; i < exp; ++i) {
        if (r > budget / base)
            throw budget_error(std::string(what) + " would exceed the enumeration budget of " +
                               std::to_string(budget));
        r *= base;
    }
    if (r > budget)
        throw budget_error(std::string(what) + " would exceed the enumeration budget of " +
                           std::to_string(budget));
    return r;
}

} // namespace

DimVector SubRep::dims() const {
    DimVector d;
    d.reserve(basis.size());
    for (const MatModP& b : basis) d.push_back(b.rows());
    return d;
}

FFRep::FFRep(Quiver quiver, uint32_t p, DimVector dims)
    : quiver_(std::move(quiver)), field_(p), dims_(std::move(dims)) {
    quiver_.check_sized(dims_);
    mats_.reserve(quiver_.arrows().size());
    for (const Arrow& a : quiver_.arrows())
        mats_.emplace_back(dims_[static_cast<size_t>(a.target)],
                           dims_[static_cast<size_t>(a.source)]);
}

bool is_monomorphic(const FFRep& m) {
    const Quiver& q = m.quiver();
    for (int i = 0; i < q.vertex_count(); ++i) {
        int d = m.dims()[static_cast<size_t>(i)];
        if (d == 0) continue;
        int rows = 0;
        for (int h : q.out_arrows()[static_cast<size_t>(i)]) rows += m.matrix(h).rows();
        MatModP sigma(rows, d);
        int at = 0;
        for (int h : q.out_arrows()[static_cast<size_t>(i)]) {
            const MatModP& f = m.matrix(h);
            for (int r = 0; r < f.rows(); ++r)
                for (int c = 0; c < d; ++c) sigma.at(at + r, c) = f.at(r, c);
            at += f.rows();
        }
        if (sigma.rank(m.field()) != d) return false;
    }
    return true;
}

bool is_epimorphic(const FFRep& m) {
    const Quiver& q = m.quiver();
    for (int i = 0; i < q.vertex_count(); ++i) {
        int d = m.dims()[static_cast<size_t>(i)];
        if (d == 0) continue;
        int cols = 0;
        for (int h : q.in_arrows()[static_cast<size_t>(i)]) cols += m.matrix(h).cols();
        MatModP tau(d, cols);
        int at = 0;
        for (int h : q.in_arrows()[static_cast<size_t>(i)]) {
            const MatModP& f = m.matrix(h);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < f.cols(); ++c) tau.at(r, at + c) = f.at(r, c);
            at += f.cols();
        }
        if (tau.rank(m.field()) != d) return false;
    }
    return true;
}

SubRep zero_subrep(const FFRep& m) {
    SubRep s;
    for (int d : m.dims()) s.basis.emplace_back(0, d);
    return s;
}

SubRep full_subrep(const FFRep& m) {
    SubRep s;
    for (int d : m.dims()) s.basis.push_back(MatModP::identity(d));
    return s;
}

bool is_subrep(const FFRep& m, const SubRep& n) {
    const Quiver& q = m.quiver();
    if (n.basis.size() != static_cast<size_t>(q.vertex_count())) return false;
    for (int i = 0; i < q.vertex_count(); ++i)
        if (n.basis[static_cast<size_t>(i)].cols() != m.dims()[static_cast<size_t>(i)])
            return false;
    for (size_t h = 0; h < q.arrows().size(); ++h) {
        const Arrow& a = q.arrows()[h];
        const MatModP& src = n.basis[static_cast<size_t>(a.source)];
        const MatModP& dst = n.basis[static_cast<size_t>(a.target)];
        for (int r = 0; r < src.rows(); ++r) {
            std::vector<uint8_t> w(static_cast<size_t>(src.cols()));
            for (int c = 0; c < src.cols(); ++c) w[static_cast<size_t>(c)] = src.at(r, c);
            if (!in_span(m.matrix(static_cast<int>(h)).apply(w, m.field()), dst, m.field()))
                return false;
        }
    }
    return true;
}

SubRep im_minus(const FFRep& m, const SubRep& n) {
    if (!is_subrep(m, n)) throw precondition_error("im_minus: argument is not a subrepresentation");
    const Quiver& q = m.quiver();
    const PrimeField& f = m.field();
    SubRep out;
    out.basis.reserve(static_cast<size_t>(q.vertex_count()));
    for (int i = 0; i < q.vertex_count(); ++i) {
        int d = m.dims()[static_cast<size_t>(i)];
        // Stack the constraint systems K_{h''} f_h over out-arrows; the
        // kernel is the intersection of the preimages. No out-arrows:
        // kernel of the empty system is everything.
        MatModP stacked(0, d);
        for (int h : q.out_arrows()[static_cast<size_t>(i)]) {
            int t = q.arrows()[static_cast<size_t>(h)].target;
            MatModP k = span_constraints(n.basis[static_cast<size_t>(t)], f);
            stacked = MatModP::vstack(stacked, k.mul(m.matrix(h), f));
        }
        out.basis.push_back(stacked.nullspace(f));
    }
    return out;
}

SubRep im_plus(const FFRep& m, const SubRep& n) {
    if (!is_subrep(m, n)) throw precondition_error("im_plus: argument is not a subrepresentation");
    const Quiver& q = m.quiver();
    const PrimeField& f = m.field();
    SubRep out;
    out.basis.reserve(static_cast<size_t>(q.vertex_count()));
    for (int i = 0; i < q.vertex_count(); ++i) {
        int d = m.dims()[static_cast<size_t>(i)];
        int rows = 0;
        for (int h : q.in_arrows()[static_cast<size_t>(i)])
            rows += n.basis[static_cast<size_t>(q.arrows()[static_cast<size_t>(h)].source)].rows();
        MatModP images(rows, d);
        int at = 0;
        for (int h : q.in_arrows()[static_cast<size_t>(i)]) {
            int s = q.arrows()[static_cast<size_t>(h)].source;
            const MatModP& src = n.basis[static_cast<size_t>(s)];
            for (int r = 0; r < src.rows(); ++r) {
                std::vector<uint8_t> w(static_cast<size_t>(src.cols()));
                for (int c = 0; c < src.cols(); ++c) w[static_cast<size_t>(c)] = src.at(r, c);
                std::vector<uint8_t> y = m.matrix(h).apply(w, f);
                for (int c = 0; c < d; ++c) images.at(at, c) = y[static_cast<size_t>(c)];
                ++at;
            }
        }
        images.rref_in_place(f);
        out.basis.push_back(std::move(images));
    }
    return out;
}

namespace {

SubRep chain_fixpoint(const FFRep& m, SubRep start, SubRep (*step)(const FFRep&, const SubRep&)) {
    SubRep cur = std::move(start);
    for (;;) {
        SubRep next = step(m, cur);
        if (next.dims() == cur.dims()) return cur;
        cur = std::move(next);
    }
}

} // namespace

SubRep max_nilpotent_subrep(const FFRep& m) { return chain_fixpoint(m, zero_subrep(m), im_minus); }

SubRep max_epimorphic_subrep(const FFRep& m) { return chain_fixpoint(m, full_subrep(m), im_plus); }

bool is_nilpotent(const FFRep& m) {
    return max_nilpotent_subrep(m).dims() == m.dims();
}

FFRep quotient(const FFRep& m, const SubRep& n) {
    if (!is_subrep(m, n)) throw precondition_error("quotient: argument is not a subrepresentation");
    const Quiver& q = m.quiver();
    const PrimeField& f = m.field();
    int nv = q.vertex_count();
    // Complement coordinates: the non-pivot columns of each basis.
    std::vector<std::vector<int>> pivots(static_cast<size_t>(nv));
    std::vector<std::vector<int>> kept(static_cast<size_t>(nv));
    DimVector qdims(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        auto ii = static_cast<size_t>(i);
        pivots[ii] = pivot_cols(n.basis[ii]);
        std::vector<char> is_pivot(static_cast<size_t>(m.dims()[ii]), 0);
        for (int c : pivots[ii]) is_pivot[static_cast<size_t>(c)] = 1;
        for (int c = 0; c < m.dims()[ii]; ++c)
            if (!is_pivot[static_cast<size_t>(c)]) kept[ii].push_back(c);
        qdims[ii] = static_cast<int>(kept[ii].size());
    }
    FFRep out(q, f.p, qdims);
    for (size_t h = 0; h < q.arrows().size(); ++h) {
        const Arrow& a = q.arrows()[h];
        auto si = static_cast<size_t>(a.source);
        auto ti = static_cast<size_t>(a.target);
        MatModP& mat = out.matrix(static_cast<int>(h));
        for (size_t j = 0; j < kept[si].size(); ++j) {
            // Image of the j-th complement coordinate, reduced modulo the
            // subspace, restricted to complement coordinates.
            std::vector<uint8_t> e(static_cast<size_t>(m.dims()[si]), 0);
            e[static_cast<size_t>(kept[si][j])] = 1;
            std::vector<uint8_t> y = m.matrix(static_cast<int>(h)).apply(e, f);
            reduce_by_basis(y, n.basis[ti], pivots[ti], f);
            for (size_t r = 0; r < kept[ti].size(); ++r)
                mat.at(static_cast<int>(r), static_cast<int>(j)) =
                    y[static_cast<size_t>(kept[ti][r])];
        }
    }
    return out;
}

FFRep subrep_restrict(const FFRep& m, const SubRep& n) {
    if (!is_subrep(m, n)) throw precondition_error("restrict: argument is not a subrepresentation");
    const Quiver& q = m.quiver();
    const PrimeField& f = m.field();
    FFRep out(q, f.p, n.dims());
    for (size_t h = 0; h < q.arrows().size(); ++h) {
        const Arrow& a = q.arrows()[h];
        const MatModP& src = n.basis[static_cast<size_t>(a.source)];
        const MatModP& dst = n.basis[static_cast<size_t>(a.target)];
        std::vector<int> dpiv = pivot_cols(dst);
        MatModP& mat = out.matrix(static_cast<int>(h));
        for (int j = 0; j < src.rows(); ++j) {
            std::vector<uint8_t> w(static_cast<size_t>(src.cols()));
            for (int c = 0; c < src.cols(); ++c) w[static_cast<size_t>(c)] = src.at(j, c);
            std::vector<uint8_t> y = m.matrix(static_cast<int>(h)).apply(w, f);
            // Coordinates in an RREF basis are just the pivot entries.
            for (int r = 0; r < dst.rows(); ++r)
                mat.at(r, j) = y[static_cast<size_t>(dpiv[static_cast<size_t>(r)])];
        }
    }
    return out;
}

std::vector<SubRep> enumerate_subreps(const FFRep& m, uint64_t budget) {
    const Quiver& q = m.quiver();
    const PrimeField& f = m.field();
    int nv = q.vertex_count();
    std::vector<std::vector<MatModP>> lattice(static_cast<size_t>(nv));
    uint64_t combos = 1;
    for (int i = 0; i < nv; ++i) {
        auto ii = static_cast<size_t>(i);
        lattice[ii] = enumerate_subspaces(m.dims()[ii], f);
        uint64_t sz = lattice[ii].size();
        if (combos > budget / sz)
            throw budget_error("subspace lattice product exceeds budget " + std::to_string(budget));
        combos *= sz;
    }
    std::vector<SubRep> out;
    SubRep cand;
    cand.basis.resize(static_cast<size_t>(nv));
    std::vector<size_t> idx(static_cast<size_t>(nv), 0);
    for (;;) {
        for (int i = 0; i < nv; ++i)
            cand.basis[static_cast<size_t>(i)] = lattice[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
        if (is_subrep(m, cand)) out.push_back(cand);
        int i = 0;
        while (i < nv && ++idx[static_cast<size_t>(i)] == lattice[static_cast<size_t>(i)].size()) {
            idx[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == nv) break;
    }
    return out;
}

void for_each_representation(const Quiver& q, const DimVector& v, uint32_t p, uint64_t budget,
                             const std::function<void(const FFRep&)>& fn) {
    q.check_sized(v);
    long long entries = 0;
    for (const Arrow& a : q.arrows())
        entries += static_cast<long long>(v[static_cast<size_t>(a.source)]) *
                   v[static_cast<size_t>(a.target)];
    checked_pow(p, entries, budget, "representation space");
    FFRep rep(q, p, v);
    // Odometer over all matrix entries, base p.
    std::vector<uint8_t*> cells;
    for (size_t h = 0; h < q.arrows().size(); ++h)
        for (auto& x : rep.matrix(static_cast<int>(h)).data()) cells.push_back(&x);
    for (;;) {
        fn(rep);
        size_t i = 0;
        while (i < cells.size() && ++*cells[i] == p) *cells[i++] = 0;
        if (i == cells.size()) break;
    }
}

ClassifyCounts enumerate_and_classify(const Quiver& q, const DimVector& v, uint32_t p,
                                      uint64_t budget) {
    ClassifyCounts counts;
    for_each_representation(q, v, p, budget, [&](const FFRep& rep) {
        ++counts.total;
        bool mono = is_monomorphic(rep);
        bool epi = is_epimorphic(rep);
        if (mono) ++counts.monomorphic;
        if (epi) ++counts.epimorphic;
        if (mono && epi) ++counts.conservative;
        if (is_nilpotent(rep)) ++counts.nilpotent;
    });
    return counts;
}

UniqueFactorizationReport verify_unique_factorization(const FFRep& m, uint64_t budget) {
    UniqueFactorizationReport report;
    SubRep max_nil = max_nilpotent_subrep(m);
    SubRep max_epi = max_epimorphic_subrep(m);
    for (const SubRep& u : enumerate_subreps(m, budget)) {
        FFRep as_rep = subrep_restrict(m, u);
        FFRep quot = quotient(m, u);
        if (is_nilpotent(as_rep) && is_monomorphic(quot)) {
            ++report.nilpotent_mono_subreps;
            if (u == max_nil) report.max_nilpotent_matches = true;
        }
        if (is_epimorphic(as_rep) && is_nilpotent(quot)) {
            ++report.epi_nilpotent_subreps;
            if (u == max_epi) report.max_epimorphic_matches = true;
        }
    }
    return report;
}

} // namespace qrep
