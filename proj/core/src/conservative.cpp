#include "qrep/conservative.hpp"

namespace qrep {

long long degree_bound(const Quiver& q, const DimVector& v) {
    q.check_sized(v);
    long long e = 0;
    for (const Arrow& a : q.arrows())
        e += static_cast<long long>(v[static_cast<size_t>(a.source)]) *
             v[static_cast<size_t>(a.target)];
    return e;
}

std::string_view fit_status_name(FitStatus s) {
    switch (s) {
        case FitStatus::validated: return "validated";
        case FitStatus::unvalidated: return "unvalidated";
        case FitStatus::insufficient: return "insufficient";
        case FitStatus::violation: return "violation";
    }
    return "?";
}

ConservativeFit conservative_fit(const Quiver& q, const DimVector& v,
                                 std::span<const uint32_t> primes, uint64_t budget,
                                 bool allow_insufficient) {
    ConservativeFit fit;
    fit.dim = v;
    long long bound = degree_bound(q, v);
    for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j])
                throw precondition_error("duplicate prime " + std::to_string(primes[i]));
    for (uint32_t p : primes) {
        // In budget iff p^bound <= budget.
        bool ok = true;
        uint64_t space = 1;
        for (long long i = 0; i < bound && ok; ++i) {
            if (space > budget / p) ok = false;
            else space *= p;
        }
        if (!ok || space > budget) {
            fit.skipped_primes.push_back(p);
            continue;
        }
        fit.points.emplace_back(p, enumerate_and_classify(q, v, p, budget).conservative);
    }

    size_t need = static_cast<size_t>(bound) + 1;
    if (fit.points.empty())
        throw budget_error("no prime fits the enumeration budget at v = " + dim_str(v));
    if (fit.points.size() < need && !allow_insufficient)
        throw precondition_error(
            "insufficient primes within budget at v = " + dim_str(v) + ": have " +
            std::to_string(fit.points.size()) + ", need " + std::to_string(need));

    std::vector<std::pair<Rat, Rat>> nodes;
    nodes.reserve(fit.points.size());
    for (const auto& [p, count] : fit.points)
        nodes.emplace_back(Rat(static_cast<unsigned long>(p)),
                           Rat(static_cast<unsigned long>(count)));

    if (fit.points.size() < need) {
        fit.poly = lagrange_interpolate(nodes, static_cast<int>(fit.points.size()) - 1);
        fit.status = FitStatus::insufficient;
        return fit;
    }
    try {
        fit.poly = lagrange_interpolate(nodes, static_cast<int>(bound));
        fit.status = fit.points.size() > need ? FitStatus::validated : FitStatus::unvalidated;
    } catch (const interpolation_error&) {
        // A held-out point contradicted the degree bound; keep the fit of
        // the first bound+1 points and flag the violation.
        std::span<const std::pair<Rat, Rat>> head(nodes.data(), need);
        fit.poly = lagrange_interpolate(head, static_cast<int>(bound));
        fit.status = FitStatus::violation;
    }
    return fit;
}

LaurentPoly conservative_poly(const Quiver& q, const DimVector& v,
                              std::span<const uint32_t> primes, uint64_t budget) {
    return conservative_fit(q, v, primes, budget, /*allow_insufficient=*/false).poly;
}

CountTable CountTable::build(const Quiver& q, int max_degree, uint64_t budget) {
    CountTable table(q, max_degree);
    for (const DimVector& v : dim_vectors_up_to(q.vertex_count(), max_degree)) {
        long long bound = degree_bound(q, v);
        std::vector<uint32_t> primes = first_primes(static_cast<int>(bound) + 2);
        table.entries_.emplace(v, conservative_fit(q, v, primes, budget,
                                                   /*allow_insufficient=*/true));
    }
    return table;
}

CountTable CountTable::build_with_primes(const Quiver& q, int max_degree,
                                         std::span<const uint32_t> primes, uint64_t budget) {
    CountTable table(q, max_degree);
    for (const DimVector& v : dim_vectors_up_to(q.vertex_count(), max_degree))
        table.entries_.emplace(v, conservative_fit(q, v, primes, budget,
                                                   /*allow_insufficient=*/true));
    return table;
}

const ConservativeFit& CountTable::fit(const DimVector& v) const {
    auto it = entries_.find(v);
    if (it == entries_.end())
        throw precondition_error("count table has no entry for v = " + dim_str(v));
    return it->second;
}

bool CountTable::fully_validated() const {
    for (const auto& [v, fit] : entries_)
        if (fit.status != FitStatus::validated) return false;
    return true;
}

} // namespace qrep
