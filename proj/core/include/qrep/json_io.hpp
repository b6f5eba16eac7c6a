#pragma once

#include <json.hpp>

#include "qrep/conservative.hpp"
#include "qrep/ffrep.hpp"
#include "qrep/plethystic.hpp"
#include "qrep/torus_series.hpp"

namespace qrep {

/// {"var": ..., "terms": [[exponent, "num/den"], ...], "str": ...},
/// terms sorted by ascending exponent.
nlohmann::json poly_json(const LaurentPoly& p, std::string_view var = "t");
/// Polynomials serialize as poly_json; proper rational functions add the
/// denominator.
nlohmann::json ratfunc_json(const RatFunc& f, std::string_view var = "t");

nlohmann::json quiver_json(const Quiver& q);

/// {"q": p, "dim": [...], "total": ..., "nilpotent": ..., "monomorphic": ...,
///  "epimorphic": ..., "conservative": ...}
nlohmann::json classify_json(const ClassifyCounts& counts, const DimVector& v, uint32_t p);

nlohmann::json factorization_report_json(const FactorizationReport& report);

/// {"dim": [...], "points": [[p, count], ...], "poly": ..., "validated": ...,
///  "status": ..., "skipped_primes": [...]}
nlohmann::json conservative_fit_json(const ConservativeFit& fit);

/// Per dimension vector: the s and a polynomials with their flags.
nlohmann::json kac_json(const KacResult& s_result, const KacResult& a_result,
                        const CountTable& table);

} // namespace qrep
