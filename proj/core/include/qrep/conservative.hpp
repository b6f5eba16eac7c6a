#pragma once

#include <map>
#include <span>

#include "qrep/ffrep.hpp"
#include "qrep/interpolate.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

/// deg c(v,.) <= dim of the representation space = sum_h v_{h'} v_{h''}
/// (a conservative representation is a point of that affine space).
long long degree_bound(const Quiver& q, const DimVector& v);

enum class FitStatus {
    validated,      // enough points for the bound, and a held-out point matched
    unvalidated,    // enough points for the bound, nothing left over to check
    insufficient,   // fewer points than the bound demands; reduced-degree fit
    violation,      // a held-out point contradicted the fit
};

std::string_view fit_status_name(FitStatus s);

/// Conservative counts at a set of primes and the polynomial recovered
/// from them.
struct ConservativeFit {
    DimVector dim;
    std::vector<std::pair<uint32_t, uint64_t>> points;   // (prime, count)
    std::vector<uint32_t> skipped_primes;                // over budget
    LaurentPoly poly;
    FitStatus status = FitStatus::unvalidated;

    bool validated() const { return status == FitStatus::validated; }
};

/// Count conservative representations at each prime within budget and
/// interpolate. Primes whose representation space exceeds the budget are
/// recorded as skipped. With fewer in-budget points than the degree bound
/// demands: throws precondition_error unless allow_insufficient, in which
/// case the fit uses all available points at a reduced bound and is
/// flagged.
ConservativeFit conservative_fit(const Quiver& q, const DimVector& v,
                                 std::span<const uint32_t> primes, uint64_t budget,
                                 bool allow_insufficient);

/// Strict form: the recovered polynomial, or an error when the primes are
/// not sufficient within budget.
LaurentPoly conservative_poly(const Quiver& q, const DimVector& v,
                              std::span<const uint32_t> primes,
                              uint64_t budget = kDefaultEnumerationBudget);

/// Conservative counting polynomials for every v up to a total degree.
/// Default prime policy per vector: the first degree_bound+1 primes plus
/// one held-out validation prime.
class CountTable {
public:
    static CountTable build(const Quiver& q, int max_degree,
                            uint64_t budget = kDefaultEnumerationBudget);
    /// Same, with an explicit prime list used for every vector.
    static CountTable build_with_primes(const Quiver& q, int max_degree,
                                        std::span<const uint32_t> primes, uint64_t budget);

    const Quiver& quiver() const { return quiver_; }
    int max_degree() const { return max_degree_; }
    const std::map<DimVector, ConservativeFit>& entries() const { return entries_; }
    const ConservativeFit& fit(const DimVector& v) const;
    const LaurentPoly& poly(const DimVector& v) const { return fit(v).poly; }
    bool fully_validated() const;

private:
    CountTable(Quiver q, int max_degree) : quiver_(std::move(q)), max_degree_(max_degree) {}
    Quiver quiver_;
    int max_degree_;
    std::map<DimVector, ConservativeFit> entries_;
};

} // namespace qrep
