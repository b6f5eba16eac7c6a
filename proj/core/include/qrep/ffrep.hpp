#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qrep/modp.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

/// Hard cap on representations visited per enumeration call.
inline constexpr uint64_t kDefaultEnumerationBudget = uint64_t(1) << 24;

/// Subrepresentation, stored as one canonical RREF basis per vertex, so
/// equality is structural.
struct SubRep {
    std::vector<MatModP> basis;
    DimVector dims() const;
    bool operator==(const SubRep&) const = default;
};

/// A representation over a prime field: one matrix per arrow, column
/// convention f_h(x) = matrix * x, shape dims[target] x dims[source].
class FFRep {
public:
    FFRep(Quiver quiver, uint32_t p, DimVector dims);

    const Quiver& quiver() const { return quiver_; }
    const PrimeField& field() const { return field_; }
    uint32_t prime() const { return field_.p; }
    const DimVector& dims() const { return dims_; }
    const MatModP& matrix(int arrow) const { return mats_[static_cast<size_t>(arrow)]; }
    MatModP& matrix(int arrow) { return mats_[static_cast<size_t>(arrow)]; }

private:
    Quiver quiver_;
    PrimeField field_;
    DimVector dims_;
    std::vector<MatModP> mats_;
};

/// sigma_i injective at every vertex (stacked map into the out-neighbours).
bool is_monomorphic(const FFRep& m);
/// tau_i surjective at every vertex (concatenated map from the in-neighbours).
bool is_epimorphic(const FFRep& m);
/// The im^- chain from 0 absorbs all of m.
bool is_nilpotent(const FFRep& m);

SubRep zero_subrep(const FFRep& m);
SubRep full_subrep(const FFRep& m);
/// Shape check plus closure under every arrow map.
bool is_subrep(const FFRep& m, const SubRep& n);

/// Preimage-intersection operator: U_i is the intersection of f_h^{-1}(N_{h''})
/// over arrows leaving i; a vertex with no outgoing arrows contributes the
/// full space. Always contains n.
SubRep im_minus(const FFRep& m, const SubRep& n);
/// Image-sum operator: U_i is the sum of f_h(N_{h'}) over arrows entering i;
/// a vertex with no incoming arrows contributes 0. Always contained in n.
SubRep im_plus(const FFRep& m, const SubRep& n);

/// Fixpoint of 0 under im^-: the unique maximal nilpotent subrepresentation.
SubRep max_nilpotent_subrep(const FFRep& m);
/// Fixpoint of m under im^+: the unique maximal epimorphic subrepresentation.
SubRep max_epimorphic_subrep(const FFRep& m);

/// Quotient representation m / n on the complement coordinates (the
/// non-pivot columns of each RREF basis), with the induced maps.
FFRep quotient(const FFRep& m, const SubRep& n);
/// The subrepresentation as a representation in its own basis.
FFRep subrep_restrict(const FFRep& m, const SubRep& n);

/// All subrepresentations of m, as canonical SubReps. Throws budget_error
/// when the product of the per-vertex subspace-lattice sizes exceeds budget.
std::vector<SubRep> enumerate_subreps(const FFRep& m, uint64_t budget = kDefaultEnumerationBudget);

struct ClassifyCounts {
    uint64_t total = 0;
    uint64_t nilpotent = 0;
    uint64_t monomorphic = 0;
    uint64_t epimorphic = 0;
    uint64_t conservative = 0;
    bool operator==(const ClassifyCounts&) const = default;
};

/// Visit every representation of the given dimension vector exactly once.
/// The callback sees one mutable-in-place FFRep; it must not retain it.
void for_each_representation(const Quiver& q, const DimVector& v, uint32_t p, uint64_t budget,
                             const std::function<void(const FFRep&)>& fn);

/// Exhaustive classification of all p^(sum_h v_{h'} v_{h''}) representations.
ClassifyCounts enumerate_and_classify(const Quiver& q, const DimVector& v, uint32_t p,
                                      uint64_t budget = kDefaultEnumerationBudget);

struct UniqueFactorizationReport {
    uint64_t nilpotent_mono_subreps = 0;   // #U with U nilpotent, m/U monomorphic
    uint64_t epi_nilpotent_subreps = 0;    // #E with E epimorphic, m/E nilpotent
    bool max_nilpotent_matches = false;
    bool max_epimorphic_matches = false;
    bool pass() const {
        return nilpotent_mono_subreps == 1 && epi_nilpotent_subreps == 1 &&
               max_nilpotent_matches && max_epimorphic_matches;
    }
};

/// Checks, by full subrepresentation enumeration, that m has exactly one
/// subrep U with U nilpotent and m/U monomorphic (and that it is the im^-
/// fixpoint), and exactly one subrep E with E epimorphic and m/E nilpotent
/// (the im^+ fixpoint).
UniqueFactorizationReport verify_unique_factorization(const FFRep& m,
                                                      uint64_t budget = kDefaultEnumerationBudget);

} // namespace qrep
