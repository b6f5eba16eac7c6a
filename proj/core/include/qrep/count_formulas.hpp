#pragma once

#include "qrep/laurent.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

/// Which class of representations a counting polynomial refers to.
enum class CountKind { all, nilpotent, monomorphic, epimorphic };

/// |GL(s, F_q)| as a polynomial: prod_{i=0}^{s-1} (t^s - t^i); gl(0) = 1.
LaurentPoly gl_factor(int s);
/// prod_i gl_factor(v_i).
LaurentPoly gl_poly(const DimVector& v);

/// The four counting polynomials. A quiver with sources or sinks is
/// replaced by its extension and v is padded with a zero entry for the new
/// vertex, so callers always pass v on the quiver they have.
///
/// r: t^(v.v - <v,v>), the size of the representation space.
LaurentPoly r_poly(const Quiver& q, const DimVector& v);
/// m: t^<v,v> gl(v_out)/gl(v_out - v) when v_out >= v, else 0.
LaurentPoly m_poly(const Quiver& q, const DimVector& v);
/// e: the same with v_in in place of v_out.
LaurentPoly e_poly(const Quiver& q, const DimVector& v);
/// n: the nilpotent count, via the tuple sum over all chains
/// (v1, v2, ...) of nonzero vectors with sum v and v_in(vk) >= v(k+1).
LaurentPoly n_poly(const Quiver& q, const DimVector& v);
LaurentPoly count_poly(const Quiver& q, CountKind kind, const DimVector& v);

/// The H factor of the nilpotent tuple sum, on the quiver as given (no
/// extension): t^((v_in - w).(v_in - w) - v_in.v_in) gl(v_in)/gl(v_in - w).
/// Genuinely Laurent; requires v_in >= w componentwise.
LaurentPoly h_func(const Quiver& q, const DimVector& v, const DimVector& w);

/// The index set of the nilpotent tuple sum, on the quiver as given.
std::vector<std::vector<DimVector>> enumerate_tuples(const Quiver& q, const DimVector& v);

} // namespace qrep
