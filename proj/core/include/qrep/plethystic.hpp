#pragma once

#include "qrep/comm_series.hpp"
#include "qrep/conservative.hpp"
#include "qrep/torus_series.hpp"

namespace qrep {

/// Adams operation on a torus series: q -> q^k, X^v -> X^(kv).
TorusSeries adams_twisted(const TorusSeries& f, int k);

/// Plethystic exponential in the quantum torus: exp of the Adams sum with
/// all powers taken under the twisted product. Requires zero constant term.
TorusSeries exp_pleth_twisted(const TorusSeries& f);
/// Its inverse (Moebius-Adams inversion of the twisted log); requires
/// constant term 1.
TorusSeries log_pleth_twisted(const TorusSeries& g);

/// One extracted polynomial s(v,q) or a(v,q), with its reporting flags.
struct KacEntry {
    DimVector v;
    RatFunc value;
    bool polynomial = false;       // value has denominator 1
    bool integer_coeffs = false;   // and all coefficients are integers
};

struct KacResult {
    std::vector<KacEntry> entries;       // 1 <= |v| <= D, sorted
    bool roundtrip_residual_zero = false;
};

/// Absolutely simple conservative counts: solves
///   (sum_v c(v,q)/gl(v,q) X^v) o Exp(sum_{v!=0} s(v,q)/(1-q) X^v) = 1
/// in the quantum torus via series inversion and the twisted plethystic
/// logarithm. Requires a sink/source-free quiver and a count table
/// covering all |v| <= D. The round-trip flag re-substitutes the returned
/// values and checks the product is exactly the unit series.
KacResult solve_s(const Quiver& q, const CountTable& table, int max_degree);

/// Left-hand side of the Hua-style identity:
///   1 + sum over tuples (v^1..v^r), v^r != 0, of
///   prod_s q^(<v^s,v^s> - <b^s,b^s>) c(v^s,q)/gl(v^s,q) X^(s v^s),
/// with b^s the suffix sum. Tuples are enumerated over the exact finite
/// index set with monomial degree sum_s s|v^s| <= D (zero parts allowed
/// before the last). max_parts deepens the position cap beyond its derived
/// bound; any value >= D is provably equivalent.
CommSeries build_hua_lhs(const Quiver& q, const CountTable& table, int max_degree,
                         int max_parts = -1);

/// Absolutely indecomposable conservative counts: a(v,q) = (q-1) times the
/// commutative plethystic logarithm of the Hua left-hand side.
KacResult solve_a(const Quiver& q, const CountTable& table, int max_degree);

} // namespace qrep
