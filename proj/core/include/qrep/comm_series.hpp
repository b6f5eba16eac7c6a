#pragma once

#include <map>

#include "qrep/quiver.hpp"
#include "qrep/ratfunc.hpp"

namespace qrep {

/// Moebius function, for the Adams-sum inversion inside plethystic Log.
int moebius(int n);

/// Truncated commutative power series in n variables over rational
/// functions in q. Exponent vectors are graded by total degree; zero
/// coefficients are not stored.
class CommSeries {
public:
    CommSeries(int nvars, int max_degree);
    static CommSeries one(int nvars, int max_degree);

    int nvars() const { return nvars_; }
    int max_degree() const { return max_degree_; }
    const std::map<DimVector, RatFunc>& coefficients() const { return coef_; }

    RatFunc coeff(const DimVector& v) const;
    void set_coeff(const DimVector& v, RatFunc c);
    RatFunc constant_term() const;

    CommSeries operator-() const;
    CommSeries& operator+=(const CommSeries& o);
    CommSeries& operator-=(const CommSeries& o);
    CommSeries& operator*=(const RatFunc& c);
    friend CommSeries operator+(CommSeries a, const CommSeries& b) { return a += b; }
    friend CommSeries operator-(CommSeries a, const CommSeries& b) { return a -= b; }
    friend CommSeries operator*(CommSeries a, const RatFunc& c) { return a *= c; }

    /// Commutative Cauchy product, truncated.
    CommSeries mul(const CommSeries& o) const;
    friend CommSeries operator*(const CommSeries& a, const CommSeries& b) { return a.mul(b); }

    bool operator==(const CommSeries& o) const;
    bool operator!=(const CommSeries& o) const { return !(*this == o); }

private:
    void check_compatible(const CommSeries& o) const;

    int nvars_;
    int max_degree_;
    std::map<DimVector, RatFunc> coef_;
};

/// Adams operation: q -> q^k in every coefficient and X^v -> X^(kv).
CommSeries adams(const CommSeries& f, int k);

/// Plethystic exponential exp(sum_k adams(f,k)/k); f must have zero
/// constant term. Inverse pair with log_pleth.
CommSeries exp_pleth(const CommSeries& f);
/// Plethystic logarithm; g must have constant term 1.
CommSeries log_pleth(const CommSeries& g);

} // namespace qrep
