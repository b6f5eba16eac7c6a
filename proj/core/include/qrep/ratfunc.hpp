#pragma once

#include <string>
#include <string_view>

#include "qrep/laurent.hpp"

namespace qrep {

/// Univariate rational function over Q in canonical form: numerator and
/// denominator are coprime ordinary polynomials and the denominator is
/// monic, so operator== is structural equality of values.
class RatFunc {
public:
    RatFunc() = default;                       // zero
    explicit RatFunc(const Rat& constant);
    explicit RatFunc(long constant);
    /// Laurent polynomials embed: negative exponents go to the denominator.
    RatFunc(const LaurentPoly& p);
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// Denominator 1.
    bool is_polynomial() const { return den_.is_one(); }
    /// Denominator a power of t, i.e. the value is a Laurent polynomial.
    bool is_laurent() const { return den_.is_monomial(); }
    /// Convert; throws division_error when the value is not Laurent.
    LaurentPoly as_laurent() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Exact evaluation at x; throws pole_error when the denominator
    /// vanishes there.
    Rat eval(const Rat& x) const;

    /// Substitute t -> t^k (k >= 1). Coprimality and monicity survive the
    /// substitution, but we renormalize anyway.
    RatFunc adams(int k) const;

    std::string str(std::string_view var = "t") const;

private:
    void reduce();

    LaurentPoly num_;                 // zero: num_ = 0, den_ = 1
    LaurentPoly den_ = LaurentPoly::one();
};

} // namespace qrep
