#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qrep/errors.hpp"
#include "qrep/rational.hpp"

namespace qrep {

class LaurentPoly;

/// Thrown when an exact division leaves a remainder. Carries the remainder
/// so callers can report exactly what failed to divide.
class division_error : public error {
public:
    division_error(const std::string& what, std::string remainder)
        : error(what), remainder_(std::move(remainder)) {}
    const std::string& remainder() const { return remainder_; }

private:
    std::string remainder_;
};

/// Dense univariate Laurent polynomial over Q.
///
/// Stored as the lowest exponent plus the coefficient run from there up;
/// zero is the empty run. Leading and trailing coefficients of a nonzero
/// value are nonzero, so equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& constant);
    explicit LaurentPoly(long constant);

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Rat(1)); }
    /// c * t^exp
    static LaurentPoly monomial(int exp, const Rat& c = Rat(1));
    /// coeffs[i] is the coefficient of t^(low + i).
    static LaurentPoly from_coeffs(int low, std::vector<Rat> coeffs);

    bool is_zero() const { return coef_.empty(); }
    bool is_one() const;
    /// True iff no negative exponents (the zero polynomial qualifies).
    bool is_polynomial() const { return coef_.empty() || low_ >= 0; }
    /// True iff of the form c * t^k.
    bool is_monomial() const { return coef_.size() == 1; }

    /// Exponent of the trailing term. Zero polynomial: 0 by convention.
    int min_exponent() const { return coef_.empty() ? 0 : low_; }
    /// Exponent of the leading term. Zero polynomial: 0 by convention.
    int degree() const { return coef_.empty() ? 0 : low_ + static_cast<int>(coef_.size()) - 1; }
    /// Coefficient of t^exp (0 if absent).
    const Rat& coeff(int exp) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rat& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
    friend LaurentPoly operator*(const Rat& c, LaurentPoly a) { return a *= c; }

    bool operator==(const LaurentPoly& o) const { return low_same(o) && coef_ == o.coef_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Multiply by t^k.
    LaurentPoly shifted(int k) const;

    /// Exact division in the Laurent ring; throws division_error (carrying
    /// the remainder) if the divisor does not divide exactly.
    LaurentPoly div_exact(const LaurentPoly& divisor) const;

    /// Ordinary polynomial division: *this = q * divisor + r with
    /// deg r < deg divisor. Requires both operands polynomial (low >= 0).
    void div_rem(const LaurentPoly& divisor, LaurentPoly& quot, LaurentPoly& rem) const;

    /// Exact evaluation. Throws pole_error when x = 0 meets a negative
    /// exponent.
    Rat eval(const Rat& x) const;

    /// Substitute t -> t^k (k >= 1).
    LaurentPoly adams(int k) const;

    /// Derived data used all over the place.
    const Rat& leading_coeff() const;
    bool integer_coeffs() const;

    /// Human-readable form, highest exponent first: "q^8 - q^5 - q^4 + q".
    std::string str(std::string_view var = "t") const;

    /// All (exponent, coefficient) pairs, ascending exponent.
    std::vector<std::pair<int, Rat>> terms() const;

private:
    bool low_same(const LaurentPoly& o) const {
        return coef_.empty() ? o.coef_.empty() : low_ == o.low_;
    }
    void normalize();

    int low_ = 0;
    std::vector<Rat> coef_;
};

/// Monic gcd of two polynomials (low >= 0 required); gcd(0,0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

} // namespace qrep
