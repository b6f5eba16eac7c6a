#include "qrep/ratfunc.hpp"

namespace qrep {

RatFunc::RatFunc(const Rat& constant) : num_(LaurentPoly(constant)) {}
RatFunc::RatFunc(long constant) : num_(LaurentPoly(constant)) {}

RatFunc::RatFunc(const LaurentPoly& p) {
    int low = p.min_exponent();
    if (p.is_zero() || low >= 0) {
        num_ = p;
    } else {
        num_ = p.shifted(-low);
        den_ = LaurentPoly::monomial(-low);
    }
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw division_error("rational function with zero denominator", "0");
    // Clear any negative exponents before reducing.
    int shift = std::min(std::min(num.min_exponent(), den.min_exponent()), 0);
    num_ = num.shifted(-shift);
    den_ = den.shifted(-shift);
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    const Rat& lead = den_.leading_coeff();
    if (lead != 1) {
        Rat inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

LaurentPoly RatFunc::as_laurent() const {
    if (!is_laurent())
        throw division_error("value is not a Laurent polynomial: denominator " + den_.str(),
                             den_.str());
    return num_.shifted(-den_.degree());
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw division_error("division by zero rational function", "0");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw pole_error("pole at " + rat_str(x));
    return num_.eval(x) / d;
}

RatFunc RatFunc::adams(int k) const {
    return RatFunc(num_.adams(k), den_.adams(k));
}

std::string RatFunc::str(std::string_view var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

} // namespace qrep
