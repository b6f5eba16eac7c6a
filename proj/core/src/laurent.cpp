#include "qrep/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qrep {

LaurentPoly::LaurentPoly(const Rat& constant) {
    if (constant != 0) {
        low_ = 0;
        coef_.push_back(constant);
    }
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Rat(constant)) {}

LaurentPoly LaurentPoly::monomial(int exp, const Rat& c) {
    LaurentPoly p;
    if (c != 0) {
        p.low_ = exp;
        p.coef_.push_back(c);
    }
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<Rat> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coef_ = std::move(coeffs);
    p.normalize();
    return p;
}

bool LaurentPoly::is_one() const {
    return coef_.size() == 1 && low_ == 0 && coef_[0] == 1;
}

const Rat& LaurentPoly::coeff(int exp) const {
    static const Rat kZero(0);
    if (coef_.empty()) return kZero;
    int i = exp - low_;
    if (i < 0 || i >= static_cast<int>(coef_.size())) return kZero;
    return coef_[static_cast<size_t>(i)];
}

void LaurentPoly::normalize() {
    size_t lead = coef_.size();
    while (lead > 0 && coef_[lead - 1] == 0) --lead;
    coef_.resize(lead);
    size_t trail = 0;
    while (trail < coef_.size() && coef_[trail] == 0) ++trail;
    if (trail > 0) {
        coef_.erase(coef_.begin(), coef_.begin() + static_cast<long>(trail));
        low_ += static_cast<int>(trail);
    }
    if (coef_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& c : r.coef_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.coef_.empty()) return *this;
    if (coef_.empty()) { *this = o; return *this; }
    int lo = std::min(low_, o.low_);
    int hi = std::max(degree(), o.degree());
    std::vector<Rat> out(static_cast<size_t>(hi - lo + 1), Rat(0));
    for (size_t i = 0; i < coef_.size(); ++i) out[static_cast<size_t>(low_ - lo) + i] += coef_[i];
    for (size_t i = 0; i < o.coef_.size(); ++i) out[static_cast<size_t>(o.low_ - lo) + i] += o.coef_[i];
    low_ = lo;
    coef_ = std::move(out);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    if (coef_.empty() || o.coef_.empty()) { *this = LaurentPoly(); return *this; }
    std::vector<Rat> out(coef_.size() + o.coef_.size() - 1, Rat(0));
    for (size_t i = 0; i < coef_.size(); ++i)
        for (size_t j = 0; j < o.coef_.size(); ++j)
            out[i + j] += coef_[i] * o.coef_[j];
    low_ += o.low_;
    coef_ = std::move(out);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
    if (c == 0) { *this = LaurentPoly(); return *this; }
    for (auto& x : coef_) x *= c;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r(*this);
    if (!r.coef_.empty()) r.low_ += k;
    return r;
}

void LaurentPoly::div_rem(const LaurentPoly& divisor, LaurentPoly& quot, LaurentPoly& rem) const {
    if (divisor.is_zero()) throw division_error("division by zero polynomial", "0");
    if (min_exponent() < 0 || divisor.min_exponent() < 0)
        throw precondition_error("div_rem requires ordinary polynomials");
    rem = *this;
    quot = LaurentPoly();
    const Rat& lead = divisor.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        Rat c = rem.leading_coeff() / lead;
        int e = rem.degree() - divisor.degree();
        LaurentPoly term = monomial(e, c);
        quot += term;
        rem -= term * divisor;
    }
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw division_error("division by zero polynomial", "0");
    if (is_zero()) return LaurentPoly();
    // Factor out the t-powers so that both operands become ordinary
    // polynomials with nonzero constant term, then long-divide.
    LaurentPoly a = shifted(-min_exponent());
    LaurentPoly b = divisor.shifted(-divisor.min_exponent());
    LaurentPoly q, r;
    a.div_rem(b, q, r);
    if (!r.is_zero())
        throw division_error("non-exact division: remainder " + r.str(), r.str());
    return q.shifted(min_exponent() - divisor.min_exponent());
}

Rat LaurentPoly::eval(const Rat& x) const {
    if (coef_.empty()) return Rat(0);
    if (low_ < 0 && x == 0)
        throw pole_error("evaluating negative exponent at 0");
    // Horner on the coefficient run, then the t^low_ factor.
    Rat acc(0);
    for (size_t i = coef_.size(); i-- > 0;) acc = acc * x + coef_[i];
    if (low_ > 0) {
        for (int i = 0; i < low_; ++i) acc *= x;
    } else if (low_ < 0) {
        Rat inv = 1 / x;
        for (int i = 0; i < -low_; ++i) acc *= inv;
    }
    return acc;
}

LaurentPoly LaurentPoly::adams(int k) const {
    if (k < 1) throw precondition_error("adams substitution requires k >= 1");
    if (k == 1 || coef_.empty()) return *this;
    LaurentPoly r;
    r.low_ = low_ * k;
    r.coef_.assign(coef_.size() * static_cast<size_t>(k) - static_cast<size_t>(k) + 1, Rat(0));
    for (size_t i = 0; i < coef_.size(); ++i) r.coef_[i * static_cast<size_t>(k)] = coef_[i];
    r.normalize();
    return r;
}

const Rat& LaurentPoly::leading_coeff() const {
    static const Rat kZero(0);
    return coef_.empty() ? kZero : coef_.back();
}

bool LaurentPoly::integer_coeffs() const {
    return std::all_of(coef_.begin(), coef_.end(), [](const Rat& c) { return rat_is_integer(c); });
}

std::vector<std::pair<int, Rat>> LaurentPoly::terms() const {
    std::vector<std::pair<int, Rat>> out;
    for (size_t i = 0; i < coef_.size(); ++i)
        if (coef_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coef_[i]);
    return out;
}

std::string LaurentPoly::str(std::string_view var) const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coef_.size(); i-- > 0;) {
        const Rat& c = coef_[i];
        if (c == 0) continue;
        int e = low_ + static_cast<int>(i);
        Rat a = c;
        if (first) {
            if (c < 0) { os << "-"; a = -c; }
            first = false;
        } else {
            if (c < 0) { os << " - "; a = -c; }
            else os << " + ";
        }
        bool unit = (a == 1) && e != 0;
        if (!unit) os << rat_str(a);
        if (e != 0) {
            if (!unit) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.min_exponent() < 0 || b.min_exponent() < 0)
        throw precondition_error("poly_gcd requires ordinary polynomials");
    LaurentPoly x = a, y = b;
    while (!y.is_zero()) {
        LaurentPoly q, r;
        x.div_rem(y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.is_zero()) x *= 1 / x.leading_coeff();
    return x;
}

} // namespace qrep
