#include "qrep/comm_series.hpp"

namespace qrep {

int moebius(int n) {
    if (n < 1) throw precondition_error("moebius of non-positive argument");
    int mu = 1;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        n /= d;
        if (n % d == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

CommSeries::CommSeries(int nvars, int max_degree) : nvars_(nvars), max_degree_(max_degree) {
    if (nvars < 1) throw precondition_error("series needs at least one variable");
    if (max_degree < 0) throw precondition_error("negative truncation degree");
}

CommSeries CommSeries::one(int nvars, int max_degree) {
    CommSeries s(nvars, max_degree);
    s.set_coeff(DimVector(static_cast<size_t>(nvars), 0), RatFunc(1));
    return s;
}

RatFunc CommSeries::coeff(const DimVector& v) const {
    auto it = coef_.find(v);
    return it == coef_.end() ? RatFunc() : it->second;
}

void CommSeries::set_coeff(const DimVector& v, RatFunc c) {
    if (static_cast<int>(v.size()) != nvars_)
        throw dimension_mismatch("exponent vector of wrong length");
    if (dim_total(v) > max_degree_)
        throw dimension_mismatch("coefficient beyond truncation degree at " + dim_str(v));
    if (c.is_zero())
        coef_.erase(v);
    else
        coef_[v] = std::move(c);
}

RatFunc CommSeries::constant_term() const {
    return coeff(DimVector(static_cast<size_t>(nvars_), 0));
}

void CommSeries::check_compatible(const CommSeries& o) const {
    if (nvars_ != o.nvars_) throw dimension_mismatch("series in different variable counts");
    if (max_degree_ != o.max_degree_) throw dimension_mismatch("series with different truncation");
}

CommSeries CommSeries::operator-() const {
    CommSeries r(*this);
    for (auto& [v, c] : r.coef_) c = -c;
    return r;
}

CommSeries& CommSeries::operator+=(const CommSeries& o) {
    check_compatible(o);
    for (const auto& [v, c] : o.coef_) set_coeff(v, coeff(v) + c);
    return *this;
}

CommSeries& CommSeries::operator-=(const CommSeries& o) {
    check_compatible(o);
    for (const auto& [v, c] : o.coef_) set_coeff(v, coeff(v) - c);
    return *this;
}

CommSeries& CommSeries::operator*=(const RatFunc& c) {
    if (c.is_zero()) {
        coef_.clear();
        return *this;
    }
    for (auto& [v, x] : coef_) x *= c;
    return *this;
}

CommSeries CommSeries::mul(const CommSeries& o) const {
    check_compatible(o);
    CommSeries out(nvars_, max_degree_);
    for (const auto& [v, cv] : coef_) {
        long long dv = dim_total(v);
        for (const auto& [w, cw] : o.coef_) {
            if (dv + dim_total(w) > max_degree_) continue;
            DimVector u = dim_add(v, w);
            out.set_coeff(u, out.coeff(u) + cv * cw);
        }
    }
    return out;
}

bool CommSeries::operator==(const CommSeries& o) const {
    return nvars_ == o.nvars_ && max_degree_ == o.max_degree_ && coef_ == o.coef_;
}

CommSeries adams(const CommSeries& f, int k) {
    if (k < 1) throw precondition_error("adams operation requires k >= 1");
    CommSeries out(f.nvars(), f.max_degree());
    for (const auto& [v, c] : f.coefficients()) {
        DimVector kv = dim_scale(k, v);
        if (dim_total(kv) > f.max_degree()) continue;
        out.set_coeff(kv, c.adams(k));
    }
    return out;
}

namespace {

/// exp of a series with zero constant term: sum_j f^j / j!.
CommSeries exp_series(const CommSeries& f) {
    CommSeries out = CommSeries::one(f.nvars(), f.max_degree());
    CommSeries power = out;
    Rat factorial(1);
    for (int j = 1; j <= f.max_degree(); ++j) {
        power = power * f;
        factorial *= j;
        out += power * RatFunc(Rat(1) / factorial);
    }
    return out;
}

/// log of a series with constant term 1: sum_j (-1)^(j+1) (g-1)^j / j.
CommSeries log_series(const CommSeries& g) {
    CommSeries x = g - CommSeries::one(g.nvars(), g.max_degree());
    CommSeries out(g.nvars(), g.max_degree());
    CommSeries power = CommSeries::one(g.nvars(), g.max_degree());
    for (int j = 1; j <= g.max_degree(); ++j) {
        power = power * x;
        Rat c(j % 2 ? 1 : -1, j);
        out += power * RatFunc(c);
    }
    return out;
}

} // namespace

CommSeries exp_pleth(const CommSeries& f) {
    if (!f.constant_term().is_zero())
        throw precondition_error("exp_pleth requires zero constant term");
    // adams(f,k) has no terms below total degree k, so the sum is finite.
    CommSeries arg(f.nvars(), f.max_degree());
    for (int k = 1; k <= f.max_degree(); ++k)
        arg += adams(f, k) * RatFunc(Rat(1, k));
    return exp_series(arg);
}

CommSeries log_pleth(const CommSeries& g) {
    if (!(g.constant_term() == RatFunc(1)))
        throw precondition_error("log_pleth requires constant term 1");
    CommSeries l = log_series(g);
    CommSeries out(g.nvars(), g.max_degree());
    for (int k = 1; k <= g.max_degree(); ++k) {
        int mu = moebius(k);
        if (mu) out += adams(l, k) * RatFunc(Rat(mu, k));
    }
    return out;
}

} // namespace qrep
