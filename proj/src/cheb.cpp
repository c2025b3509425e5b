#include "freestein/cheb.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace freestein::cheb {

double eval_T(int k, double s) {
    if (k == 0) return 1.0;
    if (k == 1) return s;
    double tm = 1.0, t = s;
    for (int i = 2; i <= k; ++i) {
        double tn = 2.0 * s * t - tm;
        tm = t;
        t = tn;
    }
    return t;
}

double eval_U(int k, double s) {
    if (k < 0) return 0.0;
    if (k == 0) return 1.0;
    double um = 1.0, u = 2.0 * s;
    for (int i = 2; i <= k; ++i) {
        double un = 2.0 * s * u - um;
        um = u;
        u = un;
    }
    return u;
}

double clenshaw_T(const std::vector<double>& c, double s) {
    double b1 = 0.0, b2 = 0.0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
        double b0 = 2.0 * s * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return s * b1 - b2 + (c.empty() ? 0.0 : c[0]);
}

double clenshaw_U(const std::vector<double>& c, double s) {
    double b1 = 0.0, b2 = 0.0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        double b0 = 2.0 * s * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return b1 - s * b2;
}

std::vector<double> fit_T(const std::function<double(double)>& f, int n) {
    if (n < 1) throw std::invalid_argument("fit_T: need n >= 1");
    std::vector<double> fv(n + 1);
    for (int j = 0; j <= n; ++j) fv[j] = f(std::cos(j * M_PI / n));
    std::vector<double> c(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        double acc = 0.5 * (fv[0] + ((k % 2) ? -fv[n] : fv[n]));
        for (int j = 1; j < n; ++j) acc += fv[j] * std::cos(k * j * M_PI / n);
        c[k] = 2.0 * acc / n;
    }
    c[0] *= 0.5;
    c[n] *= 0.5;
    return c;
}

Series::Series(double a, double b, std::vector<double> coeffs)
    : a_(a), b_(b), c_(std::move(coeffs)) {
    assert(a_ < b_);
    if (c_.empty()) c_.push_back(0.0);
}

Series Series::fit(const std::function<double(double)>& f, double a, double b, int n) {
    const double m = 0.5 * (a + b), h = 0.5 * (b - a);
    return Series(a, b, fit_T([&](double s) { return f(m + h * s); }, n));
}

double Series::operator()(double x) const { return clenshaw_T(c_, s_of(x)); }

Series Series::derivative() const {
    const int n = degree();
    std::vector<double> d(n + 2, 0.0);
    for (int k = n - 1; k >= 0; --k) d[k] = d[k + 2] + 2.0 * (k + 1) * c_[k + 1];
    d[0] *= 0.5;
    d.resize(std::max(n, 1));
    const double h = 0.5 * (b_ - a_);
    for (auto& v : d) v /= h;
    return Series(a_, b_, std::move(d));
}

Series Series::antiderivative(double x0) const {
    const int n = degree();
    std::vector<double> A(n + 2, 0.0);
    auto coef = [&](int k) { return k <= n ? c_[k] : 0.0; };
    for (int k = 1; k <= n + 1; ++k)
        A[k] = (coef(k - 1) * (k == 1 ? 2.0 : 1.0) - coef(k + 1)) / (2.0 * k);
    const double h = 0.5 * (b_ - a_);
    for (auto& v : A) v *= h;
    Series out(a_, b_, std::move(A));
    out.c_[0] -= out(x0);
    return out;
}

double Series::deriv(double x, int order) const {
    Series d = *this;
    for (int i = 0; i < order; ++i) d = d.derivative();
    return d(x);
}

double Series::dd(double x, double y) const {
    const double s = std::clamp(s_of(x), -1.0, 1.0);
    const double t = std::clamp(s_of(y), -1.0, 1.0);
    const double u = std::acos(s), v = std::acos(t);
    const double P = std::cos(0.5 * (u + v)), Q = std::cos(0.5 * (u - v));
    // sum_k c_k U_{k-1}(P) U_{k-1}(Q), coupled recurrences
    double acc = 0.0;
    double upm = 0.0, up = 1.0;  // U_{-1}, U_0 at P
    double uqm = 0.0, uq = 1.0;  // at Q
    for (std::size_t k = 1; k < c_.size(); ++k) {
        acc += c_[k] * up * uq;
        double upn = 2.0 * P * up - upm;
        double uqn = 2.0 * Q * uq - uqm;
        upm = up;
        up = upn;
        uqm = uq;
        uq = uqn;
    }
    const double h = 0.5 * (b_ - a_);
    return acc / h;
}

double Series::sdd(double x, double y) const {
    const double w = b_ - a_;
    if (std::abs(x - y) <= 1e-6 * w) {
        Series d2 = derivative().derivative();
        Series d3 = d2.derivative();
        return 0.5 * d2(x) + (y - x) / 6.0 * d3(x);
    }
    return (deriv(x) - dd(x, y)) / (x - y);
}

void Series::truncate(double rel_tol) {
    double scale = 0.0;
    for (double v : c_) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) {
        c_.assign(1, 0.0);
        return;
    }
    std::size_t last = 0;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (std::abs(c_[k]) > rel_tol * scale) last = k;
    c_.resize(last + 1);
}

double Series::min_on_grid(int n) const {
    double lo = (*this)(a_);
    for (int j = 0; j <= n; ++j) {
        double x = a_ + (b_ - a_) * j / n;
        lo = std::min(lo, (*this)(x));
    }
    return lo;
}

double Series::max_on_grid(int n) const {
    double hi = (*this)(a_);
    for (int j = 0; j <= n; ++j) {
        double x = a_ + (b_ - a_) * j / n;
        hi = std::max(hi, (*this)(x));
    }
    return hi;
}

}  // namespace freestein::cheb
