#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace freestein::cheb {

/// T_k(s) for s in [-1,1] (three-term recurrence; |s| slightly outside is
/// tolerated and clamped by callers when appropriate).
double eval_T(int k, double s);

/// U_k(s), classical second-kind polynomial on [-1,1] (U_1 = 2s).
double eval_U(int k, double s);

/// Clenshaw sum of a T-series: sum_k c[k] T_k(s).
double clenshaw_T(const std::vector<double>& c, double s);

/// Clenshaw sum of a U-series: sum_k c[k] U_k(s).
double clenshaw_U(const std::vector<double>& c, double s);

/// Chebyshev-Lobatto interpolation coefficients: returns c with
/// f(s) ~ sum_{k=0}^{n} c[k] T_k(s) interpolating at s_j = cos(j pi / n).
std::vector<double> fit_T(const std::function<double(double)>& f, int n);

/// A Chebyshev T-series on an interval [a,b]; the workhorse smooth-function
/// representation. All divided differences are evaluated through the product
/// identity JT_k(s,t) = U_{k-1}(cos((u+v)/2)) U_{k-1}(cos((u-v)/2)) with
/// s=cos u, t=cos v, which is cancellation-free including the diagonal.
class Series {
public:
    Series() = default;
    Series(double a, double b, std::vector<double> coeffs);

    /// Interpolate f at n+1 Lobatto nodes of [a,b].
    static Series fit(const std::function<double(double)>& f, double a, double b, int n);

    double a() const { return a_; }
    double b() const { return b_; }
    const std::vector<double>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    double operator()(double x) const;
    double deriv(double x, int order = 1) const;

    /// Divided difference (p(x)-p(y))/(x-y), diagonal p'(x); stable everywhere.
    double dd(double x, double y) const;
    /// Second divided difference p[x,x,y] = (p'(x)-dd(x,y))/(x-y), diagonal p''(x)/2.
    double sdd(double x, double y) const;

    Series derivative() const;
    /// Antiderivative anchored so that the result vanishes at x0.
    Series antiderivative(double x0) const;

    /// Drop trailing coefficients below rel_tol * max|c|.
    void truncate(double rel_tol = 1e-14);

    double min_on_grid(int n = 512) const;
    double max_on_grid(int n = 512) const;

private:
    double s_of(double x) const { return (2.0 * x - a_ - b_) / (b_ - a_); }
    double a_ = -1.0, b_ = 1.0;
    std::vector<double> c_;
};

}  // namespace freestein::cheb
