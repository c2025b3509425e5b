#pragma once

#include <cstddef>
#include <vector>

namespace freestein {

/// Dense univariate polynomial in the monomial basis, c[i] x^i. Divided
/// differences go through homogeneous-sum recurrences, so they are exact up
/// to rounding with no diagonal trouble.
class Poly {
public:
    Poly() : c_(1, 0.0) {}
    explicit Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(0.0);
    }
    static Poly monomial(int degree, double coeff = 1.0) {
        std::vector<double> c(degree + 1, 0.0);
        c[degree] = coeff;
        return Poly(std::move(c));
    }

    const std::vector<double>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    double operator()(double x) const {
        double acc = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<double> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = i * c_[i];
        return Poly(std::move(d));
    }

    Poly antiderivative() const {  // anchored at 0
        std::vector<double> a(c_.size() + 1, 0.0);
        for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / (i + 1.0);
        return Poly(std::move(a));
    }

    /// (p(x)-p(y))/(x-y); diagonal p'(x). Uses h_m = sum_{a+b=m} x^a y^b.
    double dd(double x, double y) const {
        double acc = 0.0, h = 0.0;  // h_{-1} = 0
        // iterate m = 0..deg-1 with h_m = x h_{m-1} + y^m
        double ym = 1.0;
        for (std::size_t m = 0; m + 1 < c_.size(); ++m) {
            h = x * h + ym;
            ym *= y;
            acc += c_[m + 1] * h;
        }
        return acc;
    }

    /// p[x,x,y] = d/dx of dd(x,y); diagonal p''(x)/2.
    double sdd(double x, double y) const {
        double acc = 0.0, h = 0.0, g = 0.0, ym = 1.0;
        // g_m = sum_{a+b=m} (a+1) x^a y^b = x g_{m-1} + h_m
        for (std::size_t m = 0; m + 2 < c_.size(); ++m) {
            h = x * h + ym;
            ym *= y;
            g = x * g + h;
            acc += c_[m + 2] * g;
        }
        return acc;
    }

    /// p[x,x,x,y]; diagonal p'''(x)/6.
    double tdd(double x, double y) const {
        double acc = 0.0, h = 0.0, g = 0.0, q = 0.0, ym = 1.0;
        for (std::size_t m = 0; m + 3 < c_.size(); ++m) {
            h = x * h + ym;
            ym *= y;
            g = x * g + h;
            q = x * q + g;
            acc += c_[m + 3] * q;
        }
        return acc;
    }

    Poly operator+(const Poly& o) const {
        std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(double s) const {
        std::vector<double> r = c_;
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }

    /// Dilated Chebyshev polynomial of the second kind on [-2,2]:
    /// u_0 = 1, u_1 = x, u_{n+1} = x u_n - u_{n-1}.
    static Poly chebU2(int n) {
        Poly um(std::vector<double>{1.0});
        if (n == 0) return um;
        Poly u = monomial(1);
        for (int k = 2; k <= n; ++k) {
            Poly un = monomial(1) * u - um;
            um = u;
            u = un;
        }
        return u;
    }

private:
    std::vector<double> c_;
};

}  // namespace freestein
