#pragma once

#include <memory>
#include <optional>

#include "freestein/cheb.hpp"
#include "freestein/measure.hpp"
#include "freestein/poly.hpp"

namespace freestein {

/// A smooth strictly convex potential u with u(0) = 0, represented either by
/// monomial coefficients of u or by a Chebyshev interpolant of u' on a
/// working interval (optionally extended linearly outside it, which is what
/// the moment-map iteration needs). kappa() is the certified grid minimum of
/// u'' on the working interval.
class ConvexPotential {
public:
    static ConvexPotential from_poly(Poly u, SupportInterval working = {-20.0, 20.0});
    static ConvexPotential from_uprime(cheb::Series uprime, bool linear_extension);
    static ConvexPotential quadratic(double c) {  // c/2 x^2
        return from_poly(Poly({0.0, 0.0, 0.5 * c}));
    }

    double u(double x) const;
    double du(double x) const;
    double d2u(double x) const;
    double d3u(double x) const;

    /// Divided difference of u' (the one-dimensional noncommutative Hessian);
    /// diagonal u''(x), switch at |x-y| <= 1e-6 * working width.
    double dd_du(double x, double y) const;
    /// d/dx of dd_du.
    double sdd_du(double x, double y) const;
    /// d^2/dx^2 of dd_du (two times the third divided difference).
    double tdd_du(double x, double y) const;

    double kappa() const { return kappa_; }
    const SupportInterval& working() const { return working_; }
    bool is_poly() const { return poly_.has_value(); }
    const Poly& poly() const;
    bool extends_linearly() const { return extend_; }

    /// Monotone inverse of u': the unique x with u'(x) = y.
    double inverse_du(double y) const;

private:
    ConvexPotential() = default;
    void validate();
    // interpolant pieces
    double core_a() const { return working_.a; }
    double core_b() const { return working_.b; }

    std::optional<Poly> poly_;        // u itself, when polynomial
    Poly dpoly_, d2poly_, d3poly_;    // cached derivatives of the polynomial
    // interpolant representation of u'
    std::shared_ptr<const cheb::Series> up_, up1_, up2_, up3_;
    std::shared_ptr<const cheb::Series> uint_;  // antiderivative of u'
    double slope_a_ = 0.0, slope_b_ = 0.0;      // extension slopes
    bool extend_ = false;

    SupportInterval working_{-20.0, 20.0};
    double kappa_ = 0.0;
};

}  // namespace freestein
