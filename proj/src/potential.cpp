#include "freestein/potential.hpp"

#include <cmath>
#include <limits>

#include "freestein/errors.hpp"

namespace freestein {

ConvexPotential ConvexPotential::from_poly(Poly u, SupportInterval working) {
    ConvexPotential p;
    // anchor u(0) = 0 by dropping the constant term
    std::vector<double> c = u.coeffs();
    if (!c.empty()) c[0] = 0.0;
    p.poly_ = Poly(std::move(c));
    p.dpoly_ = p.poly_->derivative();
    p.d2poly_ = p.dpoly_.derivative();
    p.d3poly_ = p.d2poly_.derivative();
    p.working_ = working;
    p.validate();
    return p;
}

ConvexPotential ConvexPotential::from_uprime(cheb::Series uprime, bool linear_extension) {
    ConvexPotential p;
    p.working_ = {uprime.a(), uprime.b()};
    p.up_ = std::make_shared<const cheb::Series>(std::move(uprime));
    p.up1_ = std::make_shared<const cheb::Series>(p.up_->derivative());
    p.up2_ = std::make_shared<const cheb::Series>(p.up1_->derivative());
    p.up3_ = std::make_shared<const cheb::Series>(p.up2_->derivative());
    double anchor = (p.working_.a <= 0.0 && 0.0 <= p.working_.b) ? 0.0 : p.working_.mid();
    p.uint_ = std::make_shared<const cheb::Series>(p.up_->antiderivative(anchor));
    p.extend_ = linear_extension;
    p.slope_a_ = std::max((*p.up1_)(p.working_.a), 0.0);
    p.slope_b_ = std::max((*p.up1_)(p.working_.b), 0.0);
    p.validate();
    return p;
}

void ConvexPotential::validate() {
    const int n = 512;
    double kappa = std::numeric_limits<double>::infinity();
    double prev = du(working_.a);
    double scale = std::max(1.0, std::abs(prev));
    for (int i = 1; i <= n; ++i) {
        double x = working_.a + working_.width() * i / n;
        double v = du(x);
        scale = std::max(scale, std::abs(v));
        if (v < prev - 1e-12 * scale)
            throw NonConvexPotential("u' not increasing near x = " + std::to_string(x));
        prev = v;
        kappa = std::min(kappa, d2u(x));
    }
    kappa = std::min(kappa, d2u(working_.a));
    if (kappa < -1e-10 * scale)
        throw NonConvexPotential("u'' reaches " + std::to_string(kappa));
    kappa_ = std::max(kappa, 0.0);
}

const Poly& ConvexPotential::poly() const {
    if (!poly_) throw OutOfRange("potential is not polynomial");
    return *poly_;
}

double ConvexPotential::u(double x) const {
    if (poly_) return (*poly_)(x);
    if (x < core_a()) {
        if (!extend_) throw WorkingIntervalTooSmall("u(" + std::to_string(x) + ")");
        double t = x - core_a();
        return (*uint_)(core_a()) + (*up_)(core_a()) * t + 0.5 * slope_a_ * t * t;
    }
    if (x > core_b()) {
        if (!extend_) throw WorkingIntervalTooSmall("u(" + std::to_string(x) + ")");
        double t = x - core_b();
        return (*uint_)(core_b()) + (*up_)(core_b()) * t + 0.5 * slope_b_ * t * t;
    }
    return (*uint_)(x);
}

double ConvexPotential::du(double x) const {
    if (poly_) return dpoly_(x);
    if (x < core_a()) {
        if (!extend_) throw WorkingIntervalTooSmall("u'(" + std::to_string(x) + ")");
        return (*up_)(core_a()) + slope_a_ * (x - core_a());
    }
    if (x > core_b()) {
        if (!extend_) throw WorkingIntervalTooSmall("u'(" + std::to_string(x) + ")");
        return (*up_)(core_b()) + slope_b_ * (x - core_b());
    }
    return (*up_)(x);
}

double ConvexPotential::d2u(double x) const {
    if (poly_) return d2poly_(x);
    if (x < core_a()) return slope_a_;
    if (x > core_b()) return slope_b_;
    return (*up1_)(x);
}

double ConvexPotential::d3u(double x) const {
    if (poly_) return d3poly_(x);
    if (x < core_a() || x > core_b()) return 0.0;
    return (*up2_)(x);
}

double ConvexPotential::dd_du(double x, double y) const {
    if (poly_) return dpoly_.dd(x, y);
    const bool xin = x >= core_a() && x <= core_b();
    const bool yin = y >= core_a() && y <= core_b();
    if (xin && yin) return up_->dd(x, y);
    if (!extend_) throw WorkingIntervalTooSmall("dd_du outside working interval");
    if (!xin && !yin && ((x < core_a() && y < core_a()) || (x > core_b() && y > core_b())))
        return x < core_a() ? slope_a_ : slope_b_;
    // straddling a boundary: split at it so each piece stays cancellation-free
    if (x == y) return d2u(x);
    auto split = [&](double inner, double outer, double edge, double slope) {
        double num = up_->dd(inner, edge) * (inner - edge) + slope * (edge - outer);
        return num / (inner - outer);
    };
    if (xin && y > core_b()) return split(x, y, core_b(), slope_b_);
    if (xin && y < core_a()) return split(x, y, core_a(), slope_a_);
    if (yin && x > core_b()) return split(y, x, core_b(), slope_b_);
    if (yin && x < core_a()) return split(y, x, core_a(), slope_a_);
    // opposite sides: |x-y| is at least the core width, plain ratio is fine
    return (du(x) - du(y)) / (x - y);
}

double ConvexPotential::sdd_du(double x, double y) const {
    if (poly_) return dpoly_.sdd(x, y);
    const double w = working_.width();
    if (std::abs(x - y) <= 1e-6 * w)
        return 0.5 * d2u(x) + (y - x) / 6.0 * d3u(x);
    return (d2u(x) - dd_du(x, y)) / (x - y);
}

double ConvexPotential::tdd_du(double x, double y) const {
    if (poly_) return 2.0 * dpoly_.tdd(x, y);
    const double w = working_.width();
    if (std::abs(x - y) <= 1e-3 * w) {
        // u'[x,x,x,y] ~ u'''(m)/6 at m = (3x+y)/4 matches through first order
        double m = (3.0 * x + y) / 4.0;
        return 2.0 * d3u(m) / 6.0;
    }
    return 2.0 * (0.5 * d2u(x) - sdd_du(x, y)) / (x - y);
}

double ConvexPotential::inverse_du(double y) const {
    double A = working_.a, B = working_.b;
    double ya = du(A), yb = du(B);
    if (y < ya) {
        if (!poly_ && extend_ && slope_a_ > 0.0) return A + (y - ya) / slope_a_;
        if (poly_) {
            // widen until bracketed
            double step = working_.width();
            while (du(A) > y && step < 1e8) A -= step, step *= 2.0;
            if (du(A) > y) throw OutOfRange("inverse_du: y below range");
        } else {
            throw OutOfRange("inverse_du: y below u'(working interval)");
        }
    }
    if (y > yb) {
        if (!poly_ && extend_ && slope_b_ > 0.0) return B + (y - yb) / slope_b_;
        if (poly_) {
            double step = working_.width();
            while (du(B) < y && step < 1e8) B += step, step *= 2.0;
            if (du(B) < y) throw OutOfRange("inverse_du: y above range");
        } else {
            throw OutOfRange("inverse_du: y above u'(working interval)");
        }
    }
    double lo = A, hi = B, x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double f = du(x) - y;
        if (std::abs(f) <= 1e-12 * std::max(1.0, std::abs(y))) return x;
        if (f > 0)
            hi = x;
        else
            lo = x;
        double d = d2u(x);
        double xn = d > 0.0 ? x - f / d : 0.5 * (lo + hi);
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        if (hi - lo <= 1e-15 * std::max(1.0, std::abs(x))) return 0.5 * (lo + hi);
        x = xn;
    }
    return x;
}

}  // namespace freestein
