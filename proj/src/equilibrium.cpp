#include "freestein/equilibrium.hpp"

#include <algorithm>
#include <cmath>

#include "freestein/errors.hpp"

namespace freestein {

namespace {

// First two Chebyshev-T coefficients of g(s) = (h/2) u'(m + h s). Only c0 and
// c1 drive the endpoint solve; the full fit happens once at the end.
std::pair<double, double> c01(const ConvexPotential& u, double a, double b, int n) {
    const double m = 0.5 * (a + b), h = 0.5 * (b - a);
    double c0 = 0.0, c1 = 0.0;
    // Gauss-Chebyshev-1 projection: c_k = (2/pi) int g(s) T_k(s)/sqrt(1-s^2) ds
    for (int j = 0; j < n; ++j) {
        double th = (2.0 * j + 1.0) * M_PI / (2.0 * n);
        double s = std::cos(th);
        double g = 0.5 * h * u.du(m + h * s);
        c0 += g;
        c1 += g * s;
    }
    return {c0 / n, 2.0 * c1 / n};
}

}  // namespace

EquilibriumMeasure solve_equilibrium(const ConvexPotential& u, const EqOptions& opt) {
    // root of u' = center of the initial guess
    if (!u.is_poly() && !u.extends_linearly() &&
        (u.du(u.working().a) > 0.0 || u.du(u.working().b) < 0.0))
        throw WorkingIntervalTooSmall("u' does not change sign on the working interval");
    const double x0 = u.inverse_du(0.0);

    // initial half-width: 2/sqrt(kappa) when uniformly convex, otherwise a
    // one-dimensional bracket on c1(h) = 2 (quartic-type potentials have
    // kappa = 0 at the minimum of u')
    const int proj_n = 64;
    double h0;
    if (u.kappa() > 1e-8) {
        h0 = 2.0 / std::sqrt(u.kappa());
    } else {
        double hlo = 1e-3, hhi = 1e-3;
        while (c01(u, x0 - hhi, x0 + hhi, proj_n).second < 2.0 && hhi < 1e6) hhi *= 2.0;
        if (hhi >= 1e6) throw NewtonDiverged("could not bracket the support half-width");
        hlo = hhi * 0.5;
        for (int it = 0; it < 80; ++it) {
            double hm = 0.5 * (hlo + hhi);
            (c01(u, x0 - hm, x0 + hm, proj_n).second < 2.0 ? hlo : hhi) = hm;
        }
        h0 = 0.5 * (hlo + hhi);
    }

    double a = x0 - h0, b = x0 + h0;
    auto F = [&](double aa, double bb, int n) {
        auto [c0, c1] = c01(u, aa, bb, n);
        return std::pair<double, double>{c0, c1 - 2.0};
    };

    // damped Newton with finite-difference Jacobian, refining the projection
    // grid as the residual drops
    bool converged = false;
    for (int it = 0; it < opt.newton_max; ++it) {
        int n = it < 8 ? 128 : opt.fit_degree;
        auto [f0, f1] = F(a, b, n);
        double res = std::max(std::abs(f0), std::abs(f1));
        if (res < opt.newton_tol) {
            converged = true;
            break;
        }
        double delta = 1e-7 * std::max(1.0, b - a);
        auto [f0a, f1a] = F(a + delta, b, n);
        auto [f0b, f1b] = F(a, b + delta, n);
        double J00 = (f0a - f0) / delta, J01 = (f0b - f0) / delta;
        double J10 = (f1a - f1) / delta, J11 = (f1b - f1) / delta;
        double det = J00 * J11 - J01 * J10;
        if (det == 0.0 || !std::isfinite(det)) throw NewtonDiverged("singular endpoint Jacobian");
        double da = -(J11 * f0 - J01 * f1) / det;
        double db = -(-J10 * f0 + J00 * f1) / det;
        double step = 1.0;
        for (int ls = 0; ls < 12; ++ls) {
            double an = a + step * da, bn = b + step * db;
            if (bn - an > 1e-10) {
                auto [g0, g1] = F(an, bn, n);
                if (std::max(std::abs(g0), std::abs(g1)) < res || ls == 11) {
                    a = an;
                    b = bn;
                    break;
                }
            }
            step *= 0.5;
        }
    }
    if (!converged) {
        auto [f0, f1] = F(a, b, opt.fit_degree);
        if (std::max(std::abs(f0), std::abs(f1)) > 1e3 * opt.newton_tol)
            throw NewtonDiverged("endpoint residual " +
                                 std::to_string(std::max(std::abs(f0), std::abs(f1))));
    }

    // full coefficient fit and airfoil inversion d_k = c_k / pi
    const double m = 0.5 * (a + b), h = 0.5 * (b - a);
    std::vector<double> c =
        cheb::fit_T([&](double s) { return 0.5 * h * u.du(m + h * s); }, opt.fit_degree);
    std::vector<double> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] / M_PI;

    EquilibriumMeasure out{ChebMeasure::from_coeffs({a, b}, std::move(d)), u, 0.0, 0.0};
    if (opt.residuals) {
        out.sd_residual = schwinger_dyson_residual(out.measure, u, opt.sd_test_degree);
        out.el_residual = euler_lagrange_residual(out.measure, u);
    }
    return out;
}

double schwinger_dyson_residual(const ChebMeasure& nu, const ConvexPotential& u,
                                int test_degree) {
    auto q = nu.quadrature(512);
    std::vector<double> mom(test_degree + 1);
    for (int k = 0; k <= test_degree; ++k)
        mom[k] = q.integrate([&](double x) { return std::pow(x, k); });
    double worst = 0.0;
    for (int k = 0; k <= test_degree; ++k) {
        double lhs = q.integrate([&](double x) { return u.du(x) * std::pow(x, k); });
        double rhs = 0.0;  // iint J x^k = sum_{i+j=k-1} m_i m_j
        for (int i = 0; i + 1 <= k; ++i) rhs += mom[i] * mom[k - 1 - i];
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double euler_lagrange_residual(const ChebMeasure& nu, const ConvexPotential& u) {
    const auto& d = nu.coeffs();
    const double m = nu.support().mid(), h = nu.support().half();
    std::vector<double> tc(d.size() + 1, 0.0);  // T-series of the Hilbert transform
    for (std::size_t k = 0; k < d.size(); ++k) tc[k + 1] = d[k];
    double worst = 0.0;
    const int n = 256;
    for (int i = 0; i <= n; ++i) {
        double s = -0.9 + 1.8 * i / n;  // 5% margin from each endpoint
        double lhs = 2.0 * M_PI / h * cheb::clenshaw_T(tc, s);
        worst = std::max(worst, std::abs(lhs - u.du(m + h * s)));
    }
    return worst;
}

double gibbs_energy(const ChebMeasure& rho, const ConvexPotential& u) {
    auto q = rho.quadrature(512);
    return -log_energy(rho) + q.integrate([&](double x) { return u.u(x); });
}

ConvexPotential implied_potential(const ChebMeasure& mu) {
    const auto& d = mu.coeffs();
    const double h = mu.support().half();
    std::vector<double> tc(d.size() + 1, 0.0);
    for (std::size_t k = 0; k < d.size(); ++k) tc[k + 1] = 2.0 * M_PI / h * d[k];
    return ConvexPotential::from_uprime(
        cheb::Series(mu.support().a, mu.support().b, std::move(tc)), true);
}

}  // namespace freestein
