#include <doctest.h>

#include <cmath>

#include "freestein/equilibrium.hpp"
#include "freestein/errors.hpp"

using namespace freestein;

TEST_CASE("semicircle fixed point") {
    auto eq = solve_equilibrium(ConvexPotential::quadratic(1.0));
    CHECK(eq.measure.support().a == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(eq.measure.support().b == doctest::Approx(2.0).epsilon(1e-10));
    REQUIRE(eq.measure.coeffs().size() == 1);
    CHECK(eq.measure.coeffs()[0] == doctest::Approx(2.0 / M_PI).epsilon(1e-12));
    CHECK(eq.sd_residual <= 1e-8);
    CHECK(eq.el_residual <= 1e-9);
    // sup density error against eta
    ChebMeasure eta = ChebMeasure::semicircle();
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double x = -2.0 + 4.0 * i / 200.0;
        worst = std::max(worst, std::abs(eq.measure.density(x) - eta.density(x)));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("dilation covariance of the quadratic family") {
    for (double c : {0.25, 0.5, 2.0, 4.0}) {
        auto eq = solve_equilibrium(ConvexPotential::quadratic(c));
        double r = 2.0 / std::sqrt(c);
        CHECK(eq.measure.support().a == doctest::Approx(-r).epsilon(1e-9));
        CHECK(eq.measure.support().b == doctest::Approx(r).epsilon(1e-9));
        CHECK(eq.measure.variance() == doctest::Approx(1.0 / c).epsilon(1e-10));
        CHECK(eq.sd_residual <= 1e-10 * std::max(1.0, 1.0 / c));
        // matches the dilated semicircle
        ChebMeasure ref = ChebMeasure::semicircle().dilated(1.0 / std::sqrt(c));
        double worst = 0.0;
        for (int i = 1; i < 100; ++i) {
            double x = -r + 2.0 * r * i / 100.0;
            worst = std::max(worst, std::abs(eq.measure.density(x) - ref.density(x)));
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("quartic equilibrium (endpoint-condition oracle)") {
    // u = x^4/4: c1 = (3/8) b^4 = 2 and c3 = b^4/8 give b = (16/3)^{1/4},
    // d1 = 2/pi, d3 = 2/(3 pi)
    auto eq = solve_equilibrium(ConvexPotential::from_poly(Poly({0, 0, 0, 0, 0.25})));
    const double b = std::pow(16.0 / 3.0, 0.25);
    CHECK(eq.measure.support().b == doctest::Approx(b).epsilon(1e-10));
    CHECK(eq.measure.support().a == doctest::Approx(-b).epsilon(1e-10));
    REQUIRE(eq.measure.coeffs().size() >= 3);
    CHECK(eq.measure.coeffs()[0] == doctest::Approx(2.0 / M_PI).epsilon(1e-12));
    CHECK(eq.measure.coeffs()[2] == doctest::Approx(2.0 / (3.0 * M_PI)).epsilon(1e-10));
    CHECK(schwinger_dyson_residual(eq.measure, eq.potential, 8) <= 1e-8);
    CHECK(eq.el_residual <= 1e-7);
}

TEST_CASE("schwinger-dyson residual identities on eta") {
    ChebMeasure eta = ChebMeasure::semicircle();
    ConvexPotential half_sq = ConvexPotential::quadratic(1.0);
    // f = x^3: LHS = m4 = 2, RHS = 2 m0 m2 + m1^2 = 2
    CHECK(schwinger_dyson_residual(eta, half_sq, 3) <= 1e-11);
    CHECK(schwinger_dyson_residual(eta, half_sq, 8) <= 1e-10);
}

TEST_CASE("euler-lagrange residual detects a mismatched pair") {
    ChebMeasure eta = ChebMeasure::semicircle();
    CHECK(euler_lagrange_residual(eta, ConvexPotential::quadratic(1.0)) <= 1e-9);
    for (double c : {0.5, 2.0}) {
        auto eq = solve_equilibrium(ConvexPotential::quadratic(c));
        CHECK(euler_lagrange_residual(eq.measure, eq.potential) <= 1e-9);
    }
    // x^4/4 against eta: x^3 != x on the support
    CHECK(euler_lagrange_residual(eta, ConvexPotential::from_poly(Poly({0, 0, 0, 0, 0.25}))) >
          0.1);
}

TEST_CASE("gibbs energy minimality at the fixed point") {
    ChebMeasure eta = ChebMeasure::semicircle();
    ConvexPotential half_sq = ConvexPotential::quadratic(1.0);
    CHECK(gibbs_energy(eta, half_sq) == doctest::Approx(0.75).epsilon(1e-10));
    // mass-preserving even perturbations of size 1e-2 raise the energy
    unsigned rng = 12345u;
    auto next = [&rng]() {
        rng = rng * 1664525u + 1013904223u;
        return (rng >> 8) / 16777216.0 - 0.5;
    };
    double e0 = gibbs_energy(eta, half_sq);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> d{2.0 / M_PI, 0.0, 0.0, 0.0, 0.0};
        d[2] += 1e-2 * next();
        d[4] += 1e-2 * next();
        ChebMeasure rho = ChebMeasure::from_coeffs({-2.0, 2.0}, d);
        CHECK(gibbs_energy(rho, half_sq) >= e0 - 1e-12);
    }
    // translation moves only the potential term
    ChebMeasure t = eta.translated(0.7);
    double shift = gibbs_energy(t, half_sq) - gibbs_energy(eta, half_sq);
    auto q = t.quadrature(128);
    auto q0 = eta.quadrature(128);
    double pot_shift = q.integrate([&](double x) { return 0.5 * x * x; }) -
                       q0.integrate([&](double x) { return 0.5 * x * x; });
    CHECK(shift == doctest::Approx(pot_shift).epsilon(1e-10));
}

TEST_CASE("endpoint monotonicity in the convexity constant") {
    double prev = 1e9;
    for (double c : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        auto eq = solve_equilibrium(ConvexPotential::quadratic(c));
        double w = eq.measure.support().width();
        CHECK(w < prev);
        prev = w;
    }
}

TEST_CASE("implied potential inverts the solver") {
    auto eq = solve_equilibrium(ConvexPotential::from_poly(Poly({0, 0, 0.5, 0, 0.25})));
    ConvexPotential rec = implied_potential(eq.measure);
    for (double x : {-0.8, -0.2, 0.3, 0.9})
        CHECK(rec.du(x) == doctest::Approx(eq.potential.du(x)).epsilon(1e-8));
    CHECK(euler_lagrange_residual(eq.measure, rec) <= 1e-9);
}

TEST_CASE("working interval guard for interpolant potentials") {
    // u' = x on [-1,1] without extension: candidate support [-2,2] exits it
    cheb::Series up(-1.0, 1.0, {0.0, 1.0});
    auto u = ConvexPotential::from_uprime(up, false);
    CHECK_THROWS_AS(solve_equilibrium(u), WorkingIntervalTooSmall);
}
