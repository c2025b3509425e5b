#pragma once

#include "freestein/measure.hpp"
#include "freestein/potential.hpp"

namespace freestein {

struct EqOptions {
    int fit_degree = 256;     // Chebyshev-T fit degree for g(s) = (h/2) u'(M(s))
    double newton_tol = 1e-13;
    int newton_max = 100;
    int sd_test_degree = 8;
    bool residuals = true;    // compute certification residuals on return
};

/// A solved free Gibbs measure together with its potential and the certified
/// Schwinger-Dyson / Euler-Lagrange residuals.
struct EquilibriumMeasure {
    ChebMeasure measure;
    ConvexPotential potential;
    double sd_residual = 0.0;
    double el_residual = 0.0;
};

/// Equilibrium measure of a strictly convex potential on a single interval.
/// The support solves c0(a,b) = 0 and c1(a,b) = 2 for the Chebyshev-T
/// coefficients of g(s) = ((b-a)/4) u'(M(s)); the density coefficients are
/// the airfoil inversion d_k = c_k / pi.
EquilibriumMeasure solve_equilibrium(const ConvexPotential& u, const EqOptions& opt = {});

/// max over monomials x^k, k <= test_degree, of the Schwinger-Dyson defect
/// |int u' f dnu - iint Jf dnu dnu|.
double schwinger_dyson_residual(const ChebMeasure& nu, const ConvexPotential& u,
                                int test_degree);

/// sup over an interior grid (5% margin) of |2 PV int dnu/(x-y) - u'(x)|,
/// the principal value evaluated term-wise through the airfoil identity.
double euler_lagrange_residual(const ChebMeasure& nu, const ConvexPotential& u);

/// -iint log|t-s| drho drho + int u drho.
double gibbs_energy(const ChebMeasure& rho, const ConvexPotential& u);

/// The potential whose equilibrium measure is exactly mu (coefficient-level
/// Euler-Lagrange inversion): u' = (2 pi / h) sum_k d_k T_k on supp(mu).
ConvexPotential implied_potential(const ChebMeasure& mu);

}  // namespace freestein
