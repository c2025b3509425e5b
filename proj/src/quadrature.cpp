#include "freestein/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace freestein {

QuadratureRule QuadratureRule::gauss_chebyshev_1(int n) {
    if (n < 1) throw std::invalid_argument("quadrature: n >= 1");
    QuadratureRule r;
    r.kind = Kind::GaussChebyshev1;
    r.nodes.resize(n);
    r.weights.assign(n, M_PI / n);
    for (int j = 0; j < n; ++j) r.nodes[j] = std::cos((2.0 * j + 1.0) * M_PI / (2.0 * n));
    return r;
}

QuadratureRule QuadratureRule::gauss_chebyshev_2(int n) {
    if (n < 1) throw std::invalid_argument("quadrature: n >= 1");
    QuadratureRule r;
    r.kind = Kind::GaussChebyshev2;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int j = 1; j <= n; ++j) {
        double th = j * M_PI / (n + 1.0);
        r.nodes[j - 1] = std::cos(th);
        double s = std::sin(th);
        r.weights[j - 1] = M_PI / (n + 1.0) * s * s;
    }
    return r;
}

QuadratureRule QuadratureRule::gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("quadrature: n >= 1");
    QuadratureRule r;
    r.kind = Kind::GaussLegendre;
    r.nodes.resize(n);
    r.weights.resize(n);
    // Newton on P_n from the Tricomi initial guess; symmetric pairs.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.nodes[i] = -x;
        r.weights[i] = w;
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

}  // namespace freestein
