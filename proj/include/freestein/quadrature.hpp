#pragma once

#include <string>
#include <vector>

namespace freestein {

/// Nodes/weights on [-1,1]. gauss-chebyshev-1 integrates f/sqrt(1-s^2),
/// gauss-chebyshev-2 integrates f*sqrt(1-s^2), gauss-legendre integrates f.
struct QuadratureRule {
    enum class Kind { GaussChebyshev1, GaussChebyshev2, GaussLegendre };
    Kind kind;
    std::vector<double> nodes;
    std::vector<double> weights;

    static QuadratureRule gauss_chebyshev_1(int n);
    static QuadratureRule gauss_chebyshev_2(int n);
    static QuadratureRule gauss_legendre(int n);

    /// Polynomial exactness degree for this rule.
    int exactness() const { return 2 * static_cast<int>(nodes.size()) - 1; }

    template <class F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) acc += weights[j] * f(nodes[j]);
        return acc;
    }
};

}  // namespace freestein
