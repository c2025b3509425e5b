#pragma once

#include <functional>
#include <vector>

#include "freestein/quadrature.hpp"

namespace freestein {

struct SupportInterval {
    double a;
    double b;
    double mid() const { return 0.5 * (a + b); }
    double half() const { return 0.5 * (b - a); }
    double width() const { return b - a; }
};

/// A compactly supported probability measure stored as a Chebyshev-weighted
/// density series: with s = (x - mid)/half in [-1,1],
///   density(x) = (1/half) * sqrt(1-s^2) * sum_{k>=1} d_k U_{k-1}(s).
/// Mass one is equivalent to d_1 = 2/pi. The same data read along
/// theta = acos(s) is the sine series sum_k d_k sin(k theta), which is what
/// the cdf and fitting routines use.
class ChebMeasure {
public:
    /// Normalizes mass to one; throws NonPositiveMass / NegativeDensity.
    static ChebMeasure from_coeffs(SupportInterval s, std::vector<double> coeffs);
    /// Fit a density by the sine transform at n interior nodes, then normalize.
    static ChebMeasure from_density(const std::function<double(double)>& f, SupportInterval s,
                                    int n = 256);

    static ChebMeasure semicircle(double variance = 1.0);  // S(0, variance)
    static ChebMeasure uniform(double a, double b, int n = 511);

    const SupportInterval& support() const { return sup_; }
    /// coeffs()[k] multiplies U_k, i.e. the spec's d_{k+1}.
    const std::vector<double>& coeffs() const { return d_; }

    double density(double x) const;  // 0 outside support
    double cdf(double x) const;      // 0/1 outside support
    double quantile(double p) const; // p in (0,1)

    double moment(int k) const;
    double mean() const;
    double variance() const;

    ChebMeasure recentered() const;
    ChebMeasure translated(double c) const;
    ChebMeasure dilated(double c) const;  // law of c X, c > 0

    /// Nodes/weights such that integral g dmu ~ sum w_j g(x_j); exact when
    /// g times the density polynomial factor has degree < 2n - degree.
    struct Quad {
        std::vector<double> x, w;
        template <class F>
        double integrate(F&& g) const {
            double acc = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) acc += w[j] * g(x[j]);
            return acc;
        }
    };
    Quad quadrature(int n = 256) const;

private:
    ChebMeasure(SupportInterval s, std::vector<double> d);
    void build_cdf_table();

    SupportInterval sup_{-1.0, 1.0};
    std::vector<double> d_;
    std::vector<double> cdf_theta_, cdf_val_;  // monotone table, theta from pi to 0
};

enum class MeasureEval { Density, Cdf, Quantile };
double eval(const ChebMeasure& m, double x, MeasureEval what);

double w2_distance(const ChebMeasure& mu, const ChebMeasure& nu, int nodes = 256);
double log_energy(const ChebMeasure& mu);
double free_entropy(const ChebMeasure& mu);  // log_energy + 3/4 + log(2 pi)/2
double max_correlation(const ChebMeasure& rho, const ChebMeasure& mu, int nodes = 256);

struct ConvolveOptions {
    double eps = 1e-4;          // base evaluation height for the coarse scan
    int grid = 1024;            // coarse scan nodes
    int sine_nodes = 256;       // refit nodes
    int picard_max = 500;
    double picard_tol = 1e-15;
    double edge_threshold = 1e-6;
};
ChebMeasure free_convolve(const ChebMeasure& mu, const ChebMeasure& nu,
                          const ConvolveOptions& opt = {});

}  // namespace freestein
