#include "freestein/measure.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "freestein/cheb.hpp"
#include "freestein/errors.hpp"

namespace freestein {

namespace {

// sum_k d[k-1] sin(k
// theta) via the sin recurrence; this is density(x)*half along theta.
double sine_sum(const std::vector<double>& d, double theta) {
    double acc = 0.0;
    const double c2 = 2.0 * std::cos(theta);
    double skm = 0.0, sk = std::sin(theta);  // sin(0), sin(theta)
    for (std::size_t k = 1; k <= d.size(); ++k) {
        acc += d[k - 1] * sk;
        double skn = c2 * sk - skm;
        skm = sk;
        sk = skn;
    }
    return acc;
}

// Term-wise antiderivative of the sine series against the arc measure:
// I_1 = (pi-theta)/2 + sin(2 theta)/4,
// I_k = (sin((k+1)theta)/(k+1) - sin((k-1)theta)/(k-1))/2 for k >= 2.
double cdf_sum(const std::vector<double>& d, double theta) {
    double acc = 0.0;
    const double c2 = 2.0 * std::cos(theta);
    // rolling sin(k theta) for k-1, k, k+1
    double s_km1 = 0.0;                 // sin(0)
    double s_k = std::sin(theta);       // sin(theta)
    for (std::size_t k = 1; k <= d.size(); ++k) {
        double s_kp1 = c2 * s_k - s_km1;
        double Ik;
        if (k == 1)
            Ik = 0.5 * (M_PI - theta) + 0.25 * std::sin(2.0 * theta);
        else
            Ik = 0.5 * (s_kp1 / (k + 1.0) - s_km1 / (k - 1.0));
        acc += d[k - 1] * Ik;
        s_km1 = s_k;
        s_k = s_kp1;
    }
    return acc;
}

constexpr int kCdfTable = 512;

}  // namespace

ChebMeasure::ChebMeasure(SupportInterval s, std::vector<double> d)
    : sup_(s), d_(std::move(d)) {
    build_cdf_table();
}

void ChebMeasure::build_cdf_table() {
    cdf_theta_.resize(kCdfTable + 1);
    cdf_val_.resize(kCdfTable + 1);
    for (int i = 0; i <= kCdfTable; ++i) {
        double theta = M_PI * (1.0 - static_cast<double>(i) / kCdfTable);
        cdf_theta_[i] = theta;
        cdf_val_[i] = cdf_sum(d_, theta);
    }
}

ChebMeasure ChebMeasure::from_coeffs(SupportInterval s, std::vector<double> coeffs) {
    if (!(s.a < s.b) || !std::isfinite(s.a) || !std::isfinite(s.b))
        throw NonPositiveMass("support interval must be finite with a < b");
    while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
    if (coeffs.empty()) throw NonPositiveMass("no coefficients");
    const double mass = 0.5 * M_PI * coeffs[0];
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw NonPositiveMass("series integrates to " + std::to_string(mass));
    // sampled nonnegativity before normalization
    double lo = 0.0, hi = 0.0;
    for (int j = 0; j <= 512; ++j) {
        double theta = M_PI * j / 512.0;
        double v = sine_sum(coeffs, theta);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo < -1e-8 * std::max(1.0, hi))
        throw NegativeDensity("min sampled density " + std::to_string(lo / s.half()));
    const double scale = (2.0 / M_PI) / coeffs[0];
    for (auto& v : coeffs) v *= scale;
    // relative truncation of trailing coefficients
    double cmax = 0.0;
    for (double v : coeffs) cmax = std::max(cmax, std::abs(v));
    std::size_t last = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (std::abs(coeffs[k]) > 1e-14 * cmax) last = k;
    coeffs.resize(last + 1);
    return ChebMeasure(s, std::move(coeffs));
}

ChebMeasure ChebMeasure::from_density(const std::function<double(double)>& f, SupportInterval s,
                                      int n) {
    const double m = s.mid(), h = s.half();
    std::vector<double> g(n);
    for (int j = 1; j <= n; ++j) {
        double theta = j * M_PI / (n + 1.0);
        g[j - 1] = f(m + h * std::cos(theta)) * h;
    }
    std::vector<double> d(n);
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= n; ++j) acc += g[j - 1] * std::sin(k * j * M_PI / (n + 1.0));
        d[k - 1] = 2.0 * acc / (n + 1.0);
    }
    return from_coeffs(s, std::move(d));
}

ChebMeasure ChebMeasure::semicircle(double variance) {
    if (!(variance > 0.0)) throw NonPositiveMass("semicircle variance must be > 0");
    double r = 2.0 * std::sqrt(variance);
    return from_coeffs({-r, r}, {2.0 / M_PI});
}

ChebMeasure ChebMeasure::uniform(double a, double b, int n) {
    if (!(a < b)) throw NonPositiveMass("uniform needs a < b");
    return from_density([&](double) { return 1.0 / (b - a); }, {a, b}, n);
}

double ChebMeasure::density(double x) const {
    const double s = (x - sup_.mid()) / sup_.half();
    if (s <= -1.0 || s >= 1.0) return 0.0;
    return sine_sum(d_, std::acos(s)) / sup_.half();
}

double ChebMeasure::cdf(double x) const {
    const double s = (x - sup_.mid()) / sup_.half();
    if (s <= -1.0) return 0.0;
    if (s >= 1.0) return 1.0;
    return cdf_sum(d_, std::acos(s));
}

double ChebMeasure::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0)) throw QuantileNonConvergent("quantile argument must be in (0,1)");
    // bracket from the cached table (cdf_val_ is nondecreasing in index)
    auto it = std::lower_bound(cdf_val_.begin(), cdf_val_.end(), p);
    std::size_t hi_i = std::min<std::size_t>(cdf_val_.size() - 1, it - cdf_val_.begin());
    std::size_t lo_i = hi_i > 0 ? hi_i - 1 : 0;
    const double m = sup_.mid(), h = sup_.half();
    double lo = m + h * std::cos(cdf_theta_[lo_i]);
    double hi = m + h * std::cos(cdf_theta_[hi_i]);
    if (hi_i == lo_i) hi = sup_.b;
    double flo = cdf_val_[lo_i] - p, fhi = cdf_val_[hi_i] - p;
    double x = lo + (hi - lo) * (flo != fhi ? -flo / (fhi - flo) : 0.5);
    x = std::clamp(x, lo, hi);
    for (int it2 = 0; it2 < 200; ++it2) {
        double F = cdf(x) - p;
        if (std::abs(F) <= 1e-12) return x;
        if (F > 0)
            hi = x;
        else
            lo = x;
        double dens = density(x);
        double xn = dens > 0.0 ? x - F / dens : 0.5 * (lo + hi);
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        if (hi - lo < 1e-15 * sup_.width()) return 0.5 * (lo + hi);
        x = xn;
    }
    throw QuantileNonConvergent("p=" + std::to_string(p));
}

ChebMeasure::Quad ChebMeasure::quadrature(int n) const {
    QuadratureRule gc2 = QuadratureRule::gauss_chebyshev_2(n);
    Quad q;
    q.x.resize(n);
    q.w.resize(n);
    const double m = sup_.mid(), h = sup_.half();
    for (int j = 0; j < n; ++j) {
        double t = gc2.nodes[j];
        q.x[j] = m + h * t;
        q.w[j] = gc2.weights[j] * cheb::clenshaw_U(d_, t);
    }
    return q;
}

double ChebMeasure::moment(int k) const {
    if (k < 0) throw OutOfRange("moment order must be >= 0");
    if (k == 0) return 1.0;
    int n = std::max<int>(64, (static_cast<int>(d_.size()) + k) / 2 + 2);
    auto q = quadrature(n);
    return q.integrate([&](double x) { return std::pow(x, k); });
}

double ChebMeasure::mean() const {
    // mean = mid + half * (pi/4) d_2 for unit mass
    double d2 = d_.size() >= 2 ? d_[1] : 0.0;
    return sup_.mid() + sup_.half() * 0.25 * M_PI * d2;
}

double ChebMeasure::variance() const {
    double m1 = mean();
    return moment(2) - m1 * m1;
}

ChebMeasure ChebMeasure::recentered() const { return translated(-mean()); }

ChebMeasure ChebMeasure::translated(double c) const {
    return ChebMeasure({sup_.a + c, sup_.b + c}, d_);
}

ChebMeasure ChebMeasure::dilated(double c) const {
    if (!(c > 0.0)) throw OutOfRange("dilation factor must be > 0");
    return ChebMeasure({sup_.a * c, sup_.b * c}, d_);
}

double eval(const ChebMeasure& m, double x, MeasureEval what) {
    switch (what) {
        case MeasureEval::Density: return m.density(x);
        case MeasureEval::Cdf: return m.cdf(x);
        case MeasureEval::Quantile: return m.quantile(x);
    }
    return 0.0;
}

double w2_distance(const ChebMeasure& mu, const ChebMeasure& nu, int nodes) {
    QuadratureRule gl = QuadratureRule::gauss_legendre(nodes);
    double acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
        double p = 0.5 * (gl.nodes[j] + 1.0);
        double diff = mu.quantile(p) - nu.quantile(p);
        acc += 0.5 * gl.weights[j] * diff * diff;
    }
    return std::sqrt(std::max(acc, 0.0));
}

double max_correlation(const ChebMeasure& rho, const ChebMeasure& mu, int nodes) {
    QuadratureRule gl = QuadratureRule::gauss_legendre(nodes);
    double acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
        double p = 0.5 * (gl.nodes[j] + 1.0);
        acc += 0.5 * gl.weights[j] * rho.quantile(p) * mu.quantile(p);
    }
    return acc;
}

double log_energy(const ChebMeasure& mu) {
    // With s = cos theta, log|cos a - cos b| = -log 2 - sum_k (2/k) cos(ka)cos(kb)
    // diagonalizes the double integral:
    //   log_energy = log(h/2) - sum_{k>=1} (2/k) c_k^2,
    // where c_k = int cos(k theta) dmu = (pi/4)(d_{k+1} - d_{k-1}).
    const std::vector<double>& d = mu.coeffs();
    auto dk = [&](int k) -> double {  // 1-based, zero outside
        return (k >= 1 && k <= static_cast<int>(d.size())) ? d[k - 1] : 0.0;
    };
    double acc = 0.0;
    for (int k = 1; k <= static_cast<int>(d.size()) + 1; ++k) {
        double ck = 0.25 * M_PI * (dk(k + 1) - dk(k - 1));
        acc -= 2.0 / k * ck * ck;
    }
    return std::log(0.5 * mu.support().half()) + acc;
}

double free_entropy(const ChebMeasure& mu) {
    return log_energy(mu) + 0.75 + 0.5 * std::log(2.0 * M_PI);
}

// ---------------------------------------------------------------------------
// free convolution via subordination
// ---------------------------------------------------------------------------

namespace {

using cplx = std::complex<double>;

// Cauchy transform of a ChebMeasure, closed form through the inverse
// Joukowski map: G(z) = (pi/h) sum_k d_k w^{-k}, w = zeta + sqrt(zeta^2-1).
cplx cauchy(const ChebMeasure& m, cplx z) {
    const double mid = m.support().mid(), h = m.support().half();
    cplx zeta = (z - mid) / h;
    cplx w = zeta + std::sqrt(zeta - 1.0) * std::sqrt(zeta + 1.0);
    cplx invw = 1.0 / w;
    cplx acc = 0.0, wk = invw;
    for (double dkv : m.coeffs()) {
        acc += dkv * wk;
        wk *= invw;
    }
    return M_PI / h * acc;
}

struct Subordinator {
    const ChebMeasure& mu;
    const ChebMeasure& nu;
    const ConvolveOptions& opt;
    mutable long evals = 0;

    cplx phi(cplx z, cplx om) const {
        ++evals;
        cplx t = z + (1.0 / cauchy(mu, om) - om);
        return z + (1.0 / cauchy(nu, t) - t);
    }

    // Solve om = phi(z, om) by Aitken-accelerated Picard iteration.
    cplx omega(cplx z, cplx warm) const {
        cplx om = warm;
        const double tol = opt.picard_tol * std::max(1.0, std::abs(z));
        int steps = 0;
        while (steps < opt.picard_max) {
            cplx x1 = phi(z, om);
            ++steps;
            if (std::abs(x1 - om) <= tol) return x1;
            cplx x2 = phi(z, x1);
            ++steps;
            cplx denom = x2 - 2.0 * x1 + om;
            cplx next = x2;
            if (std::abs(denom) > 0.0) {
                cplx cand = om - (x1 - om) * (x1 - om) / denom;
                if (cand.imag() > 0.0) {
                    cplx f = phi(z, cand);
                    ++steps;
                    if (std::abs(f - cand) <= std::abs(x2 - x1)) next = f;
                }
            }
            if (std::abs(next - x2) <= tol && std::abs(x2 - x1) <= tol) return next;
            om = next;
        }
        throw SubordinationNonConvergent("z = " + std::to_string(z.real()) + " + " +
                                         std::to_string(z.imag()) + "i");
    }

    // G_{mu boxplus nu}(z) and the converged omega (for warm starting).
    std::pair<cplx, cplx> value(cplx z, cplx warm) const {
        cplx om = omega(z, warm);
        cplx t = z + (1.0 / cauchy(mu, om) - om);
        return {cauchy(nu, t), om};
    }

    // Boundary density at x by three-height Richardson extrapolation.
    std::pair<double, cplx> density(double x, double eps, cplx warm) const {
        auto [g1, om] = value({x, eps}, warm);
        auto [g2, om2] = value({x, 2.0 * eps}, om);
        auto [g4, om4] = value({x, 4.0 * eps}, om2);
        (void)om4;
        double d1 = -g1.imag() / M_PI, d2 = -g2.imag() / M_PI, d4 = -g4.imag() / M_PI;
        return {(8.0 * d1 - 6.0 * d2 + d4) / 3.0, om};
    }
};

// Least-squares quadratic through (x_i, y_i), returning the root nearest x0.
double quadratic_root_near(const std::vector<double>& xs, const std::vector<double>& ys,
                           double x0) {
    // normal equations for y = c0 + c1 x + c2 x^2
    double S[5] = {0, 0, 0, 0, 0}, T[3] = {0, 0, 0};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double p = 1.0;
        for (int k = 0; k <= 4; ++k) {
            S[k] += p;
            if (k <= 2) T[k] += ys[i] * p;
            p *= xs[i];
        }
    }
    double A[3][4] = {{S[0], S[1], S[2], T[0]}, {S[1], S[2], S[3], T[1]}, {S[2], S[3], S[4], T[2]}};
    for (int c = 0; c < 3; ++c) {  // Gaussian elimination with partial pivoting
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        std::swap(A[c], A[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == c || A[c][c] == 0.0) continue;
            double f = A[r][c] / A[c][c];
            for (int k = c; k < 4; ++k) A[r][k] -= f * A[c][k];
        }
    }
    double c0 = A[0][3] / A[0][0], c1 = A[1][3] / A[1][1], c2 = A[2][3] / A[2][2];
    if (std::abs(c2) < 1e-300) return -c0 / c1;
    double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0.0) return x0;
    double r1 = (-c1 + std::sqrt(disc)) / (2.0 * c2);
    double r2 = (-c1 - std::sqrt(disc)) / (2.0 * c2);
    return std::abs(r1 - x0) < std::abs(r2 - x0) ? r1 : r2;
}

}  // namespace

ChebMeasure free_convolve(const ChebMeasure& mu, const ChebMeasure& nu,
                          const ConvolveOptions& opt) {
    Subordinator sub{mu, nu, opt};
    const double lo = mu.support().a + nu.support().a;
    const double hi = mu.support().b + nu.support().b;
    const double width = hi - lo;

    // coarse scan at the base height
    int n = opt.grid;
    std::vector<double> xs(n), ds(n);
    cplx warm{lo, opt.eps};
    for (int j = 0; j < n; ++j) {
        xs[j] = lo + width * j / (n - 1.0);
        auto [dv, om] = sub.density(xs[j], opt.eps * 0.1, warm);
        ds[j] = dv;
        warm = om;
    }
    int first = -1, last = -1;
    for (int j = 0; j < n; ++j)
        if (ds[j] > opt.edge_threshold) {
            if (first < 0) first = j;
            last = j;
        }
    if (first < 0) throw SubordinationNonConvergent("no density found above threshold");

    // edge refinement: fit density^2 by a quadratic just inside each edge and
    // take its root; the sqrt-edge of the free convolution makes this accurate.
    auto refine = [&](double b0, int sign) {
        std::vector<double> px, py;
        cplx w2{b0 - sign * 0.005 * width, 1e-6};
        for (int i = 0; i < 8; ++i) {
            double delta = width * (2e-4 + i * (1.8e-3 - 2e-4) / 7.0);
            double x = b0 - sign * delta;
            auto [dv, om] = sub.density(x, 1e-6, w2);
            w2 = om;
            px.push_back(x);
            py.push_back(dv * dv);
        }
        return quadratic_root_near(px, py, b0);
    };
    double b_hat = refine(xs[last], +1);
    double a_hat = refine(xs[first], -1);
    if (!(a_hat < b_hat)) throw SubordinationNonConvergent("edge refinement failed");

    // density refit at sine nodes with height shrinking near the edges
    const int N = opt.sine_nodes;
    const double m = 0.5 * (a_hat + b_hat), h = 0.5 * (b_hat - a_hat);
    std::vector<double> g(N);
    warm = cplx{m + h * std::cos(M_PI / (N + 1.0)), 1e-6};
    for (int j = 1; j <= N; ++j) {
        double theta = j * M_PI / (N + 1.0);
        double x = m + h * std::cos(theta);
        double dist = std::min(x - a_hat, b_hat - x);
        double eps = std::clamp(dist / 300.0, 1e-9, 1e-6);
        auto [dv, om] = sub.density(x, eps, warm);
        warm = om;
        g[j - 1] = std::max(dv, 0.0) * h;
    }
    std::vector<double> dcoef(N);
    for (int k = 1; k <= N; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= N; ++j) acc += g[j - 1] * std::sin(k * j * M_PI / (N + 1.0));
        dcoef[k - 1] = 2.0 * acc / (N + 1.0);
    }
    return ChebMeasure::from_coeffs({a_hat, b_hat}, std::move(dcoef));
}

}  // namespace freestein
