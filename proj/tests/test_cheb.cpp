#include <doctest.h>

#include <cmath>

#include "freestein/cheb.hpp"
#include "freestein/poly.hpp"
#include "freestein/quadrature.hpp"

using namespace freestein;

TEST_CASE("chebyshev evaluation matches trig forms") {
    for (int k = 0; k <= 12; ++k) {
        for (double th : {0.3, 1.1, 2.0, 2.9}) {
            double s = std::cos(th);
            CHECK(cheb::eval_T(k, s) == doctest::Approx(std::cos(k * th)).epsilon(1e-12));
            CHECK(cheb::eval_U(k, s) ==
                  doctest::Approx(std::sin((k + 1) * th) / std::sin(th)).epsilon(1e-12));
        }
    }
}

TEST_CASE("fit_T recovers polynomial coefficients") {
    // x^2 = (T_0 + T_2)/2
    auto c = cheb::fit_T([](double s) { return s * s; }, 8);
    CHECK(c[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(c[1] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(c[2] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(c[5]) < 1e-14);
}

TEST_CASE("series calculus on a mapped interval") {
    auto f = [](double x) { return std::exp(0.3 * x) + x * x; };
    auto df = [](double x) { return 0.3 * std::exp(0.3 * x) + 2.0 * x; };
    cheb::Series s = cheb::Series::fit(f, -1.5, 2.5, 48);
    cheb::Series d = s.derivative();
    cheb::Series F = s.antiderivative(0.0);
    for (double x : {-1.2, -0.5, 0.0, 0.9, 2.2}) {
        CHECK(s(x) == doctest::Approx(f(x)).epsilon(1e-12));
        CHECK(d(x) == doctest::Approx(df(x)).epsilon(1e-10));
    }
    CHECK(F(0.0) == doctest::Approx(0.0).epsilon(1e-13));
    // F' == s by construction
    cheb::Series Fd = F.derivative();
    for (double x : {-1.0, 0.4, 2.0}) CHECK(Fd(x) == doctest::Approx(f(x)).epsilon(1e-11));
}

TEST_CASE("series divided difference is stable on and off the diagonal") {
    auto f = [](double x) { return std::sin(x) + 0.5 * x * x * x; };
    auto df = [](double x) { return std::cos(x) + 1.5 * x * x; };
    cheb::Series s = cheb::Series::fit(f, -2.0, 2.0, 64);
    // off-diagonal agrees with the direct quotient at well separated points
    CHECK(s.dd(1.0, -0.5) == doctest::Approx((f(1.0) - f(-0.5)) / 1.5).epsilon(1e-12));
    // diagonal equals the derivative
    CHECK(s.dd(0.7, 0.7) == doctest::Approx(df(0.7)).epsilon(1e-11));
    // nearly-coincident arguments do not lose digits
    CHECK(s.dd(0.7, 0.7 + 1e-13) == doctest::Approx(df(0.7)).epsilon(1e-10));
    // second divided difference diagonal is f''/2
    CHECK(s.sdd(0.3, 0.3) == doctest::Approx(0.5 * (-std::sin(0.3) + 3.0 * 0.3)).epsilon(1e-9));
}

TEST_CASE("poly divided differences against symbolic expansions") {
    Poly p({0.0, 0.0, 0.0, 0.0, 0.25});  // x^4/4
    // J of p' = x^3 at (1,2): 1 + 2 + 4 = 7
    Poly dp = p.derivative();
    CHECK(dp.dd(1.0, 2.0) == doctest::Approx(7.0));
    CHECK(dp.dd(1.0, 1.0) == doctest::Approx(3.0));  // (x^3)' = 3x^2
    // sdd of x^3: p'[x,x,y] = sum_{a+b=1}(a+1)x^a y^b = y + 2x at (1,2) -> 4
    CHECK(dp.sdd(1.0, 2.0) == doctest::Approx(4.0));
    // diagonal sdd = f''/2 = 3x
    CHECK(dp.sdd(1.5, 1.5) == doctest::Approx(4.5));
    // tdd diagonal = f'''/6 = 1
    CHECK(dp.tdd(2.0, 2.0) == doctest::Approx(1.0));
}

TEST_CASE("quadrature rules hit their exactness degrees") {
    auto gc1 = QuadratureRule::gauss_chebyshev_1(8);
    auto gc2 = QuadratureRule::gauss_chebyshev_2(8);
    auto gl = QuadratureRule::gauss_legendre(8);
    for (const auto& r : {gc1, gc2, gl})
        for (double w : r.weights) CHECK(w > 0.0);
    // int s^2 / sqrt(1-s^2) = pi/2
    CHECK(gc1.integrate([](double s) { return s * s; }) == doctest::Approx(M_PI / 2).epsilon(1e-14));
    // int s^2 sqrt(1-s^2) = pi/8
    CHECK(gc2.integrate([](double s) { return s * s; }) == doctest::Approx(M_PI / 8).epsilon(1e-14));
    // int_{-1}^{1} s^14 = 2/15 (degree 14 < 2*8)
    CHECK(gl.integrate([](double s) { return std::pow(s, 14); }) ==
          doctest::Approx(2.0 / 15).epsilon(1e-13));
    // one past the exactness degree must fail for GL(2): int s^4 = 2/5
    auto gl2 = QuadratureRule::gauss_legendre(2);
    CHECK(gl2.integrate([](double s) { return std::pow(s, 4); }) != doctest::Approx(0.4).epsilon(1e-6));
}

TEST_CASE("chebU2 polynomials satisfy the dilated recurrence") {
    // U2 on [-2,2]: x^2 - 1
    Poly u2 = Poly::chebU2(2);
    CHECK(u2(1.5) == doctest::Approx(1.25));
    Poly u3 = Poly::chebU2(3);  // x^3 - 2x
    CHECK(u3(2.0) == doctest::Approx(4.0));
    // orthonormality against the semicircle is checked in test_diffusion
}
