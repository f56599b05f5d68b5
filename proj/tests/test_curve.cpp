#include <doctest.h>

#include <cmath>

#include "arctic/curve.hpp"

namespace cv = arctic::curve;

TEST_CASE("critical R and regime classification") {
    double sa = std::sqrt(0.3);
    CHECK(cv::critical_R(0, 0.3) == doctest::Approx((1 + sa) * (1 + sa) / 0.7));
    CHECK(cv::critical_R(0, 0.3) == doctest::Approx((1 + sa) / (1 - sa)));
    CHECK(cv::critical_R(1, 0.5) == doctest::Approx(8.0));
    CHECK(cv::classify_regime(4, 0, 0.3) == cv::Regime::I);
    CHECK(cv::classify_regime(1.5, 0, 0.3) == cv::Regime::II_A);
    CHECK(cv::classify_regime(cv::critical_R(0, 0.3), 0, 0.3) == cv::Regime::I);
    // at fixed Q the branch switches from II_A to II_B as R grows
    CHECK(cv::classify_regime(1.5, 3.0, 0.3) == cv::Regime::II_A);
    CHECK(cv::classify_regime(4.0, 3.0, 0.3) == cv::Regime::II_B);
}

TEST_CASE("slope M") {
    CHECK(cv::slope_M(2, 0.5) == doctest::Approx(4.0 / 3));
    CHECK(cv::slope_M(1e12, 0.5) == doctest::Approx(0.0).epsilon(1e-9));
    double h = 1e-6;
    double fd = (cv::slope_M(2 + h, 0.3) - cv::slope_M(2 - h, 0.3)) / (2 * h);
    CHECK(cv::slope_M_prime(2, 0.3) == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("Regime I caustic") {
    auto [x, y] = cv::caustic_I_closed(2, 0.5);
    CHECK(x == doctest::Approx(0.8));
    CHECK(y == doctest::Approx(0.1));
    CHECK(std::abs(cv::ellipse_residual(x, y, 0.5)) < 1e-14);
    CHECK(cv::phi_I(2, 0.5) == doctest::Approx(2.0 / 3));
    CHECK(cv::phi_I(1, 0.5) == doctest::Approx(0.5));
    auto [xf, yf] = cv::caustic_point([](double w) { return cv::phi_I(w, 0.5); }, 2.0, 0.5);
    CHECK(std::abs(xf - x) + std::abs(yf - y) < 1e-9);
}

TEST_CASE("Regime I inverse resolvent example") {
    // alpha=1/2, Q=0, u=3/4 -> z = 6
    CHECK(cv::z_of_u_I(0.75, 0.5, 0) == doctest::Approx(6.0));
    CHECK(cv::u_star_I(0.5, 0) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("solve_eta_ab against Q=0 closed forms") {
    double alpha = 0.3, R = 1.5, sa = std::sqrt(alpha);
    auto p = cv::solve_eta_ab(R, 1e-12, alpha);
    CHECK(p.eta == doctest::Approx((1 - sa) / (1 + sa)).epsilon(1e-9));
    double aII = std::pow(std::sqrt(R + 1) - std::sqrt((R - 1) * sa), 2) / (2 * (1 + sa));
    double bII = std::pow(std::sqrt(R + 1) + std::sqrt((R - 1) * sa), 2) / (2 * (1 + sa));
    CHECK(p.a == doctest::Approx(aII).epsilon(1e-11));
    CHECK(p.b == doctest::Approx(bII).epsilon(1e-11));
    CHECK_THROWS(cv::solve_eta_ab(4.0, 0, 0.3));
}

TEST_CASE("kl_chain identity M2^2 - M1^2 = (b-a)^2 (u-alpha)(u-1)/alpha") {
    double alpha = 0.3, R = 1.5, Q = 0.4;
    auto p = cv::solve_eta_ab(R, Q, alpha);
    for (double u : {0.5, 0.9}) {
        auto M = cv::kl_chain_M(p, u);
        double lhs = M[2] * M[2] - M[1] * M[1];
        double rhs = (p.b - p.a) * (p.b - p.a) * (u - alpha) * (u - 1) / alpha;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("Q=0 double tangent value") {
    double alpha = 0.3, R = 1.5;
    double w0 = cv::w0_II_Q0(R, alpha);
    double target = (1 + std::sqrt(alpha)) / 2 - 1 / (R + 1);
    CHECK(cv::phi_II_Q0_w(w0, R, alpha, +1) == doctest::Approx(target).epsilon(1e-10));
    CHECK(cv::phi_II_Q0_w(w0, R, alpha, -1) == doctest::Approx(target).epsilon(1e-10));
}

TEST_CASE("curve_branches structure") {
    auto regI = cv::curve_branches(8, 0, 0.3, 200);
    REQUIRE(regI.size() == 1);
    CHECK(regI[0].label == "ellipse");
    for (const auto& pt : regI[0].pts)
        CHECK(std::abs(cv::ellipse_residual(pt.x, pt.y, 0.3)) < 1e-12);
    auto regII = cv::curve_branches(1.5, 0, 0.3, 400);
    REQUIRE(regII.size() == 2);
    bool has_minus = regII[0].label == "C-" || regII[1].label == "C-";
    CHECK(has_minus);
}

TEST_CASE("sextic spot values") {
    auto sx = cv::implicit_sextic_Q0(0.3, 1.5);
    CHECK(sx.beta == doctest::Approx(0.36515).epsilon(1e-4));
    // C_06 at beta = 0.5: 256 (0.7)^3 (0.5)(0.5)(1 - 0.3*0.5)
    double R_half = 0;
    {
        // invert beta=(R-1)/((R+1) sqrt(alpha)) for beta=0.5
        double b = 0.5 * std::sqrt(0.3);
        R_half = (1 + b) / (1 - b);
    }
    auto sx5 = cv::implicit_sextic_Q0(0.3, R_half);
    CHECK(sx5.C[0][6] == doctest::Approx(256 * std::pow(0.7, 3) * 0.25 * 0.85).epsilon(1e-10));
    CHECK(sx.A(0.1, 0.2) == sx.A(0.1, -0.2));
}

TEST_CASE("quartic discriminant on a known factorization") {
    // (u-1)(u-2)(u-3)(u-4): disc = prod over root pairs of squared differences
    std::array<double, 5> c{24, -50, 35, -10, 1};
    CHECK(cv::quartic_discriminant(c) == doctest::Approx(144.0));
}

TEST_CASE("discriminant check report") {
    auto rep = cv::discriminant_check(0.3, 1.5, 50, 5);
    CHECK(rep.pass);
    CHECK(rep.n == 50);
}
