#include <doctest.h>

#include "arctic/loggas.hpp"
#include "arctic/model_core.hpp"

using namespace arctic;
namespace lg = arctic::loggas;

TEST_CASE("meixner weight") {
    CHECK(lg::meixner_weight(3, mpq_class(1, 2), 0) == 1);
    CHECK(lg::meixner_weight(0, mpq_class(1, 3), 4) == mpq_class(1, 81));
    CHECK(lg::meixner_weight(2, mpq_class(1, 2), 1) == mpq_class(3, 2));
}

TEST_CASE("F_at_one closed cases") {
    for (long q = 0; q <= 3; ++q) {
        mpq_class alpha(1, 3);
        mpq_class expect = 1;
        for (long p = 0; p <= q; ++p) expect *= 1 - alpha;
        CHECK(lg::F_at_one(q + 2, 1, 1, alpha) == expect);  // (1-alpha)^(q+1)
    }
    // r = N: empty constraint
    CHECK(lg::F_at_one(4, 3, 1, mpq_class(1, 2)) ==
          gefp_bruteforce(4, 1, {3}, FreeFermionWeights{mpq_class(1, 2)}));
}

TEST_CASE("F_at_one equals the EFP oracle") {
    for (int N = 2; N <= 4; ++N)
        for (int s = 1; s < N; ++s)
            for (int r = 1; r + s <= N; ++r)
                for (mpq_class alpha : {mpq_class(1, 3), mpq_class(1, 2)}) {
                    CHECK(lg::F_at_one(N, r, s, alpha) ==
                          gefp_bruteforce(N, s, std::vector<int>(s, r),
                                          FreeFermionWeights{alpha}));
                }
}

TEST_CASE("F_at_w sums GEFP differences") {
    mpq_class alpha(1, 3), w(2);
    for (auto [N, r, s] : std::vector<std::array<int, 3>>{{3, 2, 1}, {4, 2, 2}, {4, 3, 1}}) {
        FreeFermionWeights fw{alpha};
        mpq_class rhs = 0, wpow = 1;
        for (int r1 = 1; r1 <= r; ++r1) {
            std::vector<int> lo(s, r), hi(s, r);
            hi[0] = r1;
            mpq_class g1 = gefp_bruteforce(N, s, hi, fw);
            mpq_class g0 = 0;
            if (r1 > 1) {
                lo[0] = r1 - 1;
                g0 = gefp_bruteforce(N, s, lo, fw);
            }
            rhs += (g1 - g0) * wpow;
            wpow *= w;
        }
        CHECK(lg::F_at_w(N, r, s, alpha, w) == rhs);
    }
}

TEST_CASE("h_generating matches the boundary oracle") {
    mpq_class alpha(1, 3), w(3);
    CHECK(lg::h_generating(4, 2, 1, alpha, 1) == 1);
    CHECK(lg::h_generating(2, 1, 1, alpha, mpq_class(7, 2)) == 1);
    auto H = boundary_distribution(LGeometry{4, 2, 1}, FreeFermionWeights{alpha});
    CHECK(lg::h_generating(4, 2, 1, alpha, w) == H[0] + H[1] * w);
    auto coef = lg::h_coefficients(4, 2, 1, alpha);
    CHECK(coef[0] == H[0]);
    CHECK(coef[1] == H[1]);
}

TEST_CASE("F_at_w coefficients are non-negative and sum to F_at_one") {
    for (auto [N, r, s] : std::vector<std::array<int, 3>>{{4, 2, 1}, {5, 3, 2}, {5, 2, 2}}) {
        mpq_class alpha(2, 5);
        auto coef = lg::h_coefficients(N, r, s, alpha);
        mpq_class sum = 0;
        for (const auto& c : coef) {
            CHECK(c >= 0);
            sum += c;
        }
        CHECK(sum == 1);
    }
}

TEST_CASE("continuity of F_at_w at w = 1") {
    mpq_class alpha(1, 2);
    mpq_class f1 = lg::F_at_one(5, 2, 2, alpha);
    for (int k = 3; k <= 6; ++k) {
        mpq_class dw(1, 1);
        for (int p = 0; p < k; ++p) dw /= 10;
        double up = lg::F_at_w(5, 2, 2, alpha, 1 + dw).get_d();
        double dn = lg::F_at_w(5, 2, 2, alpha, 1 - dw).get_d();
        CHECK(std::abs(up - f1.get_d()) < 10.0 * dw.get_d());
        CHECK(std::abs(dn - f1.get_d()) < 10.0 * dw.get_d());
    }
}

TEST_CASE("loggas_I") {
    mpq_class alpha(1, 2);
    // s=1, r=2, q=0: I(1) = mu(0) + mu(1) = 1 + alpha
    CHECK(lg::loggas_I(3, 2, 1, alpha, 1) == 1 + alpha);
    // Proposition 1 identity
    mpq_class w(2), u = lg::u_of_w(alpha, w);
    mpq_class lhs = w * lg::loggas_I(4, 2, 2, alpha, u) / lg::loggas_I(4, 2, 2, alpha, 1);
    CHECK(lhs == lg::h_generating(4, 2, 2, alpha, w));
    CHECK_THROWS(lg::loggas_I(9, 5, 4, alpha, u));
}

TEST_CASE("u-w map") {
    mpq_class alpha(1, 2);
    CHECK(lg::u_of_w(alpha, 1) == 1);
    CHECK(lg::w_of_u(alpha, mpq_class(3, 4)) == 2);
    CHECK(lg::u_of_w(alpha, lg::w_of_u(alpha, mpq_class(5, 8))) == mpq_class(5, 8));
    CHECK_THROWS(lg::u_of_w(alpha, 0));
    CHECK_THROWS(lg::w_of_u(alpha, alpha));
}
