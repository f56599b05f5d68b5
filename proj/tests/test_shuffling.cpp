#include <doctest.h>

#include <cmath>
#include <gmpxx.h>

#include "arctic/model_core.hpp"
#include "arctic/shuffling.hpp"

namespace sh = arctic::shuffling;
namespace mc = arctic;

TEST_CASE("order 1, uniform weights") {
    auto g = sh::build_weights(1, 1, 0, 0.5);
    auto pp = sh::edge_probabilities(g);
    CHECK(pp.p[0] == doctest::Approx(0.5));
    CHECK(pp.q[0] == doctest::Approx(0.5));
    CHECK(pp.r[0] == doctest::Approx(0.5));
    CHECK(pp.s[0] == doctest::Approx(0.5));
}

TEST_CASE("build_weights validation") {
    CHECK_THROWS(sh::build_weights(4, 2, 3, 0.5));   // s > r, empty measure
    CHECK_THROWS(sh::build_weights(4, 3, 2, 0.5));   // r + s > N
    CHECK_THROWS(sh::build_weights(4, 0, 0, 0.5));   // r < 1
    CHECK_THROWS(sh::build_weights(4, 2, 1, 0.0));   // alpha out of range
}

TEST_CASE("edge probabilities match exact enumeration at small N") {
    for (int N = 1; N <= 4; ++N) {
        for (int r = 1; r <= N; ++r) {
            for (int s = 0; s <= r && r + s <= N; ++s) {
                mpq_class alpha(1, 3);
                mc::LGeometry geom{N, r, s};
                auto exact = mc::vertex_type_probabilities(geom, mc::FreeFermionWeights{alpha});
                auto pp = sh::edge_probabilities(sh::build_weights(N, r, s, alpha.get_d()));
                double a = alpha.get_d();
                for (int k = 0; k < N; ++k) {
                    for (int i = 0; i < N; ++i) {
                        int j = N - i;          // column index from the right
                        int kk = k + 1;         // row index from the top
                        int idx = (j - 1) * N + (kk - 1);
                        const auto& t = exact[k * N + i];
                        double pN = t[2].get_d() + (1 - a) * t[6].get_d();
                        double pS = t[1].get_d() + (1 - a) * t[6].get_d();
                        double pE = t[4].get_d() + a * t[6].get_d();
                        double pW = t[3].get_d() + a * t[6].get_d();
                        CHECK(pp.p[idx] == doctest::Approx(pN).epsilon(1e-12));
                        CHECK(pp.s[idx] == doctest::Approx(pS).epsilon(1e-12));
                        CHECK(pp.q[idx] == doctest::Approx(pE).epsilon(1e-12));
                        CHECK(pp.r[idx] == doctest::Approx(pW).epsilon(1e-12));
                    }
                }
            }
        }
    }
}

TEST_CASE("edge probability sum rule") {
    auto pp = sh::edge_probabilities(sh::build_weights(24, 14, 8, 0.4));
    double tot = 0;
    for (int i = 0; i < 24 * 24; ++i) tot += pp.p[i] + pp.q[i] + pp.r[i] + pp.s[i];
    CHECK(tot == doctest::Approx(24.0 * 25.0).epsilon(1e-10));
}

TEST_CASE("sampling is deterministic in the seed") {
    auto g = sh::build_weights(12, 7, 4, 0.35);
    auto s1 = sh::sample_tiling(g, 42);
    auto s2 = sh::sample_tiling(g, 42);
    auto s3 = sh::sample_tiling(g, 43);
    CHECK(s1.cls == s2.cls);
    CHECK(s1.pair_h == s2.pair_h);
    CHECK(s1.cls != s3.cls);
    CHECK(s1.generator == "mt19937_64/uniform_real");
    for (auto c : s1.cls) {
        CHECK(c >= 1);
        CHECK(c <= 6);
    }
}

TEST_CASE("samples freeze the cut corner") {
    auto g = sh::build_weights(10, 6, 3, 0.3);
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
        auto smp = sh::sample_tiling(g, seed);
        for (int j = 7; j <= 10; ++j)
            for (int kk = 1; kk <= 3; ++kk)
                CHECK(smp.cls[(j - 1) * 10 + (kk - 1)] == 2);
    }
}

TEST_CASE("order parameter field on the square at alpha=1/2") {
    int N = 128;
    auto pp = sh::edge_probabilities(sh::build_weights(N, N, 0, 0.5));
    auto f = sh::order_parameters(pp, N, 1.0);
    REQUIRE((int)f.x.size() == N * N);
    // arctic circle: mask boundary should hug x^2 + y^2 = ... the ellipse
    // (1-x-y)^2/(1-alpha) + (x-y)^2/alpha = 1, within a couple lattice spacings
    double worst = 0;
    for (int j = 1; j <= N; ++j) {
        for (int kk = 1; kk <= N; ++kk) {
            int idx = (j - 1) * N + (kk - 1);
            if (!f.mask[idx]) continue;
            bool boundary = false;
            const int dj[4] = {1, -1, 0, 0}, dk[4] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                int jj = j + dj[d], k2 = kk + dk[d];
                if (jj < 1 || jj > N || k2 < 1 || k2 > N) continue;
                if (!f.mask[(jj - 1) * N + (k2 - 1)]) boundary = true;
            }
            if (!boundary) continue;
            double x = (j - 0.5) / N, y = (kk - 0.5) / N;
            double e = (1 - x - y) * (1 - x - y) / 0.5 + (x - y) * (x - y) / 0.5;
            // rough distance from the unit-level set, gradient has norm >= O(1)
            double dist = std::abs(std::sqrt(std::max(e, 0.0)) - 1) / 2.83;
            worst = std::max(worst, dist);
        }
    }
    CHECK(worst < 3.0 / N);
}
