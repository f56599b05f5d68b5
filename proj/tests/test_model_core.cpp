#include <doctest.h>

#include <cmath>

#include "arctic/model_core.hpp"

using namespace arctic;

TEST_CASE("enumeration counts match ASM numbers") {
    const long expected[] = {0, 1, 2, 7, 42, 429};
    for (int N = 1; N <= 5; ++N) {
        long n = 0;
        for_each_square_state(N, [&](const SixVertexState&) { ++n; });
        CHECK(n == expected[N]);
    }
    CHECK(enumerate_states(LGeometry{1, 1, 0}).size() == 1);
    CHECK(enumerate_states(LGeometry{2, 2, 0}).size() == 2);
    CHECK(enumerate_states(LGeometry{2, 1, 1}).size() == 1);
}

TEST_CASE("every enumerated state obeys the ice rule and DWBC") {
    for (int N = 1; N <= 4; ++N) {
        for_each_square_state(N, [&](const SixVertexState& st) {
            for (int k = 0; k < N; ++k)
                for (int i = 0; i < N; ++i) {
                    int t = vertex_type(st.hedge(k, i), st.hedge(k, i + 1), st.vedge(k, i),
                                        st.vedge(k + 1, i));
                    CHECK(t == st.type(k, i));
                    CHECK(t >= 1);
                }
            for (int k = 0; k < N; ++k) {
                CHECK(st.hedge(k, 0) == 0);
                CHECK(st.hedge(k, N) == 1);
            }
            for (int i = 0; i < N; ++i) {
                CHECK(st.vedge(0, i) == 0);
                CHECK(st.vedge(N, i) == 1);
            }
        });
    }
}

TEST_CASE("partition function is 1 on the square") {
    for (int N = 1; N <= 5; ++N)
        for (mpq_class alpha : {mpq_class(1, 3), mpq_class(1, 2), mpq_class(2, 5)}) {
            auto pv = partition_function(LGeometry{N, N, 0}, FreeFermionWeights{alpha});
            CHECK(pv.coef == 1);
            CHECK(pv.half_power == 0);
        }
}

TEST_CASE("boundary distribution examples") {
    mpq_class alpha(1, 3);
    auto H = boundary_distribution(LGeometry{2, 1, 1}, FreeFermionWeights{alpha});
    REQUIRE(H.size() == 1);
    CHECK(H[0] == 1);
    // the 2x2 square: types-1 state carries alpha, types-2 state 1-alpha;
    // the up arrow sits on edge l=1 (rightmost) for the weight-(1-alpha) state
    auto H2 = boundary_distribution(LGeometry{2, 2, 0}, FreeFermionWeights{alpha});
    REQUIRE(H2.size() == 2);
    CHECK(H2[0] == 1 - alpha);
    CHECK(H2[1] == alpha);
    mpq_class sum = 0;
    for (auto& h : H2) sum += h;
    CHECK(sum == 1);
}

TEST_CASE("gefp examples") {
    mpq_class alpha(1, 3);
    FreeFermionWeights w{alpha};
    CHECK(gefp_bruteforce(3, 2, {3, 3}, w) == 1);
    CHECK(gefp_bruteforce(2, 1, {1}, w) == 1 - alpha);
}

TEST_CASE("cut-corner equivalence: frozen corner matches the GEFP constraint") {
    mpq_class alpha(2, 5);
    FreeFermionWeights w{alpha};
    for (int N = 2; N <= 4; ++N)
        for (int r = 1; r < N; ++r)
            for (int s = 1; s <= r && r + s <= N; ++s) {
                mpq_class frozen = 0;
                for_each_square_state(N, [&](const SixVertexState& st) {
                    if (corner_frozen(st, r, s)) frozen += square_state_weight(st, alpha);
                });
                CHECK(frozen == gefp_bruteforce(N, s, std::vector<int>(s, r), w));
            }
}

TEST_CASE("scale_geometry") {
    auto sg = scale_geometry(LGeometry{7, 4, 2});
    CHECK(sg.R == doctest::Approx(2.0));
    CHECK(sg.Q == doctest::Approx(0.5));
    CHECK(sg.xi_x == doctest::Approx(4.0 / 7));
    CHECK(sg.xi_y == doctest::Approx(2.0 / 7));
    auto sg2 = scale_geometry(LGeometry{300, 168, 132}, 0.5);
    CHECK(sg2.Q == doctest::Approx(0.0));
    CHECK(sg2.has_beta);
    CHECK(sg2.beta ==
          doctest::Approx((sg2.R - 1) / ((sg2.R + 1) * std::sqrt(0.5))));
    CHECK_THROWS(scale_geometry(LGeometry{4, 2, 0}));
}

TEST_CASE("invalid geometries") {
    CHECK_FALSE(LGeometry{4, 3, 2}.valid());
    CHECK_THROWS(enumerate_states(LGeometry{4, 3, 2}));
    CHECK_THROWS(enumerate_states(LGeometry{8, 8, 0}));
    // s > r: legal shape but zero admissible states
    CHECK(enumerate_states(LGeometry{3, 1, 2}).empty());
}
