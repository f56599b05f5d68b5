#include "arctic/model_core.hpp"

#include <cmath>
#include <stdexcept>

namespace arctic {

int vertex_type(int L, int R, int T, int B) {
    // index L*8 + R*4 + T*2 + B; 0 marks ice-rule violations
    static constexpr int table[16] = {2, 0, 0, 4, 0, 6, 0, 0, 0, 0, 5, 0, 3, 0, 0, 1};
    return table[L * 8 + R * 4 + T * 2 + B];
}

void for_each_square_state(int N, const std::function<void(const SixVertexState&)>& fn) {
    SixVertexState st;
    st.N = N;
    st.types.assign(N * N, 0);
    st.V.assign((N + 1) * N, 0);
    st.H.assign(N * (N + 1), 0);
    // top external vertical edges point down (0); bottom ones must point up (1)

    std::function<void(int)> row = [&](int k) {
        if (k == N) {
            fn(st);
            return;
        }
        std::function<void(int, int)> col = [&](int i, int L) {
            if (i == N) {
                if (L == 1) {  // rightmost external arrow points out (right)
                    st.H[k * (N + 1) + N] = 1;
                    row(k + 1);
                }
                return;
            }
            int T = st.V[k * N + i];
            for (int R = 0; R < 2; ++R) {
                for (int B = 0; B < 2; ++B) {
                    int t = vertex_type(L, R, T, B);
                    if (!t) continue;
                    if (k == N - 1 && B != 1) continue;  // bottom external points in (up)
                    st.H[k * (N + 1) + i] = static_cast<uint8_t>(L);
                    st.types[k * N + i] = static_cast<uint8_t>(t);
                    st.V[(k + 1) * N + i] = static_cast<uint8_t>(B);
                    col(i + 1, R);
                }
            }
        };
        col(0, 0);  // leftmost external arrow points in (right edge = 0 means left... L=0)
    };
    row(0);
}

bool corner_frozen(const SixVertexState& st, int r, int s) {
    int N = st.N;
    for (int k = 0; k < s; ++k)
        for (int i = 0; i < N; ++i) {
            int j = N - i;  // column from the right
            if (j > r && st.type(k, i) != 2) return false;
        }
    return true;
}

mpq_class square_state_weight(const SixVertexState& st, const mpq_class& alpha) {
    int n12 = 0, n34 = 0;
    int N = st.N;
    for (int k = 0; k < N; ++k)
        for (int i = 0; i < N; ++i) {
            uint8_t t = st.type(k, i);
            if (t <= 2)
                ++n12;
            else if (t <= 4)
                ++n34;
        }
    if (n12 % 2 || n34 % 2) throw std::logic_error("odd vertex-type counts");
    mpq_class one_minus = 1 - alpha;
    mpq_class out = 1;
    for (int p = 0; p < n12 / 2; ++p) out *= one_minus;
    for (int p = 0; p < n34 / 2; ++p) out *= alpha;
    return out;
}

static void check_guard(const LGeometry& g) {
    if (!g.valid()) throw std::invalid_argument("invalid L-geometry");
    if (g.N > kEnumerationGuard) throw std::invalid_argument("enumeration guard: N <= 7");
}

std::vector<SixVertexState> enumerate_states(const LGeometry& g) {
    check_guard(g);
    std::vector<SixVertexState> out;
    for_each_square_state(g.N, [&](const SixVertexState& st) {
        if (corner_frozen(st, g.r, g.s)) out.push_back(st);
    });
    return out;
}

PartitionValue partition_function(const LGeometry& g, const FreeFermionWeights& w) {
    check_guard(g);
    mpq_class total = 0;
    for_each_square_state(g.N, [&](const SixVertexState& st) {
        if (corner_frozen(st, g.r, g.s)) total += square_state_weight(st, w.alpha);
    });
    // total = Z_{N,r,s} * (1-alpha)^(e/2) with e = s*(N-r) corner vertices
    int e = g.s * (g.N - g.r);
    PartitionValue pv;
    pv.half_power = e % 2;
    mpq_class one_minus = 1 - w.alpha;
    mpq_class div = 1;
    for (int p = 0; p < (e + 1) / 2; ++p) div *= one_minus;
    pv.coef = total / div;  // value = coef * sqrt(1-alpha)^half_power
    return pv;
}

std::vector<mpq_class> boundary_distribution(const LGeometry& g, const FreeFermionWeights& w) {
    check_guard(g);
    int N = g.N;
    std::vector<mpq_class> acc(g.r + 1, mpq_class(0));
    mpq_class total = 0;
    for_each_square_state(N, [&](const SixVertexState& st) {
        if (!corner_frozen(st, g.r, g.s)) return;
        int up = -1;
        for (int i = 0; i < N; ++i)
            if (st.vedge(1, i) == 1) {
                if (up >= 0) throw std::logic_error("multiple up arrows in first row");
                up = i;
            }
        if (up < 0) throw std::logic_error("no up arrow in first row");
        int l = N - up;  // column from the right
        if (l > g.r) throw std::logic_error("up arrow inside the cut");
        mpq_class wt = square_state_weight(st, w.alpha);
        acc[l] += wt;
        total += wt;
    });
    if (total == 0) throw std::runtime_error("empty enumeration (no admissible states)");
    std::vector<mpq_class> H(g.r);
    for (int l = 1; l <= g.r; ++l) H[l - 1] = acc[l] / total;
    return H;
}

mpq_class gefp_bruteforce(int N, int s, const std::vector<int>& r_list,
                          const FreeFermionWeights& w) {
    if (N < 1 || N > kEnumerationGuard) throw std::invalid_argument("enumeration guard: N <= 7");
    if (static_cast<int>(r_list.size()) != s) throw std::invalid_argument("r_list size != s");
    for (int k = 0; k < s; ++k) {
        if (r_list[k] < 1 || r_list[k] > N) throw std::invalid_argument("r_k out of range");
        if (k && r_list[k] < r_list[k - 1]) throw std::invalid_argument("r_list not monotone");
    }
    mpq_class num = 0, den = 0;
    for_each_square_state(N, [&](const SixVertexState& st) {
        mpq_class wt = square_state_weight(st, w.alpha);
        den += wt;
        for (int k = 0; k < s; ++k) {
            int rk = r_list[k];
            if (rk == N) continue;  // no constraint
            // edge e_k sits on row k between columns rk and rk+1 from the right,
            // i.e. between lattice columns i = N-rk-1 and i = N-rk: H[k][N-rk].
            if (st.hedge(k, N - rk) != 0) return;  // must point left
        }
        num += wt;
    });
    return num / den;
}

std::vector<std::array<mpq_class, 7>> vertex_type_probabilities(const LGeometry& g,
                                                                const FreeFermionWeights& w) {
    check_guard(g);
    int N = g.N;
    std::vector<std::array<mpq_class, 7>> acc(N * N);
    for (auto& a : acc) a.fill(mpq_class(0));
    mpq_class total = 0;
    for_each_square_state(N, [&](const SixVertexState& st) {
        if (!corner_frozen(st, g.r, g.s)) return;
        mpq_class wt = square_state_weight(st, w.alpha);
        total += wt;
        for (int k = 0; k < N; ++k)
            for (int i = 0; i < N; ++i) acc[k * N + i][st.type(k, i)] += wt;
    });
    if (total == 0) throw std::runtime_error("empty enumeration (no admissible states)");
    for (auto& a : acc)
        for (int t = 1; t <= 6; ++t) a[t] /= total;
    return acc;
}

ScaledGeometry scale_geometry(const LGeometry& g) {
    if (g.s < 1) throw std::invalid_argument("scale_geometry needs s >= 1");
    ScaledGeometry sg;
    sg.R = static_cast<double>(g.r) / g.s;
    sg.Q = static_cast<double>(g.N - g.r - g.s) / g.s;
    sg.xi_x = sg.R / (sg.R + sg.Q + 1);
    sg.xi_y = 1.0 / (sg.R + sg.Q + 1);
    return sg;
}

ScaledGeometry scale_geometry(const LGeometry& g, double alpha) {
    ScaledGeometry sg = scale_geometry(g);
    if (g.N - g.r - g.s == 0) {
        sg.beta = (sg.R - 1) / ((sg.R + 1) * std::sqrt(alpha));
        sg.has_beta = true;
    }
    return sg;
}

}  // namespace arctic
