#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace arctic {

// L-shaped domain: N x N square with an s x (N-r) rectangle removed from the
// top-left corner. j counts columns from the right, k counts rows from the top.
struct LGeometry {
    int N = 1;
    int r = 1;
    int s = 0;

    bool valid() const {
        return N >= 1 && r >= 1 && r <= N && s >= 0 && s <= N && r + s <= N;
    }
};

// Free-fermion parameterization: w1=w2=sqrt(1-alpha), w3=w4=sqrt(alpha),
// w5=w6=1, so w1*w2 + w3*w4 = w5*w6 holds identically.
struct FreeFermionWeights {
    mpq_class alpha;
};

// Vertex types 1..6, keyed by (L,R,T,B) edge states with 1 = right / up:
//   1:(1,1,1,1) 2:(0,0,0,0) 3:(1,1,0,0) 4:(0,0,1,1) 5:(1,0,1,0) 6:(0,1,0,1)
// Returns 0 if the combination violates the ice rule.
int vertex_type(int L, int R, int T, int B);

struct SixVertexState {
    int N = 0;
    std::vector<uint8_t> types;  // [k*N + i], row k from top, column i from left
    std::vector<uint8_t> V;      // [k*N + i], k=0..N; vertical edge below row k (k=0: top external)
    std::vector<uint8_t> H;      // [k*(N+1) + c], c=0..N; horizontal edges of row k, c=0 left external

    uint8_t type(int k, int i) const { return types[k * N + i]; }
    uint8_t vedge(int k, int i) const { return V[k * N + i]; }
    uint8_t hedge(int k, int c) const { return H[k * (N + 1) + c]; }
};

// Row-transfer walk over all N x N DWBC states; calls fn once per state.
void for_each_square_state(int N, const std::function<void(const SixVertexState&)>& fn);

// True iff the s x (N-r) top-left corner is entirely type 2 (the frozen
// pattern realizing the cut).
bool corner_frozen(const SixVertexState& st, int r, int s);

// Weight of a full square state: (1-a)^(n12/2) * a^(n34/2); both exponents
// are even for admissible DWBC states.
mpq_class square_state_weight(const SixVertexState& st, const mpq_class& alpha);

constexpr int kEnumerationGuard = 7;

// All admissible states of the L-shape, represented as square states whose
// cut corner is frozen to type 2. Guard N <= 7.
std::vector<SixVertexState> enumerate_states(const LGeometry& g);

// Z_{N,r,s} = coef * (1-alpha)^(half_power/2), half_power in {0,1}. The half
// power appears when s*(N-r) is odd; for s=0 the value is coef = 1 exactly.
struct PartitionValue {
    mpq_class coef;
    int half_power = 0;
};

PartitionValue partition_function(const LGeometry& g, const FreeFermionWeights& w);

// H^(l), l=1..r: probability that the sole up arrow of the first row of
// vertical edges sits on the l-th edge from the right. Sums to 1 exactly.
std::vector<mpq_class> boundary_distribution(const LGeometry& g, const FreeFermionWeights& w);

// Probability that the horizontal edges e_1..e_s (row k between columns r_k
// and r_k+1 from the right) all point left, on the N x N square.
mpq_class gefp_bruteforce(int N, int s, const std::vector<int>& r_list,
                          const FreeFermionWeights& w);

// Per-vertex type distribution conditioned on the frozen corner; entry
// [k*N+i][t] for t=1..6. Used as the calibration oracle for shuffling.
std::vector<std::array<mpq_class, 7>> vertex_type_probabilities(const LGeometry& g,
                                                                const FreeFermionWeights& w);

struct ScaledGeometry {
    double R = 1;
    double Q = 0;
    double xi_x = 0;
    double xi_y = 0;
    double beta = 0;
    bool has_beta = false;
};

ScaledGeometry scale_geometry(const LGeometry& g);
// beta = (R-1)/((R+1)*sqrt(alpha)) is defined only when Q = 0.
ScaledGeometry scale_geometry(const LGeometry& g, double alpha);

}  // namespace arctic
