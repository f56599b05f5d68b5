#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace arctic::shuffling {

// Cells of the order-n Aztec diamond are indexed (j, kk) in [1,n]^2, matching
// the six-vertex lattice at n = N (j from the right, kk from the top). Edge
// positions N,S,E,W per cell; every edge of the graph belongs to exactly one
// (cell, position) pair.
enum Pos { PN = 0, PS = 1, PE = 2, PW = 3 };

// Edge weights encoding the free-fermion six-vertex measure: E edges carry
// alpha/(1-alpha), everything else 1. The cut is weight surgery: cells with
// j > r, kk <= s get zero S, E, W weights, forcing the frozen type-2 corner.
struct AztecWeightGrid {
    int N = 1;
    int r = 1;
    int s = 0;
    double alpha = 0.5;
};

struct PlaquetteProbabilities {
    int N = 0;
    // [(j-1)*N + (kk-1)]; (p,q,r,s) = (P_N, P_E, P_W, P_S) in the paper's order
    std::vector<double> p, q, r, s;
};

struct TilingSample {
    int N = 0;
    uint64_t seed = 0;
    std::string generator;       // RNG identity, pinned for reproducibility
    std::vector<uint8_t> cls;    // [(j-1)*N + (kk-1)]: vertex type 1..6 of the cell
    std::vector<uint8_t> pair_h; // for type 6 cells: 1 if the pair is N+S, 0 if E+W
};

struct OrderParameterField {
    int N = 0;
    double eps = 0;
    std::vector<double> x;                  // (1 + p - q - r + s)/2
    std::vector<std::complex<double>> z;    // sqrt(p) + i sqrt(q) - i sqrt(r) - sqrt(s)
    std::vector<uint8_t> mask;              // 1 iff x in [eps, 1-eps]
};

AztecWeightGrid build_weights(int N, int r, int s, double alpha);

// Two-pass engine: the downward urban-renewal pass stores the creation
// probabilities t_H per cell per level; the upward passes then give exact
// edge probabilities and exact samples.
class ShufflingEngine {
  public:
    explicit ShufflingEngine(const AztecWeightGrid& g);

    PlaquetteProbabilities edge_probabilities() const;
    TilingSample sample_tiling(uint64_t seed) const;

  private:
    AztecWeightGrid grid_;
    std::vector<std::vector<double>> th_;  // th_[k-1]: k*k grid of t_H at level k
};

PlaquetteProbabilities edge_probabilities(const AztecWeightGrid& g);
TilingSample sample_tiling(const AztecWeightGrid& g, uint64_t seed);

OrderParameterField order_parameters(const PlaquetteProbabilities& pp, int N,
                                     double eps_const = 1.0);

}  // namespace arctic::shuffling
