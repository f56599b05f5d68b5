#include "arctic/shuffling.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace arctic::shuffling {

namespace {

// Weight with an explicit order in a formal regularizer eps: value =
// c * 2^e * eps^ord. Zero weights enter as eps^1, so the urban-renewal
// divisions stay well defined and limits at eps -> 0 are exact (all
// coefficients are positive, no cancellation).
struct Val {
    double c = 1;  // kept in [1,2) by norm()
    long e = 0;
    int ord = 0;

    void norm() {
        int k;
        c = std::frexp(c, &k);
        c *= 2;
        e += k - 1;
    }
    static Val from_weight(double w) {
        Val v;
        if (w == 0) {
            v.c = 1;
            v.e = 0;
            v.ord = 1;
        } else {
            v.c = w;
            v.ord = 0;
            v.norm();
        }
        return v;
    }
    friend Val operator*(Val a, const Val& b) {
        a.c *= b.c;
        a.e += b.e;
        a.ord += b.ord;
        a.norm();
        return a;
    }
    friend Val operator/(Val a, const Val& b) {
        a.c /= b.c;
        a.e -= b.e;
        a.ord -= b.ord;
        a.norm();
        return a;
    }
    friend Val operator+(const Val& a, const Val& b) {
        if (a.ord != b.ord) return a.ord < b.ord ? a : b;
        Val r = a;
        long de = b.e - a.e;
        if (de > 60) return b;
        if (de < -60) return a;
        r.c = a.c + std::ldexp(b.c, static_cast<int>(de));
        r.norm();
        return r;
    }
    double limit() const {
        if (ord < 0) throw std::logic_error("negative eps order in limit");
        return ord > 0 ? 0.0 : std::ldexp(c, static_cast<int>(e));
    }
};

inline int idx(int m, int j, int kk) { return (j - 1) * m + (kk - 1); }

}  // namespace

AztecWeightGrid build_weights(int N, int r, int s, double alpha) {
    if (N < 1 || r < 1 || r > N || s < 0 || r + s > N || s > r)
        throw std::invalid_argument("build_weights: invalid geometry");
    if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("build_weights: alpha in (0,1)");
    return {N, r, s, alpha};
}

ShufflingEngine::ShufflingEngine(const AztecWeightGrid& g) : grid_(g) {
    int N = g.N;
    double eweight = g.alpha / (1 - g.alpha);
    // level-N weights
    std::vector<Val> cur(static_cast<size_t>(4) * N * N), next;
    for (int j = 1; j <= N; ++j)
        for (int kk = 1; kk <= N; ++kk) {
            bool cut = j > g.r && kk <= g.s;
            int base = idx(N, j, kk);
            cur[PN * N * N + base] = Val::from_weight(1);
            cur[PS * N * N + base] = Val::from_weight(cut ? 0 : 1);
            cur[PE * N * N + base] = Val::from_weight(cut ? 0 : eweight);
            cur[PW * N * N + base] = Val::from_weight(cut ? 0 : 1);
        }
    th_.resize(N);
    for (int m = N; m >= 1; --m) {
        auto& th = th_[m - 1];
        th.resize(static_cast<size_t>(m) * m);
        if (m > 1) next.assign(static_cast<size_t>(4) * (m - 1) * (m - 1), Val{});
        int mm = m * m, lo = (m - 1) * (m - 1);
        for (int j = 1; j <= m; ++j)
            for (int kk = 1; kk <= m; ++kk) {
                int base = idx(m, j, kk);
                const Val& wN = cur[PN * mm + base];
                const Val& wS = cur[PS * mm + base];
                const Val& wE = cur[PE * mm + base];
                const Val& wW = cur[PW * mm + base];
                Val delta = wN * wS + wE * wW;
                th[base] = (wN * wS / delta).limit();
                if (m == 1) continue;
                // reduced weights land on the level-(m-1) cells owning each edge
                auto put = [&](int pos, int tj, int tk, const Val& v) {
                    if (tj >= 1 && tj <= m - 1 && tk >= 1 && tk <= m - 1)
                        next[pos * lo + idx(m - 1, tj, tk)] = v;
                };
                put(PS, j, kk - 1, wS / delta);      // this cell's N edge
                put(PN, j - 1, kk, wN / delta);      // this cell's S edge
                put(PW, j, kk, wW / delta);          // this cell's E edge
                put(PE, j - 1, kk - 1, wE / delta);  // this cell's W edge
            }
        if (m > 1) cur.swap(next);
    }
}

PlaquetteProbabilities ShufflingEngine::edge_probabilities() const {
    int N = grid_.N;
    std::vector<double> prev, cur;
    for (int m = 1; m <= N; ++m) {
        cur.assign(static_cast<size_t>(4) * m * m, 0.0);
        int mm = m * m, lo = (m - 1) * (m - 1);
        auto get = [&](int pos, int j, int kk) -> double {
            if (j < 1 || j > m - 1 || kk < 1 || kk > m - 1) return 0.0;
            return prev[pos * lo + idx(m - 1, j, kk)];
        };
        const auto& th = th_[m - 1];
        for (int j = 1; j <= m; ++j)
            for (int kk = 1; kk <= m; ++kk) {
                int base = idx(m, j, kk);
                double t = th[base];
                // probabilities of this cell's own edges at the previous level
                double pr[4] = {get(PS, j, kk - 1), get(PN, j - 1, kk), get(PW, j, kk),
                                get(PE, j - 1, kk - 1)};
                double tot = pr[PN] + pr[PS] + pr[PE] + pr[PW];
                const double tpos[4] = {t, t, 1 - t, 1 - t};
                const int opp[4] = {PS, PN, PW, PE};
                for (int pos = 0; pos < 4; ++pos) {
                    double tp = tpos[pos];
                    cur[pos * mm + base] =
                        tp + (1 - tp) * pr[opp[pos]] - tp * (tot - pr[opp[pos]]);
                }
            }
        prev.swap(cur);
    }
    PlaquetteProbabilities pp;
    pp.N = N;
    int nn = N * N;
    pp.p.assign(prev.begin() + PN * nn, prev.begin() + (PN + 1) * nn);
    pp.s.assign(prev.begin() + PS * nn, prev.begin() + (PS + 1) * nn);
    pp.q.assign(prev.begin() + PE * nn, prev.begin() + (PE + 1) * nn);
    pp.r.assign(prev.begin() + PW * nn, prev.begin() + (PW + 1) * nn);
    return pp;
}

TilingSample ShufflingEngine::sample_tiling(uint64_t seed) const {
    int N = grid_.N;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<uint8_t> prev, cur;
    for (int m = 1; m <= N; ++m) {
        cur.assign(static_cast<size_t>(4) * m * m, 0);
        int mm = m * m, lo = (m - 1) * (m - 1);
        auto get = [&](int pos, int j, int kk) -> uint8_t {
            if (j < 1 || j > m - 1 || kk < 1 || kk > m - 1) return 0;
            return prev[pos * lo + idx(m - 1, j, kk)];
        };
        const auto& th = th_[m - 1];
        for (int j = 1; j <= m; ++j)
            for (int kk = 1; kk <= m; ++kk) {
                int base = idx(m, j, kk);
                uint8_t occ[4] = {get(PS, j, kk - 1), get(PN, j - 1, kk), get(PW, j, kk),
                                  get(PE, j - 1, kk - 1)};
                int cnt = occ[0] + occ[1] + occ[2] + occ[3];
                const int opp[4] = {PS, PN, PW, PE};
                if (cnt == 2) {
                    // opposite pair annihilates
                } else if (cnt == 1) {
                    for (int pos = 0; pos < 4; ++pos)
                        if (occ[pos]) cur[opp[pos] * mm + base] = 1;
                } else {
                    if (unif(rng) < th[base]) {
                        cur[PN * mm + base] = cur[PS * mm + base] = 1;
                    } else {
                        cur[PE * mm + base] = cur[PW * mm + base] = 1;
                    }
                }
            }
        prev.swap(cur);
    }
    TilingSample ts;
    ts.N = N;
    ts.seed = seed;
    ts.generator = "mt19937_64/uniform_real";
    ts.cls.assign(static_cast<size_t>(N) * N, 0);
    ts.pair_h.assign(static_cast<size_t>(N) * N, 0);
    int nn = N * N;
    for (int i = 0; i < nn; ++i) {
        bool n = prev[PN * nn + i], s = prev[PS * nn + i];
        bool e = prev[PE * nn + i], w = prev[PW * nn + i];
        int cnt = n + s + e + w;
        uint8_t c;
        if (cnt == 2) {
            c = 6;
            ts.pair_h[i] = (n && s) ? 1 : 0;
            if (!((n && s) || (e && w))) throw std::logic_error("non-opposite pair in sample");
        } else if (cnt == 0) {
            c = 5;
        } else if (s) {
            c = 1;
        } else if (n) {
            c = 2;
        } else if (w) {
            c = 3;
        } else {
            c = 4;
        }
        ts.cls[i] = c;
    }
    return ts;
}

PlaquetteProbabilities edge_probabilities(const AztecWeightGrid& g) {
    return ShufflingEngine(g).edge_probabilities();
}

TilingSample sample_tiling(const AztecWeightGrid& g, uint64_t seed) {
    return ShufflingEngine(g).sample_tiling(seed);
}

OrderParameterField order_parameters(const PlaquetteProbabilities& pp, int N, double eps_const) {
    OrderParameterField f;
    f.N = N;
    f.eps = eps_const * std::pow(N, -2.0 / 3.0);
    int nn = N * N;
    f.x.resize(nn);
    f.z.resize(nn);
    f.mask.resize(nn);
    for (int i = 0; i < nn; ++i) {
        double p = pp.p[i], q = pp.q[i], r = pp.r[i], s = pp.s[i];
        auto clamp0 = [](double v) { return v < 0 ? 0.0 : v; };
        f.x[i] = (1 + p - q - r + s) / 2;
        f.z[i] = std::complex<double>(std::sqrt(clamp0(p)) - std::sqrt(clamp0(s)),
                                      std::sqrt(clamp0(q)) - std::sqrt(clamp0(r)));
        f.mask[i] = (f.x[i] >= f.eps && f.x[i] <= 1 - f.eps) ? 1 : 0;
    }
    return f;
}

}  // namespace arctic::shuffling
