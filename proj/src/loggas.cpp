#include "arctic/loggas.hpp"

#include <stdexcept>

namespace arctic::loggas {

mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

static mpz_class factorial(long n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

static mpq_class qpow(const mpq_class& x, long e) {
    if (e < 0) {
        if (x == 0) throw std::domain_error("0 to negative power");
        return 1 / qpow(x, -e);
    }
    mpq_class out = 1, base = x;
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

mpq_class meixner_weight(long q, const mpq_class& alpha, long m) {
    if (q < 0 || m < 0) throw std::invalid_argument("meixner_weight: q, m >= 0");
    return qpow(alpha, m) * mpq_class(binomial(q + m, q));
}

mpq_class det_rational(std::vector<std::vector<mpq_class>> M) {
    size_t n = M.size();
    mpq_class det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && M[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det *= M[c][c];
        mpq_class inv = 1 / M[c][c];
        for (size_t row = c + 1; row < n; ++row) {
            if (M[row][c] == 0) continue;
            mpq_class f = M[row][c] * inv;
            for (size_t cc = c; cc < n; ++cc) M[row][cc] -= f * M[c][cc];
        }
    }
    return det;
}

// Shared table of power sums T[p] = sum_{m=0}^{r-1} mu_q^alpha(m) * m^p.
static std::vector<mpq_class> power_sums(long q, const mpq_class& alpha, int r, int pmax) {
    std::vector<mpq_class> T(pmax + 1, mpq_class(0));
    mpq_class apow = 1;  // alpha^m
    for (long m = 0; m < r; ++m) {
        mpq_class mu = apow * mpq_class(binomial(q + m, q));
        mpq_class mp = 1;  // m^p
        for (int p = 0; p <= pmax; ++p) {
            T[p] += mu * mp;
            mp *= m;
        }
        apow *= alpha;
    }
    return T;
}

static void check_geometry(int N, int r, int s) {
    if (s < 1 || r < 1 || r + s > N) throw std::invalid_argument("invalid (N,r,s)");
}

mpq_class F_at_one(int N, int r, int s, const mpq_class& alpha) {
    check_geometry(N, r, s);
    long q = N - r - s;
    mpq_class pref = qpow(mpq_class(factorial(q)), s);
    for (int j = 0; j < s; ++j) pref /= mpq_class(factorial(q + j) * factorial(j));
    pref *= qpow(1 - alpha, static_cast<long>(s) * (s + q));
    pref /= qpow(alpha, static_cast<long>(s) * (s - 1) / 2);
    auto T = power_sums(q, alpha, r, 2 * s - 2);
    std::vector<std::vector<mpq_class>> M(s, std::vector<mpq_class>(s));
    for (int j = 0; j < s; ++j)
        for (int k = 0; k < s; ++k) M[j][k] = T[j + k];
    return pref * det_rational(std::move(M));
}

mpq_class F_at_w(int N, int r, int s, const mpq_class& alpha, const mpq_class& w) {
    check_geometry(N, r, s);
    if (w == 0) throw std::invalid_argument("F_at_w: w = 0");
    if (w == 1) return F_at_one(N, r, s, alpha);  // dedicated branch, u=1 is removable
    long q = N - r - s;
    mpq_class u = u_of_w(alpha, w);
    mpq_class pref = qpow(mpq_class(factorial(q)), s);
    for (int j = 0; j < s; ++j) pref /= mpq_class(factorial(q + j));
    for (int j = 0; j < s - 1; ++j) pref /= mpq_class(factorial(j));
    pref *= qpow(1 - alpha, static_cast<long>(s) * (s + q));
    pref /= qpow(alpha, static_cast<long>(s) * (s - 1) / 2);
    pref *= qpow(w, r - 1) * qpow(u, r + s - 2) / qpow(1 - u, s - 1);
    auto T = power_sums(q, alpha, r, 2 * s - 3 >= 0 ? 2 * s - 3 : 0);
    // last column replaces alpha^m by (alpha/u)^m
    std::vector<mpq_class> S(s, mpq_class(0));
    {
        mpq_class au = alpha / u, apow = 1;
        for (long m = 0; m < r; ++m) {
            mpq_class mu = apow * mpq_class(binomial(q + m, q));
            mpq_class mp = 1;
            for (int p = 0; p < s; ++p) {
                S[p] += mu * mp;
                mp *= m;
            }
            apow *= au;
        }
    }
    std::vector<std::vector<mpq_class>> H(s, std::vector<mpq_class>(s));
    for (int j = 1; j <= s; ++j)
        for (int k = 1; k <= s; ++k) H[j - 1][k - 1] = (k != s) ? T[j + k - 2] : S[j - 1];
    return pref * det_rational(std::move(H));
}

mpq_class h_generating(int N, int r, int s, const mpq_class& alpha, const mpq_class& w) {
    return F_at_w(N, r, s, alpha, w) / F_at_one(N, r, s, alpha);
}

std::vector<mpq_class> h_coefficients(int N, int r, int s, const mpq_class& alpha) {
    // h is a degree r-1 polynomial; interpolate exactly at w = 1..r
    std::vector<mpq_class> hv(r);
    for (int w = 1; w <= r; ++w) hv[w - 1] = h_generating(N, r, s, alpha, mpq_class(w));
    std::vector<mpq_class> coef(r, mpq_class(0));
    for (int i = 0; i < r; ++i) {
        // Lagrange basis ell_i(w) = prod_{j != i} (w - x_j)/(x_i - x_j), x_k = k+1
        std::vector<mpq_class> basis(1, mpq_class(1));
        mpq_class den = 1;
        for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            basis.push_back(0);
            for (int d = static_cast<int>(basis.size()) - 1; d > 0; --d)
                basis[d] = basis[d - 1] - mpq_class(j + 1) * basis[d];
            basis[0] *= -mpq_class(j + 1);
            den *= mpq_class(i - j);
        }
        for (int d = 0; d < r; ++d) coef[d] += hv[i] * basis[d] / den;
    }
    return coef;  // coef[l-1] = H^(l)
}

mpq_class loggas_I(int N, int r, int s, const mpq_class& alpha, const mpq_class& u) {
    check_geometry(N, r, s);
    if (s > 3 || r > 6) throw std::invalid_argument("loggas_I guard: s <= 3, r <= 6");
    long q = N - r - s;
    std::vector<mpq_class> mu(r);
    for (int m = 0; m < r; ++m) mu[m] = meixner_weight(q, alpha, m);
    mpq_class total = 0;
    std::vector<int> ms(s, 0);
    while (true) {
        // Vandermonde^2 kills coincident configurations in both branches
        bool distinct = true;
        for (int a = 0; a < s && distinct; ++a)
            for (int b = a + 1; b < s; ++b)
                if (ms[a] == ms[b]) {
                    distinct = false;
                    break;
                }
        if (distinct) {
            mpq_class wt = 1;
            for (int a = 0; a < s; ++a)
                for (int b = a + 1; b < s; ++b) {
                    long d = ms[b] - ms[a];
                    wt *= mpq_class(d * d);
                }
            for (int a = 0; a < s; ++a) wt *= mu[ms[a]];
            if (u == 1) {
                total += wt;
            } else {
                // sum of residues of the z-contour integral at z = m_p
                mpq_class res = 0;
                for (int p = 0; p < s; ++p) {
                    mpq_class den = 1;
                    for (int j = 0; j < s; ++j)
                        if (j != p) den *= mpq_class(ms[p] - ms[j]);
                    res += mpq_class(factorial(s - 1)) * qpow(u, r + s - ms[p] - 2) /
                           qpow(1 - u, s - 1) / den;
                }
                total += wt * res;
            }
        }
        int pos = s - 1;
        while (pos >= 0 && ms[pos] == r - 1) ms[pos--] = 0;
        if (pos < 0) break;
        ++ms[pos];
    }
    return total;
}

mpq_class u_of_w(const mpq_class& alpha, const mpq_class& w) {
    if (w == 0) throw std::invalid_argument("u_of_w: w = 0");
    return (alpha * w + 1 - alpha) / w;
}

mpq_class w_of_u(const mpq_class& alpha, const mpq_class& u) {
    if (u == alpha) throw std::invalid_argument("w_of_u: u = alpha");
    return (1 - alpha) / (u - alpha);
}

}  // namespace arctic::loggas
