#include "arctic/curve.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace arctic::curve {

using cd = std::complex<double>;

double critical_R(double Q, double alpha) {
    if (alpha <= 0 || alpha >= 1) throw std::domain_error("critical_R: alpha in (0,1)");
    double t = 1 + std::sqrt(alpha * (1 + Q));
    return t * t / (1 - alpha);
}

Regime classify_regime(double R, double Q, double alpha) {
    if (R < 1) throw std::domain_error("classify_regime: R >= 1");
    if (R >= critical_R(Q, alpha)) return Regime::I;
    return solve_eta_ab(R, Q, alpha).regime;
}

double slope_M(double w, double alpha) { return w / ((w - 1) * (alpha * w + 1 - alpha)); }

double slope_M_prime(double w, double alpha) {
    double den = (w - 1) * (alpha * w + 1 - alpha);
    double dden = alpha * (w - 1) + (alpha * w + 1 - alpha);
    return (den - w * dden) / (den * den);
}

double u_of_w(double w, double alpha) { return (alpha * w + 1 - alpha) / w; }
double w_of_u(double u, double alpha) { return (1 - alpha) / (u - alpha); }

std::complex<double> resolvent_I(cd z, double alpha, double Q, int sheet) {
    double a = (1 - std::sqrt(alpha * (1 + Q)));
    a = a * a / (1 - alpha);
    double b = (1 + std::sqrt(alpha * (1 + Q)));
    b = b * b / (1 - alpha);
    cd szb = static_cast<double>(sheet) * std::sqrt(z - b);
    cd sza = std::sqrt(z - a);
    cd den = std::sqrt((b - a) * z);
    cd t1 = std::log((std::sqrt(cd(a)) * szb + std::sqrt(cd(b)) * sza) / den);
    cd t2 = std::log((std::sqrt(cd(a + Q)) * szb + std::sqrt(cd(b + Q)) * sza) / den);
    double sgn = Q < 1 / alpha - 1 ? -1.0 : 1.0;
    return -std::log(std::sqrt(alpha)) - t1 + sgn * t2;
}

std::complex<double> resolvent_II_Q0(cd z, double R, double alpha, int sheet) {
    double sa = std::sqrt(alpha);
    double a = std::sqrt(R + 1) - std::sqrt((R - 1) * sa);
    a = a * a / (2 * (1 + sa));
    double b = std::sqrt(R + 1) + std::sqrt((R - 1) * sa);
    b = b * b / (2 * (1 + sa));
    cd szb = static_cast<double>(sheet) * std::sqrt(z - b);
    cd sza = std::sqrt(z - a);
    cd num = std::sqrt(cd(a)) * szb + std::sqrt(cd(b)) * sza;
    cd den = std::sqrt(cd(R - a)) * szb + std::sqrt(cd(R - b)) * sza;
    return -std::log(sa) + std::log(z / (z - R)) - 2.0 * std::log(num / den);
}

double z_of_u_I(double u, double alpha, double Q) {
    return -((1 - alpha * (1 + Q)) * u + alpha * Q) / ((u - 1) * (u - alpha));
}

double u_star_I(double alpha, double Q) {
    // positive root of c u^2 + 2 d u - (c alpha + d(1+alpha)) = 0
    double c = 1 - alpha * (1 + Q), d = alpha * Q;
    if (std::abs(c) < 1e-14) return (1 + alpha) / 2;
    double disc = d * d + c * (c * alpha + d * (1 + alpha));
    double r1 = (-d + std::sqrt(disc)) / c, r2 = (-d - std::sqrt(disc)) / c;
    for (double r : {r1, r2})
        if (r > alpha && r < 1) return r;
    throw std::runtime_error("u_star_I: no root in (alpha,1)");
}

double z_pm_II_Q0(double u, double R, double alpha, int sign) {
    double sa = std::sqrt(alpha);
    double rad = R * R * (u - alpha) * (u - 1) + (1 + sa) * (1 + sa) * u;
    return R / 2 - (1 - alpha) * u / (2 * (u - alpha) * (u - 1)) +
           sign * (u - sa) * std::sqrt(rad) / (2 * (u - alpha) * (u - 1));
}

double eta_residual(double eta, double R, double Q, double alpha) {
    return alpha * (1 + eta) * (1 + eta) * (1 + Q + R * eta) * (1 + (R + Q) * eta) /
               ((1 - eta) * (1 - eta) * (1 + R * eta) * (1 + Q + (R + Q) * eta)) -
           1;
}

RegimeParams solve_eta_ab(double R, double Q, double alpha) {
    if (R < 1) throw std::domain_error("solve_eta_ab: R >= 1");
    if (R >= critical_R(Q, alpha))
        throw std::domain_error("solve_eta_ab: Regime I input (R >= Rc)");
    // unique root in [0,1); the left end is negative, the right end diverges to +inf
    double lo = 0, hi = 1 - 1e-16;
    if (!(eta_residual(lo, R, Q, alpha) < 0))
        throw std::runtime_error("solve_eta_ab: bracket failure");
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        (eta_residual(mid, R, Q, alpha) < 0 ? lo : hi) = mid;
    }
    double eta = 0.5 * (lo + hi);
    // safeguarded Newton polish
    for (int it = 0; it < 6; ++it) {
        double f = eta_residual(eta, R, Q, alpha);
        double h = 1e-7;
        double df = (eta_residual(eta + h, R, Q, alpha) - eta_residual(eta - h, R, Q, alpha)) /
                    (2 * h);
        double next = eta - f / df;
        if (next > lo && next < hi) eta = next;
    }
    RegimeParams p;
    p.R = R;
    p.Q = Q;
    p.alpha = alpha;
    p.eta = eta;
    double den = (2 + Q + (2 * R + Q) * eta);
    den *= den;
    p.Aplus = (R + Q + 1) * (1 + eta) * (1 + R * eta) * (1 + (R + Q) * eta) / den;
    p.Aminus = (R - 1) * (1 - eta) * (1 + Q + R * eta) * (1 + Q + (R + Q) * eta) / den;
    double cross = 2 * std::sqrt(p.Aplus * p.Aminus);
    p.a = p.Aplus + p.Aminus - cross;
    p.b = p.Aplus + p.Aminus + cross;
    // The sign s in the L coefficients distinguishes the II_A (+) and II_B (-)
    // branches. The boundary between them is a curve in the (R, Q) plane, not
    // just Q = Qc, so the sign is fixed by whichever choice satisfies the
    // defining (a, b) relations.
    auto set_KL = [&](RegimeParams& q) {
        double s = q.regime == Regime::II_A ? 1.0 : -1.0;
        double a = q.a, b = q.b;
        double Ra = std::sqrt(R - a), Rb = std::sqrt(R - b);
        double aQ = std::sqrt(a + Q), bQ = std::sqrt(b + Q);
        double sqa = std::sqrt(a), sqb = std::sqrt(b);
        q.K = {a * Rb * bQ - b * Ra * aQ, Ra * aQ - Rb * bQ, Ra * bQ - Rb * aQ};
        q.L = {s * b * Ra * sqa - a * Rb * sqb, Rb * sqb - s * Ra * sqa, Ra * sqb - s * Rb * sqa};
    };
    double best = 1e300;
    for (Regime reg : {Regime::II_A, Regime::II_B}) {
        RegimeParams q = p;
        q.regime = reg;
        set_KL(q);
        auto [r1, r2] = ab_relations(q);
        double m = std::max(std::abs(r1), std::abs(r2));
        if (m < best) {
            best = m;
            p.regime = reg;
        }
    }
    // Newton polish of (a, b) on the defining relations; the eta route can
    // lose a few digits near the edges of the regime
    for (int it = 0; it < 4 && best > 1e-14; ++it) {
        auto eval = [&](double a, double b) {
            RegimeParams q = p;
            q.a = a;
            q.b = b;
            set_KL(q);
            return ab_relations(q);
        };
        double h = 1e-8;
        auto [f1, f2] = eval(p.a, p.b);
        auto [f1a, f2a] = eval(p.a + h, p.b);
        auto [f1b, f2b] = eval(p.a, p.b + h);
        double j11 = (f1a - f1) / h, j12 = (f1b - f1) / h;
        double j21 = (f2a - f2) / h, j22 = (f2b - f2) / h;
        double det = j11 * j22 - j12 * j21;
        if (det == 0 || !std::isfinite(det)) break;
        double da = (f1 * j22 - f2 * j12) / det;
        double db = (f2 * j11 - f1 * j21) / det;
        auto [g1, g2] = eval(p.a - da, p.b - db);
        double m = std::max(std::abs(g1), std::abs(g2));
        if (!(m < best)) break;
        p.a -= da;
        p.b -= db;
        best = m;
    }
    set_KL(p);
    return p;
}

std::pair<double, double> ab_relations(const RegimeParams& p) {
    double s = p.regime == Regime::II_A ? 1.0 : -1.0;
    double a = p.a, b = p.b, R = p.R, Q = p.Q;
    double r1 = std::sqrt(p.alpha) * (std::sqrt(R - a) - std::sqrt(R - b)) /
                    (std::sqrt(R - a) + std::sqrt(R - b)) * (std::sqrt(b) + s * std::sqrt(a)) /
                    (std::sqrt(b + Q) - std::sqrt(a + Q)) -
                1;
    double r2 = (s * std::sqrt(a * b) + std::sqrt((a + Q) * (b + Q)) - Q) / 2 +
                std::sqrt((R - a) * (R - b)) - 1;
    return {r1, r2};
}

std::array<double, 3> kl_chain_M(const RegimeParams& p, double u) {
    double sa = std::sqrt(p.alpha);
    return {p.L[0] * u / sa - p.K[0], p.L[1] * u / sa - p.K[1], p.L[2] * u / sa - p.K[2]};
}

double z_gen(const RegimeParams& p, double u, int sign) {
    auto M = kl_chain_M(p, u);
    double a = p.a, b = p.b;
    double rad = (a * M[1] + M[0]) * (b * M[1] + M[0]) +
                 (b - a) * (b - a) / 4 * M[2] * M[2];
    double num = M[0] * M[1] + (a + b) / 2 * M[2] * M[2] + sign * M[2] * std::sqrt(rad);
    return num / (M[2] * M[2] - M[1] * M[1]);
}

double u_of_z_gen(const RegimeParams& p, double z, int zbranch) {
    double sq = zbranch * std::sqrt((z - p.a) * (z - p.b));
    return std::sqrt(p.alpha) * (p.K[2] * sq + p.K[1] * z + p.K[0]) /
           (p.L[2] * sq + p.L[1] * z + p.L[0]);
}

double phi_I(double w, double alpha) { return alpha * w / (alpha * w + 1 - alpha); }

double phi_II_Q0_u(double u, double R, double alpha, int sign) {
    double sa = std::sqrt(alpha);
    double xx = R / (R + 1), xy = 1 / (R + 1);
    double rad = xx * xx * (u - alpha) * (u - 1) + xy * xy * (1 + sa) * (1 + sa) * u;
    return alpha / (2 * u) + xx / 2 + xy * (u - alpha) / (2 * u * (u - 1)) +
           sign * (u - sa) * std::sqrt(rad) / (2 * u * (u - 1));
}

double phi_II_Q0_w(double w, double R, double alpha, int sign) {
    return phi_II_Q0_u(u_of_w(w, alpha), R, alpha, sign);
}

double phi_gen_u(const RegimeParams& p, double u, int sign) {
    double sa = std::sqrt(p.alpha), alpha = p.alpha, R = p.R, Q = p.Q;
    auto M = kl_chain_M(p, u);
    double a = p.a, b = p.b, ba = b - a;
    double core = M[0] * M[1] + (a + b) / 2 * M[2] * M[2];
    double rad = 4 * alpha * (a * M[1] + M[0]) * (b * M[1] + M[0]) / (ba * ba) +
                 alpha * M[2] * M[2];
    return 1 / ((R + Q + 1) * u * (u - 1)) *
           ((R * alpha + 1) * u - alpha * (R + 1) + alpha * core / (ba * ba) +
            sign * sa * M[2] / (2 * ba) * std::sqrt(rad));
}

double phi_gen_w(const RegimeParams& p, double w, int sign) {
    return phi_gen_u(p, u_of_w(w, p.alpha), sign);
}

std::pair<double, double> caustic_point(const std::function<double(double)>& Phi, double w,
                                        double alpha) {
    double h = std::max(1e-6, 1e-6 * std::abs(w));
    double dP = (Phi(w + h) - Phi(w - h)) / (2 * h);
    double M = slope_M(w, alpha), dM = slope_M_prime(w, alpha);
    double y = -dP / dM;
    double x = -M * dP / dM + Phi(w);
    return {x, y};
}

std::pair<double, double> caustic_I_closed(double w, double alpha) {
    double den = alpha * w * w + 1 - alpha;
    return {alpha * w * w / den, alpha * (1 - alpha) * (w - 1) * (w - 1) / den};
}

double ellipse_residual(double x, double y, double alpha) {
    double u = 1 - x - y, v = x - y;
    return u * u / (1 - alpha) + v * v / alpha - 1;
}

double w0_through_corner(double alpha, double xi_x, double xi_y) {
    // (w-1)(alpha w + 1 - alpha) xi_x - w xi_y - alpha w (w-1) = 0, larger root
    double A = alpha * xi_x - alpha;
    double B = (1 - 2 * alpha) * xi_x - xi_y + alpha;
    double C = -(1 - alpha) * xi_x;
    double disc = B * B - 4 * A * C;
    if (disc < 0) throw std::runtime_error("w0_through_corner: no real root");
    double r1 = (-B + std::sqrt(disc)) / (2 * A), r2 = (-B - std::sqrt(disc)) / (2 * A);
    return std::max(r1, r2);
}

double w0_II_Q0(double R, double alpha) {
    double rc = critical_R(0, alpha);
    (void)R;
    return 2 * rc / (rc - 1);
}

std::vector<CurveBranch> curve_branches(double R, double Q, double alpha, int n_samples) {
    std::vector<CurveBranch> out;
    Regime reg = classify_regime(R, Q, alpha);
    double xi_x = R / (R + Q + 1), xi_y = 1 / (R + Q + 1);
    const double wpole = -(1 - alpha) / alpha;
    auto excluded = [&](double w) {
        for (double ws : {wpole, 0.0, 1.0})
            if (std::abs(w - ws) < 1e-6) return true;
        return false;
    };
    if (reg == Regime::I) {
        CurveBranch br;
        br.label = "ellipse";
        for (int i = 0; i < n_samples; ++i) {
            double t = -1.0 + 2.0 * (i + 0.5) / n_samples;
            double w = std::tan(M_PI * t / 2);  // compactified w in R U {inf}
            if (!std::isfinite(w) || excluded(w)) continue;
            auto [x, y] = caustic_I_closed(w, alpha);
            br.pts.push_back({w, x, y});
        }
        br.special.push_back({"contact w=1", alpha, 0});
        br.special.push_back({"contact w=inf", 1, 1 - alpha});
        br.special.push_back({"w0", 0, 0});
        {
            double w0 = w0_through_corner(alpha, xi_x, xi_y);
            auto [x, y] = caustic_I_closed(w0, alpha);
            br.special.back() = {"w0", x, y};
        }
        out.push_back(std::move(br));
        return out;
    }
    // Regime II: two signed tangent families
    RegimeParams params;
    bool q0 = Q < 1e-12;
    if (!q0) params = solve_eta_ab(R, Q, alpha);
    for (int sign : {+1, -1}) {
        CurveBranch br;
        std::function<double(double)> Phi;
        if (q0)
            Phi = [R, alpha, sign](double w) { return phi_II_Q0_w(w, R, alpha, sign); };
        else
            Phi = [&params, sign](double w) { return phi_gen_w(params, w, sign); };
        for (int i = 0; i < n_samples; ++i) {
            double t = -1.0 + 2.0 * (i + 0.5) / n_samples;
            double w = std::tan(M_PI * t / 2);
            if (!std::isfinite(w) || excluded(w)) continue;
            auto [x, y] = caustic_point(Phi, w, alpha);
            if (!std::isfinite(x) || !std::isfinite(y)) continue;  // outside the physical window
            br.pts.push_back({w, x, y});
        }
        br.label = sign > 0 ? "C+" : "C-";
        // the corner quadratic derives from the Regime I tangent family and can
        // lose its real root at generic Q; the annotation is then omitted
        try {
            double w0 = q0 ? w0_II_Q0(R, alpha) : w0_through_corner(alpha, xi_x, xi_y);
            if (!excluded(w0)) {
                double pv = Phi(w0);
                if (std::isfinite(pv)) br.special.push_back({"w0 tangent value", w0, pv});
            }
        } catch (const std::runtime_error&) {
        }
        out.push_back(std::move(br));
    }
    // fix labels by proximity to the cut corner: C- is the branch nearest (xi_x, xi_y)
    auto min_dist = [&](const CurveBranch& br) {
        double best = 1e300;
        for (const auto& pt : br.pts) {
            double d = std::hypot(pt.x - xi_x, pt.y - xi_y);
            best = std::min(best, d);
        }
        return best;
    };
    if (out.size() == 2 && min_dist(out[0]) < min_dist(out[1]))
        std::swap(out[0].label, out[1].label);
    return out;
}

ImplicitSexticQ0 implicit_sextic_Q0(double alpha, double R) {
    double beta = (R - 1) / ((R + 1) * std::sqrt(alpha));
    if (beta < 0 || beta > 1) throw std::domain_error("implicit_sextic_Q0: beta outside [0,1]");
    ImplicitSexticQ0 sx;
    sx.alpha = alpha;
    sx.beta = beta;
    double al = alpha, be = beta;
    auto& C = sx.C;
    auto P = [&](std::initializer_list<double> cs) {
        double v = 0, bp = 1;
        for (double c : cs) {
            v += c * bp;
            bp *= be;
        }
        return v;
    };
    double a2 = al * al, a3 = a2 * al, a4 = a3 * al;
    C[6][0] = 64 * (1 - al) * (1 - al) * (1 - 2 * al * be + al * be * be) *
              (1 - 2 * al * be + al * be * be);
    C[5][0] = 64 * (1 - al) * (1 - al) *
              P({1, -(5 + 2 * al), 18 * al, -2 * al * (4 + 7 * al), 13 * a2, -3 * a2});
    C[4][2] = 128 * (1 - al) * (1 - al) *
              P({1, 2 - 6 * al, -2 * (1 - al - 3 * a2), 2 * (1 - 3 * al) * al, a2});
    C[4][0] = 16 * (1 - al) *
              P({1 + al, -(22 - 18 * al + 8 * a2), 41 + 13 * al - 32 * a2 + 8 * a3,
                 -4 * al * (36 - 25 * al - a2), al * (52 + 63 * al - 85 * a2),
                 -6 * a2 * (13 - 11 * al), (15 - 13 * al) * a2});
    C[3][2] = 128 * (1 - al) * (1 - al) *
              P({1, -2 * (2 + al), -(4 - 18 * al), 4 - 6 * al - 14 * a2, -(4 - 13 * al) * al,
                 -2 * a2});
    C[3][0] = 32 * (1 - al) * (1 - be) *
              P({al, -(2 + 3 * al + 2 * a2), 22 - 21 * al + 19 * a2,
                 -al * (59 - 48 * al + 19 * a2), al * (22 + 18 * al - 15 * a2),
                 -a2 * (28 - 17 * al), a2 * (5 - 3 * al)});
    C[2][4] = 64 * (1 - al) * (1 - al) *
              P({1, 8 - 12 * al, -2 * (4 - al - 6 * a2), 4 * al * (2 - 3 * al), a2});
    C[2][2] = -32 * (1 - al) *
              P({1, 12 - 26 * al + 8 * a2, -(15 - 3 * al - 35 * a2 + 8 * a3),
                 -(22 - 96 * al + 90 * a2 + 4 * a3), 12 - 25 * al - 35 * a2 + 63 * a3,
                 -2 * al * (6 - 26 * al + 23 * a2), -a2 * (6 - 7 * al)});
    // the beta^5..beta^8 rows of C[2][0] differ from the published table by a
    // factor 4; the corrected values reproduce the beta=1 factorization exactly
    C[2][0] = P({4 * (2 - al) * al, -16 * al * (9 - 8 * al + a2),
                 4 * (24 + 78 * al - 36 * a2 - 42 * a3 + 4 * a4),
                 -32 * (26 - 41 * al + 64 * a2 - 45 * a3 + 3 * a4),
                 4 * (104 + 286 * al - 438 * a2 + 322 * a3 - 204 * a4),
                 -16 * al * (105 - 96 * al + 33 * a2 - 28 * a3),
                 8 * al * (41 + 102 * al - 163 * a2 + 34 * a3),
                 -32 * a2 * (16 - 20 * al + 5 * a2), 4 * a2 * (15 - 18 * al + 4 * a2)});
    C[1][4] = 64 * (1 - al) * (1 - al) *
              P({1, -(3 + 2 * al), -(8 - 18 * al), 2 * (4 - 2 * al - 7 * a2),
                 -al * (8 - 13 * al), -a2});
    C[1][2] = -32 * (1 - al) *
              P({2 - al, -(6 + 3 * al - 2 * a2), -(16 - 58 * al + 21 * a2),
                 14 - 20 * al - 48 * a2 + 19 * a3, 14 - 53 * al + 78 * a2 - 4 * a3,
                 -(4 - 3 * al - 16 * a2 + 36 * a3), al * (4 - 17 * al + 20 * a2),
                 a2 * (2 - 3 * al)});
    C[1][0] = 4 *
              (4 * (1 - al) * (1 - al) * be * be +
               al * (1 - be) * (1 - be) * (1 - be) * (1 - be)) *
              P({al, -(4 - al + 2 * a2), 28 - 30 * al + 12 * a2, -(8 + 22 * al - 20 * a2),
                 al * (21 - 16 * al), -al * (3 - 2 * al)});
    C[0][6] = 256 * (1 - al) * (1 - al) * (1 - al) * (1 - be) * be * (1 - al * be);
    C[0][4] = 16 * (1 - al) * (1 - al) *
              P({1, -(26 - 8 * al), 41 + 30 * al - 8 * a2, -4 * (1 + 21 * al + a2),
                 -(8 - 30 * al - 41 * a2), 2 * (4 - 13 * al) * al, a2});
    C[0][2] = -8 * (1 - al) * (1 - be) *
              P({2 - al, -(18 - 7 * al + 2 * a2), 32 + 16 * al + a2 + 2 * a3,
                 24 - 138 * al + 29 * a2 - 10 * a3, 10 - 29 * al + 138 * a2 - 24 * a3,
                 -(2 + al + 16 * a2 + 32 * a3), al * (2 - 7 * al + 18 * a2),
                 a2 * (1 - 2 * al)});
    {
        double bb = 4 * (1 - al) * (1 - al) * be * be +
                    al * (1 - be) * (1 - be) * (1 - be) * (1 - be);
        C[0][0] = (1 - 6 * be + be * be) * bb * bb;
    }
    return sx;
}

double ImplicitSexticQ0::A(double z1, double z2) const {
    double Z1 = z1 / std::sqrt(alpha), Z2 = z2 / std::sqrt(1 - alpha);
    double s = 0;
    for (int n1 = 0; n1 <= 6; ++n1)
        for (int n2 = 0; n2 <= 6 - n1; n2 += 2)
            if (C[n1][n2] != 0) s += C[n1][n2] * std::pow(Z1, n1) * std::pow(Z2, n2);
    return (1 - alpha) * (1 - alpha) * std::pow(alpha, 6) * s;
}

double ImplicitSexticQ0::scale(double z1, double z2) const {
    double Z1 = std::max(1.0, std::abs(z1) / std::sqrt(alpha));
    double Z2 = std::max(1.0, std::abs(z2) / std::sqrt(1 - alpha));
    double s = 0;
    for (int n1 = 0; n1 <= 6; ++n1)
        for (int n2 = 0; n2 <= 6 - n1; n2 += 2)
            s += std::abs(C[n1][n2]) * std::pow(Z1, n1) * std::pow(Z2, n2);
    return (1 - alpha) * (1 - alpha) * std::pow(alpha, 6) * s;
}

double ImplicitSexticQ0::A_xy(double x, double y) const { return A(x - y, 1 - x - y); }

std::array<double, 5> quartic_P(double z1, double z2, double alpha, double R) {
    double sa = std::sqrt(alpha);
    double xx = R / (R + 1), xy = 1 / (R + 1);
    double S = z1 - z2 - xx, T = z1 + z2 + xy;
    // A(u) = (S+1)u^2 - (S+T+alpha)u + T*alpha
    double A0 = T * alpha, A1 = -(S + T + alpha), A2 = S + 1;
    // rad(u) = xx^2 u^2 + (xy^2(1+sa)^2 - xx^2(1+alpha)) u + xx^2 alpha
    double r0 = xx * xx * alpha, r1 = xy * xy * (1 + sa) * (1 + sa) - xx * xx * (1 + alpha),
           r2 = xx * xx;
    // lin2(u) = (u - sa)^2 = u^2 - 2 sa u + alpha
    double l0 = alpha, l1 = -2 * sa, l2 = 1;
    std::array<double, 5> P{};
    P[0] = A0 * A0 - l0 * r0;
    P[1] = 2 * A0 * A1 - (l0 * r1 + l1 * r0);
    P[2] = A1 * A1 + 2 * A0 * A2 - (l0 * r2 + l1 * r1 + l2 * r0);
    P[3] = 2 * A1 * A2 - (l1 * r2 + l2 * r1);
    P[4] = A2 * A2 - l2 * r2;
    return P;
}

double quartic_discriminant(const std::array<double, 5>& c) {
    double e = c[0], d = c[1], cc = c[2], b = c[3], a = c[4];
    return 256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e -
           128 * a * a * cc * cc * e * e + 144 * a * a * cc * d * d * e -
           27 * a * a * d * d * d * d + 144 * a * b * b * cc * e * e -
           6 * a * b * b * d * d * e - 80 * a * b * cc * cc * d * e +
           18 * a * b * cc * d * d * d + 16 * a * cc * cc * cc * cc * e -
           4 * a * cc * cc * cc * d * d - 27 * b * b * b * b * e * e +
           18 * b * b * b * cc * d * e - 4 * b * b * b * d * d * d -
           4 * b * b * cc * cc * cc * e + b * b * cc * cc * d * d;
}

DiscriminantReport discriminant_check(double alpha, double R, int n_points, uint64_t seed,
                                      double tol) {
    DiscriminantReport rep;
    ImplicitSexticQ0 sx = implicit_sextic_Q0(alpha, R);
    double sa = std::sqrt(alpha), xy = 1 / (R + 1);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.5, 1.5);
    while (rep.n < n_points) {
        double z1 = unif(rng), z2 = unif(rng);
        double line = z1 - (1 + sa) / 2 + xy;
        if (std::abs(line) < 0.05) continue;  // excluded neighborhood of the factored line
        double D = quartic_discriminant(quartic_P(z1, z2, alpha, R));
        double rhs = (4 / alpha) * line * line * sx.A(z1, z2);
        double scale = (4 / alpha) * line * line * sx.scale(z1, z2);
        double err = std::abs(D - rhs) / scale;
        rep.max_rel_err = std::max(rep.max_rel_err, err);
        ++rep.n;
    }
    rep.pass = rep.max_rel_err < tol;
    return rep;
}

}  // namespace arctic::curve
