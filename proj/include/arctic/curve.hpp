#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace arctic::curve {

enum class Regime { I, II_A, II_B };

// Support endpoints and inversion coefficients for a Regime II geometry.
// The II_A / II_B split fixes the branch sign in the L coefficients; it is
// decided by which choice satisfies the defining (a, b) relations.
struct RegimeParams {
    Regime regime = Regime::I;
    double R = 0, Q = 0, alpha = 0;
    double a = 0, b = 0;
    double eta = 0;
    double Aplus = 0, Aminus = 0;
    std::array<double, 3> K{};  // K0, K1, K2
    std::array<double, 3> L{};  // L0, L1, L2
};

double critical_R(double Q, double alpha);                 // Rc = (1+sqrt(alpha(1+Q)))^2/(1-alpha)
Regime classify_regime(double R, double Q, double alpha);  // I iff R >= Rc

double slope_M(double w, double alpha);  // w/((w-1)(alpha w + 1 - alpha))
double slope_M_prime(double w, double alpha);
double u_of_w(double w, double alpha);
double w_of_u(double u, double alpha);

// ---- resolvents and functional inverses ----

// Regime I resolvent, any Q; sheet = +1 principal, -1 flips sign of sqrt(z-b).
std::complex<double> resolvent_I(std::complex<double> z, double alpha, double Q, int sheet);
// Regime II resolvent, Q = 0 closed form.
std::complex<double> resolvent_II_Q0(std::complex<double> z, double R, double alpha, int sheet);

double z_of_u_I(double u, double alpha, double Q);
// Branch point of the u -> z map in Regime I: principal sheet recovers
// u in (u_star, 1), the flipped sheet u in (alpha, u_star).
double u_star_I(double alpha, double Q);

double z_pm_II_Q0(double u, double R, double alpha, int sign);

// Generic-Q inversion chain.
RegimeParams solve_eta_ab(double R, double Q, double alpha);
// Residual of the quartic eta-equation (zero at the solution).
double eta_residual(double eta, double R, double Q, double alpha);
// Residuals of the two defining relations for (a,b); both ~0 for valid params.
std::pair<double, double> ab_relations(const RegimeParams& p);
// M_i(u) = L_i u/sqrt(alpha) - K_i.
std::array<double, 3> kl_chain_M(const RegimeParams& p, double u);
double z_gen(const RegimeParams& p, double u, int sign);
double u_of_z_gen(const RegimeParams& p, double z, int zbranch);

// ---- Phi and the tangent family ----

double phi_I(double w, double alpha);  // alpha*w/(alpha*w + 1 - alpha)
double phi_II_Q0_u(double u, double R, double alpha, int sign);
double phi_II_Q0_w(double w, double R, double alpha, int sign);
double phi_gen_u(const RegimeParams& p, double u, int sign);
double phi_gen_w(const RegimeParams& p, double w, int sign);

// Caustic of x - M(w)y - Phi(w) = 0; Phi' by central differences with
// h = max(1e-6, 1e-6*|w|).
std::pair<double, double> caustic_point(const std::function<double(double)>& Phi, double w,
                                        double alpha);
std::pair<double, double> caustic_I_closed(double w, double alpha);
double ellipse_residual(double x, double y, double alpha);  // Regime I arctic ellipse

// Cutoff parameter w0: larger root of (w-1)(alpha w+1-alpha) xi_x - w xi_y
// - alpha w(w-1) = 0 (the tangent line through (xi_x, xi_y)).
double w0_through_corner(double alpha, double xi_x, double xi_y);
double w0_II_Q0(double R, double alpha);  // 2 Rc/(Rc - 1)

struct CurvePoint {
    double w, x, y;
};

struct SpecialPoint {
    std::string name;
    double x, y;
};

struct CurveBranch {
    std::string label;  // "ellipse", "C+", "C-"
    std::vector<CurvePoint> pts;
    std::vector<SpecialPoint> special;
};

// Regime I: one closed-form ellipse arc. Regime II: branches C+ and C-
// sampled over compactified w with pole neighborhoods excluded.
std::vector<CurveBranch> curve_branches(double R, double Q, double alpha, int n_samples);

// ---- implicit sextic (Q = 0) ----

struct ImplicitSexticQ0 {
    double alpha = 0, beta = 0;
    // C[n1][n2], n1 + n2 <= 6, nonzero only for even n2
    std::array<std::array<double, 7>, 7> C{};
    double A(double z1, double z2) const;      // (1-alpha)^2 alpha^6 sum C Z1^n1 Z2^n2
    double scale(double z1, double z2) const;  // sum of |term| magnitudes, for tolerances
    double A_xy(double x, double y) const;     // composes z1 = x-y, z2 = 1-x-y
};

ImplicitSexticQ0 implicit_sextic_Q0(double alpha, double R);

// Quartic P(u) = A(u)^2 - (u-sqrt(alpha))^2 rad(u); coefficients ascending.
std::array<double, 5> quartic_P(double z1, double z2, double alpha, double R);
double quartic_discriminant(const std::array<double, 5>& c);

struct DiscriminantReport {
    int n = 0;
    double max_rel_err = 0;  // of D vs (4/alpha) line^2 A
    bool pass = false;
};

// Checks D(P) = (4/alpha) * (z1 - (1+sqrt(alpha))/2 + xi_y)^2 * A(z1,z2) on
// random off-line sample points.
DiscriminantReport discriminant_check(double alpha, double R, int n_points, uint64_t seed,
                                      double tol = 1e-8);

}  // namespace arctic::curve
