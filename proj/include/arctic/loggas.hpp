#pragma once

#include <gmpxx.h>

#include <vector>

namespace arctic::loggas {

mpz_class binomial(long n, long k);

// Meixner site weight mu_q^alpha(m) = alpha^m * C(q+m, q).
mpq_class meixner_weight(long q, const mpq_class& alpha, long m);

// Determinant by exact Gaussian elimination over rationals.
mpq_class det_rational(std::vector<std::vector<mpq_class>> M);

// Hankel-determinant value of F_{N,r,s}(1), equal to the EFP G_N^{(r,..,r)}.
mpq_class F_at_one(int N, int r, int s, const mpq_class& alpha);

// Determinant form of F_{N,r,s}(w); w=1 dispatches to F_at_one (the matrix-H
// path has a removable singularity there).
mpq_class F_at_w(int N, int r, int s, const mpq_class& alpha, const mpq_class& w);

// h_{N,r,s}(w) = F(w)/F(1); h(1) = 1 and the polynomial coefficients in w are
// the boundary probabilities H^(l).
mpq_class h_generating(int N, int r, int s, const mpq_class& alpha, const mpq_class& w);

// H^(l), l=1..r, recovered from h by exact Lagrange interpolation at w=1..r.
std::vector<mpq_class> h_coefficients(int N, int r, int s, const mpq_class& alpha);

// Multiple-sum log-gas value I_{N,r,s}(u); the contour integral is resolved as
// a residue sum over distinct particle positions. u=1 computes the plain
// partition sum. Guard: s <= 3, r <= 6 (the sum has r^s terms).
mpq_class loggas_I(int N, int r, int s, const mpq_class& alpha, const mpq_class& u);

// u = (alpha*w + 1 - alpha)/w and its inverse w = (1-alpha)/(u-alpha).
mpq_class u_of_w(const mpq_class& alpha, const mpq_class& w);
mpq_class w_of_u(const mpq_class& alpha, const mpq_class& u);

}  // namespace arctic::loggas
