#pragma once

#include <utility>
#include <vector>

#include "ratiolab/e11.hpp"
#include "ratiolab/euler.hpp"
#include "ratiolab/shifts.hpp"
#include "ratiolab/types.hpp"

namespace ratiolab::conj {

struct ConjectureValue {
    Complex value{0.0};
    double error_budget = 0.0;  // truncation + quadrature, never silently absorbed
};

// Xi_{K,L}: permutations of {0..K+L-1} increasing on the head and tail
// blocks, returned as (head indices, tail indices) pairs.
std::vector<std::pair<std::vector<int>, std::vector<int>>> xi_permutations(int K, int L);

enum class ChiMode { ExactGamma, TOver2PiPower };

// RHS of the zeta ratios conjecture: integral over [1, T] of the Xi-sum of
// chi-ratios times Y_U A_zeta at sigma-substituted shifts.
ConjectureValue conj_zeta_rhs(const ShiftSet& shifts, double T, const EulerConfig& cfg,
                              ChiMode mode = ChiMode::ExactGamma);

// 1 + (1 - T^{-alpha-beta}) (alpha-gamma)(beta-delta) /
// ((alpha+beta)(gamma+delta)), the leading-order form.
Complex farmer_leading(Complex alpha, Complex beta, Complex gamma, Complex delta, double T);

enum class DiscriminantSign { Positive, Negative };

// RHS of the quadratic-character ratios conjecture: sum over fundamental d
// up to X of the 2^K epsilon-sum with (|d|/pi) conductor powers and g_+/-.
ConjectureValue conj_quadratic_rhs(const ShiftSet& shifts, double X, DiscriminantSign sign,
                                   const EulerConfig& cfg);

enum class Parity { Even, Odd };

// RHS of the elliptic twist ratios conjectures (even/odd functional-equation
// families of E11 twists); odd parity carries the sgn(epsilon) weight.
ConjectureValue conj_elliptic_rhs(const ShiftSet& shifts, double X, Parity parity,
                                  const EulerConfig& cfg, const CoefficientTable& coeffs);

// RHS of the |zeta'/zeta|^2 conjecture, integrated over [0, T] (the t-free
// terms contribute T times their value; the (t/2pi)^{-2r} term in closed
// form). c(r) carries the prime sum with its conjugate-pair theta integral.
ConjectureValue log_deriv_rhs(Complex r, double T, const EulerConfig& cfg);

// c(r) alone (exposed for its reality/limit properties).
ConjectureValue log_deriv_cr(Complex r, const EulerConfig& cfg);

// RHS of the discrete moment D(a,c) = sum over zeros of zeta(rho+a)/zeta(rho+c):
// (1/2pi) integral over [0,T] of log(t/2pi) + zeta'/zeta(1+a) - zeta'/zeta(1+c)
// + prime sum - (t/2pi)^{-a} (zeta(1-a)zeta(1+c)/zeta(1+c-a)) prod_p(...).
ConjectureValue discrete_moment_rhs(Complex a, Complex c, double T, const EulerConfig& cfg);

// B(alpha,delta) prod_{i,j} zeta(1+alpha_i+delta_j)^{-1}, the shifted
// Keating-Snaith ratio per unit T.
ConjectureValue ks_shifted_ratio_rhs(const std::vector<Complex>& alphas,
                                     const std::vector<Complex>& deltas, double T,
                                     const EulerConfig& cfg);

}  // namespace ratiolab::conj
