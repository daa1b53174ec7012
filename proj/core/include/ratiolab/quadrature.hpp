#pragma once

#include <functional>
#include <vector>

#include "ratiolab/types.hpp"

namespace ratiolab {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre rule computed by Newton iteration on P_n; cached per n.
const GaussRule& gauss_legendre(int n);

struct QuadResult {
    Complex value{0.0};
    double error_estimate = 0.0;
};

// Composite Gauss-Legendre over [a,b], panels halved until the value moves
// by less than rel_tol (plus abs_tol). Deterministic summation order.
QuadResult integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                              double rel_tol, double abs_tol = 0.0, int initial_panels = 8,
                              int max_halvings = 12, int points = 12);

// Trapezoid rule for 1-periodic analytic integrands on [0,1): node count
// doubles from n0 until the relative change drops below rel_tol.
QuadResult integrate_periodic_doubling(const std::function<Complex(double)>& f, int n0,
                                       double rel_tol, int n_max = 1 << 16);

// Richardson extrapolation of f(h) -> f(0) from samples at h, h/2, h/4,
// assuming an expansion in integer powers of h.
Complex richardson_limit(const std::function<Complex(double)>& f, double h0);

}  // namespace ratiolab
