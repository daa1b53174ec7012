#pragma once

#include <vector>

#include "ratiolab/types.hpp"

namespace ratiolab {

struct ZeroList {
    std::vector<double> ordinates;  // strictly increasing, in (0, T]
    double height_bound = 0.0;
};

// Riemann-Siegel theta: Im log Gamma(1/4 + it/2) - (t/2) log pi.
double riemann_siegel_theta(double t);

// Hardy function Z(t) = e^{i theta(t)} zeta(1/2 + it), real-valued.
double hardy_z(double t);

// Riemann-von Mangoldt main term (T/2pi) log(T/(2 pi e)) + 7/8.
double zero_count_main_term(double T);

// All zeros of zeta on the critical line with 0 < gamma <= T, located by
// sign changes of Z on a fixed grid plus bisection; ordinates accurate to
// 1e-6. Throws MissedZero if the count disagrees with the main term.
ZeroList zeta_zeros_up_to(double T);

}  // namespace ratiolab
