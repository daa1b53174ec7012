#include "ratiolab/zeta_zeros.hpp"

#include <cmath>

#include "ratiolab/errors.hpp"
#include "ratiolab/gamma.hpp"
#include "ratiolab/zeta.hpp"

namespace ratiolab {

double riemann_siegel_theta(double t) {
    Complex lg = log_gamma(Complex(0.25, 0.5 * t));
    return lg.imag() - 0.5 * t * std::log(kPi);
}

double hardy_z(double t) {
    Complex rot = std::exp(Complex(0.0, riemann_siegel_theta(t)));
    return (rot * zeta(Complex(0.5, t))).real();
}

double zero_count_main_term(double T) {
    return T / kTwoPi * std::log(T / (kTwoPi * std::exp(1.0))) + 7.0 / 8.0;
}

namespace {

std::vector<double> scan_zeros(double T, double step) {
    std::vector<double> zeros;
    double t0 = 2.0;
    double z0 = hardy_z(t0);
    for (double t = t0 + step; t <= T + step * 0.5; t += step) {
        double t1 = std::min(t, T);
        double z1 = hardy_z(t1);
        if (z0 == 0.0) zeros.push_back(t0);
        else if ((z0 < 0.0) != (z1 < 0.0)) {
            double lo = t0, hi = t1, zlo = z0;
            while (hi - lo > 1e-8) {
                double mid = 0.5 * (lo + hi);
                double zm = hardy_z(mid);
                if ((zlo < 0.0) != (zm < 0.0)) hi = mid;
                else {
                    lo = mid;
                    zlo = zm;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        t0 = t1;
        z0 = z1;
        if (t1 >= T) break;
    }
    return zeros;
}

}  // namespace

ZeroList zeta_zeros_up_to(double T) {
    if (T > 1e4) throw Error("zeta_zeros_up_to: T <= 1e4");
    ZeroList list;
    list.height_bound = T;
    if (T < 14.0) return list;
    double tolerance = 2.5;  // |S(T)| stays well under this at desk scale
    for (double step : {0.05, 0.0125}) {
        list.ordinates = scan_zeros(T, step);
        double expected = zero_count_main_term(T);
        if (std::abs(static_cast<double>(list.ordinates.size()) - expected) <= tolerance)
            return list;
    }
    throw MissedZero("zeta_zeros_up_to: count check against main term failed");
}

}  // namespace ratiolab
