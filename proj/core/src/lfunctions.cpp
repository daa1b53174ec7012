#include "ratiolab/lfunctions.hpp"

#include <cmath>
#include <vector>

#include "ratiolab/characters.hpp"
#include "ratiolab/errors.hpp"
#include "ratiolab/gamma.hpp"
#include "ratiolab/zeta.hpp"

namespace ratiolab {

Complex dirichlet_l(int64_t d, Complex s) {
    if (!is_fundamental_discriminant(d)) throw NotFundamental("dirichlet_l: d not fundamental");
    if (std::abs(d) > 100000) throw Error("dirichlet_l: |d| <= 1e5");
    if (d == 1) return zeta(s);
    int64_t q = std::abs(d);
    Complex acc(0.0);
    for (int64_t a = 1; a <= q; ++a) {
        int chi = kronecker_symbol(d, a);
        if (chi == 0) continue;
        acc += static_cast<double>(chi) * hurwitz_zeta(s, static_cast<double>(a) / q);
    }
    return std::exp(-s * std::log(static_cast<double>(q))) * acc;
}

Complex elliptic_twist_l(const CoefficientTable& coeffs, int64_t d, Complex shift,
                         double tolerance, double length_scale, double balance) {
    if (d % 11 == 0) throw BadTwist("elliptic_twist_l: 11 | d");
    const int w = twist_sign(d);
    const int64_t q = std::abs(d);
    const double kappa = std::sqrt(11.0) * q / kTwoPi;
    const Complex s = 0.5 + shift;
    const double X = balance;

    std::vector<int> chi(q, 0);
    for (int64_t a = 0; a < q; ++a) chi[a] = kronecker_symbol(d, a);

    // weight-2 completion Lambda(s) = kappa^s Gamma(s+1/2) L(s):
    // L(s) = sum lam chi(n) n^{-s} Q(s+1/2, n/(kappa X))
    //      + w kappa^{1-2s} (Gamma(3/2-s)/Gamma(s+1/2)) *
    //        sum lam chi(n) n^{s-1} Q(3/2-s, n X / kappa),  Q regularized.
    const Complex dual_coeff = static_cast<double>(w) *
                               std::exp((1.0 - 2.0 * s) * std::log(kappa)) *
                               gamma_ratio_weight2(s);
    auto run_block = [&](int64_t from, int64_t to, Complex& first, Complex& second,
                         double* mass) {
        for (int64_t n = from; n <= to; ++n) {
            int ch = chi[n % q];
            if (ch == 0) continue;
            double lam_chi = coeffs.lambda(n) * ch;
            Complex t1 = lam_chi * std::exp(-s * std::log(static_cast<double>(n))) *
                         upper_incomplete_gamma_regularized(s + 0.5, n / (kappa * X));
            Complex t2 = lam_chi * std::exp((s - 1.0) * std::log(static_cast<double>(n))) *
                         upper_incomplete_gamma_regularized(1.5 - s, n * X / kappa);
            first += t1;
            second += t2;
            if (mass) *mass += std::abs(t1) + std::abs(dual_coeff) * std::abs(t2);
        }
    };
    double stretch = std::max(X, 1.0 / X);  // an unbalanced split decays slower on one side
    int64_t cut = static_cast<int64_t>(std::ceil(25.0 * length_scale * stretch * std::max(kappa, 4.0)));
    int64_t block = std::max<int64_t>(16, static_cast<int64_t>(kappa));
    if (cut + block > coeffs.max_index())
        throw MissingCoefficients("elliptic_twist_l: coefficient table shorter than the cutoff");
    Complex first(0.0), second(0.0);
    run_block(1, cut, first, second, nullptr);
    // empirical tail certificate: the next kappa-block decays by e^{-1} per
    // block, so the remainder is bounded by its term mass times e/(e-1)
    Complex df(0.0), ds(0.0);
    double mass = 0.0;
    run_block(cut + 1, cut + block, df, ds, &mass);
    double remainder = 2.0 * std::exp(1.0) / (std::exp(1.0) - 1.0) * mass;
    if (remainder > tolerance)
        throw CutoffNotCertified("elliptic_twist_l: remainder above tolerance");
    return (first + df) + dual_coeff * (second + ds);
}

}  // namespace ratiolab
