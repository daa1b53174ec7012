#include <cmath>
#include <functional>
#include <vector>

#include "ratiolab/errors.hpp"
#include "ratiolab/rmt.hpp"

// Multi-circle contour reformulations of the exact averages. The z-factor
// poles that fall on the integration torus are paired analytically with
// Vandermonde zeros: (u)^2 z(u) = u * z_linear(u), which is analytic there,
// so the quadrature only ever sees regular integrands. Each (2 pi i)^m
// normalization is folded into the grid sum as z_k / n per dimension.

namespace ratiolab::rmt {

namespace {

struct TorusSum {
    int dims;
    int nodes;
    // returns contour integral / (2 pi i)^dims: the dz_k = i z_k dphi_k
    // Jacobian and the normalization fold into a z_k / nodes weight per dim
    Complex run(const std::function<Complex(const std::vector<Complex>&)>& f) const {
        std::vector<int> idx(dims, 0);
        std::vector<Complex> z(dims);
        std::vector<Complex> ring(nodes);
        for (int i = 0; i < nodes; ++i) ring[i] = std::polar(1.0, kTwoPi * i / nodes);
        Complex acc(0.0);
        while (true) {
            Complex w(1.0);
            for (int d = 0; d < dims; ++d) {
                z[d] = ring[idx[d]];
                w *= z[d];
            }
            acc += w * f(z);
            int d = 0;
            while (d < dims && ++idx[d] == nodes) idx[d++] = 0;
            if (d == dims) break;
        }
        for (int d = 0; d < dims; ++d) acc /= static_cast<double>(nodes);
        return acc;
    }
};

double parity_sign(int m) { return (m * (m - 1) / 2) % 2 ? -1.0 : 1.0; }

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int node_cap(int dims) { return dims >= 3 ? 512 : (dims == 2 ? 4096 : 16384); }

Complex doubling(const TorusSum& base,
                 const std::function<Complex(const std::vector<Complex>&)>& f) {
    TorusSum grid = base;
    Complex prev = grid.run(f);
    int cap = node_cap(grid.dims);
    while (grid.nodes < cap) {
        grid.nodes *= 2;
        Complex cur = grid.run(f);
        if (std::abs(cur - prev) <= 1e-10 * std::max(1e-12, std::abs(cur))) return cur;
        prev = cur;
    }
    throw QuadratureNotConverged("contour_rhs: node doubling cap reached");
}

Complex contour_unitary(int N, const ShiftSet& s, int nodes0) {
    const int K = s.K(), L = s.L(), m = K + L;
    std::vector<Complex> a(s.alpha);
    for (const auto& b : s.beta) a.push_back(-b);
    for (const auto& aj : a) {
        if (std::abs(aj) >= 1.0) throw Error("contour_rhs: |alpha_k| < 1 required");
        if (std::abs(std::abs(aj) - 1.0) < 1e-6)
            throw PoleOnContour("contour_rhs: shift pole within 1e-6 of the contour");
    }
    Complex gd(1.0);
    for (const auto& g : s.gamma)
        for (const auto& d : s.delta) gd *= z_value(g + d);
    auto integrand = [&](const std::vector<Complex>& z) {
        Complex expo(0.0);
        for (int k = 0; k < K; ++k) expo += z[k];
        for (int l = K; l < m; ++l) expo -= z[l];
        Complex val = std::exp(0.5 * static_cast<double>(N) * expo) * gd;
        for (int j = 0; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                Complex d = z[j] - z[k];
                bool cross = (j < K) != (k < K);
                val *= cross ? d * z_linear(d) : d * d;
            }
        for (int k = 0; k < K; ++k)
            for (const auto& dr : s.delta) val *= 1.0 - std::exp(-(z[k] + dr));
        for (int l = K; l < m; ++l)
            for (const auto& gq : s.gamma) val *= 1.0 - std::exp(-(gq - z[l]));
        Complex den(1.0);
        for (int k = 0; k < m; ++k)
            for (int j = 0; j < m; ++j) den *= z[k] - a[j];
        return val / den;
    };
    Complex integral = doubling({m, nodes0}, integrand);
    Complex expo(0.0);
    for (int k = 0; k < K; ++k) expo -= a[k];
    for (int l = K; l < m; ++l) expo += a[l];
    return std::exp(0.5 * static_cast<double>(N) * expo) * parity_sign(m) /
           (factorial(K) * factorial(L)) * integral;
}

Complex contour_signed(const GroupSpec& group, const ShiftSet& s, int nodes0) {
    const int K = s.K();
    const bool diagonal = group.kind == GroupKind::Symplectic;
    const bool signed_sum = group.kind == GroupKind::SOOdd;
    for (const auto& aj : s.alpha) {
        if (std::abs(aj) >= 1.0) throw Error("contour_rhs: |alpha_k| < 1 required");
        if (std::abs(std::abs(aj) - 1.0) < 1e-6)
            throw PoleOnContour("contour_rhs: shift pole within 1e-6 of the contour");
    }
    Complex gg(1.0);
    int Q = s.Q();
    for (int q = 0; q < Q; ++q)
        for (int r = q + 1; r < Q; ++r) gg *= z_value(s.gamma[q] + s.gamma[r]);
    if (!diagonal)
        for (int q = 0; q < Q; ++q) gg *= z_value(2.0 * s.gamma[q]);
    Complex alpha_prod(1.0);
    for (const auto& aj : s.alpha) alpha_prod *= aj;
    // half the matrix size (N + 1/2 for SO(2N+1), matching theorem_rhs)
    const double N = group.n + (signed_sum ? 0.5 : 0.0);
    auto integrand = [&](const std::vector<Complex>& z) {
        Complex expo(0.0);
        for (int k = 0; k < K; ++k) expo += z[k];
        Complex val = std::exp(N * expo) * gg;
        for (int j = 0; j < K; ++j)
            for (int k = j + 1; k < K; ++k) {
                Complex dif = z[j] - z[k], sum = z[j] + z[k];
                val *= dif * dif * sum * z_linear(sum);
            }
        if (diagonal)
            for (int k = 0; k < K; ++k) val *= z_value(2.0 * z[k]);
        for (int k = 0; k < K; ++k)
            for (const auto& gq : s.gamma) val *= 1.0 - std::exp(-(z[k] + gq));
        Complex den(1.0);
        for (int k = 0; k < K; ++k)
            for (const auto& aj : s.alpha) den *= (z[k] - aj) * (z[k] + aj);
        // the lemma's numerator: prod z_k for the plain epsilon-sum,
        // prod alpha_k for the sgn-weighted variant
        if (signed_sum) {
            val *= alpha_prod;
        } else {
            for (int k = 0; k < K; ++k) val *= z[k];
        }
        return val / den;
    };
    Complex integral = doubling({K, nodes0}, integrand);
    Complex asum(0.0);
    for (const auto& aj : s.alpha) asum += aj;
    double coeff = parity_sign(K) * std::pow(2.0, K) / factorial(K);
    return std::exp(-N * asum) * coeff * integral;
}

}  // namespace

Complex contour_rhs(const GroupSpec& group, const RatioSpec& spec, int nodes_per_dim) {
    group.validate(spec.shifts);
    const ShiftSet& s = spec.shifts;
    int dims = (group.kind == GroupKind::Unitary) ? s.K() + s.L() : s.K();
    if (dims == 0) return theorem_rhs(group, spec);
    if (dims > 3) throw Error("contour_rhs: K+L <= 3 required");
    int nodes0 = std::max(16, nodes_per_dim);
    if (group.kind == GroupKind::Unitary) return contour_unitary(group.n, s, nodes0);
    return contour_signed(group, s, nodes0);
}

}  // namespace ratiolab::rmt
