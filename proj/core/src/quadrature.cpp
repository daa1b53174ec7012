#include "ratiolab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "ratiolab/errors.hpp"

namespace ratiolab {

namespace {

GaussRule build_gauss(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_gauss(n)).first;
    return it->second;
}

namespace {

Complex composite_gl(const std::function<Complex(double)>& f, double a, double b, int panels,
                     const GaussRule& rule) {
    Complex total(0.0);
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        double mid = lo + 0.5 * h;
        Complex acc(0.0);
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
        total += acc * (0.5 * h);
    }
    return total;
}

}  // namespace

QuadResult integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                              double rel_tol, double abs_tol, int initial_panels,
                              int max_halvings, int points) {
    const GaussRule& rule = gauss_legendre(points);
    int panels = initial_panels;
    Complex prev = composite_gl(f, a, b, panels, rule);
    for (int h = 0; h < max_halvings; ++h) {
        panels *= 2;
        Complex cur = composite_gl(f, a, b, panels, rule);
        double diff = std::abs(cur - prev);
        if (diff <= rel_tol * std::abs(cur) + abs_tol) return {cur, diff};
        prev = cur;
    }
    throw QuadratureNotConverged("integrate_adaptive: panel halving did not converge");
}

QuadResult integrate_periodic_doubling(const std::function<Complex(double)>& f, int n0,
                                       double rel_tol, int n_max) {
    int n = n0;
    auto trapezoid = [&](int nn) {
        Complex acc(0.0);
        for (int j = 0; j < nn; ++j) acc += f(static_cast<double>(j) / nn);
        return acc / static_cast<double>(nn);
    };
    Complex prev = trapezoid(n);
    while (n < n_max) {
        n *= 2;
        Complex cur = trapezoid(n);
        double diff = std::abs(cur - prev);
        if (diff <= rel_tol * std::max(1e-300, std::abs(cur))) return {cur, diff};
        prev = cur;
    }
    throw QuadratureNotConverged("integrate_periodic_doubling: node cap reached");
}

Complex richardson_limit(const std::function<Complex(double)>& f, double h0) {
    // three scales, first-order elimination twice
    Complex f0 = f(h0), f1 = f(h0 / 2.0), f2 = f(h0 / 4.0);
    Complex g0 = 2.0 * f1 - f0;
    Complex g1 = 2.0 * f2 - f1;
    return 2.0 * g1 - g0;
}

}  // namespace ratiolab
