#include <cmath>
#include <functional>
#include <vector>

#include "ratiolab/errors.hpp"
#include "ratiolab/quadrature.hpp"
#include "ratiolab/rmt.hpp"

// Quadrature of the ratio statistic against the joint eigenphase density
// (Weyl integration formula). The weight is used unnormalized and the
// integral is divided by the quadrature of the weight itself, so only the
// weight shape matters:
//   U(N):      prod_{j<k} |e^{i th_j} - e^{i th_k}|^2            on [0,2pi)^N
//   USp(2N):   prod_{j<k} (cos th_j - cos th_k)^2 prod sin^2 th   on [0,pi]^N
//   SO(2N):    prod_{j<k} (cos th_j - cos th_k)^2                 on [0,pi]^N
//   SO(2N+1):  prod_{j<k} (cos th_j - cos th_k)^2 prod sin^2(th/2)

namespace ratiolab::rmt {

namespace {

double weyl_weight(const GroupSpec& g, const std::vector<double>& th) {
    double w = 1.0;
    size_t n = th.size();
    if (g.kind == GroupKind::Unitary) {
        for (size_t j = 0; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                w *= std::norm(std::polar(1.0, th[j]) - std::polar(1.0, th[k]));
        return w;
    }
    for (size_t j = 0; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k) {
            double d = std::cos(th[j]) - std::cos(th[k]);
            w *= d * d;
        }
    for (double t : th) {
        switch (g.kind) {
            case GroupKind::Symplectic: w *= std::sin(t) * std::sin(t); break;
            case GroupKind::SOOdd: w *= std::sin(t / 2.0) * std::sin(t / 2.0); break;
            default: break;
        }
    }
    return w;
}

struct GridEval {
    Complex weighted{0.0};
    double weight_mass = 0.0;
};

GridEval tensor_pass(const GroupSpec& group, const RatioSpec& spec, int nodes) {
    const int dim = group.n;
    const bool periodic = group.kind == GroupKind::Unitary;
    std::vector<double> abscissa(nodes), weight(nodes);
    if (periodic) {
        for (int i = 0; i < nodes; ++i) {
            abscissa[i] = kTwoPi * i / nodes;
            weight[i] = kTwoPi / nodes;
        }
    } else {
        const GaussRule& rule = gauss_legendre(nodes);
        for (int i = 0; i < nodes; ++i) {
            abscissa[i] = 0.5 * kPi * (rule.nodes[i] + 1.0);
            weight[i] = 0.5 * kPi * rule.weights[i];
        }
    }
    EigenphaseSet ph;
    ph.kind = group.kind;
    ph.has_fixed_one = group.kind == GroupKind::SOOdd;
    ph.phases.assign(dim, 0.0);
    GridEval acc;
    std::vector<int> idx(dim, 0);
    while (true) {
        double w = 1.0;
        for (int d = 0; d < dim; ++d) {
            ph.phases[d] = abscissa[idx[d]];
            w *= weight[idx[d]];
        }
        w *= weyl_weight(group, ph.phases);
        acc.weight_mass += w;
        acc.weighted += w * ratio_statistic(ph, spec);
        int d = 0;
        while (d < dim && ++idx[d] == nodes) idx[d++] = 0;
        if (d == dim) break;
    }
    return acc;
}

}  // namespace

Complex weyl_oracle(const GroupSpec& group, const RatioSpec& spec, int nodes_per_dim) {
    group.validate(spec.shifts);
    if (group.n > 3) throw Error("weyl_oracle: eigenphase dimension <= 3 required");
    int nodes = std::max(8, nodes_per_dim);
    GridEval e = tensor_pass(group, spec, nodes);
    Complex prev = e.weighted / e.weight_mass;
    const int cap = (group.n >= 3) ? 512 : 4096;
    while (nodes < cap) {
        nodes *= 2;
        e = tensor_pass(group, spec, nodes);
        Complex cur = e.weighted / e.weight_mass;
        if (std::abs(cur - prev) <= 1e-9 * std::max(1e-12, std::abs(cur))) return cur;
        prev = cur;
    }
    throw QuadratureNotConverged("weyl_oracle: node doubling cap reached");
}

}  // namespace ratiolab::rmt
