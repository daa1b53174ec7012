#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ratiolab/errors.hpp"
#include "ratiolab/rmt.hpp"

namespace ratiolab::rmt {

namespace {

double uniform01(std::mt19937_64& g) {
    return (static_cast<double>(g() >> 11) + 0.5) * 0x1.0p-53;
}

// Box-Muller on explicit 64-bit uniforms (standard-library independent).
struct NormalGen {
    std::mt19937_64& g;
    bool have_spare = false;
    double spare = 0.0;

    double operator()() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        double r = std::sqrt(-2.0 * std::log(uniform01(g)));
        double phi = kTwoPi * uniform01(g);
        spare = r * std::sin(phi);
        have_spare = true;
        return r * std::cos(phi);
    }
};

using Eigen::MatrixXcd;
using Eigen::MatrixXd;

MatrixXcd haar_unitary(int n, std::mt19937_64& rng) {
    NormalGen gauss{rng};
    MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(gauss(), gauss());
    Eigen::HouseholderQR<MatrixXcd> qr(a);
    MatrixXcd q = qr.householderQ();
    MatrixXcd r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        Complex rjj = r(j, j);
        if (std::abs(rjj) < 1e-12) throw DegenerateQR("haar_unitary: rank-deficient draw");
        q.col(j) *= rjj / std::abs(rjj);
    }
    return q;
}

MatrixXd haar_special_orthogonal(int n, std::mt19937_64& rng) {
    NormalGen gauss{rng};
    MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = gauss();
    Eigen::HouseholderQR<MatrixXd> qr(a);
    MatrixXd q = qr.householderQ();
    MatrixXd r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        double rjj = r(j, j);
        if (std::abs(rjj) < 1e-12) throw DegenerateQR("haar_orthogonal: rank-deficient draw");
        if (rjj < 0.0) q.col(j) *= -1.0;
    }
    // determinant-sector fix: left-multiply by the fixed reflection diag(-1,1,..)
    if (q.determinant() < 0.0) q.row(0) *= -1.0;
    return q;
}

// Quaternion matrices as (A, B) meaning A + Bj; right vector space over H.
struct QuatMatrix {
    MatrixXcd a, b;
};

// (w, x) * (y, z) = (wy - x conj(z), wz + x conj(y))
inline void quat_mul(Complex w, Complex x, Complex y, Complex z, Complex& ra, Complex& rb) {
    ra = w * y - x * std::conj(z);
    rb = w * z + x * std::conj(y);
}

MatrixXcd haar_symplectic_embedded(int half, std::mt19937_64& rng) {
    NormalGen gauss{rng};
    const int n = half;
    QuatMatrix m{MatrixXcd(n, n), MatrixXcd(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.a(i, j) = Complex(gauss(), gauss());
            m.b(i, j) = Complex(gauss(), gauss());
        }
    // modified Gram-Schmidt over H (two passes), columns scaled by real norms
    for (int j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int i = 0; i < j; ++i) {
                // c = <u_i, v_j> = sum conj(u) v (quaternion)
                Complex ca(0.0), cb(0.0);
                for (int r = 0; r < n; ++r) {
                    Complex pa, pb;
                    quat_mul(std::conj(m.a(r, i)), -m.b(r, i), m.a(r, j), m.b(r, j), pa, pb);
                    ca += pa;
                    cb += pb;
                }
                for (int r = 0; r < n; ++r) {
                    Complex pa, pb;
                    quat_mul(m.a(r, i), m.b(r, i), ca, cb, pa, pb);
                    m.a(r, j) -= pa;
                    m.b(r, j) -= pb;
                }
            }
        }
        double norm2 = 0.0;
        for (int r = 0; r < n; ++r)
            norm2 += std::norm(m.a(r, j)) + std::norm(m.b(r, j));
        if (norm2 < 1e-20) throw DegenerateQR("haar_symplectic: rank-deficient draw");
        double inv = 1.0 / std::sqrt(norm2);
        m.a.col(j) *= inv;
        m.b.col(j) *= inv;
    }
    MatrixXcd full(2 * n, 2 * n);
    full.topLeftCorner(n, n) = m.a;
    full.topRightCorner(n, n) = m.b;
    full.bottomLeftCorner(n, n) = -m.b.conjugate();
    full.bottomRightCorner(n, n) = m.a.conjugate();
    return full;
}

ComplexMatrix to_matrix(const MatrixXcd& m) {
    ComplexMatrix out;
    out.n = static_cast<int>(m.rows());
    out.data.resize(static_cast<size_t>(out.n) * out.n);
    for (int i = 0; i < out.n; ++i)
        for (int j = 0; j < out.n; ++j) out.at(i, j) = m(i, j);
    return out;
}

MatrixXcd to_eigen(const ComplexMatrix& m) {
    MatrixXcd out(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) out(i, j) = m.at(i, j);
    return out;
}

}  // namespace

ComplexMatrix haar_matrix(const GroupSpec& group, std::mt19937_64& rng) {
    switch (group.kind) {
        case GroupKind::Unitary: return to_matrix(haar_unitary(group.n, rng));
        case GroupKind::Symplectic: return to_matrix(haar_symplectic_embedded(group.n, rng));
        case GroupKind::SOEven:
            return to_matrix(haar_special_orthogonal(2 * group.n, rng).cast<Complex>());
        case GroupKind::SOOdd:
            return to_matrix(haar_special_orthogonal(2 * group.n + 1, rng).cast<Complex>());
    }
    throw Error("haar_matrix: unknown group");
}

EigenphaseSet extract_eigenphases(const GroupSpec& group, const ComplexMatrix& m) {
    Eigen::ComplexEigenSolver<MatrixXcd> solver(to_eigen(m), /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw DegenerateQR("eigenphases: solver failed");
    std::vector<Complex> ev(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
    EigenphaseSet out;
    out.kind = group.kind;
    if (group.kind == GroupKind::Unitary) {
        for (const auto& l : ev) {
            double th = std::arg(l);
            if (th < 0.0) th += kTwoPi;
            out.phases.push_back(th);
        }
        std::sort(out.phases.begin(), out.phases.end());
        return out;
    }
    if (group.kind == GroupKind::SOOdd) {
        // drop the eigenvalue pinned at +1
        auto closest = std::min_element(ev.begin(), ev.end(), [](Complex x, Complex y) {
            return std::abs(x - 1.0) < std::abs(y - 1.0);
        });
        ev.erase(closest);
        out.has_fixed_one = true;
    }
    // conjugate pairs: keep the upper-half representatives; numerically real
    // eigenvalues (theta = 0 or pi) come in doubles, keep one per pair
    int reals_pos = 0, reals_neg = 0;
    for (const auto& l : ev) {
        if (std::abs(l.imag()) < 1e-12)
            (l.real() > 0.0 ? reals_pos : reals_neg)++;
        else if (l.imag() > 0.0)
            out.phases.push_back(std::arg(l));
    }
    for (int i = 0; i < reals_pos / 2; ++i) out.phases.push_back(0.0);
    for (int i = 0; i < reals_neg / 2; ++i) out.phases.push_back(kPi);
    std::sort(out.phases.begin(), out.phases.end());
    size_t expected = static_cast<size_t>(group.n);
    if (out.phases.size() != expected)
        throw DegenerateQR("eigenphases: pairing failed on a near-degenerate draw");
    return out;
}

EigenphaseSet haar_sample(const GroupSpec& group, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 4; ++attempt) {
        try {
            return extract_eigenphases(group, haar_matrix(group, rng));
        } catch (const DegenerateQR&) {
            if (attempt == 3) throw;
        }
    }
    throw DegenerateQR("haar_sample: repeated degenerate draws");
}

}  // namespace ratiolab::rmt
