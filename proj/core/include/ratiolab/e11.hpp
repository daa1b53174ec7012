#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ratiolab {

// Fourier coefficients of the level-11 weight-2 newform
// F(q) = q prod (1-q^n)^2 (1-q^{11n})^2, plus the lambda = a_n/sqrt(n)
// normalization and the Dirichlet-inverse weights mu_E.
class CoefficientTable {
  public:
    CoefficientTable() = default;
    CoefficientTable(std::vector<int64_t> a, int64_t max_index)
        : a_(std::move(a)), max_index_(max_index) {}

    int64_t max_index() const { return max_index_; }
    int64_t a(int64_t n) const;
    double lambda(int64_t n) const;  // a(n)/sqrt(n)
    double mu_e(int64_t n) const;    // -lambda(p), chi0(p), 0 at p, p^2, p^{>2}

    // lambda(p^e) by the Hecke recursion; works past max_index.
    double lambda_prime_power(int64_t p, int e) const;

  private:
    std::vector<int64_t> a_;  // 1-based
    int64_t max_index_ = 0;
};

CoefficientTable e11_coefficients_eta(int64_t max_index);

// a_p = p - N_p from counting points of y^2 + y = x^3 - x^2 - 10x - 20 mod p
// (the integral model; for odd p this equals the quartic-model count).
int64_t e11_ap_point_count(int64_t p);

// Sign of the functional equation of L_{E11}(s, chi_d) = chi_d(-11).
// Requires d fundamental with gcd(d, 11) = 1.
int twist_sign(int64_t d);

// Versioned binary cache (magic, max_index, checksum, coefficients).
void save_coefficient_cache(const CoefficientTable& table, const std::string& path);
CoefficientTable load_coefficient_cache(const std::string& path);

}  // namespace ratiolab
