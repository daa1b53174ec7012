#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "ratiolab/chi.hpp"
#include "ratiolab/conjectures.hpp"
#include "ratiolab/errors.hpp"
#include "ratiolab/harness.hpp"
#include "ratiolab/rmt.hpp"

using namespace ratiolab;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string format = "json";
    uint64_t seed = 1;
    int64_t prime_cutoff = 10000;
    int64_t samples = 100000;
    double tolerance = 0.05;
    bool have_seed = false, have_cutoff = false, have_samples = false, have_tolerance = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "flat key=value config file");
    cmd->add_option("--out", o.out_path, "write the report to this path");
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", o.seed)->each([&](const std::string&) { o.have_seed = true; });
    cmd->add_option("--prime-cutoff", o.prime_cutoff)->each([&](const std::string&) {
        o.have_cutoff = true;
    });
    cmd->add_option("--samples", o.samples)->each([&](const std::string&) {
        o.have_samples = true;
    });
    cmd->add_option("--tolerance", o.tolerance)->each([&](const std::string&) {
        o.have_tolerance = true;
    });
}

harness::ExperimentConfig base_config(const CommonOpts& o) {
    harness::ExperimentConfig cfg;
    if (!o.config_path.empty()) cfg = harness::ExperimentConfig::load(o.config_path);
    if (o.have_seed) cfg.seed = o.seed;
    if (o.have_cutoff) cfg.euler.prime_cutoff = o.prime_cutoff;
    if (o.have_samples) cfg.samples = o.samples;
    if (o.have_tolerance) cfg.tolerance = o.tolerance;
    if (!o.out_path.empty()) cfg.output_path = o.out_path;
    cfg.format = o.format;
    return cfg;
}

int emit_report(const harness::ComparisonReport& report) {
    std::cout << (report.config.format == "csv" ? report.to_csv() : report.to_json()) << "\n";
    std::fprintf(stderr, "relative_gap = %.3e (%s tolerance %.3g)\n", report.relative_gap,
                 report.passes() ? "within" : "EXCEEDS", report.config.tolerance);
    return report.passes() ? 0 : 1;
}

std::vector<Complex> to_complex(const std::vector<double>& v) {
    return std::vector<Complex>(v.begin(), v.end());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ratiolab: ratio theorems and L-function ratio conjectures at desk scale"};
    app.require_subcommand(1);

    // rmt-check
    auto* rmt_cmd = app.add_subcommand("rmt-check",
                                       "exact group-average vs Monte Carlo / quadrature oracle");
    CommonOpts rmt_opts;
    std::string group_name = "unitary";
    int group_n = 2;
    std::vector<double> al, be, ga, de;
    bool with_contour = false, with_weyl = false;
    rmt_cmd->add_option("--group", group_name)
        ->check(CLI::IsMember({"unitary", "symplectic", "so-even", "so-odd"}));
    rmt_cmd->add_option("--n", group_n, "group size parameter N");
    rmt_cmd->add_option("--alpha", al)->delimiter(',');
    rmt_cmd->add_option("--beta", be)->delimiter(',');
    rmt_cmd->add_option("--gamma", ga)->delimiter(',');
    rmt_cmd->add_option("--delta", de)->delimiter(',');
    rmt_cmd->add_flag("--contour", with_contour, "also evaluate the contour reformulation");
    rmt_cmd->add_flag("--weyl", with_weyl, "also evaluate the Weyl quadrature oracle");
    add_common(rmt_cmd, rmt_opts);

    // family comparison subcommands share shift options
    struct FamilyCli {
        CLI::App* cmd = nullptr;
        CLI::Option* bound_opt = nullptr;
        CommonOpts opts;
        std::vector<double> alpha, beta, gamma, delta;
        double bound = 0.0;
        double step = 0.05;
        std::string variant;
    };
    auto add_family = [&](const char* name, const char* help, double default_bound,
                          FamilyCli& fc) {
        fc.cmd = app.add_subcommand(name, help);
        fc.bound = default_bound;
        fc.cmd->add_option("--alpha", fc.alpha)->delimiter(',');
        fc.cmd->add_option("--beta", fc.beta)->delimiter(',');
        fc.cmd->add_option("--gamma", fc.gamma)->delimiter(',');
        fc.cmd->add_option("--delta", fc.delta)->delimiter(',');
        fc.cmd->add_option("--step", fc.step);
        add_common(fc.cmd, fc.opts);
    };
    FamilyCli zeta_fc, quad_fc, ell_fc;
    add_family("zeta-ratio", "zeta-ratio integral vs the ratios conjecture", 1000.0, zeta_fc);
    zeta_fc.bound_opt = zeta_fc.cmd->add_option("--T", zeta_fc.bound);
    std::string chi_mode = "exact-gamma";
    zeta_fc.cmd->add_option("--chi-mode", chi_mode)
        ->check(CLI::IsMember({"exact-gamma", "t-power"}));
    add_family("quad-family", "quadratic character family sum vs conjecture", 10000.0, quad_fc);
    quad_fc.bound_opt = quad_fc.cmd->add_option("--X", quad_fc.bound);
    quad_fc.cmd->add_option("--sign", quad_fc.variant, "positive|negative")
        ->check(CLI::IsMember({"positive", "negative"}))
        ->default_val("positive");
    add_family("elliptic-family", "E11 twist family sum vs conjecture", 2000.0, ell_fc);
    ell_fc.bound_opt = ell_fc.cmd->add_option("--X", ell_fc.bound);
    ell_fc.cmd->add_option("--parity", ell_fc.variant, "even|odd")
        ->check(CLI::IsMember({"even", "odd"}))
        ->default_val("even");

    // log-deriv
    auto* ld_cmd = app.add_subcommand("log-deriv", "|zeta'/zeta|^2 mean vs conjecture");
    CommonOpts ld_opts;
    double ld_r = 0.1, ld_T = 1000.0, ld_step = 0.05;
    ld_cmd->add_option("--r", ld_r);
    ld_cmd->add_option("--T", ld_T);
    ld_cmd->add_option("--step", ld_step);
    add_common(ld_cmd, ld_opts);

    // discrete-moment
    auto* dm_cmd = app.add_subcommand("discrete-moment", "sum over zeros of a zeta ratio");
    CommonOpts dm_opts;
    double dm_a = 0.05, dm_c = 0.1, dm_T = 1000.0;
    dm_cmd->add_option("--a", dm_a);
    dm_cmd->add_option("--c", dm_c);
    dm_cmd->add_option("--T", dm_T);
    add_common(dm_cmd, dm_opts);

    // euler-factor
    auto* ef_cmd = app.add_subcommand("euler-factor", "evaluate arithmetic factors / locals");
    CommonOpts ef_opts;
    std::string ef_family = "zeta", ef_form = "theta";
    int64_t ef_prime = 0;
    std::vector<double> ef_al, ef_be, ef_ga, ef_de;
    ef_cmd->add_option("--family", ef_family)
        ->check(CLI::IsMember({"zeta", "quadratic", "elliptic", "ksb"}));
    ef_cmd->add_option("--form", ef_form)
        ->check(CLI::IsMember({"theta", "lattice", "closed", "direct"}));
    ef_cmd->add_option("--p", ef_prime, "evaluate a single local factor at this prime");
    ef_cmd->add_option("--alpha", ef_al)->delimiter(',');
    ef_cmd->add_option("--beta", ef_be)->delimiter(',');
    ef_cmd->add_option("--gamma", ef_ga)->delimiter(',');
    ef_cmd->add_option("--delta", ef_de)->delimiter(',');
    add_common(ef_cmd, ef_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (rmt_cmd->parsed()) {
            rmt::GroupSpec group;
            group.kind = group_name == "unitary"      ? rmt::GroupKind::Unitary
                         : group_name == "symplectic" ? rmt::GroupKind::Symplectic
                         : group_name == "so-even"    ? rmt::GroupKind::SOEven
                                                      : rmt::GroupKind::SOOdd;
            group.n = group_n;
            ShiftSet s;
            s.alpha = to_complex(al);
            s.beta = to_complex(be);
            s.gamma = to_complex(ga);
            s.delta = to_complex(de);
            rmt::RatioSpec spec(s);
            Complex exact = rmt::theorem_rhs(group, spec);
            std::printf("theorem_rhs = %.15g %+.15gi\n", exact.real(), exact.imag());
            if (rmt_opts.have_samples && rmt_opts.samples > 0) {
                auto mc = rmt::mc_average(group, spec, rmt_opts.samples, rmt_opts.seed);
                double dev = std::abs(mc.estimate - exact);
                std::printf("mc_average  = %.15g %+.15gi  (stderr %.3e, |diff| = %.3e = %.2f sigma)\n",
                            mc.estimate.real(), mc.estimate.imag(), mc.std_error, dev,
                            dev / std::max(mc.std_error, 1e-300));
            }
            if (with_weyl)
                std::printf("weyl_oracle = %.15g %+.15gi\n", rmt::weyl_oracle(group, spec).real(),
                            rmt::weyl_oracle(group, spec).imag());
            if (with_contour)
                std::printf("contour_rhs = %.15g %+.15gi\n", rmt::contour_rhs(group, spec).real(),
                            rmt::contour_rhs(group, spec).imag());
            return 0;
        }
        auto family_config = [&](FamilyCli& fc, harness::FamilyKind kind) {
            harness::ExperimentConfig cfg = base_config(fc.opts);
            if (fc.cmd->count("--alpha") || fc.opts.config_path.empty())
                cfg.shifts.alpha = to_complex(fc.alpha);
            if (fc.cmd->count("--beta") || fc.opts.config_path.empty())
                cfg.shifts.beta = to_complex(fc.beta);
            if (fc.cmd->count("--gamma") || fc.opts.config_path.empty())
                cfg.shifts.gamma = to_complex(fc.gamma);
            if (fc.cmd->count("--delta") || fc.opts.config_path.empty())
                cfg.shifts.delta = to_complex(fc.delta);
            if ((fc.bound_opt && fc.bound_opt->count()) || fc.opts.config_path.empty())
                cfg.sweep_bound = fc.bound;
            cfg.step = fc.step;
            if (fc.opts.config_path.empty()) cfg.family = kind;
            return cfg;
        };
        if (zeta_fc.cmd->parsed()) {
            auto cfg = family_config(zeta_fc, harness::FamilyKind::ZetaT);
            cfg.chi_mode = chi_mode == "t-power" ? conj::ChiMode::TOver2PiPower
                                                 : conj::ChiMode::ExactGamma;
            return emit_report(harness::run_experiment(cfg));
        }
        if (quad_fc.cmd->parsed()) {
            auto kind = quad_fc.variant == "negative" ? harness::FamilyKind::QuadraticNegative
                                                      : harness::FamilyKind::QuadraticPositive;
            return emit_report(harness::run_experiment(family_config(quad_fc, kind)));
        }
        if (ell_fc.cmd->parsed()) {
            auto kind = ell_fc.variant == "odd" ? harness::FamilyKind::EllipticOddTwists
                                                : harness::FamilyKind::EllipticEvenTwists;
            return emit_report(harness::run_experiment(family_config(ell_fc, kind)));
        }
        if (ld_cmd->parsed()) {
            EulerConfig euler;
            if (ld_opts.have_cutoff) euler.prime_cutoff = ld_opts.prime_cutoff;
            auto lhs = harness::lhs_log_deriv_integral(Complex(ld_r), ld_T, ld_step);
            auto rhs = conj::log_deriv_rhs(Complex(ld_r), ld_T, euler);
            double gap = std::abs(lhs.value - rhs.value) / std::max(std::abs(rhs.value), 1e-30);
            std::printf("lhs = %.15g  rhs = %.15g  relative_gap = %.3e  budget = %.3e\n",
                        lhs.value.real(), rhs.value.real(), gap, rhs.error_budget);
            return gap < (ld_opts.have_tolerance ? ld_opts.tolerance : 0.05) ? 0 : 1;
        }
        if (dm_cmd->parsed()) {
            EulerConfig euler;
            if (dm_opts.have_cutoff) euler.prime_cutoff = dm_opts.prime_cutoff;
            Complex lhs = harness::lhs_discrete_moment(Complex(dm_a), Complex(dm_c), dm_T);
            auto rhs = conj::discrete_moment_rhs(Complex(dm_a), Complex(dm_c), dm_T, euler);
            double gap = std::abs(lhs - rhs.value) / std::max(std::abs(rhs.value), 1e-30);
            std::printf("lhs = %.15g %+.15gi\nrhs = %.15g %+.15gi\nrelative_gap = %.3e\n",
                        lhs.real(), lhs.imag(), rhs.value.real(), rhs.value.imag(), gap);
            return gap < (dm_opts.have_tolerance ? dm_opts.tolerance : 0.05) ? 0 : 1;
        }
        if (ef_cmd->parsed()) {
            EulerConfig euler;
            if (ef_opts.have_cutoff) euler.prime_cutoff = ef_opts.prime_cutoff;
            ShiftSet s;
            s.alpha = to_complex(ef_al);
            s.beta = to_complex(ef_be);
            s.gamma = to_complex(ef_ga);
            s.delta = to_complex(ef_de);
            auto print = [](const char* label, Complex v, double tail) {
                std::printf("%s = %.15g %+.15gi  (tail estimate %.3e)\n", label, v.real(),
                            v.imag(), tail);
            };
            if (ef_family == "zeta") {
                auto form = ef_form == "lattice" ? LocalForm::LatticeSum : LocalForm::ThetaIntegral;
                if (ef_prime > 0) {
                    Complex v = a_zeta_local(ef_prime, s, euler, form);
                    std::printf("A_zeta local at p=%lld: %.15g %+.15gi\n",
                                static_cast<long long>(ef_prime), v.real(), v.imag());
                } else {
                    auto v = a_zeta(s, euler, form);
                    print("A_zeta", v.value, v.tail_estimate);
                }
            } else if (ef_family == "quadratic") {
                auto form = ef_form == "direct" ? EvenSumForm::DirectSum : EvenSumForm::ClosedForm;
                if (ef_prime > 0) {
                    Complex v = a_quadratic_local(ef_prime, s, euler, form);
                    std::printf("A_D local at p=%lld: %.15g %+.15gi\n",
                                static_cast<long long>(ef_prime), v.real(), v.imag());
                } else {
                    auto v = a_quadratic(s, euler, form);
                    print("A_D", v.value, v.tail_estimate);
                }
            } else if (ef_family == "elliptic") {
                auto form = ef_form == "direct" ? EvenSumForm::DirectSum : EvenSumForm::ClosedForm;
                CoefficientTable coeffs =
                    e11_coefficients_eta(std::max<int64_t>(euler.prime_cutoff + 64, 4096));
                if (ef_prime > 0) {
                    Complex v = a_elliptic_local(ef_prime, s, euler, form, coeffs);
                    std::printf("A_E local at p=%lld: %.15g %+.15gi\n",
                                static_cast<long long>(ef_prime), v.real(), v.imag());
                } else {
                    auto v = a_elliptic(s, euler, coeffs, form);
                    print("A_E(D)", v.value, v.tail_estimate);
                }
            } else {
                auto v = ks_b(s.alpha, s.delta, euler);
                print("B(alpha, delta)", v.value, v.tail_estimate);
            }
            return 0;
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
