#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "ratiolab/errors.hpp"
#include "ratiolab/harness.hpp"

namespace ratiolab::harness {

namespace {

std::string family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::ZetaT: return "zeta-t";
        case FamilyKind::QuadraticPositive: return "quadratic-positive";
        case FamilyKind::QuadraticNegative: return "quadratic-negative";
        case FamilyKind::EllipticEvenTwists: return "elliptic-even";
        case FamilyKind::EllipticOddTwists: return "elliptic-odd";
    }
    throw BadConfig("unknown family");
}

FamilyKind family_from(const std::string& name) {
    if (name == "zeta-t") return FamilyKind::ZetaT;
    if (name == "quadratic-positive") return FamilyKind::QuadraticPositive;
    if (name == "quadratic-negative") return FamilyKind::QuadraticNegative;
    if (name == "elliptic-even") return FamilyKind::EllipticEvenTwists;
    if (name == "elliptic-odd") return FamilyKind::EllipticOddTwists;
    throw BadConfig("ExperimentConfig: unknown family '" + name + "'");
}

std::string shifts_to_string(const std::vector<Complex>& v) {
    std::ostringstream os;
    os.precision(17);
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].real();
        if (v[i].imag() != 0.0) os << "+" << v[i].imag() << "j";
    }
    return os.str();
}

std::vector<Complex> shifts_from_string(const std::string& text) {
    std::vector<Complex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t jpos = item.find('j');
        if (jpos != std::string::npos) {
            size_t split = item.find_last_of("+-", jpos - 1);
            if (split == std::string::npos || split == 0)
                throw BadConfig("ExperimentConfig: bad complex shift '" + item + "'");
            out.emplace_back(std::stod(item.substr(0, split)), std::stod(item.substr(split, jpos - split)));
        } else {
            out.emplace_back(std::stod(item), 0.0);
        }
    }
    return out;
}

}  // namespace

std::string ExperimentConfig::serialize() const {
    std::ostringstream os;
    os.precision(17);
    os << "family = " << family_name(family) << "\n";
    os << "alpha = " << shifts_to_string(shifts.alpha) << "\n";
    os << "beta = " << shifts_to_string(shifts.beta) << "\n";
    os << "gamma = " << shifts_to_string(shifts.gamma) << "\n";
    os << "delta = " << shifts_to_string(shifts.delta) << "\n";
    os << "sweep_bound = " << sweep_bound << "\n";
    os << "step = " << step << "\n";
    os << "samples = " << samples << "\n";
    os << "seed = " << seed << "\n";
    os << "prime_cutoff = " << euler.prime_cutoff << "\n";
    os << "theta_nodes = " << euler.theta_nodes << "\n";
    os << "lattice_order = " << euler.lattice_order << "\n";
    os << "tail_policy = "
       << (euler.tail_policy == EulerConfig::TailPolicy::DoublingCheck ? "doubling-check"
                                                                       : "fixed")
       << "\n";
    os << "tail_tolerance = " << euler.tail_tolerance << "\n";
    os << "chi_mode = " << (chi_mode == conj::ChiMode::ExactGamma ? "exact-gamma" : "t-power")
       << "\n";
    os << "tolerance = " << tolerance << "\n";
    os << "output_path = " << output_path << "\n";
    os << "format = " << format << "\n";
    return os.str();
}

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw BadConfig("ExperimentConfig: malformed line: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "family") cfg.family = family_from(value);
        else if (key == "alpha") cfg.shifts.alpha = shifts_from_string(value);
        else if (key == "beta") cfg.shifts.beta = shifts_from_string(value);
        else if (key == "gamma") cfg.shifts.gamma = shifts_from_string(value);
        else if (key == "delta") cfg.shifts.delta = shifts_from_string(value);
        else if (key == "sweep_bound") cfg.sweep_bound = std::stod(value);
        else if (key == "step") cfg.step = std::stod(value);
        else if (key == "samples") cfg.samples = std::stoll(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "prime_cutoff") cfg.euler.prime_cutoff = std::stoll(value);
        else if (key == "theta_nodes") cfg.euler.theta_nodes = std::stoi(value);
        else if (key == "lattice_order") cfg.euler.lattice_order = std::stoi(value);
        else if (key == "tail_policy") {
            if (value == "doubling-check") cfg.euler.tail_policy = EulerConfig::TailPolicy::DoublingCheck;
            else if (value == "fixed") cfg.euler.tail_policy = EulerConfig::TailPolicy::Fixed;
            else throw BadConfig("ExperimentConfig: tail_policy must be doubling-check|fixed");
        } else if (key == "tail_tolerance") cfg.euler.tail_tolerance = std::stod(value);
        else if (key == "chi_mode") {
            if (value == "exact-gamma") cfg.chi_mode = conj::ChiMode::ExactGamma;
            else if (value == "t-power") cfg.chi_mode = conj::ChiMode::TOver2PiPower;
            else throw BadConfig("ExperimentConfig: chi_mode must be exact-gamma|t-power");
        } else if (key == "tolerance") cfg.tolerance = std::stod(value);
        else if (key == "output_path") cfg.output_path = value;
        else if (key == "format") cfg.format = value;
        else throw BadConfig("ExperimentConfig: unknown key '" + key + "'");
    }
    if (cfg.format != "json" && cfg.format != "csv")
        throw BadConfig("ExperimentConfig: format must be json|csv");
    return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadConfig("ExperimentConfig: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

namespace {

nlohmann::json config_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["family"] = family_name(cfg.family);
    auto block = [](const std::vector<Complex>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& x : v) arr.push_back({x.real(), x.imag()});
        return arr;
    };
    j["alpha"] = block(cfg.shifts.alpha);
    j["beta"] = block(cfg.shifts.beta);
    j["gamma"] = block(cfg.shifts.gamma);
    j["delta"] = block(cfg.shifts.delta);
    j["sweep_bound"] = cfg.sweep_bound;
    j["step"] = cfg.step;
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
    j["prime_cutoff"] = cfg.euler.prime_cutoff;
    j["theta_nodes"] = cfg.euler.theta_nodes;
    j["lattice_order"] = cfg.euler.lattice_order;
    j["tail_policy"] = cfg.euler.tail_policy == EulerConfig::TailPolicy::DoublingCheck
                           ? "doubling-check"
                           : "fixed";
    j["tail_tolerance"] = cfg.euler.tail_tolerance;
    j["chi_mode"] = cfg.chi_mode == conj::ChiMode::ExactGamma ? "exact-gamma" : "t-power";
    j["tolerance"] = cfg.tolerance;
    j["format"] = cfg.format;
    return j;
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

std::string ComparisonReport::to_json() const {
    nlohmann::json j;
    j["lhs"] = {lhs.real(), lhs.imag()};
    j["rhs"] = {rhs.value.real(), rhs.value.imag()};
    j["relative_gap"] = relative_gap;
    j["error_budget"] = rhs.error_budget;
    j["runtime_s"] = runtime_seconds;
    j["config"] = config_json(config);
    return j.dump(2);
}

std::string ComparisonReport::to_csv() const {
    std::ostringstream os;
    os << "lhs_re,lhs_im,rhs_re,rhs_im,relative_gap,error_budget,runtime_s,family,sweep_bound,"
          "alpha,beta,gamma,delta,seed,prime_cutoff\n";
    os << fmt17(lhs.real()) << "," << fmt17(lhs.imag()) << "," << fmt17(rhs.value.real()) << ","
       << fmt17(rhs.value.imag()) << "," << fmt17(relative_gap) << ","
       << fmt17(rhs.error_budget) << "," << fmt17(runtime_seconds) << ","
       << family_name(config.family) << "," << fmt17(config.sweep_bound) << ",\""
       << shifts_to_string(config.shifts.alpha) << "\",\"" << shifts_to_string(config.shifts.beta)
       << "\",\"" << shifts_to_string(config.shifts.gamma) << "\",\""
       << shifts_to_string(config.shifts.delta) << "\"," << config.seed << ","
       << config.euler.prime_cutoff << "\n";
    return os.str();
}

ComparisonReport run_experiment(const ExperimentConfig& cfg) {
    cfg.euler.validate();
    cfg.shifts.require_denominator_shifts_positive();
    auto t0 = std::chrono::steady_clock::now();
    ComparisonReport report;
    report.config = cfg;
    switch (cfg.family) {
        case FamilyKind::ZetaT: {
            report.lhs = lhs_zeta_ratio_integral(cfg.shifts, cfg.sweep_bound, cfg.step).value;
            report.rhs = conj::conj_zeta_rhs(cfg.shifts, cfg.sweep_bound, cfg.euler, cfg.chi_mode);
            break;
        }
        case FamilyKind::QuadraticPositive:
        case FamilyKind::QuadraticNegative: {
            auto sign = cfg.family == FamilyKind::QuadraticPositive
                            ? conj::DiscriminantSign::Positive
                            : conj::DiscriminantSign::Negative;
            report.lhs = lhs_quadratic_family_sum(cfg.shifts, cfg.sweep_bound, sign).value;
            report.rhs = conj::conj_quadratic_rhs(cfg.shifts, cfg.sweep_bound, sign, cfg.euler);
            break;
        }
        case FamilyKind::EllipticEvenTwists:
        case FamilyKind::EllipticOddTwists: {
            auto parity = cfg.family == FamilyKind::EllipticEvenTwists ? conj::Parity::Even
                                                                       : conj::Parity::Odd;
            // series length ~ 26 kappa = 26 sqrt(11) X / (2 pi), plus the
            // Euler product needs lambda up to the prime cutoff
            int64_t need = std::max<int64_t>(
                cfg.euler.prime_cutoff + 64,
                static_cast<int64_t>(std::ceil(14.5 * cfg.sweep_bound)) + 64);
            CoefficientTable coeffs = e11_coefficients_eta(need);
            report.lhs =
                lhs_elliptic_family_sum(cfg.shifts, cfg.sweep_bound, parity, coeffs).value;
            report.rhs =
                conj::conj_elliptic_rhs(cfg.shifts, cfg.sweep_bound, parity, cfg.euler, coeffs);
            break;
        }
    }
    report.relative_gap =
        std::abs(report.lhs - report.rhs.value) / std::max(std::abs(report.rhs.value), 1e-30);
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path);
        if (!out) throw Error("run_experiment: cannot open " + cfg.output_path);
        out << (cfg.format == "csv" ? report.to_csv() : report.to_json()) << "\n";
    }
    return report;
}

}  // namespace ratiolab::harness
