#include "dendrispec/energy.hpp"

#include "dendrispec/errors.hpp"
#include "dendrispec/summation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace dendrispec {

namespace {

constexpr double kPi = std::numbers::pi;

double csc(double x) { return 1.0 / std::sin(x); }
double cot(double x) { return std::cos(x) / std::sin(x); }

void require_k_at_least(std::int64_t k, std::int64_t minimum, const char* what) {
    if (k < minimum) {
        throw DomainError(std::string(what) + " needs k >= " + std::to_string(minimum) +
                          ", got k = " + std::to_string(k));
    }
}

void require_l_at_least(int l, int minimum, const char* what) {
    if (l < minimum) {
        throw DomainError(std::string(what) + " needs l >= " + std::to_string(minimum) +
                          ", got l = " + std::to_string(l));
    }
}

}  // namespace

double psi_closed_form(int j, std::int64_t k) {
    if (j < 0) {
        throw DomainError("psi_closed_form needs j >= 0");
    }
    require_k_at_least(k, 2, "psi_closed_form");
    if (j <= 1) {
        return 0.0;  // W_0 = 1 has no roots, W_1 = x has the single root 0
    }
    const double angle = kPi / (2.0 * j + 2.0);
    const double t = (j % 2 == 1) ? cot(angle) : csc(angle);
    return 2.0 * std::sqrt(static_cast<double>(k - 1)) * (t - 1.0);
}

Interval psi_geronimus_bounds(int l, std::int64_t k) {
    require_l_at_least(l, 1, "psi_geronimus_bounds");
    require_k_at_least(k, 3, "psi_geronimus_bounds");
    const double angle = kPi / (2.0 * l + 4.0);
    const double t = (l % 2 == 0) ? cot(angle) : csc(angle);
    const double scale = 2.0 * std::sqrt(static_cast<double>(k - 1));
    return {scale * (t - 2.2), scale * t};
}

double psi_geronimus(int l, std::int64_t k, double tol) {
    CompensatedSum sum;
    for (double r : geronimus_roots(l, k, tol)) {
        sum.add(std::fabs(r));
    }
    return sum.value();
}

double energy_spectral(const BalancedTreeSpec& spec, double tol) {
    // A dendrimer's energy exceeds 2 (k-1)^{l-1/2}; refuse before enumerating roots
    // when that alone is past the double range.
    if (const auto d = as_dendrimer(spec.tuple); d && d->k >= 3) {
        const double log_floor =
            std::log(2.0) + (d->l - 0.5) * std::log(static_cast<double>(d->k - 1));
        if (log_floor > std::log(std::numeric_limits<double>::max())) {
            throw CapacityError("energy of d(" + std::to_string(d->l) + "," + std::to_string(d->k) +
                                ") exceeds the double range");
        }
    }
    CompensatedSum sum;
    for (const auto& e : spectrum(spec, tol).entries) {
        if (e.value != 0.0) {
            sum.add(to_double(e.multiplicity) * std::fabs(e.value));
        }
    }
    const double energy = sum.value();
    if (!std::isfinite(energy)) {
        throw CapacityError("energy exceeds the double range");
    }
    return energy;
}

double energy_path_exact(int l) {
    require_l_at_least(l, 1, "energy_path_exact");
    return 2.0 * (cot(kPi / (4.0 * l + 4.0)) - 1.0);
}

CoefficientTriple ab_sequences(int j) {
    if (j < 0) {
        throw DomainError("coefficient index must be non-negative");
    }
    const double jj = static_cast<double>(j);
    const double s_inner = std::sin(kPi / (2.0 * jj + 2.0));
    const double s_outer = std::sin(kPi / (2.0 * jj + 6.0));
    const double product = (jj + 1.0) * (jj + 3.0);
    CoefficientTriple t;
    t.j = j;
    // csc u - csc v = 2 sin((v-u)/2) cos((v+u)/2) / (sin u sin v)
    t.a = 4.0 * std::sin(kPi / (2.0 * product)) * std::cos((jj + 2.0) * kPi / (2.0 * product)) /
          (s_inner * s_outer);
    // cot u - cot v = sin(v-u) / (sin u sin v)
    t.b = 2.0 * std::sin(kPi / product) / (s_inner * s_outer);
    t.f = (j % 2 == 0) ? t.a : t.b;
    return t;
}

double f_coefficient(int j) { return ab_sequences(j).f; }

double mu_partial_sum(std::int64_t k, int last) {
    require_k_at_least(k, 3, "mu_partial_sum");
    const double base = 1.0 / static_cast<double>(k - 1);
    CompensatedSum sum;
    double weight = 1.0;
    for (int j = 0; j <= last; ++j) {
        sum.add(f_coefficient(j) * weight);
        weight *= base;
    }
    return sum.value();
}

int mu_last_term(std::int64_t k, double tol) {
    require_k_at_least(k, 3, "mu_last_term");
    if (!(tol > 0.0)) {
        throw DomainError("mu tolerance must be positive");
    }
    const double base = 1.0 / static_cast<double>(k - 1);
    const double tail_factor = f_coefficient(1) / (1.0 - base);
    int last = 0;
    double weight = 1.0;
    while (tail_factor * weight >= tol) {
        weight *= base;
        ++last;
    }
    return last;
}

double mu_k(std::int64_t k, double tol) { return mu_partial_sum(k, mu_last_term(k, tol)); }

double energy_normalizer(int l, std::int64_t k) {
    return std::pow(static_cast<double>(k - 1), static_cast<double>(l) - 0.5);
}

Interval energy_bounds_thm51(int l, std::int64_t k) {
    require_l_at_least(l, 1, "energy_bounds_thm51");
    require_k_at_least(k, 3, "energy_bounds_thm51");
    const double km1 = static_cast<double>(k - 1);
    CompensatedSum series;
    for (int j = 0; j <= l - 1; ++j) {
        series.add(f_coefficient(j) * std::pow(km1, static_cast<double>(l) - 0.5 - j));
    }
    const double root = std::sqrt(km1);
    return {series.value() - 2.4 * root, series.value() + 2.0 * root};
}

Interval energy_bounds_thmB(int l, std::int64_t k) {
    require_l_at_least(l, 2, "energy_bounds_thmB");
    require_k_at_least(k, 3, "energy_bounds_thmB");
    const double km1 = static_cast<double>(k - 1);
    const double scale = energy_normalizer(l, k);
    const double upper_coeff = 0.5 + std::sqrt(2.0) + std::sqrt(3.0) + std::sqrt(5.0);
    return {scale * (2.0 + 2.0 * std::sqrt(2.0) / km1), scale * (2.0 + upper_coeff / km1)};
}

double ratio_upper_limit() {
    return (4.5 + std::sqrt(2.0) + std::sqrt(3.0) + std::sqrt(5.0)) / 2.0;
}

AsymptoticReport asymptotic_report(int l, std::int64_t k, double tol, double mu_tol) {
    require_k_at_least(k, 3, "asymptotic_report");
    AsymptoticReport r;
    r.energy = energy_spectral(dendrimer_spec(l, k), tol);
    r.ratio = r.energy / energy_normalizer(l, k);
    r.mu = mu_k(k, mu_tol);
    r.distance_to_two = std::fabs(r.ratio - 2.0);
    r.distance_to_mu = std::fabs(r.ratio - r.mu);
    return r;
}

std::string_view to_string(EnergyMethod method) noexcept {
    switch (method) {
        case EnergyMethod::exact_closed_form:
            return "exact_closed_form";
        case EnergyMethod::spectral_sum:
            return "spectral_sum";
    }
    return "unknown";
}

EnergyReport energy_report(const BalancedTreeSpec& spec, const EnergyOptions& options) {
    EnergyReport report;
    report.dendrimer = as_dendrimer(spec.tuple);
    if (report.dendrimer && report.dendrimer->k == 2) {
        report.energy = energy_path_exact(report.dendrimer->l);
        report.method = EnergyMethod::exact_closed_form;
    } else {
        report.energy = energy_spectral(spec, options.tol);
        report.method = EnergyMethod::spectral_sum;
    }
    if (!report.dendrimer) {
        return report;
    }
    const auto [l, k] = *report.dendrimer;
    report.normalized_ratio = report.energy / energy_normalizer(l, k);
    if (k >= 3) {
        report.mu = mu_k(k, options.mu_tol);
        if (options.include_bounds) {
            report.thm51 = energy_bounds_thm51(l, k);
            report.thm51_lower_negative = report.thm51->lower < 0.0;
            if (l >= 2) {
                report.thmB = energy_bounds_thmB(l, k);
            }
            const bool b_finite = !report.thmB || std::isfinite(report.thmB->upper);
            if (!std::isfinite(report.thm51->upper) || !b_finite) {
                throw CapacityError("energy bounds exceed the double range");
            }
        }
    }
    return report;
}

}  // namespace dendrispec
