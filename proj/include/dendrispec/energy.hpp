#pragma once

// Graph energy E = sum |lambda| of balanced trees and dendrimers, together with
// the analytic bounds and asymptotic constants for d(l, k).
//
// Notation used throughout:
//   Psi(p)  sum of |root| over the roots of p
//   f_j     2 csc(pi/(2j+6)) - 2 csc(pi/(2j+2))   (j even, = a_j)
//           2 cot(pi/(2j+6)) - 2 cot(pi/(2j+2))   (j odd,  = b_j)
//   mu_k    sum_{j >= 0} f_j (k-1)^{-j}
//   ratio   E(d(l,k)) / (k-1)^{l-1/2}

#include "dendrispec/spectra.hpp"
#include "dendrispec/tree_model.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace dendrispec {

inline constexpr double kDefaultMuTolerance = 1e-10;

struct Interval {
    double lower = 0.0;
    double upper = 0.0;

    bool strictly_contains(double v) const noexcept { return lower < v && v < upper; }
};

// Closed-form Psi(W_{l,j}(x, k)) for 0 <= j <= l:
// 2 sqrt(k-1) (cot(pi/(2j+2)) - 1) for odd j, csc in place of cot for even j.
double psi_closed_form(int j, std::int64_t k);

// Interval for Psi(W_{l,l+1}(x, k)), k >= 3: 2 sqrt(k-1) (t - 2.2) .. 2 sqrt(k-1) t
// with t = cot(pi/(2l+4)) for even l and csc(pi/(2l+4)) for odd l.
Interval psi_geronimus_bounds(int l, std::int64_t k);

// Psi(W_{l,l+1}(x, k)) summed from the bracketed roots.
double psi_geronimus(int l, std::int64_t k, double tol = kDefaultRootTolerance);

// Sum of multiplicity * |value| over the raw spectrum, compensated. Throws
// CapacityError when the energy lies beyond the double range.
double energy_spectral(const BalancedTreeSpec& spec, double tol = kDefaultRootTolerance);

// E(d(l, 2)) = 2 (cot(pi/(4l+4)) - 1).
double energy_path_exact(int l);

struct CoefficientTriple {
    int j = 0;
    double a = 0.0;
    double b = 0.0;
    double f = 0.0;
};

// a_j and b_j are evaluated through product forms that avoid the cancellation
// in the csc/cot differences at large j.
CoefficientTriple ab_sequences(int j);
double f_coefficient(int j);

// sum_{j=0}^{last} f_j (k-1)^{-j}
double mu_partial_sum(std::int64_t k, int last);

// Index of the last term needed so that the geometric tail bound
// f_1 (k-1)^{-J} / (1 - 1/(k-1)) drops below tol.
int mu_last_term(std::int64_t k, double tol);

// Partial sum within tol of mu_k. Throws DomainError for k < 3.
double mu_k(std::int64_t k, double tol = kDefaultMuTolerance);

// sum_{j=0}^{l-1} f_j (k-1)^{l-1/2-j} + 2 (k-1)^{1/2}  (upper)
// the same sum - 2.4 (k-1)^{1/2}                      (lower)
Interval energy_bounds_thm51(int l, std::int64_t k);

// (k-1)^{l-1/2} (2 + 2 sqrt 2 / (k-1))  ..  (k-1)^{l-1/2} (2 + (0.5 + sqrt 2 + sqrt 3 + sqrt 5) / (k-1))
// Throws DomainError for l < 2 or k < 3.
Interval energy_bounds_thmB(int l, std::int64_t k);

// (4.5 + sqrt 2 + sqrt 3 + sqrt 5) / 2
double ratio_upper_limit();

// (k-1)^{l-1/2}
double energy_normalizer(int l, std::int64_t k);

struct AsymptoticReport {
    double energy = 0.0;
    double ratio = 0.0;
    double mu = 0.0;
    double distance_to_two = 0.0;
    double distance_to_mu = 0.0;
};

AsymptoticReport asymptotic_report(int l, std::int64_t k, double tol = kDefaultRootTolerance,
                                   double mu_tol = kDefaultMuTolerance);

enum class EnergyMethod { exact_closed_form, spectral_sum };

std::string_view to_string(EnergyMethod method) noexcept;

struct EnergyOptions {
    double tol = kDefaultRootTolerance;
    double mu_tol = kDefaultMuTolerance;
    bool include_bounds = true;
};

struct EnergyReport {
    std::optional<DendrimerParams> dendrimer;
    double energy = 0.0;
    EnergyMethod method = EnergyMethod::spectral_sum;
    std::optional<double> normalized_ratio;  // dendrimers only
    std::optional<Interval> thm51;           // k >= 3
    bool thm51_lower_negative = false;
    std::optional<Interval> thmB;            // k >= 3 and l >= 2
    std::optional<double> mu;                // k >= 3
};

EnergyReport energy_report(const BalancedTreeSpec& spec, const EnergyOptions& options = {});

}  // namespace dendrispec
