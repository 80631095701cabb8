#pragma once

// Eigenvalues of balanced trees, factor by factor.
//
// Dendrimers with k >= 3 use closed forms for the Dickson factors and bracketed
// bisection for the outermost Geronimus factor; d(l, 2) is a path. General
// balanced trees solve each Q_j as a zero-diagonal symmetric tridiagonal
// eigenproblem, whose leading principal minors satisfy Q's recurrence.

#include "dendrispec/bigint.hpp"
#include "dendrispec/tree_model.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace dendrispec {

inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr double kCollapseTolerance = 1e-9;
// One raw entry per root of each factor; bounds memory for very deep trees.
inline constexpr std::uint64_t kMaxSpectrumEntries = 5'000'000;

enum class RootMethod { closed_form, bracketed_root, tridiagonal };

std::string_view to_string(RootMethod method) noexcept;

struct SpectrumEntry {
    double value = 0.0;
    BigInt multiplicity;
    int factor_index = 0;
    RootMethod method = RootMethod::closed_form;
};

struct Spectrum {
    std::vector<SpectrumEntry> entries;  // descending by value
    BigInt total_vertices;
    bool collapsed = false;

    BigInt multiplicity_sum() const;

    // Every eigenvalue repeated by multiplicity, descending. Throws CapacityError
    // if that would exceed max_values.
    std::vector<double> expanded(std::size_t max_values) const;
};

struct GeronimusBracket {
    double lower = 0.0;
    double upper = 0.0;
};

// h = 1..j: 2 sqrt(k-1) cos(h pi / (j+1)), descending. Exact 0 at the midpoint
// and exact mirror symmetry.
std::vector<double> dickson_roots(int j, std::int64_t k);

// Bracket of the j-th largest root of W_{l,l+1}(x, k), j = 1..floor((l+1)/2):
//   2 sqrt(k-1) cos((j+0.5) pi / (l+2)) < alpha_j < 2 sqrt(k-1) cos((j-0.5) pi / (l+2))
GeronimusBracket geronimus_bracket(int l, std::int64_t k, int j);

// G_{l+1}(x, k) / (k-1)^{(l+1)/2}, evaluated by the three-term recurrence in the
// scaled variable x / sqrt(k-1). Same sign and roots as G_{l+1}(x, k) without overflow.
double geronimus_scaled_value(int l, std::int64_t k, double x);

// All l+1 roots of W_{l,l+1}(x, k), descending. Throws DomainError for k < 3,
// InternalError if a bracket fails to straddle a sign change.
std::vector<double> geronimus_roots(int l, std::int64_t k, double tol = kDefaultRootTolerance);

// h = 1..2l+1: 2 cos(h pi / (2l+2)), descending.
std::vector<double> path_spectrum(int l);

// The j roots of Q_j for the tuple, via Sturm-count bisection on the j x j
// tridiagonal matrix with zero diagonal and squared off-diagonals c_l, c_{l-1}, ...
std::vector<double> tridiagonal_roots(const CharacteristicTuple& tuple, int j,
                                      double tol = kDefaultRootTolerance);

// Raw view: one entry per (root, factor), never merged across factors. Throws
// CapacityError above kMaxSpectrumEntries entries or when the per-entry
// multiplicities would hold more than an eighth of kExactStorageBitLimit bits.
Spectrum spectrum(const BalancedTreeSpec& spec, double tol = kDefaultRootTolerance);

// Merges runs of values within merge_tol, summing multiplicities. The merged entry
// keeps the value and method of its first member and the smallest factor index.
Spectrum collapse(const Spectrum& raw, double merge_tol = kCollapseTolerance);

struct SpectrumCheck {
    bool multiplicity_sum_ok = false;
    bool symmetric = false;
    bool trace_ok = false;
    bool second_moment_ok = false;
    double trace = 0.0;
    double second_moment = 0.0;

    bool ok() const noexcept {
        return multiplicity_sum_ok && symmetric && trace_ok && second_moment_ok;
    }
};

// Multiplicity sum = n_T, +-v pairing, trace ~ 0 and sum of squares ~ 2(n_T - 1)
// within rel_tol of the second moment.
SpectrumCheck check_spectrum(const Spectrum& s, double rel_tol = 1e-8);

}  // namespace dendrispec
