#include "dendrispec/spectra.hpp"

#include "dendrispec/errors.hpp"
#include "dendrispec/summation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

namespace dendrispec {

namespace {

constexpr double kPi = std::numbers::pi;

// Bisection floor for the Geronimus brackets before the Newton polish.
constexpr double kGeronimusBisectionWidth = 1e-13;

// values[h-1] = scale * cos(h pi / denom) for h = 1..count, with exact zero at
// 2h == denom and exact antisymmetry about it.
std::vector<double> mirrored_cosines(double scale, int count, int denom) {
    std::vector<double> values(static_cast<std::size_t>(count));
    for (int h = 1; h <= count; ++h) {
        const int mirror = denom - h;
        double v = 0.0;
        if (2 * h < denom) {
            v = scale * std::cos(h * kPi / denom);
        } else if (2 * h > denom) {
            v = -scale * std::cos(mirror * kPi / denom);
        }
        values[static_cast<std::size_t>(h - 1)] = v;
    }
    return values;
}

struct ScaledValue {
    double value;
    double derivative;  // with respect to the scaled variable
};

// e_j(y) = y e_{j-1} - e_{j-2} is E_j(x, a) / a^{j/2} at y = x / sqrt(a).
// Returns e_{l+1} - e_{l-1} / a and its y-derivative.
ScaledValue geronimus_scaled(int l, double a, double y) {
    double e_prev = 1.0;
    double e_cur = y;
    double d_prev = 0.0;
    double d_cur = 1.0;
    double e_lm1 = e_prev;
    double d_lm1 = d_prev;
    for (int j = 2; j <= l + 1; ++j) {
        if (j == l + 1) {
            e_lm1 = e_prev;
            d_lm1 = d_prev;
        }
        const double e_next = y * e_cur - e_prev;
        const double d_next = e_cur + y * d_cur - d_prev;
        e_prev = e_cur;
        e_cur = e_next;
        d_prev = d_cur;
        d_cur = d_next;
    }
    return {e_cur - e_lm1 / a, d_cur - d_lm1 / a};
}

int sign_of(double v) noexcept { return (v > 0.0) - (v < 0.0); }

// Number of eigenvalues strictly below x of the zero-diagonal tridiagonal matrix
// with squared off-diagonals offdiag_sq (LDL^T pivot signs).
int count_below(const std::vector<double>& offdiag_sq, int order, double x, double pivot_floor) {
    int count = 0;
    double d = -x;
    if (std::fabs(d) < pivot_floor) {
        d = -pivot_floor;
    }
    count += d < 0.0;
    for (int i = 1; i < order; ++i) {
        d = -x - offdiag_sq[static_cast<std::size_t>(i - 1)] / d;
        if (std::fabs(d) < pivot_floor) {
            d = -pivot_floor;
        }
        count += d < 0.0;
    }
    return count;
}

void require_levels(int l) {
    if (l < 1) {
        throw DomainError("number of levels must be at least 1, got " + std::to_string(l));
    }
}

}  // namespace

std::string_view to_string(RootMethod method) noexcept {
    switch (method) {
        case RootMethod::closed_form:
            return "closed_form";
        case RootMethod::bracketed_root:
            return "bracketed_root";
        case RootMethod::tridiagonal:
            return "tridiagonal";
    }
    return "unknown";
}

BigInt Spectrum::multiplicity_sum() const {
    BigInt total = 0;
    for (const auto& e : entries) {
        total += e.multiplicity;
    }
    return total;
}

std::vector<double> Spectrum::expanded(std::size_t max_values) const {
    if (multiplicity_sum() > max_values) {
        throw CapacityError("spectrum has more than " + std::to_string(max_values) + " eigenvalues");
    }
    std::vector<double> out;
    for (const auto& e : entries) {
        out.insert(out.end(), e.multiplicity.get_ui(), e.value);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<double> dickson_roots(int j, std::int64_t k) {
    if (j < 1) {
        throw DomainError("dickson_roots needs degree j >= 1, got " + std::to_string(j));
    }
    if (k < 2) {
        throw DomainError("dickson_roots needs k >= 2, got " + std::to_string(k));
    }
    return mirrored_cosines(2.0 * std::sqrt(static_cast<double>(k - 1)), j, j + 1);
}

std::vector<double> path_spectrum(int l) {
    require_levels(l);
    return mirrored_cosines(2.0, 2 * l + 1, 2 * l + 2);
}

GeronimusBracket geronimus_bracket(int l, std::int64_t k, int j) {
    const double scale = 2.0 * std::sqrt(static_cast<double>(k - 1));
    const double denom = static_cast<double>(l + 2);
    return {scale * std::cos((j + 0.5) * kPi / denom), scale * std::cos((j - 0.5) * kPi / denom)};
}

double geronimus_scaled_value(int l, std::int64_t k, double x) {
    const double a = static_cast<double>(k - 1);
    return geronimus_scaled(l, a, x / std::sqrt(a)).value;
}

std::vector<double> geronimus_roots(int l, std::int64_t k, double tol) {
    require_levels(l);
    if (k < 3) {
        throw DomainError("geronimus_roots needs k >= 3, got " + std::to_string(k));
    }
    if (!(tol > 0.0)) {
        throw DomainError("geronimus_roots needs a positive tolerance");
    }
    const double a = static_cast<double>(k - 1);
    const double scale = std::sqrt(a);
    const double target_width = std::min(tol, kGeronimusBisectionWidth);
    const int half = (l + 1) / 2;

    std::vector<double> positives;
    positives.reserve(static_cast<std::size_t>(half));
    for (int j = 1; j <= half; ++j) {
        const GeronimusBracket br = geronimus_bracket(l, k, j);
        double lo = br.lower;
        double hi = br.upper;
        const double f_lo = geronimus_scaled(l, a, lo / scale).value;
        const double f_hi = geronimus_scaled(l, a, hi / scale).value;
        if (sign_of(f_lo) * sign_of(f_hi) >= 0) {
            throw InternalError("Geronimus bracket " + std::to_string(j) + " for l = " +
                                std::to_string(l) + ", k = " + std::to_string(k) +
                                " does not straddle a sign change");
        }
        const int s_lo = sign_of(f_lo);
        double root = 0.0;
        bool exact = false;
        while (hi - lo > target_width) {
            const double mid = lo + 0.5 * (hi - lo);
            if (mid <= lo || mid >= hi) {
                break;
            }
            const int s_mid = sign_of(geronimus_scaled(l, a, mid / scale).value);
            if (s_mid == 0) {
                root = mid;
                exact = true;
                break;
            }
            (s_mid == s_lo ? lo : hi) = mid;
        }
        if (!exact) {
            root = lo + 0.5 * (hi - lo);
            const ScaledValue g = geronimus_scaled(l, a, root / scale);
            if (g.derivative != 0.0) {
                const double polished = (root / scale - g.value / g.derivative) * scale;
                if (polished > lo && polished < hi) {
                    root = polished;
                }
            }
        }
        positives.push_back(root);
    }

    std::vector<double> roots = positives;
    if ((l + 1) % 2 == 1) {
        roots.push_back(0.0);
    }
    for (auto it = positives.rbegin(); it != positives.rend(); ++it) {
        roots.push_back(-*it);
    }
    return roots;
}

std::vector<double> tridiagonal_roots(const CharacteristicTuple& tuple, int j, double tol) {
    const int l = tuple.levels();
    if (j < 1 || j > l + 1) {
        throw DomainError("factor index " + std::to_string(j) + " outside 1.." +
                          std::to_string(l + 1));
    }
    if (!(tol > 0.0)) {
        throw DomainError("tridiagonal_roots needs a positive tolerance");
    }
    // Squared off-diagonals: c_l, c_{l-1}, ..., c_{l+2-j}.
    std::vector<double> offdiag_sq;
    double bound = 0.0;
    double prev_b = 0.0;
    double max_sq = 1.0;
    for (int m = 1; m <= j - 1; ++m) {
        const double c = static_cast<double>(tuple.c(l + 1 - m));
        offdiag_sq.push_back(c);
        const double b = std::sqrt(c);
        bound = std::max(bound, prev_b + b);
        prev_b = b;
        max_sq = std::max(max_sq, c);
    }
    bound = std::max(bound, prev_b) + 1.0;
    const double pivot_floor = std::numeric_limits<double>::min() * max_sq;

    // The spectrum is symmetric about 0; locate the floor(j/2) positive roots and mirror.
    const int half = j / 2;
    std::vector<double> positives;
    for (int i = 1; i <= half; ++i) {
        const int rank_from_bottom = j - i + 1;
        double lo = 0.0;
        double hi = bound;
        while (hi - lo > tol) {
            const double mid = lo + 0.5 * (hi - lo);
            if (mid <= lo || mid >= hi) {
                break;
            }
            if (count_below(offdiag_sq, j, mid, pivot_floor) >= rank_from_bottom) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        positives.push_back(lo + 0.5 * (hi - lo));
    }

    std::vector<double> roots = positives;
    if (j % 2 == 1) {
        roots.push_back(0.0);
    }
    for (auto it = positives.rbegin(); it != positives.rend(); ++it) {
        roots.push_back(-*it);
    }
    return roots;
}

Spectrum spectrum(const BalancedTreeSpec& spec, double tol) {
    Spectrum out;
    out.total_vertices = spec.total_vertices;
    const int l = spec.levels();

    std::uint64_t entry_count = 0;
    std::uint64_t multiplicity_bits = 0;
    for (int j : spec.phi) {
        entry_count += static_cast<std::uint64_t>(j);
        multiplicity_bits += static_cast<std::uint64_t>(j) * bit_size(spec.factor_multiplicity(j));
    }
    if (entry_count > kMaxSpectrumEntries) {
        throw CapacityError("spectrum would have " + std::to_string(entry_count) +
                            " entries, above the limit of " + std::to_string(kMaxSpectrumEntries));
    }
    if (multiplicity_bits > kExactStorageBitLimit / 8) {
        throw CapacityError("spectrum multiplicities exceed the exact storage limit");
    }

    auto emit = [&](const std::vector<double>& roots, int factor, RootMethod method) {
        const BigInt m = spec.factor_multiplicity(factor);
        if (m <= 0) {
            return;
        }
        for (double v : roots) {
            out.entries.push_back({v, m, factor, method});
        }
    };

    if (const auto d = as_dendrimer(spec.tuple)) {
        if (d->k == 2) {
            // d(l, 2) is the path on 2l+1 vertices. Even h are the roots of
            // W_{l,l} = E_l(x, 1); odd h belong to W_{l,l+1}.
            const auto path = path_spectrum(l);
            for (std::size_t i = 0; i < path.size(); ++i) {
                const int h = static_cast<int>(i) + 1;
                emit({path[i]}, h % 2 == 0 ? l : l + 1, RootMethod::closed_form);
            }
        } else {
            for (int j = 1; j <= l; ++j) {
                emit(dickson_roots(j, d->k), j, RootMethod::closed_form);
            }
            emit(geronimus_roots(l, d->k, tol), l + 1, RootMethod::bracketed_root);
        }
    } else {
        for (int j : spec.phi) {
            emit(tridiagonal_roots(spec.tuple, j, tol), j, RootMethod::tridiagonal);
        }
    }

    std::stable_sort(out.entries.begin(), out.entries.end(),
                     [](const SpectrumEntry& x, const SpectrumEntry& y) {
                         if (x.value != y.value) {
                             return x.value > y.value;
                         }
                         return x.factor_index < y.factor_index;
                     });
    return out;
}

Spectrum collapse(const Spectrum& raw, double merge_tol) {
    Spectrum out;
    out.total_vertices = raw.total_vertices;
    out.collapsed = true;
    for (const auto& e : raw.entries) {
        if (!out.entries.empty() && std::fabs(out.entries.back().value - e.value) <= merge_tol) {
            out.entries.back().multiplicity += e.multiplicity;
            out.entries.back().factor_index =
                std::min(out.entries.back().factor_index, e.factor_index);
        } else {
            out.entries.push_back(e);
        }
    }
    return out;
}

SpectrumCheck check_spectrum(const Spectrum& s, double rel_tol) {
    SpectrumCheck check;
    check.multiplicity_sum_ok = s.multiplicity_sum() == s.total_vertices;

    CompensatedSum trace;
    CompensatedSum second;
    for (const auto& e : s.entries) {
        const double m = to_double(e.multiplicity);
        trace.add(m * e.value);
        second.add(m * e.value * e.value);
    }
    check.trace = trace.value();
    check.second_moment = second.value();
    const double edges2 = 2.0 * (to_double(s.total_vertices) - 1.0);
    const double scale = std::max(1.0, edges2);
    check.trace_ok = std::fabs(check.trace) <= rel_tol * scale;
    check.second_moment_ok = std::fabs(check.second_moment - edges2) <= rel_tol * scale;

    const Spectrum c = s.collapsed ? s : collapse(s);
    const std::size_t n = c.entries.size();
    check.symmetric = true;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        const auto& top = c.entries[i];
        const auto& bottom = c.entries[n - 1 - i];
        const double pair_tol = kCollapseTolerance * std::max(1.0, std::fabs(top.value));
        if (std::fabs(top.value + bottom.value) > pair_tol || top.multiplicity != bottom.multiplicity) {
            check.symmetric = false;
            break;
        }
    }
    return check;
}

}  // namespace dendrispec
