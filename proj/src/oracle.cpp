#include "dendrispec/oracle.hpp"

#include "dendrispec/errors.hpp"
#include "dendrispec/summation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>

namespace dendrispec {

namespace {

void require_order(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap) {
        throw CapacityError(std::string(what) + ": order " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(cap));
    }
}

// Upper-triangle packed storage of a symmetric n x n matrix.
class PackedSymmetric {
public:
    explicit PackedSymmetric(std::size_t n) : row_start_(n), data_(n * (n + 1) / 2) {
        std::size_t offset = 0;
        for (std::size_t i = 0; i < n; ++i) {
            row_start_[i] = offset - i;  // so that index = row_start_[i] + j for j >= i
            offset += n - i;
        }
    }

    mpz_class& at(std::size_t i, std::size_t j) {
        return i <= j ? data_[row_start_[i] + j] : data_[row_start_[j] + i];
    }

    void clear() {
        for (auto& v : data_) {
            v = 0;
        }
    }

    void swap(PackedSymmetric& other) noexcept { data_.swap(other.data_); }

private:
    std::vector<std::size_t> row_start_;
    std::vector<mpz_class> data_;
};

struct WeightedNeighbor {
    std::size_t index;
    long weight;
};

}  // namespace

std::vector<double> dense_eigenvalues(const SymmetricMatrix& m, double tol, std::size_t max_order) {
    const std::size_t n = m.order();
    require_order(n, max_order, "dense_eigenvalues");
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = m.row(i);
        std::copy(row.begin(), row.end(), a.begin() + static_cast<std::ptrdiff_t>(i * n));
    }
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    const double frob = std::sqrt(m.frobenius_norm_squared());
    std::vector<double> row_p(n);
    std::vector<double> row_q(n);

    bool converged = n <= 1 || frob == 0.0;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        double off = 0.0;
        double off_abs = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                off += 2.0 * at(i, j) * at(i, j);
                off_abs += std::fabs(at(i, j));
            }
        }
        if (std::sqrt(off) < tol * frob) {
            converged = true;
            break;
        }
        // Threshold strategy: early sweeps only rotate the larger elements.
        const double threshold = sweep < 3 ? 0.2 * off_abs / static_cast<double>(n * n) : 0.0;
        const double negligible = 1e-3 * tol * frob / static_cast<double>(n);

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::fabs(apq) <= std::max(threshold, negligible)) {
                    continue;
                }
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(p, k);
                    const double akq = at(q, k);
                    row_p[k] = c * akp - s * akq;
                    row_q[k] = s * akp + c * akq;
                }
                row_p[p] = at(p, p) - t * apq;
                row_q[q] = at(q, q) + t * apq;
                row_p[q] = 0.0;
                row_q[p] = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    at(p, k) = row_p[k];
                    at(k, p) = row_p[k];
                    at(q, k) = row_q[k];
                    at(k, q) = row_q[k];
                }
            }
        }
    }
    if (!converged) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                off += 2.0 * at(i, j) * at(i, j);
            }
        }
        if (!(std::sqrt(off) < tol * frob)) {
            throw ConvergenceError("Jacobi iteration did not converge within " +
                                   std::to_string(kJacobiMaxSweeps) + " sweeps");
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) {
        eig[i] = at(i, i);
    }
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

ExactPolynomial brute_charpoly(const SymmetricMatrix& m, std::size_t max_order) {
    const std::size_t n = m.order();
    require_order(n, max_order, "brute_charpoly");

    std::vector<std::vector<WeightedNeighbor>> neighbors(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = m(i, j);
            if (v == 0.0) {
                continue;
            }
            if (v != std::round(v) || std::fabs(v) > 1e15) {
                throw ValidationError("brute_charpoly needs integer entries; entry (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ") = " +
                                      std::to_string(v));
            }
            neighbors[i].push_back({j, static_cast<long>(v)});
        }
    }

    // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    // Every M_k is a polynomial in A, hence symmetric.
    std::vector<mpz_class> coeffs(n + 1);
    coeffs[n] = 1;
    PackedSymmetric previous(n);
    PackedSymmetric current(n);
    mpz_class trace;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                mpz_ptr target = current.at(i, j).get_mpz_t();
                mpz_set_ui(target, 0);
                for (const auto& [t, w] : neighbors[i]) {
                    mpz_srcptr src = previous.at(t, j).get_mpz_t();
                    if (mpz_sgn(src) == 0) {
                        continue;
                    }
                    if (w == 1) {
                        mpz_add(target, target, src);
                    } else if (w > 0) {
                        mpz_addmul_ui(target, src, static_cast<unsigned long>(w));
                    } else {
                        mpz_submul_ui(target, src, static_cast<unsigned long>(-w));
                    }
                }
            }
            current.at(i, i) += coeffs[n - k + 1];
        }

        trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& [t, w] : neighbors[i]) {
                trace += current.at(t, i) * w;
            }
        }
        if (!mpz_divisible_ui_p(trace.get_mpz_t(), static_cast<unsigned long>(k))) {
            throw InternalError("Faddeev-LeVerrier trace not divisible by step index");
        }
        mpz_divexact_ui(coeffs[n - k].get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
        coeffs[n - k] = -coeffs[n - k];
        previous.swap(current);
    }
    return ExactPolynomial(std::move(coeffs));
}

double brute_energy(const BalancedTreeSpec& spec, std::size_t max_order) {
    const auto eig = dense_eigenvalues(adjacency_matrix(spec, max_order), kJacobiTolerance, max_order);
    CompensatedSum sum;
    for (double v : eig) {
        sum.add(std::fabs(v));
    }
    return sum.value();
}

OracleResult oracle_evaluate(const BalancedTreeSpec& spec, std::size_t max_order) {
    const SymmetricMatrix adjacency = adjacency_matrix(spec, max_order);
    OracleResult out;
    out.eigenvalues = dense_eigenvalues(adjacency, kJacobiTolerance, max_order);
    out.charpoly = brute_charpoly(adjacency, max_order);
    CompensatedSum sum;
    for (double v : out.eigenvalues) {
        sum.add(std::fabs(v));
    }
    out.energy = sum.value();
    return out;
}

}  // namespace dendrispec
