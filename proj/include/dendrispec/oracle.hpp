#pragma once

// Brute-force ground truth computed straight from the adjacency matrix.
// Nothing here depends on the factorized machinery in poly_engine or spectra.

#include "dendrispec/polynomial.hpp"
#include "dendrispec/tree_model.hpp"

#include <cstddef>
#include <vector>

namespace dendrispec {

inline constexpr std::size_t kDenseEigenCap = 2000;
inline constexpr std::size_t kBruteCharpolyCap = 600;
inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic-by-row Jacobi rotations until the off-diagonal norm drops below
// tol * ||A||_F. Eigenvalues returned in descending order.
// Throws CapacityError above max_order, ConvergenceError after kJacobiMaxSweeps.
std::vector<double> dense_eigenvalues(const SymmetricMatrix& m, double tol = kJacobiTolerance,
                                      std::size_t max_order = kDenseEigenCap);

// det(xI - A) by the Faddeev-LeVerrier recurrence over big integers.
// Requires integer entries (ValidationError otherwise).
ExactPolynomial brute_charpoly(const SymmetricMatrix& m, std::size_t max_order = kBruteCharpolyCap);

double brute_energy(const BalancedTreeSpec& spec, std::size_t max_order = kDenseEigenCap);

struct OracleResult {
    std::vector<double> eigenvalues;  // descending
    ExactPolynomial charpoly;
    double energy = 0.0;
};

OracleResult oracle_evaluate(const BalancedTreeSpec& spec,
                             std::size_t max_order = kBruteCharpolyCap);

}  // namespace dendrispec
