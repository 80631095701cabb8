#pragma once

// Cross-checks the analytic pipeline (factored characteristic polynomial,
// spectrum, energy) against the brute-force oracle on a fixed corpus of trees.

#include "dendrispec/poly_engine.hpp"
#include "dendrispec/tree_model.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dendrispec {

inline constexpr std::size_t kDefaultCorpusMaxN = 500;
inline constexpr std::uint64_t kDefaultCorpusSeed = 42;
inline constexpr int kDefaultRandomTuples = 50;

struct CorpusTree {
    std::string label;  // "d(l,k)" or "tuple(c1,...,cl)"
    BalancedTreeSpec spec;
};

// Dendrimers from the fixed (l, k) list plus random_count seeded random tuples
// (l in 1..6, entries in 1..4, n_T <= 500). Trees with n_T > max_n are dropped;
// the random draw itself does not depend on max_n, so smaller caps give subsets.
std::vector<CorpusTree> oracle_corpus(std::size_t max_n = kDefaultCorpusMaxN,
                                      std::uint64_t seed = kDefaultCorpusSeed,
                                      int random_count = kDefaultRandomTuples);

// Called on every factored polynomial before comparison. Only used to
// simulate faulty factorizations in tests.
using FactorHook = std::function<void(const BalancedTreeSpec&, FactoredCharPoly&)>;

struct VerifyOptions {
    std::size_t max_n = kDefaultCorpusMaxN;
    std::uint64_t seed = kDefaultCorpusSeed;
    int random_count = kDefaultRandomTuples;
    double spectrum_tol = 1e-8;
    double energy_tol_per_vertex = 1e-9;
    std::size_t oracle_cap = 0;  // 0: use max(n_T, max_n)
    FactorHook factor_hook;
};

struct TreeVerification {
    std::string label;
    std::size_t n = 0;
    bool charpoly_ok = false;
    bool spectrum_ok = false;
    bool energy_ok = false;
    double spectrum_max_diff = 0.0;
    double energy_diff = 0.0;
    std::string detail;  // empty unless something failed

    bool ok() const noexcept { return charpoly_ok && spectrum_ok && energy_ok; }
};

TreeVerification verify_tree(const CorpusTree& tree, const VerifyOptions& options = {});

struct CorpusVerification {
    std::vector<TreeVerification> trees;

    bool ok() const noexcept;
    std::size_t failures() const noexcept;
};

CorpusVerification verify_corpus(const VerifyOptions& options = {});

}  // namespace dendrispec
