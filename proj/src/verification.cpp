#include "dendrispec/verification.hpp"

#include "dendrispec/energy.hpp"
#include "dendrispec/errors.hpp"
#include "dendrispec/oracle.hpp"
#include "dendrispec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

namespace dendrispec {

namespace {

constexpr std::pair<int, int> kDendrimerRanges[] = {
    // {l, largest k}; k always starts at 2
    {1, 20}, {2, 12}, {3, 7}, {4, 4}, {5, 3}, {6, 2}, {7, 2}, {8, 2},
};

constexpr std::size_t kRandomTupleVertexLimit = 500;

std::string tuple_label(const CharacteristicTuple& t) {
    std::string s = "tuple(";
    bool first = true;
    for (auto c : t.entries()) {
        if (!first) {
            s += ',';
        }
        s += std::to_string(c);
        first = false;
    }
    return s + ")";
}

bool fits(const BigInt& n, std::size_t cap) { return n <= BigInt(static_cast<unsigned long>(cap)); }

}  // namespace

std::vector<CorpusTree> oracle_corpus(std::size_t max_n, std::uint64_t seed, int random_count) {
    std::vector<CorpusTree> corpus;
    for (const auto& [l, k_max] : kDendrimerRanges) {
        for (int k = 2; k <= k_max; ++k) {
            auto spec = dendrimer_spec(l, k);
            if (fits(spec.total_vertices, max_n)) {
                corpus.push_back({"d(" + std::to_string(l) + "," + std::to_string(k) + ")",
                                  std::move(spec)});
            }
        }
    }

    std::mt19937_64 rng(seed);
    int accepted = 0;
    while (accepted < random_count) {
        const int l = 1 + static_cast<int>(rng() % 6);
        std::vector<std::int64_t> entries(static_cast<std::size_t>(l));
        for (auto& c : entries) {
            c = 1 + static_cast<std::int64_t>(rng() % 4);
        }
        auto spec = balanced_tree_from_tuple(CharacteristicTuple(std::move(entries)));
        if (!fits(spec.total_vertices, kRandomTupleVertexLimit)) {
            continue;
        }
        ++accepted;
        if (fits(spec.total_vertices, max_n)) {
            corpus.push_back({tuple_label(spec.tuple), std::move(spec)});
        }
    }
    return corpus;
}

TreeVerification verify_tree(const CorpusTree& tree, const VerifyOptions& options) {
    TreeVerification out;
    out.label = tree.label;
    out.n = static_cast<std::size_t>(tree.spec.total_vertices.get_ui());
    const bool fixed_cap = options.oracle_cap != 0;
    const std::size_t cap = fixed_cap ? options.oracle_cap : std::max(out.n, options.max_n);
    std::ostringstream detail;

    const OracleResult oracle = oracle_evaluate(tree.spec, cap);

    FactoredCharPoly factored = factored_charpoly(tree.spec);
    if (options.factor_hook) {
        options.factor_hook(tree.spec, factored);
    }
    try {
        const std::size_t degree_cap = fixed_cap ? cap : std::max(cap, kDefaultExpandCap);
        out.charpoly_ok = expand(factored, degree_cap) == oracle.charpoly;
    } catch (const CapacityError& e) {
        out.charpoly_ok = false;
        detail << "expand: " << e.what() << "; ";
    }
    if (!out.charpoly_ok && detail.tellp() == 0) {
        detail << "charpoly mismatch; ";
    }

    const Spectrum raw = spectrum(tree.spec);
    std::vector<double> values = raw.expanded(cap);
    std::sort(values.begin(), values.end(), std::greater<>());
    if (values.size() != oracle.eigenvalues.size()) {
        detail << "spectrum size " << values.size() << " vs " << oracle.eigenvalues.size() << "; ";
        out.spectrum_max_diff = INFINITY;
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) {
            out.spectrum_max_diff =
                std::max(out.spectrum_max_diff, std::fabs(values[i] - oracle.eigenvalues[i]));
        }
    }
    out.spectrum_ok = out.spectrum_max_diff <= options.spectrum_tol;
    if (!out.spectrum_ok && std::isfinite(out.spectrum_max_diff)) {
        detail << "spectrum max diff " << out.spectrum_max_diff << "; ";
    }

    const double energy = energy_report(tree.spec, {.include_bounds = false}).energy;
    out.energy_diff = std::fabs(energy - oracle.energy);
    out.energy_ok = out.energy_diff <= options.energy_tol_per_vertex * static_cast<double>(out.n);
    if (!out.energy_ok) {
        detail << "energy diff " << out.energy_diff << "; ";
    }

    out.detail = detail.str();
    return out;
}

bool CorpusVerification::ok() const noexcept { return failures() == 0; }

std::size_t CorpusVerification::failures() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(trees.begin(), trees.end(), [](const auto& t) { return !t.ok(); }));
}

CorpusVerification verify_corpus(const VerifyOptions& options) {
    CorpusVerification result;
    for (const auto& tree : oracle_corpus(options.max_n, options.seed, options.random_count)) {
        result.trees.push_back(verify_tree(tree, options));
    }
    return result;
}

}  // namespace dendrispec
