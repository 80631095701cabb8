#include "dendrispec/tree_model.hpp"

#include "dendrispec/errors.hpp"

#include <string>

namespace dendrispec {

CharacteristicTuple::CharacteristicTuple(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw ValidationError("characteristic tuple must have at least one entry");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 1) {
            throw ValidationError("characteristic tuple entry c_" + std::to_string(i + 1) +
                                  " = " + std::to_string(entries_[i]) + " is not positive");
        }
    }
}

BigInt BalancedTreeSpec::level_count(int j) const {
    if (j < 0) {
        return 0;
    }
    return level_counts.at(static_cast<std::size_t>(j));
}

BigInt BalancedTreeSpec::factor_multiplicity(int j) const {
    const int l = levels();
    return level_count(l + 1 - j) - level_count(l - j);
}

BalancedTreeSpec balanced_tree_from_tuple(const CharacteristicTuple& tuple) {
    const int l = tuple.levels();
    std::vector<BigInt> counts;
    counts.reserve(static_cast<std::size_t>(l) + 1);
    counts.emplace_back(1);
    BigInt total = 1;
    std::uint64_t bits = 1;
    for (int j = 1; j <= l; ++j) {
        BigInt next = counts.back();
        next *= static_cast<unsigned long>(tuple.c(j));
        total += next;
        bits += bit_size(next);
        if (bits > kExactStorageBitLimit) {
            throw CapacityError("level counts of a depth-" + std::to_string(l) +
                                " tree exceed the exact storage limit");
        }
        counts.push_back(std::move(next));
    }

    BalancedTreeSpec spec{tuple, std::move(counts), std::move(total), {}};
    for (int j = 1; j <= l + 1; ++j) {
        if (spec.factor_multiplicity(j) > 0) {
            spec.phi.push_back(j);
        }
    }
    return spec;
}

CharacteristicTuple dendrimer_tuple(int l, std::int64_t k) {
    if (l < 1) {
        throw DomainError("dendrimer d(l,k) requires l >= 1, got l = " + std::to_string(l));
    }
    if (k < 2) {
        throw DomainError("dendrimer d(l,k) requires k >= 2, got k = " + std::to_string(k));
    }
    std::vector<std::int64_t> entries(static_cast<std::size_t>(l), k - 1);
    entries.front() = k;
    return CharacteristicTuple(std::move(entries));
}

BalancedTreeSpec dendrimer_spec(int l, std::int64_t k) {
    return balanced_tree_from_tuple(dendrimer_tuple(l, k));
}

std::optional<DendrimerParams> as_dendrimer(const CharacteristicTuple& tuple) {
    const std::int64_t k = tuple.c(1);
    if (k < 2) {
        return std::nullopt;
    }
    for (int j = 2; j <= tuple.levels(); ++j) {
        if (tuple.c(j) != k - 1) {
            return std::nullopt;
        }
    }
    return DendrimerParams{tuple.levels(), k};
}

BinaryBlockMatrix::BinaryBlockMatrix(std::size_t alpha, std::size_t beta)
    : rows_(alpha), cols_(beta) {
    if (alpha == 0 || beta == 0) {
        throw DomainError("block matrix dimensions must be positive");
    }
    if (alpha % beta != 0) {
        throw DomainError("block matrix B_{" + std::to_string(alpha) + "," +
                          std::to_string(beta) + "}: beta must divide alpha");
    }
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    SymmetricMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw ValidationError("matrix is not square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j] != rows[j].at(i)) {
                throw ValidationError("matrix is not symmetric at (" + std::to_string(i) +
                                      ", " + std::to_string(j) + ")");
            }
            out.data_[i * n + j] = rows[i][j];
        }
    }
    return out;
}

double SymmetricMatrix::frobenius_norm_squared() const noexcept {
    double sum = 0.0;
    for (double v : data_) {
        sum += v * v;
    }
    return sum;
}

std::size_t level_offset(const BalancedTreeSpec& spec, int level) {
    std::size_t offset = 0;
    for (int j = spec.levels(); j > level; --j) {
        offset += spec.level_counts.at(static_cast<std::size_t>(j)).get_ui();
    }
    return offset;
}

SymmetricMatrix adjacency_matrix(const BalancedTreeSpec& spec, std::size_t max_vertices) {
    if (spec.total_vertices > max_vertices) {
        throw CapacityError("tree has " + to_decimal(spec.total_vertices) +
                            " vertices; adjacency materialization is capped at " +
                            std::to_string(max_vertices));
    }
    const std::size_t n = spec.total_vertices.get_ui();
    SymmetricMatrix adjacency(n);

    // Level j hangs off level j-1 through B_{n_j, n_{j-1}}.
    for (int j = spec.levels(); j >= 1; --j) {
        const std::size_t child_offset = level_offset(spec, j);
        const std::size_t parent_offset = level_offset(spec, j - 1);
        const BinaryBlockMatrix block(spec.level_counts[static_cast<std::size_t>(j)].get_ui(),
                                      spec.level_counts[static_cast<std::size_t>(j - 1)].get_ui());
        for (std::size_t i = 0; i < block.rows(); ++i) {
            adjacency.set(child_offset + i, parent_offset + block.column_of(i), 1.0);
        }
    }
    return adjacency;
}

}  // namespace dendrispec
