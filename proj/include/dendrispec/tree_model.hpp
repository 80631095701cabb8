#pragma once

// Combinatorial description of balanced trees and dendrimers.
//
// A balanced tree is identified up to isomorphism by its characteristic tuple
// (c_1, ..., c_l): every vertex on level j-1 has exactly c_j children. Level
// counts grow geometrically, so they are kept as big integers and the
// adjacency matrix is only built on request, behind a size cap.

#include "dendrispec/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace dendrispec {

inline constexpr std::size_t kDefaultAdjacencyCap = 100000;

class CharacteristicTuple {
public:
    // Throws ValidationError on an empty list or an entry < 1.
    explicit CharacteristicTuple(std::vector<std::int64_t> entries);
    CharacteristicTuple(std::initializer_list<std::int64_t> entries)
        : CharacteristicTuple(std::vector<std::int64_t>(entries)) {}

    // Number of internal levels l.
    int levels() const noexcept { return static_cast<int>(entries_.size()); }

    // 1-based access, matching c_1..c_l.
    std::int64_t c(int j) const { return entries_.at(static_cast<std::size_t>(j - 1)); }

    std::span<const std::int64_t> entries() const noexcept { return entries_; }

    bool operator==(const CharacteristicTuple&) const = default;

private:
    std::vector<std::int64_t> entries_;
};

struct DendrimerParams {
    int l = 1;
    std::int64_t k = 2;
    bool operator==(const DendrimerParams&) const = default;
};

struct BalancedTreeSpec {
    CharacteristicTuple tuple;
    std::vector<BigInt> level_counts;  // n_0 .. n_l
    BigInt total_vertices;             // n_T
    std::vector<int> phi;              // ascending factor indices with positive multiplicity

    int levels() const noexcept { return tuple.levels(); }

    // n_j with the convention n_{-1} = 0.
    BigInt level_count(int j) const;

    // n_{l+1-j} - n_{l-j}: the exponent of Q_j in the characteristic polynomial.
    BigInt factor_multiplicity(int j) const;
};

BalancedTreeSpec balanced_tree_from_tuple(const CharacteristicTuple& tuple);

// d(l, k): tuple (k, k-1, ..., k-1). Throws DomainError for l < 1 or k < 2.
BalancedTreeSpec dendrimer_spec(int l, std::int64_t k);

CharacteristicTuple dendrimer_tuple(int l, std::int64_t k);

// Recognizes tuples of the form (k, k-1, ..., k-1) with k >= 2.
std::optional<DendrimerParams> as_dendrimer(const CharacteristicTuple& tuple);

// B_{alpha,beta}: entry (i, j) is 1 iff floor(i * beta / alpha) == j.
class BinaryBlockMatrix {
public:
    // Throws DomainError unless beta divides alpha (both positive).
    BinaryBlockMatrix(std::size_t alpha, std::size_t beta);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool at(std::size_t i, std::size_t j) const noexcept { return (i * cols_) / rows_ == j; }

    // Column holding the single 1 of row i.
    std::size_t column_of(std::size_t i) const noexcept { return (i * cols_) / rows_; }

private:
    std::size_t rows_;
    std::size_t cols_;
};

inline BinaryBlockMatrix block_matrix(std::size_t alpha, std::size_t beta) {
    return BinaryBlockMatrix(alpha, beta);
}

// Dense symmetric matrix, row-major. Every mutation keeps (i, j) and (j, i) equal.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

    // Throws ValidationError if the rows are ragged or the matrix is not symmetric.
    static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t order() const noexcept { return order_; }

    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * order_ + j]; }

    void set(std::size_t i, std::size_t j, double value) noexcept {
        data_[i * order_ + j] = value;
        data_[j * order_ + i] = value;
    }

    std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * order_, order_};
    }

    double frobenius_norm_squared() const noexcept;

private:
    std::size_t order_ = 0;
    std::vector<double> data_;
};

// Vertex index of the first vertex of level j in the canonical leaves-first layout
// (level l occupies [0, n_l), then level l-1, ..., level 0 is the last vertex).
std::size_t level_offset(const BalancedTreeSpec& spec, int level);

// Throws CapacityError if n_T exceeds max_vertices.
SymmetricMatrix adjacency_matrix(const BalancedTreeSpec& spec,
                                 std::size_t max_vertices = kDefaultAdjacencyCap);

}  // namespace dendrispec
