#include "dendrispec/poly_engine.hpp"

#include "dendrispec/errors.hpp"

#include <string>

namespace dendrispec {

namespace {

// next = x * current - coefficient * previous
ExactPolynomial recurrence_step(const ExactPolynomial& current, const ExactPolynomial& previous,
                                std::int64_t coefficient) {
    return current.shifted(1) - previous * BigInt(static_cast<long>(coefficient));
}

// Running total of coefficient bits produced by a recurrence. Each step costs time
// proportional to its output, so this bounds work as well as memory.
class StorageBudget {
public:
    void charge(const ExactPolynomial& p) {
        bits_ += p.bit_size();
        if (bits_ > kExactStorageBitLimit) {
            throw CapacityError("polynomial coefficients exceed the exact storage limit");
        }
    }

private:
    std::uint64_t bits_ = 0;
};

void require_nonnegative_index(int j) {
    if (j < 0) {
        throw DomainError("polynomial index must be non-negative, got " + std::to_string(j));
    }
}

}  // namespace

BigInt FactoredCharPoly::total_degree() const {
    BigInt total = 0;
    for (const auto& f : factors) {
        total += f.multiplicity * f.poly.degree();
    }
    return total;
}

std::vector<ExactPolynomial> q_sequence(const CharacteristicTuple& tuple) {
    const int l = tuple.levels();
    std::vector<ExactPolynomial> q;
    q.reserve(static_cast<std::size_t>(l) + 2);
    q.push_back(ExactPolynomial::constant(1));
    q.push_back(ExactPolynomial::x());
    StorageBudget budget;
    for (int j = 0; j <= l - 1; ++j) {
        q.push_back(recurrence_step(q[static_cast<std::size_t>(j) + 1],
                                    q[static_cast<std::size_t>(j)], tuple.c(l - j)));
        budget.charge(q.back());
    }
    return q;
}

std::vector<ExactPolynomial> w_sequence(int l, std::int64_t k) {
    return q_sequence(dendrimer_tuple(l, k));
}

ExactPolynomial dickson_e(int j, std::int64_t a) {
    require_nonnegative_index(j);
    ExactPolynomial previous = ExactPolynomial::constant(1);
    if (j == 0) {
        return previous;
    }
    ExactPolynomial current = ExactPolynomial::x();
    StorageBudget budget;
    for (int i = 2; i <= j; ++i) {
        ExactPolynomial next = recurrence_step(current, previous, a);
        budget.charge(next);
        previous = std::move(current);
        current = std::move(next);
    }
    return current;
}

ExactPolynomial geronimus_g(int j, std::int64_t a) {
    require_nonnegative_index(j);
    if (j == 0) {
        return ExactPolynomial::constant(1);
    }
    if (j == 1) {
        return ExactPolynomial::x();
    }
    ExactPolynomial previous = ExactPolynomial::x();
    ExactPolynomial current = recurrence_step(previous, ExactPolynomial::constant(1), a);
    StorageBudget budget;
    for (int i = 3; i <= j; ++i) {
        ExactPolynomial next = recurrence_step(current, previous, a - 1);
        budget.charge(next);
        previous = std::move(current);
        current = std::move(next);
    }
    return current;
}

FactoredCharPoly factored_charpoly(const BalancedTreeSpec& spec) {
    const auto q = q_sequence(spec.tuple);
    FactoredCharPoly out;
    for (int j : spec.phi) {
        out.factors.push_back({q[static_cast<std::size_t>(j)], spec.factor_multiplicity(j), j});
    }
    return out;
}

FactoredCharPoly dendrimer_factored_charpoly(int l, std::int64_t k) {
    const auto w = w_sequence(l, k);
    const BigInt kk = static_cast<long>(k);
    FactoredCharPoly out;
    for (int j = 1; j <= l - 1; ++j) {
        BigInt m = kk * (kk - 2) * pow(kk - 1, static_cast<unsigned long>(l - 1 - j));
        if (m > 0) {
            out.factors.push_back({w[static_cast<std::size_t>(j)], std::move(m), j});
        }
    }
    out.factors.push_back({w[static_cast<std::size_t>(l)], kk - 1, l});
    out.factors.push_back({w[static_cast<std::size_t>(l) + 1], 1, l + 1});
    return out;
}

ExactPolynomial expand(const FactoredCharPoly& factored, std::size_t max_degree) {
    const BigInt total = factored.total_degree();
    if (total > max_degree) {
        throw CapacityError("expanded degree " + to_decimal(total) + " exceeds the cap of " +
                            std::to_string(max_degree));
    }
    ExactPolynomial result = ExactPolynomial::constant(1);
    std::size_t x_power = 0;
    for (const auto& f : factored.factors) {
        const std::size_t m = f.multiplicity.get_ui();
        if (f.poly == ExactPolynomial::x()) {
            x_power += m;
            continue;
        }
        for (std::size_t i = 0; i < m; ++i) {
            result = result * f.poly;
        }
    }
    return result.shifted(x_power);
}

}  // namespace dendrispec
