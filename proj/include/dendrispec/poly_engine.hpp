#pragma once

// Recurrence-defined polynomial families and the factored characteristic
// polynomial of a balanced tree.
//
//   Q_0 = 1, Q_1 = x, Q_{j+2} = x Q_{j+1} - c_{l-j} Q_j          (0 <= j <= l-1)
//   P_x(T) = prod_{j=1}^{l+1} Q_j^{n_{l+1-j} - n_{l-j}}
//
// For d(l, k) the Q_j are W_{l,j}(x, k): Dickson polynomials of the second kind
// E_j(x, k-1) for j <= l, and the Geronimus polynomial G_{l+1}(x, k) on top.

#include "dendrispec/bigint.hpp"
#include "dendrispec/polynomial.hpp"
#include "dendrispec/tree_model.hpp"

#include <cstdint>
#include <vector>

namespace dendrispec {

inline constexpr std::size_t kDefaultExpandCap = 2000;

struct CharPolyFactor {
    ExactPolynomial poly;
    BigInt multiplicity;  // >= 1
    int index = 0;        // j of Q_j
};

struct FactoredCharPoly {
    std::vector<CharPolyFactor> factors;  // ascending by index

    // sum of multiplicity * degree; equals n_T for a tree.
    BigInt total_degree() const;
};

// Q_0 .. Q_{l+1}.
std::vector<ExactPolynomial> q_sequence(const CharacteristicTuple& tuple);

// W_{l,0} .. W_{l,l+1} at integer k. Throws DomainError for l < 1 or k < 2.
std::vector<ExactPolynomial> w_sequence(int l, std::int64_t k);

// E_j(x, a) = x E_{j-1} - a E_{j-2}, E_0 = 1, E_1 = x.
ExactPolynomial dickson_e(int j, std::int64_t a);

// G_0 = 1, G_1 = x, G_2 = x^2 - a, G_j = x G_{j-1} - (a-1) G_{j-2}.
ExactPolynomial geronimus_g(int j, std::int64_t a);

// Zero-multiplicity factors are omitted; the surviving indices are exactly spec.phi.
FactoredCharPoly factored_charpoly(const BalancedTreeSpec& spec);

// The dendrimer product written out directly:
//   W_{l,l+1} * W_{l,l}^{k-1} * prod_{j=1}^{l-1} W_{l,j}^{k(k-2)(k-1)^{l-1-j}}
// Independent of level counts; used to cross-check factored_charpoly.
FactoredCharPoly dendrimer_factored_charpoly(int l, std::int64_t k);

// Multiplies the product out. Throws CapacityError when the total degree exceeds max_degree.
ExactPolynomial expand(const FactoredCharPoly& factored,
                       std::size_t max_degree = kDefaultExpandCap);

}  // namespace dendrispec
