#include "dendrispec/errors.hpp"
#include "dendrispec/poly_engine.hpp"

#include <doctest.h>

#include <random>

using namespace dendrispec;

namespace {

using P = ExactPolynomial;

P quadratic_minus(long a) { return P({-a, 0, 1}); }

}  // namespace

TEST_CASE("Q sequence") {
    SUBCASE("star tuple (k)") {
        for (long k = 1; k <= 9; ++k) {
            const auto q = q_sequence(CharacteristicTuple{k});
            REQUIRE(q.size() == 3);
            CHECK(q[0] == P::constant(1));
            CHECK(q[1] == P::x());
            CHECK(q[2] == quadratic_minus(k));
        }
    }
    SUBCASE("tuple (3,2)") {
        const auto q = q_sequence({3, 2});
        CHECK(q[2] == P({-2, 0, 1}));
        CHECK(q[3] == P({0, -5, 0, 1}));
    }
    SUBCASE("degree and monicity on random tuples") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 100; ++trial) {
            const int l = 1 + static_cast<int>(rng() % 10);
            std::vector<std::int64_t> c(static_cast<std::size_t>(l));
            for (auto& v : c) {
                v = 1 + static_cast<std::int64_t>(rng() % 9);
            }
            const auto q = q_sequence(CharacteristicTuple(c));
            REQUIRE(q.size() == static_cast<std::size_t>(l) + 2);
            for (std::size_t j = 0; j < q.size(); ++j) {
                CHECK(q[j].degree() == static_cast<int>(j));
                CHECK(q[j].is_monic());
                CHECK(q[j].has_parity(static_cast<int>(j % 2)));
            }
        }
    }
}

TEST_CASE("W sequence worked cases") {
    for (long k = 2; k <= 12; ++k) {
        const auto w2 = w_sequence(2, k);
        CHECK(w2[3] == P({0, -(2 * k - 1), 0, 1}));
        const auto w3 = w_sequence(3, k);
        CHECK(w3[4] == P({k * (k - 1), 0, -(3 * k - 2), 0, 1}));
        CHECK(w3[2] == quadratic_minus(k - 1));
    }
    CHECK_THROWS_AS(w_sequence(0, 3), DomainError);
    CHECK_THROWS_AS(w_sequence(2, 1), DomainError);
}

TEST_CASE("Dickson and Geronimus families") {
    CHECK(dickson_e(0, 5) == P::constant(1));
    CHECK(dickson_e(1, 5) == P::x());
    for (long a = -3; a <= 6; ++a) {
        CHECK(dickson_e(2, a) == quadratic_minus(a));
        CHECK(dickson_e(3, a) == P({0, -2 * a, 0, 1}));
    }
    for (long k = 2; k <= 8; ++k) {
        CHECK(geronimus_g(2, k) == quadratic_minus(k));
        CHECK(geronimus_g(3, k) == P({0, -(2 * k - 1), 0, 1}));
    }
    CHECK(geronimus_g(4, 5) == dickson_e(4, 4) - dickson_e(2, 4));
    CHECK_THROWS_AS(dickson_e(-1, 2), DomainError);
    CHECK_THROWS_AS(geronimus_g(-1, 2), DomainError);
}

TEST_CASE("Geronimus difference identity") {
    for (long a = 2; a <= 10; ++a) {
        for (int j = 2; j <= 25; ++j) {
            CHECK(geronimus_g(j, a) == dickson_e(j, a - 1) - dickson_e(j - 2, a - 1));
        }
    }
}

TEST_CASE("W sequence equals Dickson then Geronimus") {
    for (int l = 1; l <= 12; ++l) {
        for (long k = 2; k <= 12; ++k) {
            const auto w = w_sequence(l, k);
            for (int j = 0; j <= l; ++j) {
                CHECK(w[static_cast<std::size_t>(j)] == dickson_e(j, k - 1));
            }
            CHECK(w[static_cast<std::size_t>(l) + 1] == geronimus_g(l + 1, k));
        }
    }
}

TEST_CASE("parity of the polynomial families") {
    for (int j = 0; j <= 30; ++j) {
        CHECK(dickson_e(j, 4).has_parity(j % 2));
        CHECK(geronimus_g(j, 4).has_parity(j % 2));
    }
}

TEST_CASE("factored characteristic polynomials") {
    SUBCASE("d(1,7)") {
        const auto fp = factored_charpoly(dendrimer_spec(1, 7));
        REQUIRE(fp.factors.size() == 2);
        CHECK(fp.factors[0].index == 1);
        CHECK(fp.factors[0].poly == P::x());
        CHECK(fp.factors[0].multiplicity == 6);
        CHECK(fp.factors[1].index == 2);
        CHECK(fp.factors[1].poly == quadratic_minus(7));
        CHECK(fp.factors[1].multiplicity == 1);
    }
    SUBCASE("d(2,3)") {
        const auto fp = factored_charpoly(dendrimer_spec(2, 3));
        REQUIRE(fp.factors.size() == 3);
        CHECK(fp.factors[0].poly == P::x());
        CHECK(fp.factors[0].multiplicity == 3);
        CHECK(fp.factors[1].poly == quadratic_minus(2));
        CHECK(fp.factors[1].multiplicity == 2);
        CHECK(fp.factors[2].poly == P({0, -5, 0, 1}));
        CHECK(fp.factors[2].multiplicity == 1);
        // x^3 - 5x = x (x^2 - 5), so the product is x^4 (x^2-2)^2 (x^2-5)
        const P expected = power(P::x(), 4) * power(quadratic_minus(2), 2) * quadratic_minus(5);
        CHECK(expand(fp) == expected);
    }
    SUBCASE("d(3,3)") {
        const auto fp = factored_charpoly(dendrimer_spec(3, 3));
        REQUIRE(fp.factors.size() == 4);
        CHECK(fp.factors[3].poly == P({6, 0, -7, 0, 1}));
        CHECK(fp.factors[3].multiplicity == 1);
        CHECK(fp.factors[2].poly == P({0, -4, 0, 1}));
        CHECK(fp.factors[2].multiplicity == 2);
        CHECK(fp.factors[1].poly == quadratic_minus(2));
        CHECK(fp.factors[1].multiplicity == 3);
        CHECK(fp.factors[0].poly == P::x());
        CHECK(fp.factors[0].multiplicity == 6);
    }
    SUBCASE("zero multiplicity factors are dropped but keep their index") {
        const auto fp = factored_charpoly(balanced_tree_from_tuple({2, 1, 2}));
        std::vector<int> indices;
        for (const auto& f : fp.factors) {
            indices.push_back(f.index);
        }
        CHECK(indices == std::vector<int>{1, 3, 4});
    }
}

TEST_CASE("dendrimer multiplicities k(k-2)(k-1)^(l-1-j)") {
    for (int l = 1; l <= 15; ++l) {
        for (long k = 3; k <= 10; ++k) {
            const auto fp = factored_charpoly(dendrimer_spec(l, k));
            REQUIRE(fp.factors.size() == static_cast<std::size_t>(l) + 1);
            for (const auto& f : fp.factors) {
                const int j = f.index;
                BigInt expected = 1;
                if (j == l) {
                    expected = k - 1;
                } else if (j < l) {
                    expected = k * (k - 2) * pow(BigInt(k - 1), static_cast<unsigned long>(l - 1 - j));
                }
                CHECK(f.multiplicity == expected);
            }
        }
    }
}

TEST_CASE("direct dendrimer route agrees with the general tuple route") {
    for (int l = 1; l <= 10; ++l) {
        for (long k = 2; k <= 9; ++k) {
            const auto a = factored_charpoly(dendrimer_spec(l, k));
            const auto b = dendrimer_factored_charpoly(l, k);
            REQUIRE(a.factors.size() == b.factors.size());
            for (std::size_t i = 0; i < a.factors.size(); ++i) {
                CHECK(a.factors[i].poly == b.factors[i].poly);
                CHECK(a.factors[i].multiplicity == b.factors[i].multiplicity);
                CHECK(a.factors[i].index == b.factors[i].index);
            }
        }
    }
}

TEST_CASE("degree sum equals the vertex count") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const int l = 1 + static_cast<int>(rng() % 12);
        std::vector<std::int64_t> c(static_cast<std::size_t>(l));
        for (auto& v : c) {
            v = 1 + static_cast<std::int64_t>(rng() % 6);
        }
        const auto spec = balanced_tree_from_tuple(CharacteristicTuple(c));
        const auto fp = factored_charpoly(spec);
        CHECK(fp.total_degree() == spec.total_vertices);
        for (const auto& f : fp.factors) {
            CHECK(f.multiplicity >= 1);
        }
    }
    CHECK(factored_charpoly(dendrimer_spec(80, 5)).total_degree() ==
          dendrimer_spec(80, 5).total_vertices);
}

TEST_CASE("expansion") {
    CHECK(expand(FactoredCharPoly{}) == P::constant(1));
    const auto fp = factored_charpoly(dendrimer_spec(1, 2));
    CHECK(expand(fp) == P({0, -2, 0, 1}));
    CHECK_THROWS_AS(expand(factored_charpoly(dendrimer_spec(8, 4))), CapacityError);
    CHECK_NOTHROW(expand(factored_charpoly(dendrimer_spec(2, 3)), 10));
    CHECK_THROWS_AS(expand(factored_charpoly(dendrimer_spec(2, 3)), 9), CapacityError);
}

TEST_CASE("erratum regression for d(3,k)") {
    for (long k = 3; k <= 8; ++k) {
        const P full = expand(factored_charpoly(dendrimer_spec(3, k)));
        CHECK(divides(P({k * (k - 1), 0, -(3 * k - 2), 0, 1}), full));
    }
    const P full3 = expand(factored_charpoly(dendrimer_spec(3, 3)));
    CHECK_FALSE(divides(P({4 * (3 - 1), 0, -2 * (3 + 1), 0, 1}), full3));
}

TEST_CASE("coefficient storage limit") {
    CHECK_THROWS_AS(factored_charpoly(dendrimer_spec(3000, 3)), CapacityError);
    CHECK_THROWS_AS(dickson_e(5000, 3), CapacityError);
    CHECK_THROWS_AS(geronimus_g(5000, 3), CapacityError);
}
