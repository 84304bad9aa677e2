#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "nodal/lattice.hpp"
#include "oracles.hpp"

using nodal::GramMatrix;
using nodal::Int;
using nodal::Signature;

namespace {

GramMatrix from_rows(const std::vector<std::vector<Int>>& rows) { return GramMatrix(rows); }

GramMatrix random_symmetric(std::mt19937_64& rng, int max_rank, int max_entry) {
    std::uniform_int_distribution<int> rank_dist(0, max_rank);
    std::uniform_int_distribution<int> entry_dist(-max_entry, max_entry);
    const int n = rank_dist(rng);
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) rows[i][j] = rows[j][i] = entry_dist(rng);
    return GramMatrix(rows);
}

}  // namespace

TEST_CASE("gram matrix construction validates shape") {
    CHECK_THROWS_AS(from_rows({{Int(0), Int(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(from_rows({{Int(0), Int(1)}, {Int(2), Int(0)}}), std::invalid_argument);
    CHECK(GramMatrix::empty().rank() == 0);
    CHECK(GramMatrix::empty().is_empty());
    const GramMatrix d = GramMatrix::diagonal({Int(3), Int(-5)});
    CHECK(d.at(0, 0) == 3);
    CHECK(d.at(1, 1) == -5);
    CHECK(d.at(0, 1) == 0);
}

TEST_CASE("chain builds a path graph") {
    const GramMatrix c = GramMatrix::chain({Int(-2), Int(-2), Int(-2)});
    CHECK(c == nodal::ade_gram("A3"));
    CHECK(c.at(0, 1) == 1);
    CHECK(c.at(0, 2) == 0);
}

TEST_CASE("determinant of known lattices") {
    CHECK(determinant(GramMatrix::empty()) == 1);
    CHECK(determinant(GramMatrix::diagonal({Int(-2)})) == -2);
    // Hyperbolic plane.
    CHECK(determinant(from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}})) == -1);

    // Root lattice discriminants: |det A_n| = n + 1, |det D_n| = 4,
    // |det E_6| = 3, |det E_7| = 2, |det E_8| = 1; all negative definite of
    // rank n, so the sign is (-1)^n.
    for (int n = 1; n <= 8; ++n) {
        const Int det = determinant(nodal::ade_gram("A" + std::to_string(n)));
        CHECK(det == (n % 2 == 0 ? Int(n + 1) : Int(-(n + 1))));
    }
    for (int n = 4; n <= 8; ++n)
        CHECK(abs(determinant(nodal::ade_gram("D" + std::to_string(n)))) == 4);
    CHECK(determinant(nodal::ade_gram("E6")) == 3);
    CHECK(determinant(nodal::ade_gram("E7")) == -2);
    CHECK(determinant(nodal::ade_gram("E8")) == 1);
}

TEST_CASE("determinant agrees with the cofactor oracle on random matrices") {
    std::mt19937_64 rng(20240311);
    for (int trial = 0; trial < 200; ++trial) {
        const GramMatrix g = random_symmetric(rng, 6, 20);
        CHECK(determinant(g) == oracle::determinant(g));
    }
}

TEST_CASE("signature of definite and indefinite forms") {
    CHECK(signature(GramMatrix::empty()) == Signature{0, 0, 0});
    CHECK(signature(GramMatrix::diagonal({Int(1), Int(-1), Int(0)})) == Signature{1, 1, 1});
    CHECK(signature(from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}})) == Signature{1, 1, 0});
    CHECK(signature(nodal::ade_gram("E8")) == Signature{0, 8, 0});
    // Affine A_1: semi-definite with a radical vector.
    CHECK(signature(from_rows({{Int(-2), Int(2)}, {Int(2), Int(-2)}})) == Signature{0, 1, 1});
    CHECK(signature(from_rows({{Int(0), Int(0)}, {Int(0), Int(0)}})) == Signature{0, 0, 2});
}

TEST_CASE("signature agrees with the characteristic polynomial oracle") {
    std::mt19937_64 rng(77001);
    for (int trial = 0; trial < 200; ++trial) {
        const GramMatrix g = random_symmetric(rng, 6, 20);
        const Signature s = signature(g);
        CHECK(s == oracle::signature(g));
        CHECK(s.positive + s.negative + s.zero == g.rank());
    }
}

TEST_CASE("negative definiteness") {
    CHECK(is_negative_definite(nodal::ade_gram("D5")));
    CHECK(is_negative_definite(GramMatrix::chain({Int(-3), Int(-2)})));
    CHECK_FALSE(is_negative_definite(GramMatrix::diagonal({Int(-2), Int(0)})));
    CHECK_FALSE(is_negative_definite(from_rows({{Int(-2), Int(2)}, {Int(2), Int(-2)}})));
    CHECK(is_negative_definite(GramMatrix::empty()));
}

TEST_CASE("smith normal form of known lattices") {
    auto divisors = [](const GramMatrix& g) { return smith_normal_form(g).divisors; };
    CHECK(divisors(GramMatrix::empty()).empty());
    CHECK(divisors(GramMatrix::diagonal({Int(2), Int(4)})) == std::vector<Int>{2, 4});
    // <2, 4> in the other order still normalizes to 2 | 4.
    CHECK(divisors(GramMatrix::diagonal({Int(4), Int(2)})) == std::vector<Int>{2, 4});
    CHECK(divisors(from_rows({{Int(2), Int(1)}, {Int(1), Int(2)}})) == std::vector<Int>{1, 3});

    // Discriminant groups of the root lattices: A_n -> Z/(n+1), D_4 ->
    // (Z/2)^2, E_7 -> Z/2, E_8 -> trivial.
    CHECK(divisors(nodal::ade_gram("A5")) == std::vector<Int>{1, 1, 1, 1, 6});
    CHECK(divisors(nodal::ade_gram("D4")) == std::vector<Int>{1, 1, 2, 2});
    CHECK(divisors(nodal::ade_gram("E7")) == std::vector<Int>{1, 1, 1, 1, 1, 1, 2});
    CHECK(divisors(nodal::ade_gram("E8")) == std::vector<Int>(8, Int(1)));

    // Rank defect shows up as trailing zeros.
    CHECK(divisors(from_rows({{Int(2), Int(2)}, {Int(2), Int(2)}})) == std::vector<Int>{2, 0});
}

TEST_CASE("smith divisors divide in sequence and multiply to the determinant") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        const GramMatrix g = random_symmetric(rng, 6, 20);
        const auto divisors = smith_normal_form(g).divisors;
        REQUIRE(static_cast<int>(divisors.size()) == g.rank());
        Int product = 1;
        bool seen_zero = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            CHECK(divisors[i] >= 0);
            if (divisors[i] == 0) {
                seen_zero = true;
                continue;
            }
            CHECK_FALSE(seen_zero);  // zeros trail
            if (i > 0 && divisors[i - 1] != 0) CHECK(divisors[i] % divisors[i - 1] == 0);
            product *= divisors[i];
        }
        const Int det = determinant(g);
        if (det != 0) CHECK(product == abs(det));
    }
}

TEST_CASE("direct sums multiply determinants and add signatures") {
    const GramMatrix a = nodal::ade_gram("A2");
    const GramMatrix b = GramMatrix::diagonal({Int(9)});
    const GramMatrix s = direct_sum(a, b);
    CHECK(s.rank() == 3);
    CHECK(s.at(0, 2) == 0);
    CHECK(determinant(s) == determinant(a) * determinant(b));
    const Signature sig = signature(s);
    CHECK(sig == Signature{1, 2, 0});
    CHECK(direct_sum(GramMatrix::empty(), a) == a);
}

TEST_CASE("square discriminant test") {
    // <9 - k> + A1^k for k = 0..6: |det| = (9 - k) 2^k, a square only for
    // k = 0 and k = 1.
    const std::vector<Int> expected = {9, 16, 28, 48, 80, 128, 192};
    for (int k = 0; k <= 6; ++k) {
        GramMatrix g = GramMatrix::diagonal({Int(9 - k)});
        for (int i = 0; i < k; ++i) g = direct_sum(g, nodal::ade_gram("A1"));
        CHECK(abs(determinant(g)) == expected[static_cast<std::size_t>(k)]);
        CHECK(nodal::square_discriminant_test(g) == (k <= 1));
    }
    CHECK_THROWS_AS(nodal::square_discriminant_test(GramMatrix::diagonal({Int(0)})),
                    std::domain_error);
}

TEST_CASE("ade label parsing") {
    CHECK(nodal::ade_gram("A1") == GramMatrix::diagonal({Int(-2)}));
    CHECK(nodal::ade_gram("D4").rank() == 4);
    // D4 has a degree-3 central vertex.
    const GramMatrix d4 = nodal::ade_gram("D4");
    int degree = 0;
    for (int j = 0; j < 4; ++j)
        if (d4.at(1, j) == 1) ++degree;
    CHECK(degree == 3);
    for (const std::string bad : {"", "A", "A0", "D3", "E5", "E9", "F4", "Ax", "A2b", "A-1"})
        CHECK_THROWS_AS(nodal::ade_gram(bad), std::invalid_argument);
}

TEST_CASE("perfect square predicate") {
    CHECK(nodal::is_perfect_square(Int(0)));
    CHECK(nodal::is_perfect_square(Int(1)));
    CHECK(nodal::is_perfect_square(Int(144)));
    CHECK_FALSE(nodal::is_perfect_square(Int(2)));
    CHECK_FALSE(nodal::is_perfect_square(Int(-4)));
    CHECK(nodal::is_perfect_square(Int("1000000000000000000000000")));  // (10^12)^2
}
