#include <doctest.h>

#include <random>
#include <stdexcept>

#include "skewsign/charpoly.hpp"
#include "oracles.hpp"

using namespace skewsign;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RationalMatrix m(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, Rational(rows[i][j]));
    return m;
}

}  // namespace

TEST_CASE("CharPolynomial accessors and ordering") {
    CharPolynomial p({Rational(0), Rational(-3), Rational(-2)});
    CHECK(p.degree() == 3);
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(2) == Rational(-3));
    CHECK_THROWS_AS(p.coeff(4), std::out_of_range);
    CHECK_THROWS_AS(p.coeff(-1), std::out_of_range);
    CHECK(p.str() == "x^3 - 3*x - 2");
    CHECK(CharPolynomial({Rational(0), Rational(6)}).str() == "x^2 + 6");
    CHECK(CharPolynomial({Rational(1, 2)}).str() == "x + 1/2");
    CHECK(CharPolynomial({}).str() == "1");

    CharPolynomial q({Rational(0), Rational(-3), Rational(-1)});
    CHECK(p != q);
    CHECK(p < q);
    CHECK(CharPolynomial({Rational(5)}) < p);  // lower degree first
}

TEST_CASE("char_poly on pinned matrices") {
    CharPolynomial skew_digon = char_poly(from_rows({{0, 2}, {-3, 0}}));
    CHECK(skew_digon.coeffs() == std::vector<Rational>{Rational(0), Rational(6)});

    CharPolynomial cube = char_poly(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(cube.coeffs() == std::vector<Rational>{Rational(-3), Rational(3), Rational(-1)});

    CharPolynomial triangle = char_poly(from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    CHECK(triangle.coeffs() == std::vector<Rational>{Rational(0), Rational(-3), Rational(-2)});

    CHECK(char_poly(RationalMatrix(0)).degree() == 0);
    CHECK(char_poly(RationalMatrix(2)).coeffs() ==
          std::vector<Rational>{Rational(0), Rational(0)});
}

TEST_CASE("determinant via last coefficient") {
    CHECK(determinant(from_rows({{0, 2}, {3, 0}})) == Rational(-6));
    CHECK(determinant(RationalMatrix::identity(4)) == Rational(1));
    CHECK(determinant(from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) == Rational(2));
    CHECK(determinant(RationalMatrix(0)) == Rational(1));
}

TEST_CASE("char_poly matches the interpolation oracle on random matrices") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        RationalMatrix m = oracle::random_int_matrix(n, rng);
        CHECK(char_poly(m).coeffs() == oracle::interpolated_char_poly(m));
    }
}

TEST_CASE("rational entries are handled exactly") {
    RationalMatrix m(3);
    m.set(1, 2, Rational(1, 2));
    m.set(2, 1, Rational(8));
    m.set(2, 3, Rational(-3, 7));
    m.set(3, 2, Rational(7, 3));
    m.set(1, 3, Rational(5, 11));
    m.set(3, 1, Rational(11, 5));
    CHECK(char_poly(m).coeffs() == oracle::interpolated_char_poly(m));
    CHECK(determinant(m) == oracle::bareiss_determinant(m));
}

TEST_CASE("determinant agrees with fraction-free elimination on random matrices") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        RationalMatrix m = oracle::random_int_matrix(n, rng);
        CHECK(determinant(m) == oracle::bareiss_determinant(m));
    }
}

TEST_CASE("permutation similarity preserves char_poly") {
    std::mt19937_64 rng(998877);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        RationalMatrix m = oracle::random_int_matrix(n, rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        RationalMatrix permuted(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                permuted.set(perm[static_cast<std::size_t>(i) - 1],
                             perm[static_cast<std::size_t>(j) - 1], m.at(i, j));
        CHECK(char_poly(permuted) == char_poly(m));
    }
}

TEST_CASE("block-diagonal char_poly is the product of block polynomials") {
    std::mt19937_64 rng(1234321);
    for (int trial = 0; trial < 25; ++trial) {
        RationalMatrix top = oracle::random_int_matrix(2, rng);
        RationalMatrix bottom = oracle::random_int_matrix(3, rng);
        RationalMatrix block(5);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) block.set(i, j, top.at(i, j));
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) block.set(i + 2, j + 2, bottom.at(i, j));

        // multiply the two monic polynomials in ascending-degree form
        auto ascending = [](const CharPolynomial& p) {
            oracle::Poly out(static_cast<std::size_t>(p.degree()) + 1);
            out[static_cast<std::size_t>(p.degree())] = Rational(1);
            for (int k = 1; k <= p.degree(); ++k)
                out[static_cast<std::size_t>(p.degree() - k)] = p.coeff(k);
            return out;
        };
        oracle::Poly product = oracle::poly_mul(ascending(char_poly(top)), ascending(char_poly(bottom)));
        oracle::Poly whole = ascending(char_poly(block));
        CHECK(product == whole);
    }
}

TEST_CASE("odd coefficients of skew-symmetric matrices vanish") {
    std::mt19937_64 rng(60606);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        RationalMatrix m = oracle::random_skew_matrix(n, rng);
        CharPolynomial p = char_poly(m);
        for (int k = 1; k <= n; k += 2) CHECK(p.coeff(k) == Rational(0));
    }
}
