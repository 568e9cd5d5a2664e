#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "skewsign/cycle_symmetry.hpp"
#include "skewsign/signing.hpp"
#include "skewsign/wdg_io.hpp"
#include "oracles.hpp"

using namespace skewsign;

namespace {

WeightedDigraph make_triangle(const Rational& w31) {
    return WeightedDigraph(3, {{{1, 2}, Rational(1)},
                               {{2, 1}, Rational(2)},
                               {{2, 3}, Rational(1)},
                               {{3, 2}, Rational(2)},
                               {{3, 1}, w31},
                               {{1, 3}, Rational(1)}});
}

std::vector<std::pair<int, int>> complete_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
    return edges;
}

WeightedDigraph random_symmetric(int n, std::mt19937_64& rng) {
    return oracle::random_cycle_symmetric_pwls(complete_edges(n), n, rng);
}

}  // namespace

TEST_CASE("matrix symmetry check on two-by-two pins") {
    RationalMatrix sym(2);
    sym.set(1, 2, Rational(1));
    sym.set(2, 1, Rational(1));
    SymmetryVerdict v = check_matrix_cycle_symmetric(sym);
    CHECK(v.is_cycle_symmetric);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->mu == std::vector<Rational>{Rational(1), Rational(1)});

    RationalMatrix skew(2);
    skew.set(1, 2, Rational(1));
    skew.set(2, 1, Rational(-1));
    SymmetryVerdict s = check_matrix_cycle_symmetric(skew);
    CHECK_FALSE(s.is_cycle_symmetric);
    REQUIRE(s.c1_violation.has_value());
    CHECK(*s.c1_violation == std::pair<int, int>(1, 2));

    RationalMatrix one_sided(2);
    one_sided.set(1, 2, Rational(1));
    SymmetryVerdict o = check_matrix_cycle_symmetric(one_sided);
    CHECK_FALSE(o.is_cycle_symmetric);
    CHECK(o.c1_violation.has_value());

    RationalMatrix loop(1);
    loop.set(1, 1, Rational(1));
    CHECK_THROWS_AS(check_matrix_cycle_symmetric(loop), std::invalid_argument);
}

TEST_CASE("certificate for the reweighted triangle") {
    SymmetryVerdict v = build_scaling_certificate(make_triangle(Rational(4)));
    CHECK(v.is_cycle_symmetric);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->mu ==
          std::vector<Rational>{Rational(1), Rational(2), Rational(4)});
}

TEST_CASE("broken triangle yields a five-versus-four witness") {
    SymmetryVerdict v = build_scaling_certificate(make_triangle(Rational(5)));
    CHECK_FALSE(v.is_cycle_symmetric);
    CHECK_FALSE(v.certificate.has_value());
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->cycle == Cycle({1, 2, 3}));
    CHECK(v.witness->forward == Rational(5));
    CHECK(v.witness->reverse == Rational(4));
    CHECK(v.witness->forward == cycle_weight(make_triangle(Rational(5)), v.witness->cycle));
    CHECK(v.witness->reverse ==
          cycle_weight(make_triangle(Rational(5)), reverse_cycle(v.witness->cycle)));
}

TEST_CASE("forests always admit a certificate") {
    std::mt19937_64 rng(40404);
    std::vector<std::vector<std::pair<int, int>>> forests{
        {{1, 2}},
        {{1, 2}, {2, 3}},
        {{1, 2}, {2, 3}, {2, 4}, {4, 5}},
        {{1, 2}, {3, 4}},  // disconnected
    };
    for (const auto& edges : forests) {
        int n = 0;
        for (auto [u, v] : edges) n = std::max({n, u, v});
        for (int trial = 0; trial < 5; ++trial) {
            WeightedDigraph d = oracle::random_weighted_pwls(edges, n, rng);
            SymmetryVerdict v = build_scaling_certificate(d);
            CHECK(v.is_cycle_symmetric);
            CHECK(v.certificate.has_value());
        }
    }
}

TEST_CASE("a produced certificate scales every arc") {
    std::mt19937_64 rng(50505);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        WeightedDigraph d = random_symmetric(n, rng);
        SymmetryVerdict v = build_scaling_certificate(d);
        REQUIRE(v.is_cycle_symmetric);
        REQUIRE(v.certificate.has_value());
        const auto& mu = v.certificate->mu;
        for (const auto& [arc, w] : d.arcs()) {
            auto [i, j] = arc;
            CHECK(w * mu[static_cast<std::size_t>(j) - 1] ==
                  d.weight(j, i) * mu[static_cast<std::size_t>(i) - 1]);
            CHECK(mu[static_cast<std::size_t>(i) - 1].sign() == 1);
        }
    }
}

TEST_CASE("certificate construction agrees with exhaustive cycle comparison") {
    std::mt19937_64 rng(616161);
    int checked = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const auto& edges : oracle::connected_graphs(n, 8)) {
            if (n >= 4 && rng() % 13) continue;
            WeightedDigraph d = oracle::random_weighted_pwls(edges, n, rng);
            SymmetryVerdict direct = build_scaling_certificate(d);
            SymmetryVerdict brute = cycle_symmetry_up_to(d, n);
            CHECK(direct.is_cycle_symmetric == brute.is_cycle_symmetric);
            CHECK(direct.is_cycle_symmetric ==
                  oracle::reversed_products_equal(to_matrix(d)));
            ++checked;
        }
        // symmetric instances must come out positive through all three routes
        WeightedDigraph s = random_symmetric(n, rng);
        CHECK(build_scaling_certificate(s).is_cycle_symmetric);
        CHECK(cycle_symmetry_up_to(s, n).is_cycle_symmetric);
        CHECK(oracle::reversed_products_equal(to_matrix(s)));
    }
    CHECK(checked >= 20);
}

TEST_CASE("bounded symmetry check honors its bound") {
    // triangle asymmetric only at length 3: q=2 passes, q=3 catches it
    WeightedDigraph bad = make_triangle(Rational(5));
    CHECK(cycle_symmetry_up_to(bad, 2).is_cycle_symmetric);
    SymmetryVerdict at3 = cycle_symmetry_up_to(bad, 3);
    CHECK_FALSE(at3.is_cycle_symmetric);
    REQUIRE(at3.witness.has_value());
    CHECK(at3.witness->cycle == Cycle({1, 2, 3}));
    CHECK_THROWS_AS(cycle_symmetry_up_to(bad, 1), std::invalid_argument);
}

TEST_CASE("bounded check at q=2 accepts every pwls digraph") {
    std::mt19937_64 rng(717171);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto graphs = oracle::connected_graphs(n, 8);
        const auto& edges = graphs[rng() % graphs.size()];
        WeightedDigraph d = oracle::random_weighted_pwls(edges, n, rng);
        CHECK(cycle_symmetry_up_to(d, 2).is_cycle_symmetric);
    }
}

TEST_CASE("complete bounded check carries the certificate") {
    WeightedDigraph good = make_triangle(Rational(4));
    SymmetryVerdict v = cycle_symmetry_up_to(good, 3);
    CHECK(v.is_cycle_symmetric);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->mu ==
          std::vector<Rational>{Rational(1), Rational(2), Rational(4)});
    // below n the verdict cannot be complete, so no certificate is attached
    CHECK_FALSE(cycle_symmetry_up_to(good, 2).certificate.has_value());
}

TEST_CASE("symmetrized weights square to the pairwise products") {
    WeightedDigraph digon(2, {{{1, 2}, Rational(2)}, {{2, 1}, Rational(3)}});
    SymmetrizedWeights sw = symmetrize(digon);
    CHECK(sw.squared.at(1, 2) == Rational(6));
    CHECK(sw.squared.at(2, 1) == Rational(6));
    CHECK(sw.squared.at(1, 1) == Rational(0));
    CHECK(sw.approx(1, 2) == doctest::Approx(std::sqrt(6.0)));

    WeightedDigraph half(2, {{{1, 2}, Rational(1, 2)}, {{2, 1}, Rational(8)}});
    SymmetrizedWeights hw = symmetrize(half);
    CHECK(hw.squared.at(1, 2) == Rational(4));
    CHECK(hw.approx(2, 1) == doctest::Approx(2.0));

    WeightedDigraph unit = from_graph({{1, 2}, {2, 3}}, 3);
    SymmetrizedWeights uw = symmetrize(unit);
    CHECK(uw.squared.at(1, 2) == Rational(1));
    CHECK(uw.squared.at(2, 3) == Rational(1));
    CHECK(uw.squared.at(1, 3) == Rational(0));
}

TEST_CASE("skew symmetrized weights carry antisymmetric signs") {
    WeightedDigraph digon(2, {{{1, 2}, Rational(2)}, {{2, 1}, Rational(3)}});
    RationalMatrix signed_w(2);
    signed_w.set(1, 2, Rational(2));
    signed_w.set(2, 1, Rational(-3));
    SkewSymmetrizedWeights sk = skew_symmetrize(digon, signed_w);
    CHECK(sk.squared.at(1, 2) == Rational(6));
    CHECK(sk.squared.at(2, 1) == Rational(6));
    CHECK(sk.sign(1, 2) == 1);
    CHECK(sk.sign(2, 1) == -1);
    CHECK(sk.sign(1, 1) == 0);
    CHECK(sk.approx(1, 2) == doctest::Approx(std::sqrt(6.0)));
    CHECK(sk.approx(2, 1) == doctest::Approx(-std::sqrt(6.0)));

    // unit weights: the symmetrized matrix is the signing itself
    WeightedDigraph unit = from_graph({{1, 2}}, 2);
    RationalMatrix su = apply_signing(unit, SkewSigning::all_plus(unit));
    SkewSymmetrizedWeights sku = skew_symmetrize(unit, su);
    CHECK(sku.squared.at(1, 2) == Rational(1));
    CHECK(sku.approx(1, 2) == doctest::Approx(1.0));
    CHECK(sku.approx(2, 1) == doctest::Approx(-1.0));
}

TEST_CASE("skew symmetrization signs are antisymmetric on random instances") {
    std::mt19937_64 rng(828282);
    std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}};
    WeightedDigraph d = oracle::random_weighted_pwls(edges, 4, rng);
    for (const SkewSigning& s : SigningRange(d)) {
        SkewSymmetrizedWeights sk = skew_symmetrize(d, apply_signing(d, s));
        for (int u = 1; u <= 4; ++u)
            for (int v = 1; v <= 4; ++v) {
                CHECK(sk.sign(u, v) == -sk.sign(v, u));
                CHECK(sk.squared.at(u, v) == sk.squared.at(v, u));
                if (d.has_arc(u, v)) CHECK(sk.sign(u, v) != 0);
            }
    }
}

TEST_CASE("cycle products square to the product of pairwise products") {
    // on a cycle-symmetric digraph, w(C)^2 = prod over arcs of w(uv)*w(vu)
    WeightedDigraph good = make_triangle(Rational(4));
    Cycle c({1, 2, 3});
    Rational forward = cycle_weight(good, c);
    CHECK(forward == Rational(4));
    Rational squared(1);
    for (auto [u, v] : c.arcs()) squared *= good.weight(u, v) * good.weight(v, u);
    CHECK(forward * forward == squared);
    CHECK(squared == Rational(16));

    std::mt19937_64 rng(939393);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        WeightedDigraph d = random_symmetric(n, rng);
        for (const Cycle& cy : enumerate_cycles(d, n)) {
            Rational f = cycle_weight(d, cy);
            Rational sq(1);
            for (auto [u, v] : cy.arcs()) sq *= d.weight(u, v) * d.weight(v, u);
            CHECK(f * f == sq);
        }
    }
}

TEST_CASE("symmetrize rejects non-pwls input") {
    WeightedDigraph lopsided(2, {{{1, 2}, Rational(1)}});
    CHECK_THROWS_AS(symmetrize(lopsided), std::invalid_argument);
    CHECK_THROWS_AS(build_scaling_certificate(lopsided), std::invalid_argument);
}
