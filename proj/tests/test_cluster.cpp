#include "doctest.h"
#include "skq/cluster.hpp"

using namespace skq;

namespace {

std::vector<Triangulation> sample_triangulations(int max_n) {
    std::vector<Triangulation> r;
    for (int n = 3; n <= max_n; ++n)
        for (auto& T : all_disk_triangulations(n)) r.push_back(T);
    for (int m = -2; m <= 2; ++m) r.push_back(Triangulation::annulus(m));
    return r;
}

}  // namespace

TEST_CASE("ensemble map is an algebra map on generators") {
    for (auto& T : sample_triangulations(6)) {
        auto X = x_lattice(T);
        size_t n = T.size();
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                auto xa = TorusElement::mono(X, unit(n, a)), xb = TorusElement::mono(X, unit(n, b));
                CHECK(ensemble_q(xa * xb, T) == ensemble_q(xa, T) * ensemble_q(xb, T));
            }
    }
}

TEST_CASE("ensemble images of generators") {
    auto T = Triangulation::disk(4, {{0, 2}});
    int k = T.interior_edges()[0];
    auto Y = ensemble_q(TorusElement::mono(x_lattice(T), unit(T.size(), k)), T);
    REQUIRE(Y.terms().size() == 1);
    Vec v = Y.terms().begin()->first;
    // two opposite sides up, two down, none on the diagonal
    CHECK(v[k] == 0);
    int ups = 0, downs = 0;
    for (int b : T.boundary_edges()) (v[b] == 1 ? ups : v[b] == -1 ? downs : ups) += 1;
    CHECK(ups == 2);
    CHECK(downs == 2);
    CHECK(v[0] == v[2]);
    // boundary edge in a triangle: A_next / (A_self A_prev)
    auto T3 = Triangulation::disk(3, {});
    auto B = ensemble_q(TorusElement::mono(x_lattice(T3), unit(3, 0)), T3);
    CHECK(B == TorusElement::mono(a_lattice(T3), {-1, 1, -1}));
}

TEST_CASE("balanced ensemble map") {
    auto T = Triangulation::disk(3, {});
    auto Z = z_lattice(T);
    CHECK(ensemble_balanced(TorusElement::mono(Z, {0, 1, 1}), T) == TorusElement::mono(a_lattice(T), {0, 1, 0}));
    CHECK(ensemble_balanced(TorusElement::one(Z), T) == TorusElement::one(a_lattice(T)));
    CHECK_THROWS_AS(ensemble_balanced(TorusElement::mono(Z, {1, 0, 0}), T), NotBalanced);
    std::mt19937_64 rng(3);
    auto T5 = Triangulation::disk_fan(5);
    auto Z5 = z_lattice(T5);
    for (int rep = 0; rep < 50; ++rep) {
        Vec v(T5.size());
        for (auto& x : v) x = int(rng() % 7) - 3;
        auto e = TorusElement::mono(Z5, v);
        if (is_balanced(T5, v))
            CHECK_NOTHROW(ensemble_balanced(e, T5));
        else
            CHECK_THROWS_AS(ensemble_balanced(e, T5), NotBalanced);
    }
    // products of balanced monomials go to products
    for (int rep = 0; rep < 30; ++rep) {
        Vec a(T5.size()), b(T5.size());
        do
            for (auto& x : a) x = int(rng() % 7) - 3;
        while (!is_balanced(T5, a));
        do
            for (auto& x : b) x = int(rng() % 7) - 3;
        while (!is_balanced(T5, b));
        auto za = TorusElement::mono(Z5, a), zb = TorusElement::mono(Z5, b);
        CHECK(ensemble_balanced(za * zb, T5) == ensemble_balanced(za, T5) * ensemble_balanced(zb, T5));
    }
}

TEST_CASE("quantum exchange relation") {
    for (auto& T : sample_triangulations(6)) {
        auto A = a_lattice(T);
        for (int k : T.interior_edges()) {
            auto E = quantum_exchange(T, k);
            REQUIRE(E.terms().size() == 2);
            for (auto& [v, c] : E.terms()) {
                CHECK(v[k] == -1);
                CHECK(c == QScalar(1));
            }
            // adjoint form: M (1 + v p*X_k)
            auto Y = ensemble_q(TorusElement::mono(x_lattice(T), unit(T.size(), k)), T);
            auto M = TorusElement::mono(A, exchange_base(T, k));
            CHECK(M * (TorusElement::one(A) + QScalar::mono(-4) * Y) == E);
            // pairing of f_b against p*X_k is -4 delta
            Vec y = Y.terms().begin()->first;
            for (size_t b = 0; b < T.size(); ++b) CHECK(A->pair(unit(T.size(), b), y) == ((int)b == k ? -4 : 0));
        }
    }
}

TEST_CASE("A-transport examples") {
    auto T = Triangulation::disk(4, {{0, 2}});
    int k = T.interior_edges()[0];
    auto [N, rc] = T.flip(k);
    auto AN = a_lattice(N);
    auto A = a_lattice(T);
    auto E = quantum_exchange(T, k);
    CHECK(transport_A(TorusElement::mono(AN, unit(5, k)), T, rc).equals(E));
    auto sq = transport_A(TorusElement::mono(AN, vscale(unit(5, k), 2)), T, rc);
    CHECK(sq.equals(E * E));
    CHECK(sq.num.terms().size() == 3);
    int b = T.boundary_edges()[0];
    CHECK(transport_A(TorusElement::mono(AN, unit(5, b)), T, rc).equals(TorusElement::mono(A, unit(5, b))));
    // A_k'^-1 times the exchange sum is 1
    auto inv = transport_A(TorusElement::mono(AN, vscale(unit(5, k), -1)), T, rc);
    RationalX prod = inv;
    prod.num = E * inv.num;  // E commutes with functions of itself, denominators included
    CHECK(prod.equals(TorusElement::one(A)));
}

TEST_CASE("ensemble map commutes with flips") {
    std::vector<Triangulation> ts;
    for (int n = 4; n <= 5; ++n)
        for (auto& T : all_disk_triangulations(n)) ts.push_back(T);
    for (int m = -1; m <= 1; ++m) ts.push_back(Triangulation::annulus(m));
    for (auto& T : ts) {
        size_t n = T.size();
        for (int k : T.interior_edges()) {
            auto [N, rc] = T.flip(k);
            auto XN = x_lattice(N);
            std::vector<Vec> gens;
            for (size_t a = 0; a < n; ++a) {
                gens.push_back(unit(n, a));
                gens.push_back(vscale(unit(n, a), -1));
                for (size_t b = a + 1; b < n; ++b) gens.push_back(vadd(unit(n, a), unit(n, b)));
            }
            for (auto& g : gens) {
                auto x = TorusElement::mono(XN, g);
                auto lhs = transport_A(ensemble_q(x, N), T, rc);
                auto rhs = ensemble_rational(transport_X(x, T, rc, x_lattice(T)), T);
                CHECK(lhs.equals(rhs));
            }
        }
    }
}
