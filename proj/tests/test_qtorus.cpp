#include <random>

#include "doctest.h"
#include "skq/qtorus.hpp"

using namespace skq;

namespace {

LatticePtr two(int w) { return make_lattice({"1", "2"}, {{0, w}, {-w, 0}}, 1); }

TorusElement random_elt(LatticePtr L, std::mt19937& g) {
    std::uniform_int_distribution<int> d(-2, 2);
    TorusElement x(L);
    for (int t = 0; t < 3; ++t) {
        Vec v(L->rank());
        for (auto& c : v) c = d(g);
        x.add(v, QScalar::mono(d(g), d(g) == 0 ? 1 : d(g)));
    }
    return x;
}

// coefficient list of a polynomial in a central x, used as an independent oracle
std::vector<long long> pmul(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}
std::vector<long long> padd(std::vector<long long> a, const std::vector<long long>& b, long long s = 1) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
    QScalar q = QScalar::q(1), qi = QScalar::q(-1);
    CHECK(q * qi == QScalar(1));
    CHECK((q + qi) * (q + qi) == QScalar::q(2) + QScalar(2) + QScalar::q(-2));
    CHECK((q - q).zero());
    CHECK(QScalar::mono(1).scale_exp(-4) == QScalar::q(-2));
    QScalar s = QScalar::mono(-3, 5) + QScalar::mono(4, -2);
    CHECK(QScalar::from_json(s.to_json()) == s);
    CHECK(s.to_json().dump() == "[[-3,5],[4,-2]]");
}

TEST_CASE("torus product examples") {
    auto L = two(1);
    auto b1 = TorusElement::mono(L, {1, 0}), b2 = TorusElement::mono(L, {0, 1});
    CHECK(b1 * b2 == TorusElement::mono(L, {1, 1}, QScalar::mono(1)));
    auto x = TorusElement::mono(L, {3, -2});
    CHECK(x * TorusElement::mono(L, {-3, 2}) == TorusElement::one(L));
    auto L2 = two(2);
    auto c1 = TorusElement::mono(L2, {1, 0}), c2 = TorusElement::mono(L2, {0, 1});
    auto s = c1 + c2;
    auto want = TorusElement::mono(L2, {2, 0}) + TorusElement::mono(L2, {0, 2}) +
                TorusElement::mono(L2, {1, 1}, QScalar::q(1) + QScalar::q(-1));
    CHECK(s * s == want);
}

TEST_CASE("lattice mismatch is rejected") {
    auto a = TorusElement::mono(two(1), {1, 0});
    auto b = TorusElement::mono(two(2), {1, 0});
    CHECK_THROWS_AS(a * b, InputError);
    CHECK_THROWS_AS(make_lattice({"a", "b"}, {{0, 1}, {1, 0}}, 1), InputError);
}

TEST_CASE("v-read lattice uses factor q^{-w}") {
    auto L = make_lattice({"1", "2"}, {{0, 1}, {-1, 0}}, -2);
    auto p = TorusElement::mono(L, {1, 0}) * TorusElement::mono(L, {0, 1});
    CHECK(p == TorusElement::mono(L, {1, 1}, QScalar::q(-1)));
}

TEST_CASE("weyl product") {
    auto L = make_lattice({"1", "2", "3"}, {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}, 1);
    std::vector<Vec> m{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto w = weyl_product(L, m);
    CHECK(w == TorusElement::mono(L, {1, 1, 1}));
    auto ordered = TorusElement::mono(L, m[0]) * TorusElement::mono(L, m[1]) * TorusElement::mono(L, m[2]);
    // hand expansion: q^{-1/2} B_{e1+e2} B_{e3}, and w(e1+e2, e3) = 1 - 1 = 0
    CHECK(ordered == QScalar::mono(-1) * w);
    CHECK(w == QScalar::mono(ordered_product_shift(*L, m) * -1) * ordered);
    std::vector<int> perm{0, 1, 2};
    do {
        std::vector<Vec> p;
        for (int i : perm) p.push_back(m[i]);
        CHECK(weyl_product(L, p) == w);
        TorusElement o = TorusElement::one(L);
        for (auto& v : p) o = o * TorusElement::mono(L, v);
        CHECK(QScalar::mono(-ordered_product_shift(*L, p)) * o == w);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("q-commutation and associativity on random elements") {
    std::mt19937 g(7);
    auto L = make_lattice({"a", "b", "c"}, {{0, 2, -1}, {-2, 0, 3}, {1, -3, 0}}, 1);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 50; ++t) {
        Vec l{d(g), d(g), d(g)}, m{d(g), d(g), d(g)};
        auto bl = TorusElement::mono(L, l), bm = TorusElement::mono(L, m);
        CHECK(bl * bm == QScalar::mono(2 * (int)L->pair(l, m)) * (bm * bl));
        auto x = random_elt(L, g), y = random_elt(L, g), z = random_elt(L, g);
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("chebyshev polynomials") {
    CHECK(chebyshev_coeffs(ChebKind::First, 2) == std::vector<long long>{-2, 0, 1});
    CHECK(chebyshev_coeffs(ChebKind::Second, 2) == std::vector<long long>{-1, 0, 1});
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            auto lhs = pmul(chebyshev_coeffs(ChebKind::First, m), chebyshev_coeffs(ChebKind::First, n));
            auto rhs = padd(chebyshev_coeffs(ChebKind::First, m + n), chebyshev_coeffs(ChebKind::First, std::abs(m - n)));
            CHECK(lhs == rhs);
        }
    for (int n = 2; n <= 8; ++n)
        CHECK(chebyshev_coeffs(ChebKind::Second, n) ==
              padd(chebyshev_coeffs(ChebKind::First, n), chebyshev_coeffs(ChebKind::Second, n - 2)));
    auto L = two(1);
    auto x = TorusElement::mono(L, {1, 0}) + TorusElement::mono(L, {-1, 0});
    auto t2 = chebyshev_eval(ChebKind::First, 2, x);
    CHECK(t2 == TorusElement::mono(L, {2, 0}) + TorusElement::mono(L, {-2, 0}));
    CHECK_THROWS_AS(chebyshev_eval(ChebKind::First, -1, x), InputError);
}

TEST_CASE("pointed normalization") {
    auto L = two(1);
    Vec m{2, -1};
    auto r = pointed_normalize(TorusElement::mono(L, m, QScalar::q(3)), {0, 1});
    CHECK(r.elt == TorusElement::mono(L, m));
    CHECK(r.lowest == m);
    auto x = TorusElement::mono(L, m) + TorusElement::mono(L, {3, -1}, QScalar::q(1));
    auto r2 = pointed_normalize(QScalar::mono(1) * x, {0});
    CHECK(r2.elt == x);
    CHECK(r2.lowest == m);
    auto bad = TorusElement::mono(L, {1, 0}) + TorusElement::mono(L, {0, 1});
    CHECK_THROWS_AS(pointed_normalize(bad, {0, 1}), NotPointed);
    auto r3 = pointed_normalize_dirs(x, {{1, 0}, {0, 1}});
    CHECK(r3.lowest == m);
    CHECK_THROWS_AS(pointed_normalize_dirs(bad, {{1, 0}, {1, 1}}), NotPointed);
}

TEST_CASE("torus json round trip") {
    auto L = two(3);
    auto x = TorusElement::mono(L, {1, 2}, QScalar::mono(-1, 4)) + TorusElement::mono(L, {0, -1});
    auto y = TorusElement::from_json(x.to_json());
    CHECK(y == x);
    CHECK(y.to_json().dump() == x.to_json().dump());
}
