#include "doctest.h"
#include "skq/lamination.hpp"

using namespace skq;

namespace {

std::vector<Curve> disk_curves(int n) {
    std::vector<Curve> r;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) r.push_back(Curve::disk_arc(n, i, j));
    return r;
}

std::vector<Curve> annulus_curves() {
    std::vector<Curve> r{Curve::core(), Curve::ann_peripheral(0), Curve::ann_peripheral(1)};
    for (int s = -4; s <= 4; ++s) r.push_back(Curve::span(s));
    return r;
}

// crossings of the arc between intervals i, j with chord (a, b), from interleaving
int chord_crossing(int i, int j, int a, int b, int n) {
    if (b == a + 1 || (a == 0 && b == n - 1)) {
        int e = b == a + 1 ? a : n - 1;
        return (i == e) + (j == e);
    }
    auto in = [&](int x) { return a <= x && x < b; };
    return in(i) != in(j);
}

Matrix mmul(const Matrix& a, const Vec& v) {
    Matrix r(a.size(), std::vector<int>(1, 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i][0] += a[i][j] * v[j];
    return r;
}

}  // namespace

TEST_CASE("disk words match interleaving counts") {
    for (int n = 3; n <= 6; ++n)
        for (auto& T : all_disk_triangulations(n))
            for (auto& c : disk_curves(n)) {
                auto w = word_of(c, T);
                CHECK(is_reduced(w));
                Vec v = intersection_vector(w, T.size());
                for (size_t e = 0; e < T.size(); ++e)
                    CHECK(v[e] == chord_crossing(c.a, c.b, T.edges[e].arc.a, T.edges[e].arc.b, n));
            }
}

TEST_CASE("annulus intersection numbers") {
    for (int m = -3; m <= 3; ++m) {
        auto T = Triangulation::annulus(m);
        for (int s = -4; s <= 4; ++s) {
            Vec v = intersection_vector(word_of(Curve::span(s), T), T.size());
            for (int e : T.interior_edges()) {
                int k = T.edges[e].arc.a;
                CHECK(v[e] == std::abs(s - 1 - k));
            }
            CHECK(v[T.edge_index("b0")] == 1);
            CHECK(v[T.edge_index("b1")] == 1);
        }
        Vec z = intersection_vector(word_of(Curve::core(), T), T.size());
        CHECK(z == Vec{0, 0, 1, 1});
        Vec p0 = intersection_vector(word_of(Curve::ann_peripheral(0), T), T.size());
        CHECK(p0 == Vec{2, 0, 1, 1});
    }
}

TEST_CASE("flip transport agrees with recomputed words") {
    std::vector<Triangulation> ts;
    for (int n = 4; n <= 6; ++n)
        for (auto& T : all_disk_triangulations(n)) ts.push_back(T);
    for (int m = -3; m <= 3; ++m) ts.push_back(Triangulation::annulus(m));
    for (auto& T : ts) {
        auto curves = T.model == Model::Disk ? disk_curves(T.n_points) : annulus_curves();
        for (int k : T.interior_edges()) {
            auto [N, rc] = T.flip(k);
            for (auto& c : curves) {
                auto w = flip_transport_curve(word_of(c, T), T, N, rc);
                CHECK(w == word_of(c, N));
            }
        }
    }
}

TEST_CASE("m-shift") {
    CHECK(m_shift(Curve::disk_arc(5, 0, 2)) == IdealArc::chord(0, 2));
    CHECK(m_shift(Curve::disk_peripheral(5, 3)) == IdealArc::chord(2, 3));
    CHECK(m_shift(Curve::span(2)) == IdealArc::span(2));
    CHECK(m_shift(Curve::ann_peripheral(1)) == IdealArc::ann_boundary(1));
}

TEST_CASE("tropical coordinates follow the mutation formulas") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 40; ++rep) {
        for (int which = 0; which < 2; ++which) {
            Model model = which ? Model::Annulus : Model::Disk;
            Triangulation T = which ? Triangulation::annulus((int)(rng() % 5) - 2) : all_disk_triangulations(5)[rng() % 5];
            Lamination L = random_lamination(model, 5, rng);
            REQUIRE(L.compatible());
            PLamination P = random_plamination(model, 5, rng);
            Vec a = a_coords2(L, T), x = shear_coords(P, T);
            Matrix eps = T.exchange_matrix();
            for (int k : T.interior_edges()) {
                auto [N, rc] = T.flip(k);
                std::vector<std::pair<CurveWord, int>> ws;
                Vec a2(T.size(), 0);
                for (auto& [c, w] : P.arcs.comps) ws.push_back({flip_transport_curve(word_of(c, T), T, N, rc), w});
                for (auto& [c, w] : L.comps) {
                    Vec v = intersection_vector(flip_transport_curve(word_of(c, T), T, N, rc), T.size());
                    for (size_t i = 0; i < v.size(); ++i) a2[i] += w * v[i];
                }
                CHECK(shear_from_words(ws, P.pinning, N) == tropical_mutate_x(x, k, eps));
                CHECK(a2 == tropical_mutate_a(a, k, eps));
            }
        }
    }
}

TEST_CASE("shear coordinates of the ensemble image") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 30; ++rep) {
        for (int which = 0; which < 2; ++which) {
            Model model = which ? Model::Annulus : Model::Disk;
            Triangulation T = which ? Triangulation::annulus((int)(rng() % 5) - 2) : all_disk_triangulations(5)[rng() % 5];
            Lamination L = random_lamination(model, 5, rng);
            Vec a2 = a_coords2(L, T);
            Vec x = shear_coords(tropical_ensemble(L, T), T);
            Matrix q = T.exchange_matrix();
            for (int b : T.boundary_edges()) q[b][b] += 1;
            auto r = mmul(q, a2);
            for (size_t i = 0; i < x.size(); ++i) CHECK(2 * x[i] == r[i][0]);
        }
    }
}

TEST_CASE("lamination json round trip and errors") {
    auto T = Triangulation::disk_fan(5);
    Lamination L;
    L.model = Model::Disk;
    L.n = 5;
    L.comps = {{Curve::disk_arc(5, 0, 2), 2}, {Curve::disk_peripheral(5, 3), -1}};
    auto j = L.to_json(T);
    auto M = Lamination::from_json(j, T);
    CHECK(M.canonical().comps.size() == 2);
    CHECK(a_coords2(M, T) == a_coords2(L, T));
    Lamination bad = L;
    bad.comps.push_back({Curve::disk_arc(5, 1, 3), 1});
    CHECK(!bad.compatible());
    CHECK_THROWS_AS(Lamination::from_json(bad.to_json(T), T), InputError);
    Lamination odd = L;
    odd.comps[0].second = 1;
    CHECK_THROWS_AS(a_coords(odd, T), OddExponent);
}
