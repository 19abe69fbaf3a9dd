#include "doctest.h"
#include "skq/surface.hpp"

using namespace skq;

namespace {

Matrix mul(const Matrix& a, const Matrix& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    Matrix r(n, std::vector<int>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < k; ++l) r[i][j] += a[i][l] * b[l][j];
    return r;
}
Matrix transpose(const Matrix& a) {
    Matrix r(a[0].size(), std::vector<int>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

void check_matrices(const Triangulation& T) {
    Matrix eps = T.exchange_matrix(), pi = T.compatibility_matrix(), p = T.p_matrix();
    Matrix lhs = mul(mul(p, pi), transpose(p));
    for (size_t i = 0; i < eps.size(); ++i)
        for (size_t j = 0; j < eps.size(); ++j) CHECK(lhs[i][j] == -4 * eps[i][j]);
    Matrix ep = mul(eps, pi);
    for (int a : T.interior_edges())
        for (size_t b = 0; b < eps.size(); ++b) CHECK(ep[a][b] == ((int)b == a ? 4 : 0));
}

}  // namespace

TEST_CASE("triangle exchange matrix") {
    auto T = Triangulation::disk(3, {});
    auto e = T.exchange_matrix();
    // sides b0, b1, b2 are counterclockwise
    CHECK(e[0][1] == 1);
    CHECK(e[1][2] == 1);
    CHECK(e[2][0] == 1);
    auto I = T.interval(0);
    CHECK(I.m_plus == 0);
    CHECK(I.m_minus == 1);
    // at p0 the boundary edge towards p1 is clockwise-most
    CHECK(T.at_point[0].front().edge == 0);
    CHECK(T.at_point[0].back().edge == 2);
}

TEST_CASE("catalan counts") {
    CHECK(all_disk_triangulations(4).size() == 2);
    CHECK(all_disk_triangulations(5).size() == 5);
    CHECK(all_disk_triangulations(6).size() == 14);
    CHECK(all_disk_triangulations(7).size() == 42);
}

TEST_CASE("flip mutates the exchange matrix") {
    for (int n = 4; n <= 7; ++n)
        for (auto& T : all_disk_triangulations(n)) {
            check_matrices(T);
            for (int k : T.interior_edges()) {
                auto [N, rc] = T.flip(k);
                CHECK(N.exchange_matrix() == mutate_exchange(T.exchange_matrix(), k));
                auto [B, rc2] = N.flip(k);
                CHECK(B.same_as(T));
                CHECK(B.exchange_matrix() == T.exchange_matrix());
            }
        }
}

TEST_CASE("annulus triangulations") {
    for (int m = -3; m <= 3; ++m) {
        auto T = Triangulation::annulus(m);
        check_matrices(T);
        for (int k : T.interior_edges()) {
            auto [N, rc] = T.flip(k);
            CHECK(N.exchange_matrix() == mutate_exchange(T.exchange_matrix(), k));
            int lo = std::min(N.edges[2].arc.a, N.edges[3].arc.a);
            CHECK(N.same_as(Triangulation::annulus(lo)));
        }
        auto I0 = T.interval(0), I1 = T.interval(1);
        CHECK(I0.m_plus == 0);
        CHECK(I1.m_plus == 1);
    }
}

TEST_CASE("json loader") {
    auto T = Triangulation::disk_fan(5);
    auto j = T.to_json();
    auto U = Triangulation::from_json(j);
    CHECK(U.same_as(T));
    j.erase("model");
    auto G = Triangulation::from_json(j);
    CHECK(G.exchange_matrix() == T.exchange_matrix());
    CHECK(G.compatibility_matrix() == T.compatibility_matrix());
    check_matrices(G);
    auto [F, rc] = G.flip(G.interior_edges()[0]);
    CHECK(F.exchange_matrix() == mutate_exchange(G.exchange_matrix(), G.interior_edges()[0]));
    CHECK(rc.new_id == rc.old_id + "'");
    auto bad = j;
    bad["edges"][0]["kind"] = "interior";
    CHECK_THROWS_AS(Triangulation::from_json(bad), InputError);
    CHECK_THROWS_AS(T.flip(0), FlipNotAllowed);
}

TEST_CASE("balanced vectors") {
    auto T = Triangulation::disk(3, {});
    CHECK(is_balanced(T, {1, 1, 0}));
    CHECK(!is_balanced(T, {1, 0, 0}));
}
