#include "doctest.h"
#include <numeric>

#include "skq/duality.hpp"

using namespace skq;

namespace {

std::vector<Triangulation> engine_triangulations(int max_n) {
    std::vector<Triangulation> r;
    for (int n = 3; n <= max_n; ++n)
        for (auto& T : all_disk_triangulations(n)) r.push_back(T);
    for (int m = -2; m <= 2; ++m) r.push_back(Triangulation::annulus(m));
    return r;
}

}  // namespace

TEST_CASE("elementary laminations lift to single edges") {
    for (auto& T : engine_triangulations(6)) {
        SkeinEngine eng(SkSurface::of(T));
        Cutter cut(T, eng);
        for (size_t a = 0; a < T.size(); ++a) {
            auto P = elementary_lamination(T, (int)a);
            CHECK(duality_X(P, cut) == TorusElement::mono(a_lattice(T), unit(T.size(), a)));
            CHECK(shear_coords(P, T) == unit(T.size(), a));
        }
    }
}

TEST_CASE("empty P-lamination with pinning is a boundary monomial") {
    auto T = Triangulation::disk_fan(5);
    PLamination P;
    P.arcs = {Model::Disk, 5, {}};
    P.pinning = {2, -1, 0, 3, -2};
    Vec v(T.size(), 0);
    auto bnd = T.boundary_edges();
    for (size_t i = 0; i < bnd.size(); ++i) v[bnd[i]] = P.pinning[i];
    CHECK(duality_X(P, T) == TorusElement::mono(a_lattice(T), v));
}

TEST_CASE("duality_X is pointed at the shear coordinates") {
    std::mt19937_64 rng(21);
    for (auto [model, n] : {std::pair{Model::Disk, 5}, std::pair{Model::Annulus, 0}}) {
        auto T = model == Model::Disk ? Triangulation::disk_fan(5) : Triangulation::annulus(0);
        SkeinEngine eng(SkSurface::of(T));
        Cutter cut(T, eng);
        for (int rep = 0; rep < 15; ++rep) {
            auto P = random_plamination(model, n, rng);
            auto x = duality_X(P, cut);
            CHECK_MESSAGE(pointed_over_ensemble(x, shear_coords(P, T), T), x.str());
        }
    }
    // not pointed at a wrong exponent
    auto T = Triangulation::disk_fan(4);
    auto x = TorusElement::mono(a_lattice(T), unit(T.size(), 0));
    CHECK_FALSE(pointed_over_ensemble(x, unit(T.size(), 1), T));
}

TEST_CASE("square and trace-cut on small laminations") {
    std::mt19937_64 rng(8);
    for (auto [model, n] : {std::pair{Model::Disk, 4}, std::pair{Model::Disk, 5}, std::pair{Model::Annulus, 0}}) {
        auto T = model == Model::Disk ? Triangulation::disk_fan(n) : Triangulation::annulus(1);
        SkeinEngine eng(SkSurface::of(T));
        Cutter cut(T, eng);
        Lamination empty{model, n, {}};
        CHECK(verify_square(empty, cut).equal);
        CHECK(verify_square(empty, cut).lhs == TorusElement::one(a_lattice(T)));
        for (int rep = 0; rep < 10; ++rep) {
            auto L = random_congruent_lamination(model, n, rng, T);
            auto r = verify_square(L, cut);
            CHECK_MESSAGE(r.equal, r.to_json().dump());
            auto s = verify_trace_cut(stated_lift(random_lamination(model, n, rng)), cut);
            CHECK_MESSAGE(s.equal, s.to_json().dump());
        }
    }
}

TEST_CASE("corner arcs of a triangle") {
    auto T = Triangulation::disk(3, {});
    SkeinEngine eng(SkSurface::of(T));
    Cutter cut(T, eng);
    for (int p = 0; p < 3; ++p)
        for (int s : {1, -1}) {
            StatedElement b{Model::Disk, 3, {{Curve::disk_peripheral(3, p), 1, {s, s}}}};
            auto r = verify_trace_cut(b, cut);
            CHECK(r.equal);
            REQUIRE(r.lhs.terms().size() == 1);
            Vec v = r.lhs.terms().begin()->first;
            int nz = 0;
            for (int x : v) nz += x != 0;
            CHECK(nz == 1);
            CHECK(std::accumulate(v.begin(), v.end(), 0) == -s);
        }
}

TEST_CASE("state admissibility") {
    StatedElement mixed{Model::Disk, 4, {{Curve::disk_peripheral(4, 1), 1, {1, -1}}}};
    CHECK_THROWS_AS(phi_state_clasp(mixed), InputError);
    StatedElement plus{Model::Disk, 4, {{Curve::disk_arc(4, 0, 2), 1, {1, 1}}}};
    CHECK_THROWS_AS(phi_state_clasp(plus), InputError);
    StatedElement zero{Model::Disk, 4, {{Curve::disk_arc(4, 0, 2), 0, {-1, -1}}}};
    CHECK_THROWS_AS(check_admissible(zero), InputError);
}

TEST_CASE("monomial image in a triangulation containing the arcs") {
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 10; ++rep) {
        auto L = random_congruent_lamination(Model::Disk, 5, rng, Triangulation::disk_fan(5));
        auto T = containing_triangulation(L);
        if (!is_congruent(L, T)) continue;
        auto r = containing_monomial_check(L);
        CHECK_MESSAGE(r.equal, r.to_json().dump());
    }
    Lamination two{Model::Disk, 5, {{Curve::disk_arc(5, 1, 3), 2}}};
    auto r = containing_monomial_check(two);
    CHECK(r.equal);
    int e = containing_triangulation(two).edge_of(IdealArc::chord(1, 3));
    CHECK(r.rhs == TorusElement::mono(r.rhs.lattice(), vscale(unit(7, e), 2)));
}

TEST_CASE("a-coordinates invert on disks") {
    std::mt19937_64 rng(12);
    auto T = Triangulation::disk_fan(5);
    for (int rep = 0; rep < 30; ++rep) {
        auto L = random_congruent_lamination(Model::Disk, 5, rng, T);
        Vec a = a_coords(L, T);
        auto back = lamination_from_a(T, a);
        REQUIRE(back);
        CHECK(a_coords(*back, T) == a);
    }
}

TEST_CASE("spanning check at small bound") {
    auto rep = spanning_check(Triangulation::disk_fan(4), 1);
    CHECK(rep.elements == 243);
    CHECK_MESSAGE(rep.ok(), rep.witness);
}
