#pragma once
// Curves and laminations on the disk and the annulus, their normal words
// relative to a triangulation, and tropical coordinates.

#include <random>

#include "skq/surface.hpp"

namespace skq {

struct OddExponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Intrinsic description of a simple curve with ends on boundary intervals.
// DiskArc: intervals a -> b of D_n (interval i runs from point i to i+1);
//          peripheral when the intervals are adjacent.
// AnnSpan: arc from the interval on the p0 side to the one on the p1 side,
//          class a = index of the spanning ideal arc it shifts to.
// AnnPeripheral: arc around point a.  AnnCore: the core loop.
struct Curve {
    enum Kind { DiskArc, AnnSpan, AnnPeripheral, AnnCore } kind = DiskArc;
    int a = 0, b = 0;
    int n = 0;  // disk size

    static Curve disk_arc(int n, int i, int j) { return {DiskArc, i, j, n}; }
    static Curve disk_peripheral(int n, int p) { return {DiskArc, (p + n - 1) % n, p, n}; }
    static Curve span(int s) { return {AnnSpan, s, 0, 0}; }
    static Curve ann_peripheral(int p) { return {AnnPeripheral, p, 0, 0}; }
    static Curve core() { return {AnnCore, 0, 0, 0}; }

    bool loop() const { return kind == AnnCore; }
    bool peripheral() const;
    int peripheral_point() const;  // -1 if not peripheral
    Curve canonical() const;       // disk arcs with a < b
    bool operator<(const Curve& o) const;
    bool operator==(const Curve& o) const;
    std::string str() const;
};

// Normal word: for an arc, edges = [start boundary edge, crossings..., end
// boundary edge] and tris[i] lies between edges[i] and edges[i+1]; for a loop
// edges is the cyclic crossing sequence and tris[i] lies between edges[i] and
// edges[i+1 mod k].
struct CurveWord {
    bool loop = false;
    std::vector<int> edges;
    std::vector<int> tris;
    bool operator==(const CurveWord& o) const { return loop == o.loop && edges == o.edges && tris == o.tris; }
    size_t crossings() const { return loop ? edges.size() : edges.size() - 2; }
};

CurveWord word_of(const Curve& c, const Triangulation& t);
// remove backtracks; throws InputError for trivial curves
CurveWord reduce_word(const CurveWord& w, const Triangulation& t);
bool is_reduced(const CurveWord& w);
void validate_word(const CurveWord& w, const Triangulation& t);
// intersection count of the curve with each edge (arc endpoints count on boundary edges)
Vec intersection_vector(const CurveWord& w, size_t n_edges);
// the same word in flip(t) as recorded in the receipt
CurveWord flip_transport_curve(const CurveWord& w, const Triangulation& t, const Triangulation& flipped,
                               const FlipReceipt& rc);

struct Lamination {
    Model model = Model::Disk;
    int n = 0;
    std::vector<std::pair<Curve, int>> comps;

    bool compatible() const;
    Lamination canonical() const;  // merge parallel components, drop zero weights
    nlohmann::json to_json(const Triangulation& t) const;
    static Lamination from_json(const nlohmann::json& j, const Triangulation& t);
};

// Lamination without peripheral components plus one integer per boundary
// interval (pinning), indexed by boundary edge order of the triangulation.
struct PLamination {
    Lamination arcs;
    std::vector<int> pinning;
};

// twice the a-coordinates (so they stay integral)
Vec a_coords2(const Lamination& L, const Triangulation& t);
bool is_congruent(const Lamination& L, const Triangulation& t);
Vec a_coords(const Lamination& L, const Triangulation& t);  // OddExponent if not congruent
Vec shear_coords(const PLamination& L, const Triangulation& t);
// same computations starting from words (used with transported words)
Vec shear_from_words(const std::vector<std::pair<CurveWord, int>>& ws, const std::vector<int>& pinning,
                     const Triangulation& t);
PLamination tropical_ensemble(const Lamination& L, const Triangulation& t);

Vec tropical_mutate_x(const Vec& x, int k, const Matrix& eps);
Vec tropical_mutate_a(const Vec& a, int k, const Matrix& eps);

IdealArc m_shift(const Curve& c);
bool ann_span_compatible(int s1, int s2);

Lamination random_lamination(Model model, int n, std::mt19937_64& rng);
Lamination random_congruent_lamination(Model model, int n, std::mt19937_64& rng, const Triangulation& t);
PLamination random_plamination(Model model, int n, std::mt19937_64& rng);

}  // namespace skq
