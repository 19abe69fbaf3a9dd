#pragma once
// Ideal triangulations of marked surfaces: corner structure, exchange and
// compatibility matrices, flips.

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "skq/qtorus.hpp"

namespace skq {

using Matrix = std::vector<std::vector<int>>;

struct FlipNotAllowed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Model { Generic, Disk, Annulus };

// Isotopy class of an ideal arc in the two concrete models.
// Disk: chord between marked points a < b.  Annulus: boundary arc b0/b1
// (a = 0 or 1), or the spanning arc alpha_a from p0 to p1.
struct IdealArc {
    enum Kind { None, Chord, AnnBoundary, AnnSpan } kind = None;
    int a = 0, b = 0;
    bool operator==(const IdealArc& o) const { return kind == o.kind && a == o.a && b == o.b; }
    bool operator<(const IdealArc& o) const {
        return std::tie(kind, a, b) < std::tie(o.kind, o.a, o.b);
    }
    static IdealArc chord(int i, int j) { return {Chord, std::min(i, j), std::max(i, j)}; }
    static IdealArc ann_boundary(int k) { return {AnnBoundary, k, 0}; }
    static IdealArc span(int k) { return {AnnSpan, k, 0}; }
};

struct EdgeEnd {
    int edge = -1, end = 0;
    bool operator==(const EdgeEnd& o) const { return edge == o.edge && end == o.end; }
};

struct Edge {
    std::string id;
    bool boundary = false;
    int point[2] = {-1, -1};  // marked point at each end
    IdealArc arc;
};

// Sides listed counterclockwise. Side i runs from corner i to corner i+1;
// fwd[i] says whether that traversal goes from end 0 to end 1 of the edge.
struct Triangle {
    int side[3];
    bool fwd[3];
    int slot(int edge) const;
    int next(int edge) const { return side[(slot(edge) + 1) % 3]; }
    int prev(int edge) const { return side[(slot(edge) + 2) % 3]; }
};

struct Interval {
    int edge;     // the boundary edge
    int m_plus;   // initial marked point
    int m_minus;  // terminal marked point
};

struct FlipReceipt {
    int kappa = -1;            // edge index, kept by the new edge
    std::string old_id, new_id;
    int t1 = -1, t2 = -1;      // triangle indices, kept
    int a = -1, b = -1, c = -1, d = -1;  // see Triangulation::flip
};

class Triangulation {
public:
    Model model = Model::Generic;
    int n_points = 0;  // disk: number of marked points
    int genus = 0;
    std::vector<int> boundary_counts;
    std::vector<Edge> edges;
    std::vector<Triangle> tris;
    // ends at each marked point, clockwise-most first
    std::vector<std::vector<EdgeEnd>> at_point;
    std::vector<std::string> point_names;

    static Triangulation disk(int n, const std::vector<std::pair<int, int>>& diagonals);
    static Triangulation disk_fan(int n);
    static Triangulation annulus(int m);  // edges b0, b1, a{m}, a{m+1}
    static Triangulation from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    size_t size() const { return edges.size(); }
    int edge_index(const std::string& id) const;
    int edge_of(const IdealArc& a) const;
    std::vector<int> interior_edges() const;
    std::vector<int> boundary_edges() const;
    Interval interval(int boundary_edge) const;
    int tri_of_boundary(int boundary_edge) const;
    // the two triangles containing an interior edge
    std::pair<int, int> tris_of(int edge) const;
    // start/finish end of edge as traversed in triangle t
    EdgeEnd start_end(int t, int edge) const;
    EdgeEnd finish_end(int t, int edge) const;
    int rank_at_point(const EdgeEnd& e) const;
    int point_of(const EdgeEnd& e) const { return edges[e.edge].point[e.end]; }

    Matrix exchange_matrix() const;
    Matrix compatibility_matrix() const;
    Matrix p_matrix() const;
    std::vector<std::string> labels() const;

    std::pair<Triangulation, FlipReceipt> flip(int kappa) const;
    bool same_as(const Triangulation& o) const;
    std::string signature() const;

private:
    void finalize();
};

Matrix mutate_exchange(const Matrix& eps, int k);
bool is_balanced(const Triangulation& t, const Vec& v);
std::vector<Triangulation> all_disk_triangulations(int n);
std::vector<std::pair<int, int>> disk_diagonals(const Triangulation& t);

}  // namespace skq
