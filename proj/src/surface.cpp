#include "skq/surface.hpp"

#include <map>
#include <numeric>
#include <set>

namespace skq {

using json = nlohmann::json;

int Triangle::slot(int edge) const {
    for (int i = 0; i < 3; ++i)
        if (side[i] == edge) return i;
    throw std::logic_error("edge not in triangle");
}

namespace {

std::string span_id(int k) { return "a" + std::to_string(k); }
std::string chord_id(int n, int a, int b) {
    if (b == a + 1) return "b" + std::to_string(a);
    if (a == 0 && b == n - 1) return "b" + std::to_string(n - 1);
    return "d" + std::to_string(a) + "_" + std::to_string(b);
}

// first occurrence of an edge runs from end 0 to end 1, the second one back
void assign_directions(std::vector<Triangle>& tris, size_t n_edges) {
    std::vector<int> seen(n_edges, 0);
    for (auto& t : tris)
        for (int i = 0; i < 3; ++i) t.fwd[i] = seen[t.side[i]]++ == 0;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

void Triangulation::finalize() {
    int ne = (int)edges.size();
    std::vector<int> count(ne, 0);
    for (auto& t : tris) {
        for (int i = 0; i < 3; ++i) {
            if (t.side[i] < 0 || t.side[i] >= ne) throw InputError("triangle refers to unknown edge");
            count[t.side[i]]++;
        }
        if (t.side[0] == t.side[1] || t.side[1] == t.side[2] || t.side[0] == t.side[2])
            throw InputError("self-folded triangles are not supported");
    }
    for (int e = 0; e < ne; ++e)
        if (count[e] != (edges[e].boundary ? 1 : 2))
            throw InputError("edge " + edges[e].id + " has the wrong number of adjacent triangles");

    // corners: start end of side i+1 is immediately clockwise of finish end of side i
    auto key = [](const EdgeEnd& x) { return 2 * x.edge + x.end; };
    std::vector<int> ccw_next(2 * ne, -1), has_prev(2 * ne, 0);
    UnionFind uf(2 * ne);
    for (size_t t = 0; t < tris.size(); ++t)
        for (int i = 0; i < 3; ++i) {
            EdgeEnd a = start_end((int)t, tris[t].side[(i + 1) % 3]);
            EdgeEnd b = finish_end((int)t, tris[t].side[i]);
            ccw_next[key(a)] = key(b);
            has_prev[key(b)] = 1;
            uf.unite(key(a), key(b));
        }

    std::map<int, int> cls;
    if (model == Model::Generic) {
        point_names.clear();
        for (int e = 0; e < ne; ++e)
            for (int s = 0; s < 2; ++s) {
                int r = uf.find(2 * e + s);
                if (!cls.count(r)) {
                    cls[r] = (int)cls.size();
                    point_names.push_back("m" + std::to_string(cls[r]));
                }
                edges[e].point[s] = cls[r];
            }
    } else {
        for (int e = 0; e < ne; ++e)
            for (int s = 0; s < 2; ++s) {
                int r = uf.find(2 * e + s);
                auto [it, fresh] = cls.emplace(r, edges[e].point[s]);
                if (!fresh && it->second != edges[e].point[s]) throw std::logic_error("inconsistent model geometry");
            }
    }
    int np = (int)point_names.size();
    at_point.assign(np, {});
    for (int k = 0; k < 2 * ne; ++k) {
        if (has_prev[k]) continue;
        int p = edges[k / 2].point[k % 2];
        if (!at_point[p].empty()) throw InputError("marked point with several corner chains (puncture?)");
        for (int x = k; x != -1; x = ccw_next[x]) at_point[p].push_back({x / 2, x % 2});
    }
    size_t total = 0;
    for (auto& v : at_point) {
        if (v.empty()) throw InputError("interior puncture is not supported");
        total += v.size();
    }
    if ((int)total != 2 * ne) throw InputError("corner structure is not a disjoint union of chains");
}

Triangulation Triangulation::disk(int n, const std::vector<std::pair<int, int>>& diagonals) {
    if (n < 3) throw InputError("disk needs at least 3 marked points");
    Triangulation T;
    T.model = Model::Disk;
    T.n_points = n;
    T.genus = 0;
    T.boundary_counts = {n};
    for (int i = 0; i < n; ++i) T.point_names.push_back("p" + std::to_string(i));
    std::map<std::pair<int, int>, int> idx;
    auto add = [&](int a, int b, bool bd) {
        if (a > b) std::swap(a, b);
        if (idx.count({a, b})) throw InputError("repeated chord");
        Edge e;
        e.id = chord_id(n, a, b);
        e.boundary = bd;
        e.arc = IdealArc::chord(a, b);
        e.point[0] = a;
        e.point[1] = b;
        idx[{a, b}] = (int)T.edges.size();
        T.edges.push_back(e);
    };
    for (int i = 0; i < n; ++i) add(i, (i + 1) % n, true);
    for (auto [a, b] : diagonals) {
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= n || b - a < 2 || (a == 0 && b == n - 1)) throw InputError("not a diagonal");
        add(a, b, false);
    }
    if ((int)diagonals.size() != n - 3) throw InputError("a triangulation of the disk needs n-3 diagonals");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                auto a = idx.find({i, j}), b = idx.find({j, k}), c = idx.find({i, k});
                if (a == idx.end() || b == idx.end() || c == idx.end()) continue;
                Triangle t{{a->second, b->second, c->second}, {true, true, false}};
                T.tris.push_back(t);
            }
    if ((int)T.tris.size() != n - 2) throw InputError("diagonals do not form a triangulation");
    T.finalize();
    return T;
}

Triangulation Triangulation::disk_fan(int n) {
    std::vector<std::pair<int, int>> d;
    for (int j = 2; j < n - 1; ++j) d.push_back({0, j});
    return disk(n, d);
}

Triangulation Triangulation::annulus(int m) {
    Triangulation T;
    T.model = Model::Annulus;
    T.genus = 0;
    T.boundary_counts = {1, 1};
    T.point_names = {"p0", "p1"};
    auto mk = [](std::string id, bool bd, IdealArc arc, int p0, int p1) {
        Edge e;
        e.id = std::move(id);
        e.boundary = bd;
        e.arc = arc;
        e.point[0] = p0;
        e.point[1] = p1;
        return e;
    };
    T.edges = {mk("b0", true, IdealArc::ann_boundary(0), 0, 0), mk("b1", true, IdealArc::ann_boundary(1), 1, 1),
               mk(span_id(m), false, IdealArc::span(m), 0, 1), mk(span_id(m + 1), false, IdealArc::span(m + 1), 0, 1)};
    // strip picture: T1 has corners (0,0), ((m+1)P,1), (mP,1); T2 has (0,0), (P,0), ((m+1)P,1)
    T.tris = {Triangle{{3, 1, 2}, {true, true, false}}, Triangle{{0, 2, 3}, {true, true, false}}};
    T.finalize();
    return T;
}

int Triangulation::edge_index(const std::string& id) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id) return (int)i;
    return -1;
}

int Triangulation::edge_of(const IdealArc& a) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].arc == a) return (int)i;
    return -1;
}

std::vector<int> Triangulation::interior_edges() const {
    std::vector<int> r;
    for (size_t i = 0; i < edges.size(); ++i)
        if (!edges[i].boundary) r.push_back((int)i);
    return r;
}

std::vector<int> Triangulation::boundary_edges() const {
    std::vector<int> r;
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].boundary) r.push_back((int)i);
    return r;
}

int Triangulation::tri_of_boundary(int e) const {
    for (size_t t = 0; t < tris.size(); ++t)
        for (int s : tris[t].side)
            if (s == e) return (int)t;
    throw std::logic_error("edge in no triangle");
}

std::pair<int, int> Triangulation::tris_of(int e) const {
    int a = -1, b = -1;
    for (size_t t = 0; t < tris.size(); ++t)
        for (int s : tris[t].side)
            if (s == e) (a < 0 ? a : b) = (int)t;
    return {a, b};
}

EdgeEnd Triangulation::start_end(int t, int e) const {
    int s = tris[t].slot(e);
    return {e, tris[t].fwd[s] ? 0 : 1};
}

EdgeEnd Triangulation::finish_end(int t, int e) const {
    int s = tris[t].slot(e);
    return {e, tris[t].fwd[s] ? 1 : 0};
}

int Triangulation::rank_at_point(const EdgeEnd& x) const {
    auto& v = at_point[point_of(x)];
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] == x) return (int)i;
    throw std::logic_error("end not found at its point");
}

Interval Triangulation::interval(int e) const {
    if (!edges[e].boundary) throw InputError("not a boundary edge");
    int t = tri_of_boundary(e);
    return {e, point_of(start_end(t, e)), point_of(finish_end(t, e))};
}

Matrix Triangulation::exchange_matrix() const {
    size_t n = edges.size();
    Matrix m(n, std::vector<int>(n, 0));
    for (auto& t : tris)
        for (int i = 0; i < 3; ++i) {
            int x = t.side[i], y = t.side[(i + 1) % 3];
            m[x][y] += 1;
            m[y][x] -= 1;
        }
    return m;
}

Matrix Triangulation::compatibility_matrix() const {
    size_t n = edges.size();
    Matrix m(n, std::vector<int>(n, 0));
    for (auto& chain : at_point)
        for (size_t i = 0; i < chain.size(); ++i)
            for (size_t j = i + 1; j < chain.size(); ++j) {
                m[chain[i].edge][chain[j].edge] += 1;
                m[chain[j].edge][chain[i].edge] -= 1;
            }
    return m;
}

Matrix Triangulation::p_matrix() const {
    Matrix p = exchange_matrix();
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].boundary) p[i][i] -= 1;
    return p;
}

std::vector<std::string> Triangulation::labels() const {
    std::vector<std::string> r;
    for (auto& e : edges) r.push_back(e.id);
    return r;
}

std::pair<Triangulation, FlipReceipt> Triangulation::flip(int k) const {
    if (k < 0 || k >= (int)edges.size()) throw InputError("unknown edge");
    if (edges[k].boundary) throw FlipNotAllowed("boundary edges cannot be flipped");
    auto [t1, t2] = tris_of(k);
    if (t1 < 0 || t2 < 0 || t1 == t2) throw FlipNotAllowed("edge does not border two distinct triangles");
    auto rot = [&](int t) {
        const Triangle& T = tris[t];
        int s = T.slot(k);
        Triangle r;
        for (int i = 0; i < 3; ++i) {
            r.side[i] = T.side[(s + i) % 3];
            r.fwd[i] = T.fwd[(s + i) % 3];
        }
        return r;
    };
    Triangle A = rot(t1), B = rot(t2);
    FlipReceipt rc;
    rc.kappa = k;
    rc.old_id = edges[k].id;
    rc.t1 = t1;
    rc.t2 = t2;
    rc.a = A.side[1];
    rc.b = A.side[2];
    rc.c = B.side[1];
    rc.d = B.side[2];
    if (rc.c == rc.b || rc.d == rc.a) throw FlipNotAllowed("flip would create a self-folded triangle");

    Triangulation N = *this;
    int x1 = point_of(finish_end(t1, rc.a));
    int x2 = point_of(finish_end(t2, rc.c));
    Edge& e = N.edges[k];
    e.point[0] = x2;
    e.point[1] = x1;
    if (model == Model::Disk) {
        e.arc = IdealArc::chord(x1, x2);
        e.id = chord_id(n_points, e.arc.a, e.arc.b);
        if (e.arc.a == x2) std::swap(e.point[0], e.point[1]);
    } else if (model == Model::Annulus) {
        int other = -1;
        for (size_t i = 0; i < edges.size(); ++i)
            if ((int)i != k && edges[i].arc.kind == IdealArc::AnnSpan) other = edges[i].arc.a;
        int nk = 2 * other - edges[k].arc.a;
        e.arc = IdealArc::span(nk);
        e.id = span_id(nk);
        e.point[0] = 0;
        e.point[1] = 1;
    } else {
        std::set<std::string> ids;
        for (auto& x : edges) ids.insert(x.id);
        std::string id = edges[k].id + "'";
        while (ids.count(id)) id += "'";
        e.id = id;
    }
    rc.new_id = e.id;
    // new triangles (c, k', b) and (d, a, k'); k' runs x2 -> x1 in the first
    bool f = e.point[0] == x2;
    if (e.point[0] == e.point[1]) f = true;
    N.tris[t1] = Triangle{{rc.c, k, rc.b}, {B.fwd[1], f, A.fwd[2]}};
    N.tris[t2] = Triangle{{rc.d, rc.a, k}, {B.fwd[2], A.fwd[1], !f}};
    N.finalize();
    return {N, rc};
}

std::string Triangulation::signature() const {
    std::vector<std::string> ids = labels();
    std::sort(ids.begin(), ids.end());
    std::string s;
    for (auto& i : ids) s += i + ";";
    return s;
}

bool Triangulation::same_as(const Triangulation& o) const { return signature() == o.signature(); }

json Triangulation::to_json() const {
    json j;
    j["surface"] = {{"genus", genus}, {"boundary", boundary_counts}};
    if (model == Model::Disk) j["model"] = {{"type", "disk"}, {"n", n_points}};
    if (model == Model::Annulus) j["model"] = {{"type", "annulus"}};
    json es = json::array(), ts = json::array(), iv = json::array();
    for (auto& e : edges) es.push_back({{"id", e.id}, {"kind", e.boundary ? "boundary" : "interior"}});
    for (auto& t : tris) ts.push_back({edges[t.side[0]].id, edges[t.side[1]].id, edges[t.side[2]].id});
    for (int b : boundary_edges()) {
        auto I = interval(b);
        iv.push_back({{"id", edges[b].id}, {"m_plus", point_names[I.m_plus]}, {"m_minus", point_names[I.m_minus]}});
    }
    j["edges"] = es;
    j["triangles"] = ts;
    j["intervals"] = iv;
    return j;
}

Triangulation Triangulation::from_json(const json& j) {
    try {
        if (j.contains("model")) {
            std::string type = j["model"].at("type");
            std::set<std::string> ids;
            for (auto& e : j.at("edges")) ids.insert(e.at("id").get<std::string>());
            if (type == "disk") {
                int n = j["model"].at("n");
                std::vector<std::pair<int, int>> d;
                for (auto& id : ids)
                    if (id[0] == 'd') {
                        auto u = id.find('_');
                        d.push_back({std::stoi(id.substr(1, u - 1)), std::stoi(id.substr(u + 1))});
                    }
                return disk(n, d);
            }
            if (type == "annulus") {
                int lo = 1 << 30;
                for (auto& id : ids)
                    if (id[0] == 'a') lo = std::min(lo, std::stoi(id.substr(1)));
                if (lo == (1 << 30)) throw InputError("annulus triangulation without spanning arcs");
                auto T = annulus(lo);
                if (!ids.count(span_id(lo + 1))) throw InputError("annulus spanning arcs must be consecutive");
                return T;
            }
            throw InputError("unknown model type " + type);
        }
        Triangulation T;
        T.genus = j.at("surface").value("genus", 0);
        T.boundary_counts = j.at("surface").value("boundary", std::vector<int>{});
        std::map<std::string, int> idx;
        for (auto& e : j.at("edges")) {
            Edge E;
            E.id = e.at("id");
            std::string kind = e.at("kind");
            if (kind != "boundary" && kind != "interior") throw InputError("edge kind must be boundary or interior");
            E.boundary = kind == "boundary";
            if (idx.count(E.id)) throw InputError("duplicate edge id " + E.id);
            idx[E.id] = (int)T.edges.size();
            T.edges.push_back(E);
        }
        for (auto& t : j.at("triangles")) {
            if (t.size() != 3) throw InputError("triangles must have three sides");
            Triangle tr{};
            for (int i = 0; i < 3; ++i) {
                auto it = idx.find(t[i].get<std::string>());
                if (it == idx.end()) throw InputError("unknown edge in triangle");
                tr.side[i] = it->second;
            }
            T.tris.push_back(tr);
        }
        assign_directions(T.tris, T.edges.size());
        T.finalize();
        int np = (int)T.point_names.size();
        int chi = 2 - 2 * T.genus - (int)T.boundary_counts.size();
        if ((int)T.edges.size() != -3 * chi + 2 * np || (int)T.tris.size() != -2 * chi + np)
            throw InputError("edge/triangle counts do not match the surface");
        if (j.contains("intervals"))
            for (auto& iv : j["intervals"]) {
                int e = T.edge_index(iv.at("id"));
                if (e < 0 || !T.edges[e].boundary) throw InputError("interval is not a boundary edge");
            }
        return T;
    } catch (const json::exception& ex) {
        throw InputError(std::string("malformed triangulation: ") + ex.what());
    }
}

Matrix mutate_exchange(const Matrix& eps, int k) {
    size_t n = eps.size();
    Matrix r = eps;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if ((int)i == k || (int)j == k) {
                r[i][j] = -eps[i][j];
                continue;
            }
            int a = eps[i][k], b = eps[k][j];
            r[i][j] = eps[i][j] + (std::abs(a) * b + a * std::abs(b)) / 2;
        }
    return r;
}

bool is_balanced(const Triangulation& t, const Vec& v) {
    for (auto& tr : t.tris)
        if ((v[tr.side[0]] + v[tr.side[1]] + v[tr.side[2]]) % 2) return false;
    return true;
}

namespace {

void disk_rec(int i, int j, std::vector<std::vector<std::pair<int, int>>>& out) {
    out.clear();
    if (j - i < 2) {
        out.push_back({});
        return;
    }
    for (int k = i + 1; k < j; ++k) {
        std::vector<std::vector<std::pair<int, int>>> L, R;
        disk_rec(i, k, L);
        disk_rec(k, j, R);
        for (auto& l : L)
            for (auto& r : R) {
                std::vector<std::pair<int, int>> d = l;
                d.insert(d.end(), r.begin(), r.end());
                if (k > i + 1) d.push_back({i, k});
                if (j > k + 1) d.push_back({k, j});
                out.push_back(d);
            }
    }
}

}  // namespace

std::vector<Triangulation> all_disk_triangulations(int n) {
    std::vector<std::vector<std::pair<int, int>>> ds;
    disk_rec(0, n - 1, ds);
    std::vector<Triangulation> r;
    for (auto& d : ds) r.push_back(Triangulation::disk(n, d));
    return r;
}

std::vector<std::pair<int, int>> disk_diagonals(const Triangulation& t) {
    std::vector<std::pair<int, int>> r;
    for (auto& e : t.edges)
        if (!e.boundary) r.push_back({e.arc.a, e.arc.b});
    return r;
}

}  // namespace skq
