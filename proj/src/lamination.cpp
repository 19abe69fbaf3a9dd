#include "skq/lamination.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <map>
#include <sstream>

namespace skq {

using json = nlohmann::json;

bool Curve::peripheral() const { return peripheral_point() >= 0; }

int Curve::peripheral_point() const {
    switch (kind) {
        case DiskArc:
            if ((a + 1) % n == b) return b;
            if ((b + 1) % n == a) return a;
            return -1;
        case AnnPeripheral:
            return a;
        default:
            return -1;
    }
}

Curve Curve::canonical() const {
    Curve c = *this;
    if (kind == DiskArc) {
        int p = peripheral_point();
        if (p >= 0) return disk_peripheral(n, p);
        if (c.a > c.b) std::swap(c.a, c.b);
    }
    return c;
}

bool Curve::operator<(const Curve& o) const {
    Curve x = canonical(), y = o.canonical();
    return std::tie(x.kind, x.a, x.b, x.n) < std::tie(y.kind, y.a, y.b, y.n);
}

bool Curve::operator==(const Curve& o) const { return !(*this < o) && !(o < *this); }

std::string Curve::str() const {
    std::ostringstream os;
    switch (kind) {
        case DiskArc: os << "arc(I" << a << ",I" << b << ")"; break;
        case AnnSpan: os << "span(" << a << ")"; break;
        case AnnPeripheral: os << "peripheral(p" << a << ")"; break;
        case AnnCore: os << "core"; break;
    }
    return os.str();
}

IdealArc m_shift(const Curve& c) {
    switch (c.kind) {
        case Curve::DiskArc:
            if (c.a == c.b) throw InputError("arc with both ends on one interval");
            return IdealArc::chord(c.a, c.b);
        case Curve::AnnSpan: return IdealArc::span(c.a);
        case Curve::AnnPeripheral: return IdealArc::ann_boundary(c.a);
        case Curve::AnnCore: break;
    }
    throw InputError("loops have no M-shift");
}

bool ann_span_compatible(int s1, int s2) { return std::abs(s1 - s2) <= 1; }

// ---------------------------------------------------------------------------
// words

namespace {

int other_tri(const Triangulation& t, int tri, int e) {
    auto [a, b] = t.tris_of(e);
    return a == tri ? b : a;
}

bool disk_inside(int a, int b, int i) { return a <= i && i < b; }

CurveWord disk_word(const Curve& c, const Triangulation& t) {
    int n = t.n_points;
    if (c.n != n) throw InputError("curve and triangulation have different disks");
    int i = c.a, j = c.b;
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw InputError("bad disk arc");
    int bi = t.edge_of(IdealArc::chord(i, (i + 1) % n));
    int bj = t.edge_of(IdealArc::chord(j, (j + 1) % n));
    CurveWord w;
    w.edges.push_back(bi);
    int cur = t.tri_of_boundary(bi), prev = bi;
    for (int guard = 0; guard < 4 * (int)t.size(); ++guard) {
        const Triangle& T = t.tris[cur];
        w.tris.push_back(cur);
        bool done = false;
        for (int s : T.side)
            if (s == bj && s != prev) done = true;
        if (done) {
            w.edges.push_back(bj);
            return w;
        }
        int nxt = -1;
        for (int s : T.side) {
            if (s == prev || t.edges[s].boundary) continue;
            auto& A = t.edges[s].arc;
            if (disk_inside(A.a, A.b, i) != disk_inside(A.a, A.b, j)) nxt = s;
        }
        if (nxt < 0) throw std::logic_error("disk walk lost");
        w.edges.push_back(nxt);
        cur = other_tri(t, cur, nxt);
        prev = nxt;
    }
    throw std::logic_error("disk walk did not terminate");
}

using R = boost::rational<long long>;
struct P2 {
    R x, y;
};

R cross(const P2& a, const P2& b) { return a.x * b.y - a.y * b.x; }

// strip model: period 6, bottom y = 0 carries p0 at multiples of 6, top y = 1 carries p1
constexpr long long kP = 6;

CurveWord annulus_word(const Curve& c, const Triangulation& t) {
    std::vector<P2> poly;
    bool loop = false;
    R h(1, 1000);
    switch (c.kind) {
        case Curve::AnnSpan: poly = {{R(2), R(0)}, {R(4 + kP * (c.a - 1)), R(1)}}; break;
        case Curve::AnnPeripheral:
            if (c.a == 0)
                poly = {{R(-1), R(0)}, {R(1, 7), h}, {R(1), R(0)}};
            else
                poly = {{R(1), R(1)}, {R(1, 7), R(1) - h}, {R(-1), R(1)}};
            break;
        case Curve::AnnCore:
            poly = {{R(1), R(1, 2)}, {R(1 + kP), R(1, 2)}};
            loop = true;
            break;
        default: throw InputError("not an annulus curve");
    }
    int e_lo = -1, e_hi = -1, m = 0;
    for (int e : t.interior_edges()) {
        if (e_lo < 0 || t.edges[e].arc.a < t.edges[e_lo].arc.a) e_lo = e;
    }
    for (int e : t.interior_edges())
        if (e != e_lo) e_hi = e;
    m = t.edges[e_lo].arc.a;
    int b0 = t.edge_of(IdealArc::ann_boundary(0)), b1 = t.edge_of(IdealArc::ann_boundary(1));
    int T1 = t.tri_of_boundary(b1), T2 = t.tri_of_boundary(b0);

    struct Hit {
        size_t seg;
        R par;
        long long slot;
    };
    std::vector<Hit> hits;
    R xmin = poly[0].x, xmax = poly[0].x;
    for (auto& p : poly) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
    }
    long long jlo = boost::rational_cast<long long>(xmin / kP) - std::abs(m) - 4;
    long long jhi = boost::rational_cast<long long>(xmax / kP) + std::abs(m) + 4;
    for (size_t s = 0; s + 1 < poly.size(); ++s) {
        P2 p = poly[s], d{poly[s + 1].x - p.x, poly[s + 1].y - p.y};
        for (int which = 0; which < 2; ++which) {
            int k = m + which;
            for (long long j = jlo; j <= jhi; ++j) {
                P2 e{R(kP * j), R(0)}, f{R(kP * k), R(1)};
                R den = cross(d, f);
                if (den == R(0)) continue;
                P2 qp{e.x - p.x, e.y - p.y};
                R tpar = cross(qp, f) / den, u = cross(qp, d) / den;
                if (!(tpar > R(0) && tpar < R(1) && u > R(0) && u < R(1))) continue;
                hits.push_back({s, tpar, 2 * j + which});
            }
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        return a.seg != b.seg ? a.seg < b.seg : a.par < b.par;
    });
    auto edge_of_slot = [&](long long s) { return (s % 2 + 2) % 2 == 0 ? e_lo : e_hi; };
    auto tri_between = [&](long long s1, long long s2) {
        if (std::abs(s1 - s2) != 1) throw std::logic_error("non-adjacent crossings in the strip");
        long long lo = std::min(s1, s2);
        return (lo % 2 + 2) % 2 == 0 ? T1 : T2;
    };
    CurveWord w;
    w.loop = loop;
    if (loop) {
        for (size_t i = 0; i < hits.size(); ++i) {
            w.edges.push_back(edge_of_slot(hits[i].slot));
            long long nx = i + 1 < hits.size() ? hits[i + 1].slot : hits[0].slot + 2;
            w.tris.push_back(tri_between(hits[i].slot, nx));
        }
        return w;
    }
    bool start_bottom = poly.front().y == R(0), end_bottom = poly.back().y == R(0);
    w.edges.push_back(start_bottom ? b0 : b1);
    w.tris.push_back(start_bottom ? T2 : T1);
    for (size_t i = 0; i < hits.size(); ++i) {
        w.edges.push_back(edge_of_slot(hits[i].slot));
        w.tris.push_back(i + 1 < hits.size() ? tri_between(hits[i].slot, hits[i + 1].slot) : (end_bottom ? T2 : T1));
    }
    w.edges.push_back(end_bottom ? b0 : b1);
    return w;
}

}  // namespace

namespace {

// loops have no preferred start; rotate to the smallest (edge, triangle) sequence
void rotate_canonical(CurveWord& w) {
    if (!w.loop || w.edges.empty()) return;
    size_t k = w.edges.size(), best = 0;
    auto key = [&](size_t r) {
        std::vector<int> v;
        for (size_t i = 0; i < k; ++i) {
            v.push_back(w.edges[(r + i) % k]);
            v.push_back(w.tris[(r + i) % k]);
        }
        return v;
    };
    for (size_t r = 1; r < k; ++r)
        if (key(r) < key(best)) best = r;
    std::rotate(w.edges.begin(), w.edges.begin() + best, w.edges.end());
    std::rotate(w.tris.begin(), w.tris.begin() + best, w.tris.end());
}

}  // namespace

CurveWord word_of(const Curve& c, const Triangulation& t) {
    CurveWord w;
    if (t.model == Model::Disk && c.kind == Curve::DiskArc)
        w = disk_word(c, t);
    else if (t.model == Model::Annulus && c.kind != Curve::DiskArc)
        w = annulus_word(c, t);
    else
        throw InputError("curve does not live on this surface model");
    rotate_canonical(w);
    validate_word(w, t);
    return w;
}

void validate_word(const CurveWord& w, const Triangulation& t) {
    size_t k = w.edges.size();
    if (w.loop) {
        if (k == 0 || w.tris.size() != k) throw InputError("malformed loop word");
        for (size_t i = 0; i < k; ++i) {
            const Triangle& T = t.tris.at(w.tris[i]);
            (void)T.slot(w.edges[i]);
            (void)T.slot(w.edges[(i + 1) % k]);
            if (t.edges[w.edges[i]].boundary) throw InputError("loop word crosses a boundary edge");
        }
        return;
    }
    if (k < 2 || w.tris.size() != k - 1) throw InputError("malformed arc word");
    if (!t.edges[w.edges.front()].boundary || !t.edges[w.edges.back()].boundary)
        throw InputError("arc word must start and end on boundary edges");
    for (size_t i = 0; i + 1 < k; ++i) {
        const Triangle& T = t.tris.at(w.tris[i]);
        try {
            (void)T.slot(w.edges[i]);
            (void)T.slot(w.edges[i + 1]);
        } catch (const std::logic_error&) {
            throw InputError("word visits a triangle through an edge it does not have");
        }
        if (i > 0 && t.edges[w.edges[i]].boundary) throw InputError("arc word crosses a boundary edge");
        if (i > 0 && w.tris[i] == w.tris[i - 1]) throw InputError("word crossing does not change triangle");
    }
}

bool is_reduced(const CurveWord& w) {
    size_t k = w.edges.size();
    if (w.loop) {
        for (size_t i = 0; i < k; ++i)
            if (w.edges[i] == w.edges[(i + 1) % k]) return false;
        return k > 0;
    }
    for (size_t i = 1; i + 2 < k; ++i)
        if (w.edges[i] == w.edges[i + 1]) return false;
    return !(k == 2 && w.edges[0] == w.edges[1]);
}

CurveWord reduce_word(const CurveWord& w0, const Triangulation&) {
    CurveWord w = w0;
    bool changed = true;
    while (changed) {
        changed = false;
        size_t k = w.edges.size();
        if (w.loop) {
            for (size_t i = 0; i < k && k >= 2; ++i) {
                size_t j = (i + 1) % k;
                if (w.edges[i] != w.edges[j]) continue;
                // drop crossings i and j and the u-turn tris[i]; tris[j] merges into tris[i-1]
                std::vector<int> e, t;
                for (size_t x = 0; x < k; ++x) {
                    if (x == i || x == j) continue;
                    e.push_back(w.edges[x]);
                }
                for (size_t x = 0; x < k; ++x) {
                    if (x == i || x == j) continue;
                    t.push_back(w.tris[x]);
                }
                // the triangle before crossing i equals the one after crossing j
                w.edges = e;
                w.tris = t;
                changed = true;
                break;
            }
            if (w.edges.empty()) throw InputError("trivial loop");
            continue;
        }
        for (size_t i = 1; i + 2 < k; ++i) {
            if (w.edges[i] != w.edges[i + 1]) continue;
            w.edges.erase(w.edges.begin() + i, w.edges.begin() + i + 2);
            w.tris.erase(w.tris.begin() + i, w.tris.begin() + i + 2);
            changed = true;
            break;
        }
    }
    if (!w.loop && w.edges.size() == 2 && w.edges[0] == w.edges[1]) throw InputError("trivial arc");
    rotate_canonical(w);
    return w;
}

Vec intersection_vector(const CurveWord& w, size_t n_edges) {
    Vec v(n_edges, 0);
    for (int e : w.edges) v[e] += 1;
    return v;
}

CurveWord flip_transport_curve(const CurveWord& w, const Triangulation& t, const Triangulation& flipped,
                               const FlipReceipt& rc) {
    int k = rc.kappa;
    auto newtri = [&](int tri, int e) {
        if (tri == rc.t1) return e == rc.a ? rc.t2 : rc.t1;
        return e == rc.c ? rc.t1 : rc.t2;
    };
    CurveWord in = w, out;
    out.loop = w.loop;
    size_t n = in.edges.size();
    if (in.loop) {
        size_t r = 0;
        while (r < n && in.edges[r] == k) ++r;
        if (r == n) throw InputError("loop word made only of the flipped edge");
        std::rotate(in.edges.begin(), in.edges.begin() + r, in.edges.end());
        std::rotate(in.tris.begin(), in.tris.begin() + r, in.tris.end());
        in.edges.push_back(in.edges[0]);  // closing copy of the first event
    }
    size_t E = in.edges.size();
    std::vector<size_t> keep;
    for (size_t i = 0; i < E; ++i)
        if (in.edges[i] != k) keep.push_back(i);
    for (size_t q = 0; q + 1 < keep.size(); ++q) {
        size_t i = keep[q], j = keep[q + 1];
        out.edges.push_back(in.edges[i]);
        int ti = in.tris[i];
        if (ti != rc.t1 && ti != rc.t2) {
            out.tris.push_back(ti);
            continue;
        }
        int a = newtri(ti, in.edges[i]);
        int b = newtri(in.tris[j - 1], in.edges[j]);
        out.tris.push_back(a);
        if (a != b) {
            out.edges.push_back(k);
            out.tris.push_back(b);
        }
    }
    if (!in.loop) out.edges.push_back(in.edges.back());
    out = reduce_word(out, flipped);
    validate_word(out, flipped);
    (void)t;
    return out;
}

// ---------------------------------------------------------------------------
// laminations

bool Lamination::compatible() const {
    std::vector<Curve> cs;
    for (auto& [c, w] : comps)
        if (w != 0 && !c.peripheral()) cs.push_back(c.canonical());
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j) {
            const Curve &x = cs[i], &y = cs[j];
            if (x.kind == Curve::DiskArc && y.kind == Curve::DiskArc) {
                auto in = [&](int v) { return x.a < v && v < x.b; };
                bool shared = x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
                if (!shared && in(y.a) != in(y.b)) return false;
            } else if (x.kind == Curve::AnnSpan && y.kind == Curve::AnnSpan) {
                if (!ann_span_compatible(x.a, y.a)) return false;
            } else if (x.kind != y.kind) {
                return false;
            }
        }
    return true;
}

Lamination Lamination::canonical() const {
    std::map<Curve, int> m;
    for (auto& [c, w] : comps) m[c.canonical()] += w;
    Lamination L = *this;
    L.comps.clear();
    for (auto& [c, w] : m)
        if (w) L.comps.push_back({c, w});
    return L;
}

Vec a_coords2(const Lamination& L, const Triangulation& t) {
    Vec a(t.size(), 0);
    for (auto& [c, w] : L.comps) {
        Vec v = intersection_vector(word_of(c, t), t.size());
        for (size_t i = 0; i < a.size(); ++i) a[i] += w * v[i];
    }
    return a;
}

bool is_congruent(const Lamination& L, const Triangulation& t) {
    for (int x : a_coords2(L, t))
        if (x % 2) return false;
    return true;
}

Vec a_coords(const Lamination& L, const Triangulation& t) {
    Vec a = a_coords2(L, t);
    for (auto& x : a) {
        if (x % 2) throw OddExponent("lamination is not congruent");
        x /= 2;
    }
    return a;
}

Vec shear_from_words(const std::vector<std::pair<CurveWord, int>>& ws, const std::vector<int>& pinning,
                     const Triangulation& t) {
    Vec x(t.size(), 0);
    auto bnd = t.boundary_edges();
    for (size_t i = 0; i < bnd.size(); ++i) x[bnd[i]] += pinning.at(i);
    for (auto& [w, wt] : ws) {
        size_t k = w.edges.size();
        auto crossing = [&](int kappa, int tb, int prev, int ta, int next) {
            bool pa = t.tris[tb].next(kappa) == prev;
            bool na = t.tris[ta].next(kappa) == next;
            if (pa && na) x[kappa] += wt;
            if (!pa && !na) x[kappa] -= wt;
        };
        if (w.loop) {
            for (size_t i = 0; i < k; ++i)
                crossing(w.edges[i], w.tris[(i + k - 1) % k], w.edges[(i + k - 1) % k], w.tris[i], w.edges[(i + 1) % k]);
            continue;
        }
        for (size_t i = 1; i + 1 < k; ++i) crossing(w.edges[i], w.tris[i - 1], w.edges[i - 1], w.tris[i], w.edges[i + 1]);
        // ends turning around the terminal point of their interval
        int s = w.edges.front(), e = w.edges.back();
        if (t.tris[w.tris.front()].next(s) == w.edges[1]) x[s] += wt;
        if (t.tris[w.tris.back()].next(e) == w.edges[k - 2]) x[e] += wt;
    }
    return x;
}

Vec shear_coords(const PLamination& L, const Triangulation& t) {
    std::vector<std::pair<CurveWord, int>> ws;
    for (auto& [c, w] : L.arcs.comps) {
        if (c.peripheral()) throw InputError("P-laminations carry no peripheral components");
        ws.push_back({word_of(c, t), w});
    }
    return shear_from_words(ws, L.pinning, t);
}

PLamination tropical_ensemble(const Lamination& L, const Triangulation& t) {
    PLamination P;
    P.arcs.model = L.model;
    P.arcs.n = L.n;
    auto bnd = t.boundary_edges();
    P.pinning.assign(bnd.size(), 0);
    for (auto& [c, w] : L.comps) {
        int p = c.peripheral_point();
        if (p < 0) {
            P.arcs.comps.push_back({c, w});
            continue;
        }
        for (size_t i = 0; i < bnd.size(); ++i)
            if (t.interval(bnd[i]).m_minus == p) P.pinning[i] += w;
    }
    return P;
}

Vec tropical_mutate_x(const Vec& x, int k, const Matrix& eps) {
    Vec r = x;
    for (size_t a = 0; a < x.size(); ++a) {
        if ((int)a == k) {
            r[a] = -x[k];
            continue;
        }
        int e = eps[a][k];
        int sg = (e > 0) - (e < 0);
        r[a] = x[a] - e * std::max(0, -sg * x[k]);
    }
    return r;
}

Vec tropical_mutate_a(const Vec& a, int k, const Matrix& eps) {
    Vec r = a;
    int p = 0, m = 0;
    for (size_t b = 0; b < a.size(); ++b) {
        p += std::max(0, eps[k][b]) * a[b];
        m += std::max(0, -eps[k][b]) * a[b];
    }
    r[k] = -a[k] + std::max(p, m);
    return r;
}

// ---------------------------------------------------------------------------
// json

json Lamination::to_json(const Triangulation& t) const {
    json cs = json::array();
    for (auto& [c, w] : comps) {
        json j = {{"weight", w}};
        switch (c.kind) {
            case Curve::DiskArc: {
                int p = c.peripheral_point();
                if (p >= 0) {
                    j["kind"] = "peripheral";
                    j["peripheral_at"] = t.point_names[p];
                } else {
                    j["kind"] = "arc";
                    j["start"] = t.edges[t.edge_of(IdealArc::chord(c.a, (c.a + 1) % c.n))].id;
                    j["end"] = t.edges[t.edge_of(IdealArc::chord(c.b, (c.b + 1) % c.n))].id;
                }
                break;
            }
            case Curve::AnnSpan:
                j["kind"] = "arc";
                j["start"] = "b0";
                j["end"] = "b1";
                j["winding"] = c.a;
                break;
            case Curve::AnnPeripheral:
                j["kind"] = "peripheral";
                j["peripheral_at"] = t.point_names[c.a];
                break;
            case Curve::AnnCore: j["kind"] = "loop"; break;
        }
        cs.push_back(j);
    }
    return {{"components", cs}};
}

Lamination Lamination::from_json(const json& j, const Triangulation& t) {
    Lamination L;
    L.model = t.model;
    L.n = t.n_points;
    if (t.model == Model::Generic) throw InputError("laminations need a disk or annulus triangulation");
    try {
        for (auto& c : j.at("components")) {
            std::string kind = c.at("kind");
            int w = c.value("weight", 1);
            auto point = [&](const std::string& name) {
                for (size_t i = 0; i < t.point_names.size(); ++i)
                    if (t.point_names[i] == name) return (int)i;
                throw InputError("unknown marked point " + name);
            };
            auto interval = [&](const std::string& id) {
                int e = t.edge_index(id);
                if (e < 0 || !t.edges[e].boundary) throw InputError("unknown boundary interval " + id);
                return t.interval(e).m_plus;
            };
            if (kind == "peripheral") {
                int p = point(c.at("peripheral_at"));
                L.comps.push_back({t.model == Model::Disk ? Curve::disk_peripheral(L.n, p) : Curve::ann_peripheral(p), w});
            } else if (kind == "arc") {
                if (t.model == Model::Disk) {
                    int a = interval(c.at("start")), b = interval(c.at("end"));
                    if (a == b) throw InputError("arc with both ends on one interval");
                    L.comps.push_back({Curve::disk_arc(L.n, a, b), w});
                } else {
                    L.comps.push_back({Curve::span(c.at("winding").get<int>()), w});
                }
            } else if (kind == "loop") {
                if (t.model != Model::Annulus) throw InputError("the disk has no essential loops");
                L.comps.push_back({Curve::core(), w});
            } else {
                throw InputError("unknown component kind " + kind);
            }
        }
    } catch (const json::exception& ex) {
        throw InputError(std::string("malformed lamination: ") + ex.what());
    }
    if (!L.compatible()) throw InputError("lamination components intersect");
    return L;
}

// ---------------------------------------------------------------------------
// random samples

Lamination random_lamination(Model model, int n, std::mt19937_64& rng) {
    Lamination L;
    L.model = model;
    L.n = n;
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    if (model == Model::Disk) {
        std::vector<Curve> cand;
        for (int i = 0; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                if (!(i == 0 && j == n - 1)) cand.push_back(Curve::disk_arc(n, i, j));
        std::shuffle(cand.begin(), cand.end(), rng);
        for (auto& c : cand) {
            if (uni(0, 1) == 0) continue;
            Lamination T = L;
            T.comps.push_back({c, uni(1, 3)});
            if (T.compatible()) L = T;
        }
        for (int p = 0; p < n; ++p) {
            int w = uni(-2, 2);
            if (w) L.comps.push_back({Curve::disk_peripheral(n, p), w});
        }
    } else {
        int kind = uni(0, 2);
        if (kind == 1) {
            int s = uni(-3, 3);
            int w1 = uni(0, 3), w2 = uni(0, 3);
            if (w1 + w2 == 0) w1 = 1;
            if (w1) L.comps.push_back({Curve::span(s), w1});
            if (w2) L.comps.push_back({Curve::span(s + 1), w2});
        } else if (kind == 2) {
            L.comps.push_back({Curve::core(), uni(1, 3)});
        }
        for (int p = 0; p < 2; ++p) {
            int w = uni(-2, 2);
            if (w) L.comps.push_back({Curve::ann_peripheral(p), w});
        }
    }
    return L;
}

Lamination random_congruent_lamination(Model model, int n, std::mt19937_64& rng, const Triangulation& t) {
    for (int tries = 0; tries < 200; ++tries) {
        Lamination L = random_lamination(model, n, rng);
        if (is_congruent(L, t)) return L;
    }
    Lamination L = random_lamination(model, n, rng);
    for (auto& c : L.comps) c.second *= 2;
    return L;
}

PLamination random_plamination(Model model, int n, std::mt19937_64& rng) {
    Lamination L = random_lamination(model, n, rng);
    PLamination P;
    P.arcs.model = model;
    P.arcs.n = n;
    for (auto& c : L.comps)
        if (!c.first.peripheral()) P.arcs.comps.push_back(c);
    int nb = model == Model::Disk ? n : 2;
    for (int i = 0; i < nb; ++i) P.pinning.push_back(std::uniform_int_distribution<int>(-3, 3)(rng));
    return P;
}

}  // namespace skq
