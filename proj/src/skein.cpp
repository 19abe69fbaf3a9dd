#include "skq/skein.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace skq {

namespace {

using i128 = __int128;

// disk: point i sits at (i S, i^2 S), a convex counterclockwise polygon
constexpr long long kDiskScale = 1'000'000;
constexpr long long kDiskOff = 1'000;
// annulus: universal cover strip 0 <= y <= kH, p0 at (jP, 0), p1 at (jP, kH)
constexpr long long kP = 6'000'000, kH = 6'000'000;
constexpr long long kSpanOff = kP / 100, kBetaStep = kH / 1000, kCoreStep = kH / 100;
// above this many crossings a product is split into factors first
constexpr int kDirectCrossings = 10;

// weight of the A-smoothing is q^{kSmooth}
constexpr int kSmooth = 1;
// sign of an end pair when the higher end is counterclockwise of the lower
constexpr int kEndSign = -1;
// height direction of the self-crossing arc in b_family
constexpr int kTentDir = -1;

i128 cross(i128 ax, i128 ay, i128 bx, i128 by) { return ax * by - ay * bx; }

int sgn(i128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

IPt disk_point(int i) { return {i * kDiskScale, (long long)i * i * kDiskScale}; }

// bend points sit at this fraction of the way, off any symmetric position
constexpr long long kBendNum = 37, kBendDen = 100;

// chord polyline, bent by off along the left normal of a->b
std::vector<IPt> bent(IPt a, IPt b, long long off) {
    if (off == 0) return {a, b};
    long long dx = b.x - a.x, dy = b.y - a.y;
    long long l1 = std::llabs(dx) + std::llabs(dy);
    IPt m{a.x + dx * kBendNum / kBendDen + (long long)((i128)(-dy) * off / l1),
          a.y + dy * kBendNum / kBendDen + (long long)((i128)dx * off / l1)};
    return {a, m, b};
}

struct End {
    int point;
    long long dx, dy;
    long long h;
    int strand;
};

std::vector<End> ends_of(const Diagram& d) {
    std::vector<End> r;
    for (size_t s = 0; s < d.strands.size(); ++s) {
        const Strand& st = d.strands[s];
        if (st.closed()) continue;
        size_t m = st.pts.size();
        r.push_back({st.start, st.pts[1].x - st.pts[0].x, st.pts[1].y - st.pts[0].y, st.h[0], (int)s});
        r.push_back({st.end, st.pts[m - 2].x - st.pts[m - 1].x, st.pts[m - 2].y - st.pts[m - 1].y, st.h[m - 1], (int)s});
    }
    return r;
}

// +-1 for an end pair at a common point, `hi` the higher one
int end_pair_sign(const End& hi, const End& lo) {
    int c = sgn(cross(lo.dx, lo.dy, hi.dx, hi.dy));
    if (c == 0) throw std::logic_error("skein: tangent ends at a marked point");
    return kEndSign * c;
}

int end_sum(const Diagram& d) {
    auto es = ends_of(d);
    int total = 0;
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            if (es[i].point != es[j].point) continue;
            if (es[i].h == es[j].h) throw std::logic_error("skein: ends at equal height");
            total += es[i].h > es[j].h ? end_pair_sign(es[i], es[j]) : end_pair_sign(es[j], es[i]);
        }
    return total;
}

struct Frac {
    i128 n, d;  // d > 0
};

bool frac_less(const Frac& a, const Frac& b) { return a.n * b.d < b.n * a.d; }

struct Passage {
    int strand, seg;
    Frac t;
    int crossing;
    long long off;  // add to strand coordinates to reach the crossing frame
    int idx = 0;    // position along the strand
};

struct Crossing {
    int over, under;  // passage ids
    int s;            // sign of cross(dir over, dir under)
};

struct Layout {
    std::vector<Passage> pass;
    std::vector<Crossing> cross;
    std::vector<std::vector<int>> along;  // per strand, passage ids in order
};

bool is_marked(const SkSurface& s, i128 x, i128 y) {
    if (s.model == Model::Disk) {
        for (int i = 0; i < s.n; ++i) {
            IPt p = disk_point(i);
            if (x == p.x && y == p.y) return true;
        }
        return false;
    }
    return (y == 0 || y == kH) && x % kP == 0;
}

Layout find_crossings(const Diagram& d) {
    Layout L;
    const bool ann = d.surf.model == Model::Annulus;
    size_t ns = d.strands.size();
    L.along.resize(ns);
    auto seg_pair = [&](int sa, int ga, int sb, int gb) {
        const Strand& A = d.strands[sa];
        const Strand& B = d.strands[sb];
        IPt a0 = A.pts[ga], a1 = A.pts[ga + 1], b0 = B.pts[gb], b1 = B.pts[gb + 1];
        long long jlo = 0, jhi = 0;
        if (ann) {
            long long ax0 = std::min(a0.x, a1.x), ax1 = std::max(a0.x, a1.x);
            long long bx0 = std::min(b0.x, b1.x), bx1 = std::max(b0.x, b1.x);
            jlo = -floor_div(bx1 - ax0, kP);
            jhi = floor_div(ax1 - bx0, kP);
        }
        for (long long j = jlo; j <= jhi; ++j) {
            i128 bx0 = b0.x + j * kP, bx1 = b1.x + j * kP;
            i128 rx = a1.x - a0.x, ry = a1.y - a0.y, sx = bx1 - bx0, sy = (i128)b1.y - b0.y;
            i128 qx = bx0 - a0.x, qy = (i128)b0.y - a0.y;
            i128 den = cross(rx, ry, sx, sy);
            bool same_strand = sa == sb;
            if (den == 0) {
                if (cross(qx, qy, rx, ry) != 0) continue;
                // collinear: allowed only to share a single marked or joint point
                i128 rr = rx * rx + ry * ry;
                i128 t0 = qx * rx + qy * ry, t1 = (bx1 - a0.x) * rx + ((i128)b1.y - a0.y) * ry;
                i128 lo = std::max<i128>(0, std::min(t0, t1)), hi = std::min<i128>(rr, std::max(t0, t1));
                if (lo > hi) continue;
                if (lo == hi) continue;  // touching at an end vertex
                throw std::logic_error("skein: overlapping segments");
            }
            i128 tn = cross(qx, qy, sx, sy), un = cross(qx, qy, rx, ry);
            if (den < 0) { den = -den; tn = -tn; un = -un; }
            if (tn < 0 || tn > den || un < 0 || un > den) continue;
            if (tn > 0 && tn < den && un > 0 && un < den) {
                i128 ha = (i128)A.h[ga] * den + (i128)(A.h[ga + 1] - A.h[ga]) * tn;
                i128 hb = (i128)B.h[gb] * den + (i128)(B.h[gb + 1] - B.h[gb]) * un;
                if (ha == hb) throw std::logic_error("skein: crossing at equal heights");
                int pa = (int)L.pass.size();
                L.pass.push_back({sa, ga, {tn, den}, (int)L.cross.size(), 0});
                L.pass.push_back({sb, gb, {un, den}, (int)L.cross.size(), j * kP});
                Crossing c;
                if (ha > hb) {
                    c.over = pa, c.under = pa + 1;
                    c.s = sgn(cross(rx, ry, sx, sy));
                } else {
                    c.over = pa + 1, c.under = pa;
                    c.s = sgn(cross(sx, sy, rx, ry));
                }
                L.cross.push_back(c);
                continue;
            }
            // touching at a segment end
            bool a_end = tn == 0 || tn == den, b_end = un == 0 || un == den;
            i128 px = a0.x * den + rx * tn, py = a0.y * den + ry * tn;
            if (px % den == 0 && py % den == 0 && is_marked(d.surf, px / den, py / den)) continue;
            if (same_strand && a_end && b_end) continue;  // joint of consecutive segments
            throw std::logic_error("skein: degenerate intersection");
        }
    };
    for (size_t a = 0; a < ns; ++a) {
        int na = (int)d.strands[a].pts.size() - 1;
        for (int g = 0; g < na; ++g)
            for (int g2 = g + 1; g2 < na; ++g2) seg_pair((int)a, g, (int)a, g2);
        for (size_t b = a + 1; b < ns; ++b) {
            int nb = (int)d.strands[b].pts.size() - 1;
            for (int g = 0; g < na; ++g)
                for (int g2 = 0; g2 < nb; ++g2) seg_pair((int)a, g, (int)b, g2);
        }
    }
    for (size_t p = 0; p < L.pass.size(); ++p) L.along[L.pass[p].strand].push_back((int)p);
    for (auto& v : L.along) {
        std::sort(v.begin(), v.end(), [&](int x, int y) {
            const Passage &a = L.pass[x], &b = L.pass[y];
            if (a.seg != b.seg) return a.seg < b.seg;
            return frac_less(a.t, b.t);
        });
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            const Passage &a = L.pass[v[i]], &b = L.pass[v[i + 1]];
            if (a.seg == b.seg && !frac_less(a.t, b.t)) throw std::logic_error("skein: triple point");
        }
        for (size_t i = 0; i < v.size(); ++i) L.pass[v[i]].idx = (int)i;
    }
    return L;
}

// class of a traced component, or nullopt for a vanishing arc; trivial loops
// are reported through `trivial`
std::optional<SkCurve> classify_arc(const SkSurface& s, int pa, long long xa, int pb, long long xb) {
    if (s.model == Model::Disk) {
        if (pa == pb) return std::nullopt;
        return SkCurve::chord(pa, pb);
    }
    long long d = xb - xa;
    if (pa == pb) {
        if (d == 0) return std::nullopt;
        if (std::llabs(d) == kP) return SkCurve::bnd(pa);
        throw std::logic_error("skein: unexpected boundary arc");
    }
    if (pa == 1) d = -d;
    if (d % kP) throw std::logic_error("skein: misaligned spanning arc");
    return SkCurve::span((int)(d / kP));
}

}  // namespace

// ---------------------------------------------------------------------------

std::string SkCurve::str() const {
    switch (kind) {
        case Chord: return "c" + std::to_string(a) + "-" + std::to_string(b);
        case Bnd: return "b" + std::to_string(a);
        case Span: return "a" + std::to_string(a);
        case Core: return "z";
    }
    return "?";
}

bool SkSurface::boundary(const SkCurve& c) const {
    if (model == Model::Disk) return c.kind == SkCurve::Chord && (c.b == c.a + 1 || (c.a == 0 && c.b == n - 1));
    return c.kind == SkCurve::Bnd;
}

bool SkSurface::valid(const SkCurve& c) const {
    if (model == Model::Disk) return c.kind == SkCurve::Chord && 0 <= c.a && c.a < c.b && c.b < n;
    if (c.kind == SkCurve::Bnd) return c.a == 0 || c.a == 1;
    return c.kind == SkCurve::Span || c.kind == SkCurve::Core;
}

SkSurface SkSurface::disk(int n) {
    if (n < 3) throw InputError("disk needs at least 3 marked points");
    return {Model::Disk, n};
}

SkSurface SkSurface::of(const Triangulation& t) {
    if (t.model == Model::Disk) return disk(t.n_points);
    if (t.model == Model::Annulus) return annulus();
    throw InputError("skein algebra is implemented for the disk and the annulus");
}

std::string mono_str(const Mono& m) {
    if (m.empty()) return "1";
    std::string r;
    for (auto& [c, k] : m) {
        if (!r.empty()) r += " ";
        r += c.str();
        if (k != 1) r += "^" + std::to_string(k);
    }
    return "[" + r + "]";
}

SkeinElement SkeinElement::basis(SkSurface s, const Mono& m, bool bracelets) {
    SkeinElement e{s, bracelets, {}};
    e.add(m, QScalar(1));
    return e;
}

void SkeinElement::add(const Mono& m, const QScalar& c) {
    Mono k;
    for (auto& [cv, e] : m) {
        if (e == 0) continue;
        if (!surf.valid(cv)) throw InputError("invalid curve " + cv.str());
        if (e < 0 && !surf.boundary(cv)) throw InputError("negative multiplicity on " + cv.str());
        k[cv] = e;
    }
    auto& slot = terms[k];
    slot += c;
    if (slot.zero()) terms.erase(k);
}

bool SkeinElement::positive() const {
    return std::all_of(terms.begin(), terms.end(), [](auto& kv) { return kv.second.nonneg(); });
}

SkeinElement& SkeinElement::operator+=(const SkeinElement& o) {
    if (!(surf == o.surf) || bracelets != o.bracelets) throw InputError("adding skein elements of different kinds");
    for (auto& [m, c] : o.terms) add(m, c);
    return *this;
}

SkeinElement SkeinElement::scaled(const QScalar& c) const {
    SkeinElement r{surf, bracelets, {}};
    for (auto& [m, x] : terms) r.add(m, x * c);
    return r;
}

std::string SkeinElement::str() const {
    if (terms.empty()) return "0";
    std::string r;
    for (auto& [m, c] : terms) {
        if (!r.empty()) r += " + ";
        r += "(" + c.str() + ")" + mono_str(m);
    }
    return r;
}

nlohmann::json SkeinElement::to_json() const {
    nlohmann::json j;
    j["surface"] = surf.model == Model::Disk ? "disk" : "annulus";
    if (surf.model == Model::Disk) j["n"] = surf.n;
    j["basis"] = bracelets ? "bracelets" : "multicurve";
    j["terms"] = nlohmann::json::array();
    for (auto& [m, c] : terms) {
        nlohmann::json cv = nlohmann::json::object();
        for (auto& [k, e] : m) cv[k.str()] = e;
        j["terms"].push_back({{"curves", cv}, {"coeff", c.to_json()}});
    }
    return j;
}

namespace {

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Mono with_core(Mono m, int k) {
    m.erase(SkCurve::core());
    if (k) m[SkCurve::core()] = k;
    return m;
}

}  // namespace

SkeinElement to_bracelets(const SkeinElement& x) {
    if (x.bracelets) return x;
    SkeinElement r{x.surf, true, {}};
    for (auto& [m, c] : x.terms) {
        auto it = m.find(SkCurve::core());
        int k = it == m.end() ? 0 : it->second;
        // z^k = sum_j C(k,j) T_{k-2j}, the middle term standing for 1
        for (int j = 0; 2 * j <= k; ++j) r.add(with_core(m, k - 2 * j), c * QScalar(binom(k, j)));
    }
    return r;
}

SkeinElement from_bracelets(const SkeinElement& x) {
    if (!x.bracelets) return x;
    SkeinElement r{x.surf, false, {}};
    for (auto& [m, c] : x.terms) {
        auto it = m.find(SkCurve::core());
        int k = it == m.end() ? 0 : it->second;
        if (k == 0) {
            r.add(m, c);
            continue;
        }
        auto co = chebyshev_coeffs(ChebKind::First, k);
        for (int i = 0; i < (int)co.size(); ++i)
            if (co[i]) r.add(with_core(m, i), c * QScalar(co[i]));
    }
    return r;
}

// ---------------------------------------------------------------------------

SkeinEngine::SkeinEngine(SkSurface s) : surf_(s) {}

Diagram SkeinEngine::draw(const Mono& m) const {
    Diagram d{surf_, {}};
    auto push = [&](std::vector<IPt> pts, int a, int b, long long shift = 0) {
        Strand s;
        s.pts = std::move(pts);
        long long base = (long long)d.strands.size() * 1000;
        for (size_t i = 0; i < s.pts.size(); ++i) s.h.push_back(base + (long long)i);
        s.start = a, s.end = b, s.shift = shift;
        d.strands.push_back(std::move(s));
    };
    for (auto& [c, k] : m) {
        if (k < 0) throw InputError("cannot draw negative multiplicity");
        if (!surf_.valid(c)) throw InputError("invalid curve " + c.str());
        for (int i = 0; i < k; ++i) {
            if (surf_.model == Model::Disk) {
                if (surf_.boundary(c)) {
                    // bend into the interior: left of the counterclockwise edge
                    int u = c.a, v = c.b;
                    if (c.a == 0 && c.b == surf_.n - 1 && surf_.n > 2) u = c.b, v = c.a;
                    push(bent(disk_point(u), disk_point(v), (i + 1) * kDiskOff), u, v);
                } else {
                    long long off = k == 1 ? 0 : (2LL * i - (k - 1)) * kDiskOff;
                    push(bent(disk_point(c.a), disk_point(c.b), off), c.a, c.b);
                }
                continue;
            }
            switch (c.kind) {
                case SkCurve::Span: {
                    long long dx = (long long)c.a * kP;
                    if (k == 1)
                        push({{0, 0}, {dx, kH}}, 0, 1);
                    else
                        push({{0, 0}, {dx * kBendNum / kBendDen + (2LL * i - (k - 1)) * kSpanOff, kH * kBendNum / kBendDen}, {dx, kH}},
                             0, 1);
                    break;
                }
                case SkCurve::Bnd:
                    if (c.a == 0)
                        push({{0, 0}, {kP / 2, (i + 1) * kBetaStep}, {kP, 0}}, 0, 0);
                    else
                        push({{0, kH}, {kP / 2, kH - (i + 1) * kBetaStep}, {kP, kH}}, 1, 1);
                    break;
                case SkCurve::Core: {
                    long long y = kH / 3 + i * kCoreStep;
                    push({{kP / 7, y}, {kP / 7 + kP, y}}, -1, -1, kP);
                    break;
                }
                default: throw InputError("invalid curve " + c.str());
            }
        }
    }
    return d;
}

Diagram SkeinEngine::stack(const Diagram& x, const Diagram& y) const {
    Diagram d = y;
    long long top = 0, bot = 0;
    bool first = true;
    for (auto& s : y.strands)
        for (long long h : s.h) top = first ? (first = false, h) : std::max(top, h);
    first = true;
    for (auto& s : x.strands)
        for (long long h : s.h) bot = first ? (first = false, h) : std::min(bot, h);
    long long lift = top - bot + 1000;
    for (auto s : x.strands) {
        for (auto& h : s.h) h += lift;
        d.strands.push_back(std::move(s));
    }
    return d;
}

Diagram SkeinEngine::b_family(int n) const {
    if (surf_.model != Model::Annulus) throw InputError("b_family lives on the annulus");
    if (n < 1) throw InputError("b_family needs n >= 1");
    Diagram d{surf_, {}};
    Strand tent;
    tent.pts = {{0, kH}, {(long long)n * kP / 2, kH / 2}, {(long long)n * kP, kH}};
    tent.h = {0, kTentDir, 2 * kTentDir};
    tent.start = tent.end = 1;
    Strand beta;
    beta.pts = {{0, 0}, {kP / 2, kBetaStep}, {kP, 0}};
    beta.h = {100, 101, 102};
    beta.start = beta.end = 0;
    d.strands = {tent, beta};
    return d;
}

SkeinElement SkeinEngine::resolve(const Diagram& d) const {
    if (!(d.surf == surf_)) throw InputError("diagram on another surface");
    Layout L = find_crossings(d);
    size_t k = L.cross.size();
    if (k > 24) throw InputError("too many crossings to resolve");
    int C = end_sum(d);
    const bool ann = surf_.model == Model::Annulus;
    size_t np = L.pass.size();
    size_t ns = d.strands.size();

    // open strands: piece i runs from passage i-1 to passage i (the ends
    // standing in at -1 and m); closed strands: from passage i to i+1 mod m
    auto pieces_of = [&](int s) -> int {
        int m = (int)L.along[s].size();
        return d.strands[s].closed() ? m : m + 1;
    };
    std::vector<int> piece_base(ns + 1, 0);
    for (size_t s = 0; s < ns; ++s) piece_base[s + 1] = piece_base[s] + pieces_of((int)s);

    QScalar delta = QScalar::mono(4, -1) + QScalar::mono(-4, -1);
    SkeinElement out{surf_, false, {}};
    std::vector<int> partner(2 * np);  // port = 2 * passage + side (0 before, 1 after)
    std::vector<char> seen(piece_base[ns]);

    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        int nA = 0;
        for (size_t c = 0; c < k; ++c) {
            bool A = !((mask >> c) & 1);
            nA += A;
            const Crossing& x = L.cross[c];
            int o = x.over, u = x.under;
            // A pairs the over strand's incoming side with the under strand's
            // outgoing side when the under strand runs to the left
            bool straight = (x.s > 0) == A;
            int o_in = 2 * o, o_out = 2 * o + 1, u_in = 2 * u, u_out = 2 * u + 1;
            if (straight) {
                partner[o_in] = u_out, partner[u_out] = o_in;
                partner[o_out] = u_in, partner[u_in] = o_out;
            } else {
                partner[o_in] = u_in, partner[u_in] = o_in;
                partner[o_out] = u_out, partner[u_out] = o_out;
            }
        }
        int nB = (int)k - nA;
        std::fill(seen.begin(), seen.end(), 0);
        Mono mono;
        int loops = 0;
        bool dead = false;

        // move from passage index i of strand s (or its virtual end) in
        // direction dir; returns the next passage index, or -2 at a strand end
        auto step = [&](int s, int i, int dir, long long& O) {
            int m = (int)L.along[s].size();
            const Strand& st = d.strands[s];
            if (!st.closed()) {
                seen[piece_base[s] + (dir > 0 ? i + 1 : i)] = 1;
                int nx = i + dir;
                return (nx < 0 || nx >= m) ? -2 : nx;
            }
            seen[piece_base[s] + (dir > 0 ? i : (i - 1 + m) % m)] = 1;
            int nx = i + dir;
            if (nx == m) nx = 0, O += st.shift;
            if (nx < 0) nx = m - 1, O -= st.shift;
            return nx;
        };
        auto hop = [&](int s, int i, int dir, long long& O, int& s2, int& i2, int& dir2) {
            int p = L.along[s][i];
            int q = partner[2 * p + (dir > 0 ? 0 : 1)];
            int p2 = q / 2;
            O += L.pass[p2].off - L.pass[p].off;
            s2 = L.pass[p2].strand;
            i2 = L.pass[p2].idx;
            dir2 = (q % 2) ? 1 : -1;
            return q;
        };

        std::vector<char> end_used(2 * ns, 0);
        for (size_t s0 = 0; s0 < ns && !dead; ++s0) {
            const Strand& st0 = d.strands[s0];
            if (st0.closed()) continue;
            for (int side = 0; side < 2 && !dead; ++side) {
                if (end_used[2 * s0 + side]) continue;
                end_used[2 * s0 + side] = 1;
                int s = (int)s0, dir = side == 0 ? 1 : -1;
                int i = side == 0 ? -1 : (int)L.along[s].size();
                long long O = 0;
                int pa = side == 0 ? st0.start : st0.end;
                long long xa = side == 0 ? st0.pts.front().x : st0.pts.back().x;
                while (true) {
                    int nx = step(s, i, dir, O);
                    if (nx == -2) break;
                    int s2, i2, d2;
                    hop(s, nx, dir, O, s2, i2, d2);
                    s = s2, i = i2, dir = d2;
                }
                const Strand& st = d.strands[s];
                int pb = dir > 0 ? st.end : st.start;
                long long xb = (dir > 0 ? st.pts.back().x : st.pts.front().x) + O;
                end_used[2 * s + (dir > 0 ? 1 : 0)] = 1;
                auto cls = classify_arc(surf_, pa, xa, pb, ann ? xb : 0);
                if (!cls) dead = true;
                else mono[*cls] += 1;
            }
        }
        if (dead) continue;
        for (size_t s0 = 0; s0 < ns; ++s0) {
            const Strand& st = d.strands[s0];
            int m = (int)L.along[s0].size();
            if (st.closed() && m == 0) {
                if (st.shift == 0) ++loops;
                else if (std::llabs(st.shift) == kP) mono[SkCurve::core()] += 1;
                else throw std::logic_error("skein: multiply wound loop");
                continue;
            }
            for (int pc = 0; pc < pieces_of((int)s0); ++pc) {
                if (seen[piece_base[s0] + pc]) continue;
                // start just after the passage opening this piece
                int i0 = st.closed() ? pc : pc - 1;
                int start_port = 2 * L.along[s0][i0] + 1;
                int s = (int)s0, i = i0, dir = 1;
                long long O = 0;
                while (true) {
                    int nx = step(s, i, dir, O);
                    if (nx == -2) throw std::logic_error("skein: loop reached an end");
                    int s2, i2, d2;
                    int q = hop(s, nx, dir, O, s2, i2, d2);
                    if (q == start_port) break;
                    s = s2, i = i2, dir = d2;
                }
                if (O == 0) ++loops;
                else if (std::llabs(O) == kP) mono[SkCurve::core()] += 1;
                else throw std::logic_error("skein: multiply wound loop");
            }
        }
        QScalar c = QScalar::mono(2 * kSmooth * (nA - nB) + C);
        for (int l = 0; l < loops; ++l) c *= delta;
        out.add(mono, c);
    }
    return out;
}

SkeinElement SkeinEngine::resolve_weyl(const Diagram& d) const {
    return resolve(d).scaled(QScalar::mono(-end_sum(d)));
}

int SkeinEngine::end_order(const Diagram& d) const { return end_sum(d); }

bool SkeinEngine::compatible(const Mono& a, const Mono& b) const {
    Mono u = a;
    for (auto& [c, k] : b) u[c] += k;
    Mono pos;
    for (auto& [c, k] : u)
        if (k > 0) pos[c] = 1;
    return find_crossings(draw(pos)).cross.empty();
}

int SkeinEngine::pairing(const Mono& a, const Mono& b) {
    long long total = 0;
    for (auto& [c, k] : a)
        for (auto& [e, l] : b) {
            if (c == e || !k || !l) continue;
            auto key = std::make_pair(c, e);
            auto it = pair_cache_.find(key);
            if (it == pair_cache_.end()) {
                Diagram d = stack(draw({{c, 1}}), draw({{e, 1}}));
                if (!find_crossings(d).cross.empty())
                    throw InputError("pairing of crossing curves " + c.str() + ", " + e.str());
                // only pairs with one end from each curve
                int w = end_sum(d) - end_sum(draw({{c, 1}})) - end_sum(draw({{e, 1}}));
                it = pair_cache_.emplace(key, w).first;
            }
            total += (long long)k * l * it->second;
        }
    return (int)total;
}

namespace {

void split_boundary(const SkSurface& s, const Mono& m, Mono& bnd, Mono& rest) {
    for (auto& [c, k] : m) {
        if (!k) continue;
        (s.boundary(c) ? bnd : rest)[c] = k;
    }
}

Mono mono_sum(const Mono& a, const Mono& b) {
    Mono r = a;
    for (auto& [c, k] : b) {
        r[c] += k;
        if (!r[c]) r.erase(c);
    }
    return r;
}

int strands_in(const Mono& m) {
    int n = 0;
    for (auto& [c, k] : m) n += k;
    return n;
}

}  // namespace

SkeinElement SkeinEngine::multiply(const Mono& x, const Mono& y) {
    auto key = std::make_pair(x, y);
    if (auto it = mult_cache_.find(key); it != mult_cache_.end()) return it->second;
    Mono bx, nx, by, ny;
    split_boundary(surf_, x, bx, nx);
    split_boundary(surf_, y, by, ny);
    int h = -pairing(bx, nx) - pairing(by, ny) + 2 * pairing(nx, by) + pairing(bx, by);
    Mono b = mono_sum(bx, by);
    SkeinElement core = multiply_core(nx, ny);
    SkeinElement out{surf_, false, {}};
    for (auto& [M, c] : core.terms) {
        Mono bm, nm;
        split_boundary(surf_, M, bm, nm);
        Mono bb = mono_sum(b, bm);
        int hh = h - pairing(bm, nm) + pairing(b, bm) + pairing(bb, nm);
        out.add(mono_sum(bb, nm), c.shift(hh));
    }
    return mult_cache_.emplace(key, out).first->second;
}

SkeinElement SkeinEngine::multiply_core(const Mono& x, const Mono& y) {
    if (x.empty()) return SkeinElement::basis(surf_, y);
    if (y.empty()) return SkeinElement::basis(surf_, x);
    auto key = std::make_pair(x, y);
    if (auto it = mult_cache_.find(key); it != mult_cache_.end()) return it->second;
    // draw x and y together so shared classes get distinct parallel copies,
    // then lift the strands of x above those of y
    Mono u = mono_sum(x, y);
    Diagram d = draw(u);
    Diagram dx{surf_, {}}, dy{surf_, {}};
    long long lift = 1000LL * (long long)d.strands.size() + 1000;
    size_t next = 0;
    for (auto& [c, k] : u) {
        auto it = x.find(c);
        int kx = it == x.end() ? 0 : it->second;
        for (int i = 0; i < k; ++i, ++next) {
            Strand& s = d.strands[next];
            if (i < kx) {
                for (auto& h : s.h) h += lift;
                dx.strands.push_back(s);
            } else {
                dy.strands.push_back(s);
            }
        }
    }
    SkeinElement out{surf_, false, {}};
    if (strands_in(x) == 1 || find_crossings(d).cross.size() <= (size_t)kDirectCrossings) {
        out = resolve(d).scaled(QScalar::mono(-end_sum(dx) - end_sum(dy)));
    } else {
        // [x] = q^{-w(c, rest)/2} [c][rest]
        SkCurve c = x.begin()->first;
        Mono one{{c, 1}};
        Mono rest = mono_sum(x, {{c, -1}});
        int h = -pairing(one, rest);
        SkeinElement r = multiply_core(rest, y);
        for (auto& [M, co] : r.terms) out += multiply(one, M).scaled(co.shift(h));
    }
    return mult_cache_.emplace(key, out).first->second;
}

SkeinElement SkeinEngine::multiply(const SkeinElement& x, const SkeinElement& y) {
    if (!(x.surf == surf_) || !(y.surf == surf_)) throw InputError("skein element on another surface");
    SkeinElement a = from_bracelets(x), b = from_bracelets(y);
    SkeinElement out{surf_, false, {}};
    for (auto& [m1, c1] : a.terms)
        for (auto& [m2, c2] : b.terms) out += multiply(m1, m2).scaled(c1 * c2);
    return x.bracelets ? to_bracelets(out) : out;
}

// ---------------------------------------------------------------------------

const int kTauStep = 1;

Mono dehn_twist(const Mono& m, int k) {
    Mono r;
    for (auto& [c, e] : m) {
        SkCurve d = c;
        if (c.kind == SkCurve::Span) d.a += kTauStep * k;
        r[d] += e;
    }
    return r;
}

SkeinElement dehn_twist(const SkeinElement& x, int k) {
    if (x.surf.model != Model::Annulus) throw InputError("Dehn twist is defined on the annulus");
    SkeinElement r{x.surf, x.bracelets, {}};
    for (auto& [m, c] : x.terms) r.add(dehn_twist(m, k), c);
    return r;
}

SkeinElement core_power(int n, bool chebyshev) {
    if (n < 0) throw InputError("negative power");
    SkeinElement r{SkSurface::annulus(), false, {}};
    if (!chebyshev) {
        r.add(n ? Mono{{SkCurve::core(), n}} : Mono{}, QScalar(1));
        return r;
    }
    auto co = chebyshev_coeffs(ChebKind::First, n);
    for (int i = 0; i < (int)co.size(); ++i)
        if (co[i]) r.add(i ? Mono{{SkCurve::core(), i}} : Mono{}, QScalar(co[i]));
    return r;
}

int intersection(const SkSurface& s, const SkCurve& c, const IdealArc& e) {
    if (s.model == Model::Disk) {
        if (c.kind != SkCurve::Chord || e.kind != IdealArc::Chord) return 0;
        auto inside = [&](int p) { return e.a < p && p < e.b; };
        if (c.a == e.a || c.a == e.b || c.b == e.a || c.b == e.b) return 0;
        return inside(c.a) != inside(c.b) ? 1 : 0;
    }
    if (e.kind != IdealArc::AnnSpan) return 0;
    if (c.kind == SkCurve::Core) return 1;
    if (c.kind == SkCurve::Span) return std::max(std::abs(c.a - e.a) - 1, 0);
    return 0;
}

SkCurve curve_of_edge(const Triangulation& t, int e) {
    const IdealArc& a = t.edges.at(e).arc;
    switch (a.kind) {
        case IdealArc::Chord: return SkCurve::chord(a.a, a.b);
        case IdealArc::AnnBoundary: return SkCurve::bnd(a.a);
        case IdealArc::AnnSpan: return SkCurve::span(a.a);
        default: break;
    }
    throw InputError("edge without a concrete class");
}

namespace {

IdealArc arc_of(const SkCurve& c) {
    switch (c.kind) {
        case SkCurve::Chord: return IdealArc::chord(c.a, c.b);
        case SkCurve::Bnd: return IdealArc::ann_boundary(c.a);
        case SkCurve::Span: return IdealArc::span(c.a);
        default: return {};
    }
}

}  // namespace

Cutter::Cutter(const Triangulation& t, SkeinEngine& eng) : t_(t), eng_(eng), A_(a_lattice(t)) {
    if (!(SkSurface::of(t) == eng.surface())) throw InputError("triangulation and skein engine disagree");
}

TorusElement Cutter::cut(const Mono& m0) {
    Mono m = mono_sum(m0, {});
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    const SkSurface& s = eng_.surface();
    Vec v(t_.size(), 0);
    Mono other;
    for (auto& [c, k] : m) {
        if (!k) continue;
        int e = c.kind == SkCurve::Core ? -1 : t_.edge_of(arc_of(c));
        if (e >= 0) v[e] += k;
        else other[c] = k;
    }
    TorusElement out(A_);
    if (other.empty()) {
        out = TorusElement::mono(A_, v);
    } else if (m.size() > 1 || m.begin()->second != 1) {
        // [m] = q^{-w(c, rest)/2} [c][rest]
        SkCurve c = other.begin()->first;
        Mono one{{c, 1}};
        Mono rest = mono_sum(m, {{c, -1}});
        int h = -eng_.pairing(one, rest);
        out = QScalar::mono(h) * (cut(one) * cut(rest));
    } else {
        SkCurve c = m.begin()->first;
        int best = -1, bi = 0;
        for (int e : t_.interior_edges()) {
            int i = intersection(s, c, t_.edges[e].arc);
            if (i > 0 && (best < 0 || i < bi)) best = e, bi = i;
        }
        if (best < 0) throw std::logic_error("cut: curve meets no edge");
        // [e][c] = sum, so Cut(c) = A_e^{-1} Cut(sum)
        SkeinElement prod = eng_.multiply(Mono{{curve_of_edge(t_, best), 1}}, m);
        TorusElement sum(A_);
        for (auto& [M, co] : prod.terms) sum += co * cut(M);
        out = TorusElement::mono(A_, vscale(unit(t_.size(), best), -1)) * sum;
    }
    return memo_.emplace(m, out).first->second;
}

TorusElement Cutter::cut(const SkeinElement& x) {
    SkeinElement y = from_bracelets(x);
    TorusElement out(A_);
    for (auto& [m, c] : y.terms) out += c * cut(m);
    return out;
}

Mono mono_of_lamination(const Lamination& L) {
    Mono m;
    for (auto& [c, w] : L.canonical().comps) {
        if (c.loop()) {
            m[SkCurve::core()] += w;
            continue;
        }
        IdealArc a = m_shift(c);
        switch (a.kind) {
            case IdealArc::Chord: m[SkCurve::chord(a.a, a.b)] += w; break;
            case IdealArc::AnnBoundary: m[SkCurve::bnd(a.a)] += w; break;
            case IdealArc::AnnSpan: m[SkCurve::span(a.a)] += w; break;
            default: throw InputError("unsupported lamination component");
        }
    }
    for (auto it = m.begin(); it != m.end();) it = it->second ? std::next(it) : m.erase(it);
    return m;
}

Lamination lamination_of_mono(const SkSurface& s, const Mono& m) {
    Lamination L{s.model, s.model == Model::Disk ? s.n : 0, {}};
    for (auto& [c, k] : m) {
        if (!k) continue;
        switch (c.kind) {
            case SkCurve::Chord: L.comps.push_back({Curve::disk_arc(s.n, c.a, c.b), k}); break;
            case SkCurve::Bnd: L.comps.push_back({Curve::ann_peripheral(c.a), k}); break;
            case SkCurve::Span: L.comps.push_back({Curve::span(c.a), k}); break;
            case SkCurve::Core: L.comps.push_back({Curve::core(), k}); break;
        }
    }
    return L;
}

}  // namespace skq
