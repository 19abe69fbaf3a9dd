#include "skq/duality.hpp"

#include <boost/rational.hpp>
#include <set>

namespace skq {

namespace {

SkSurface surface_of(Model model, int n) {
    if (model == Model::Disk) return SkSurface::disk(n);
    if (model == Model::Annulus) return SkSurface::annulus();
    throw InputError("skein computations cover the disk and the annulus only");
}

SkCurve skcurve_of(const IdealArc& a) {
    switch (a.kind) {
        case IdealArc::Chord: return SkCurve::chord(a.a, a.b);
        case IdealArc::AnnBoundary: return SkCurve::bnd(a.a);
        case IdealArc::AnnSpan: return SkCurve::span(a.a);
        default: break;
    }
    throw InputError("unsupported ideal arc");
}

void drop_zeros(Mono& m) {
    for (auto it = m.begin(); it != m.end();) it = it->second ? std::next(it) : m.erase(it);
}

const std::vector<Triangulation>& disk_triangulations(int n) {
    static std::map<int, std::vector<Triangulation>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, all_disk_triangulations(n)).first;
    return it->second;
}

nlohmann::json witness(const TorusElement& a, const TorusElement& b) {
    std::set<Vec> keys;
    for (auto& [v, c] : a.terms()) keys.insert(v);
    for (auto& [v, c] : b.terms()) keys.insert(v);
    for (auto& v : keys)
        if (!(a.coeff(v) == b.coeff(v)))
            return {{"coords", v}, {"lhs", a.coeff(v).to_json()}, {"rhs", b.coeff(v).to_json()}};
    return nullptr;
}

}  // namespace

SkeinElement skein_lift_x(const PLamination& Lp, const Triangulation& t) {
    for (auto& [c, w] : Lp.arcs.comps)
        if (!c.loop() && c.peripheral()) throw InputError("P-laminations carry no peripheral components");
    auto bnd = t.boundary_edges();
    if (Lp.pinning.size() != bnd.size()) throw InputError("pinning needs one entry per boundary interval");
    Mono m = mono_of_lamination(Lp.arcs);
    for (size_t i = 0; i < bnd.size(); ++i) m[curve_of_edge(t, bnd[i])] += Lp.pinning[i];
    drop_zeros(m);
    return SkeinElement::basis(SkSurface::of(t), m, true);
}

TorusElement duality_X(const PLamination& Lp, Cutter& cut) {
    return cut.cut(skein_lift_x(Lp, cut.triangulation()));
}

TorusElement duality_X(const PLamination& Lp, const Triangulation& t) {
    SkeinEngine eng(SkSurface::of(t));
    Cutter cut(t, eng);
    return duality_X(Lp, cut);
}

PLamination elementary_lamination(const Triangulation& t, int alpha) {
    PLamination P;
    P.arcs.model = t.model;
    P.arcs.n = t.model == Model::Disk ? t.n_points : 0;
    auto bnd = t.boundary_edges();
    P.pinning.assign(bnd.size(), 0);
    const IdealArc& a = t.edges.at(alpha).arc;
    if (t.edges[alpha].boundary) {
        P.pinning[std::find(bnd.begin(), bnd.end(), alpha) - bnd.begin()] = 1;
    } else if (a.kind == IdealArc::Chord) {
        P.arcs.comps.push_back({Curve::disk_arc(t.n_points, a.a, a.b), 1});
    } else if (a.kind == IdealArc::AnnSpan) {
        P.arcs.comps.push_back({Curve::span(a.a), 1});
    } else {
        throw InputError("no elementary lamination for this edge");
    }
    return P;
}

bool pointed_over_ensemble(const TorusElement& x, const Vec& lowest, const Triangulation& t) {
    if (x.coeff(lowest) != QScalar(1)) return false;
    Matrix p = t.p_matrix();
    try {
        Pointed pt = pointed_normalize_dirs(x, std::vector<Vec>(p.begin(), p.end()));
        return pt.lowest == lowest && pt.rescale == 0;
    } catch (const NotPointed&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// stated elements

StatedElement stated_lift(const Lamination& L) {
    StatedElement b{L.model, L.n, {}};
    for (auto& [c, w] : L.canonical().comps) {
        if (c.loop()) {
            if (w < 0) throw InputError("loops carry positive weights");
            b.comps.push_back({c, w, {}});
        } else if (w > 0) {
            b.comps.push_back({c, w, {-1, -1}});
        } else {
            if (!c.peripheral()) throw InputError("only peripheral arcs carry negative weights");
            b.comps.push_back({c, -w, {1, 1}});
        }
    }
    return b;
}

void check_admissible(const StatedElement& b) {
    for (auto& s : b.comps) {
        if (s.weight < 1) throw InputError("stated components need positive weights");
        if (s.curve.loop()) continue;
        auto ok = [](int x) { return x == 1 || x == -1; };
        if (!ok(s.states.start) || !ok(s.states.end)) throw InputError("states are +1 or -1");
        if (s.curve.peripheral()) {
            if (s.states.start != s.states.end) throw InputError("inadmissible: corner arc with mixed states");
        } else if (s.states.start != -1 || s.states.end != -1) {
            throw InputError("inadmissible: arc with a + state");
        }
    }
}

SkeinElement phi_state_clasp(const StatedElement& b) {
    check_admissible(b);
    Mono m;
    for (auto& s : b.comps) {
        if (s.curve.loop()) {
            m[SkCurve::core()] += s.weight;
            continue;
        }
        int sign = s.curve.peripheral() && s.states.start == 1 ? -1 : 1;
        m[skcurve_of(m_shift(s.curve))] += sign * s.weight;
    }
    drop_zeros(m);
    return SkeinElement::basis(surface_of(b.model, b.n), m, true);
}

TorusElement trace_stated(const StatedElement& b, const Triangulation& t) {
    check_admissible(b);
    auto Z = z_lattice(t);
    TorusElement total = TorusElement::one(Z);
    std::vector<Vec> tops;
    for (auto& s : b.comps) {
        CurveWord word = word_of(s.curve, t);
        TorusElement part(Z);
        if (s.curve.loop()) {
            part = chebyshev_eval(ChebKind::First, s.weight, trace_curve(word, t));
            tops.push_back(vscale(intersection_vector(word, t.size()), s.weight));
        } else {
            part = trace_curve(word, t, s.states);
            // both ends on one boundary edge: read at simultaneous heights
            if (word.edges.front() == word.edges.back()) part = pointed_z(part).elt;
            part = torus_pow(part, s.weight);
            tops.push_back(pointed_z(part).lowest);
        }
        total = total * part;
    }
    return QScalar::mono(-ordered_product_shift(*Z, tops)) * total;
}

// ---------------------------------------------------------------------------
// verifiers

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j{{"check", check}, {"inputs", inputs}, {"lhs", lhs.to_json()}, {"rhs", rhs.to_json()},
                     {"equal", equal}};
    j["witness_term_on_failure"] = equal ? nlohmann::json(nullptr) : witness(lhs, rhs);
    return j;
}

CheckReport verify_square(const Lamination& L, Cutter& cut) {
    const Triangulation& t = cut.triangulation();
    CheckReport r{"square", {{"lamination", L.to_json(t)}}, {}, {}, false};
    r.lhs = ensemble_q(duality_A(L, t).x, t);
    r.rhs = duality_X(tropical_ensemble(L, t), cut);
    r.equal = r.lhs == r.rhs;
    return r;
}

CheckReport verify_trace_cut(const StatedElement& b, Cutter& cut) {
    const Triangulation& t = cut.triangulation();
    nlohmann::json comps = nlohmann::json::array();
    for (auto& s : b.comps)
        comps.push_back({{"curve", s.curve.str()}, {"weight", s.weight}, {"states", {s.states.start, s.states.end}}});
    CheckReport r{"trace-cut", {{"stated", comps}}, {}, {}, false};
    r.lhs = ensemble_balanced(trace_stated(b, t), t);
    r.rhs = cut.cut(phi_state_clasp(b));
    r.equal = r.lhs == r.rhs;
    return r;
}

Triangulation containing_triangulation(const Lamination& L) {
    if (L.model != Model::Disk) throw InputError("containing triangulations are searched on disks");
    std::vector<IdealArc> need;
    for (auto& [c, w] : L.comps)
        if (w && !c.peripheral()) need.push_back(m_shift(c));
    for (auto& T : disk_triangulations(L.n)) {
        bool all = true;
        for (auto& a : need) all = all && T.edge_of(a) >= 0;
        if (all) return T;
    }
    throw InputError("no triangulation contains the shifted arcs");
}

CheckReport containing_monomial_check(const Lamination& L) {
    Triangulation T = containing_triangulation(L);
    CheckReport r{"containing-monomial", {{"lamination", L.to_json(T)}, {"triangulation", T.to_json()}}, {}, {}, false};
    r.lhs = ensemble_q(duality_A(L, T).x, T);
    Mono m = mono_of_lamination(L);
    Vec w(T.size(), 0);
    for (size_t e = 0; e < T.size(); ++e) {
        auto it = m.find(curve_of_edge(T, (int)e));
        if (it == m.end()) continue;
        w[e] = it->second;
        m.erase(it);
    }
    if (!m.empty()) throw InputError("shifted arcs are not edges of the chosen triangulation");
    r.rhs = TorusElement::mono(a_lattice(T), w);
    r.equal = r.lhs == r.rhs;
    return r;
}

// ---------------------------------------------------------------------------
// a-coordinates back to laminations, and the spanning check

std::optional<Lamination> lamination_from_a(const Triangulation& t, const Vec& a) {
    using R = boost::rational<long long>;
    if (t.model != Model::Disk) throw InputError("a-coordinate inversion is implemented on disks");
    int n = t.n_points;
    size_t N = t.size();
    // a is linear in the weights on each maximal compatible family:
    // the peripheral arcs together with the diagonals of one triangulation
    for (auto& T : disk_triangulations(n)) {
        std::vector<Curve> family;
        for (int p = 0; p < n; ++p) family.push_back(Curve::disk_peripheral(n, p));
        for (auto [i, j] : disk_diagonals(T)) family.push_back(Curve::disk_arc(n, i, j));
        if (family.size() != N) throw std::logic_error("family size differs from the edge count");
        std::vector<std::vector<R>> m(N, std::vector<R>(N + 1));
        for (size_t k = 0; k < N; ++k) {
            Vec col = intersection_vector(word_of(family[k], t), N);
            for (size_t i = 0; i < N; ++i) m[i][k] = col[i];
        }
        for (size_t i = 0; i < N; ++i) m[i][N] = 2 * a[i];
        bool singular = false;
        for (size_t c = 0; c < N && !singular; ++c) {
            size_t p = c;
            while (p < N && m[p][c] == R(0)) ++p;
            if (p == N) {
                singular = true;
                break;
            }
            std::swap(m[p], m[c]);
            R d = m[c][c];
            for (auto& x : m[c]) x /= d;
            for (size_t i = 0; i < N; ++i)
                if (i != c && m[i][c] != R(0)) {
                    R f = m[i][c];
                    for (size_t j = c; j <= N; ++j) m[i][j] -= f * m[c][j];
                }
        }
        if (singular) continue;
        Lamination L{Model::Disk, n, {}};
        bool ok = true;
        for (size_t k = 0; k < N && ok; ++k) {
            R w = m[k][N];
            if (w.denominator() != 1 || ((int)k >= n && w < R(0))) ok = false;
            else if (w != R(0)) L.comps.push_back({family[k], (int)w.numerator()});
        }
        if (ok && a_coords2(L, t) == vscale(a, 2)) return L;
    }
    return std::nullopt;
}

SpanningReport spanning_check(const Triangulation& t, int bound) {
    SpanningReport rep;
    size_t N = t.size();
    std::map<Vec, TorusElement> images;  // a -> duality_A
    auto image = [&](const Vec& a) -> const TorusElement* {
        auto it = images.find(a);
        if (it != images.end()) return &it->second;
        auto L = lamination_from_a(t, a);
        if (!L) return nullptr;
        return &images.emplace(a, duality_A(*L, t).x).first->second;
    };
    std::vector<Vec> as;
    Vec a(N, -bound);
    while (true) {
        as.push_back(a);
        size_t i = 0;
        while (i < N && a[i] == bound) a[i++] = -bound;
        if (i == N) break;
        ++a[i];
    }
    // pointed with distinct lowest terms -> independent
    std::vector<const TorusElement*> xs;
    rep.independent = true;
    for (auto& v : as) {
        const TorusElement* x = image(v);
        if (!x) {
            if (rep.witness.empty()) rep.witness = "no congruent lamination with these a-coordinates";
            rep.independent = false;
            continue;
        }
        try {
            Pointed p = pointed_x(*x);
            if (p.rescale || p.lowest != vscale(v, -1)) throw NotPointed("lowest term is not -a");
        } catch (const NotPointed& e) {
            rep.independent = false;
            if (rep.witness.empty()) rep.witness = e.what();
        }
        xs.push_back(x);
    }
    rep.elements = (int)xs.size();
    // peel products by minimal terms
    for (auto* x : xs)
        for (auto* y : xs) {
            ++rep.products;
            TorusElement P = *x * *y;
            bool ok = true;
            for (int steps = 0; ok && !P.zero(); ++steps) {
                const Vec* low = nullptr;
                for (auto& [v, c] : P.terms()) {
                    bool minimal = true;
                    for (auto& [u, d] : P.terms()) {
                        if (&u == &v) continue;
                        bool le = true;
                        for (size_t i = 0; i < N && le; ++i) le = u[i] <= v[i];
                        if (le) {
                            minimal = false;
                            break;
                        }
                    }
                    if (minimal) {
                        low = &v;
                        break;
                    }
                }
                const TorusElement* b = low ? image(vscale(*low, -1)) : nullptr;
                if (!b || steps > 10000) {
                    ok = false;
                    break;
                }
                P -= P.coeff(*low) * *b;
            }
            if (ok) ++rep.expanded;
            else if (rep.witness.empty()) rep.witness = "product does not expand: " + x->str() + " * " + y->str();
        }
    return rep;
}

}  // namespace skq
