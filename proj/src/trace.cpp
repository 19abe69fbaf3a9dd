#include "skq/trace.hpp"

namespace skq {

namespace {

Matrix scaled(const Matrix& m, int k) {
    Matrix r = m;
    for (auto& row : r)
        for (auto& x : row) x *= k;
    return r;
}

}  // namespace

LatticePtr z_lattice(const Triangulation& t) { return make_lattice(t.labels(), scaled(t.exchange_matrix(), -1), 1); }
LatticePtr x_lattice(const Triangulation& t) { return make_lattice(t.labels(), scaled(t.exchange_matrix(), 2), -2); }
LatticePtr a_lattice(const Triangulation& t) { return make_lattice(t.labels(), t.compatibility_matrix(), 1); }

namespace {

// the corner with ordered sides (x, next(x)) vanishes on this state pair
bool corner_ok(const Triangulation& t, int tri, int x, int sx, int y, int sy) {
    const Triangle& T = t.tris[tri];
    if (T.next(x) != y) {
        std::swap(x, y);
        std::swap(sx, sy);
    }
    return !(sx == 1 && sy == -1);
}

}  // namespace

TorusElement trace_curve(const CurveWord& w, const Triangulation& t, EndStates ends) {
    auto L = z_lattice(t);
    TorusElement out(L);
    size_t E = w.edges.size();
    std::vector<int> st(E, -1);
    Vec lam(t.size(), 0);
    // free positions: all crossings of a loop, interior crossings of an arc
    size_t first = w.loop ? 0 : 1, last = w.loop ? E : E - 1;
    if (!w.loop) {
        st[0] = ends.start;
        st[E - 1] = ends.end;
        lam[w.edges[0]] -= st[0];
        lam[w.edges[E - 1]] -= st[E - 1];
    }
    auto seg_ok = [&](size_t i) {  // segment i sits between events i and i+1
        size_t j = w.loop ? (i + 1) % E : i + 1;
        return corner_ok(t, w.tris[i], w.edges[i], st[i], w.edges[j], st[j]);
    };
    // an arc is lifted with height increasing along it, so inside each
    // triangle its corner pieces multiply in that order
    auto stack_shift = [&]() {
        long long h = 0;
        for (size_t i = 0; i < w.tris.size(); ++i)
            for (size_t j = i + 1; j < w.tris.size(); ++j) {
                if (w.tris[i] != w.tris[j]) continue;
                const Triangle& T = t.tris[w.tris[i]];
                int pi[2] = {w.edges[i], w.edges[i + 1]}, si[2] = {st[i], st[i + 1]};
                int pj[2] = {w.edges[j], w.edges[j + 1]}, sj[2] = {st[j], st[j + 1]};
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) {
                        int f = T.next(pi[a]) == pj[b] ? -1 : T.prev(pi[a]) == pj[b] ? 1 : 0;
                        h += (long long)f * si[a] * sj[b];
                    }
            }
        return (int)h;
    };
    auto rec = [&](auto& self, size_t i) -> void {
        if (i == last) {
            if (w.loop) {
                if (!seg_ok(E - 1)) return;
            } else if (!seg_ok(E - 2)) {
                return;
            }
            out.add(lam, QScalar::mono(w.loop ? 0 : stack_shift()));
            return;
        }
        for (int s : {-1, +1}) {
            st[i] = s;
            if (i > 0 && !seg_ok(i - 1)) continue;
            lam[w.edges[i]] -= s;
            self(self, i + 1);
            lam[w.edges[i]] += s;
        }
    };
    if (w.loop && E == 0) return TorusElement::one(L);
    rec(rec, first);
    return out;
}

TorusElement trace_curve(const Curve& c, const Triangulation& t, EndStates ends) {
    return trace_curve(word_of(c, t), t, ends);
}

TorusElement to_congruent_x(const TorusElement& z, LatticePtr xlat) {
    TorusElement r(xlat);
    for (auto& [v, c] : z.terms()) {
        Vec u(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] % 2) throw OddExponent("odd exponent in the square-root torus");
            u[i] = -v[i] / 2;
        }
        r.add(u, c);
    }
    return r;
}

namespace {

TorusElement negate_exponents(const TorusElement& x) {
    TorusElement r(x.lattice());
    for (auto& [v, c] : x.terms()) r.add(vscale(v, -1), c);
    return r;
}

}  // namespace

Pointed pointed_z(const TorusElement& z) {
    std::vector<int> all(z.lattice()->rank());
    for (size_t i = 0; i < all.size(); ++i) all[i] = (int)i;
    Pointed p = pointed_normalize(negate_exponents(z), all);
    p.elt = negate_exponents(p.elt);
    p.lowest = vscale(p.lowest, -1);
    return p;
}

Pointed pointed_x(const TorusElement& x) {
    std::vector<int> all(x.lattice()->rank());
    for (size_t i = 0; i < all.size(); ++i) all[i] = (int)i;
    return pointed_normalize(x, all);
}

TorusElement duality_z(const Lamination& L, const Triangulation& t, int* rescale, bool* exact) {
    auto Z = z_lattice(t);
    TorusElement total = TorusElement::one(Z);
    std::vector<Vec> tops;
    bool ex = true;
    for (auto& [c, w] : L.comps) {
        if (!w) continue;
        CurveWord word = word_of(c, t);
        TorusElement part(Z);
        if (c.loop()) {
            if (w < 0) throw InputError("loops carry positive weights");
            part = chebyshev_eval(ChebKind::First, w, trace_curve(word, t));
            tops.push_back(vscale(intersection_vector(word, t.size()), w));
        } else if (w < 0) {
            if (!c.peripheral()) throw InputError("only peripheral arcs carry negative weights");
            // all states +: the single surviving term
            Vec v = vscale(intersection_vector(word, t.size()), w);
            part = TorusElement::mono(Z, v);
            tops.push_back(v);
        } else {
            TorusElement tr = trace_curve(word, t);
            // both ends on one boundary edge: read at simultaneous heights
            if (word.edges.front() == word.edges.back()) tr = pointed_z(tr).elt;
            Pointed p = pointed_z(torus_pow(tr, w));
            if (p.rescale) ex = false;
            part = p.elt;
            tops.push_back(p.lowest);
        }
        total = total * part;
    }
    Pointed p = pointed_z(total);
    if (rescale) *rescale = p.rescale;
    if (exact) *exact = ex && p.rescale == ordered_product_shift(*Z, tops);
    return p.elt;
}

DualityResult duality_A(const Lamination& L, const Triangulation& t) {
    DualityResult r;
    TorusElement z = duality_z(L, t, &r.rescale, &r.components_exact);
    r.x = to_congruent_x(z, x_lattice(t));
    Pointed p = pointed_x(r.x);
    r.lowest = p.lowest;
    if (p.rescale) throw NotPointed("duality output not normalized");
    return r;
}

// ---------------------------------------------------------------------------
// rational transport

TorusElement RationalX::factor(int o) const {
    auto L = num.lattice();
    return TorusElement::one(L) + TorusElement::mono(L, xk, QScalar::mono(-4 * o));
}

TorusElement RationalX::den_product() const {
    TorusElement d = TorusElement::one(num.lattice());
    for (auto& [o, m] : den)
        for (int i = 0; i < m; ++i) d = d * factor(o);
    return d;
}

RationalX& RationalX::operator+=(const RationalX& o) {
    std::map<int, int> common = den;
    for (auto& [e, m] : o.den) common[e] = std::max(common[e], m);
    auto lift = [&](const RationalX& r) {
        TorusElement n = r.num;
        for (auto& [e, m] : common) {
            int have = r.den.count(e) ? r.den.at(e) : 0;
            for (int i = have; i < m; ++i) n = n * r.factor(e);
        }
        return n;
    };
    TorusElement a = lift(*this), b = lift(o);
    num = a + b;
    den = common;
    return *this;
}

RationalX RationalX::times_mono(const Vec& a, const QScalar& c) const {
    const SkewLattice& L = *num.lattice();
    long long s = L.half_scale * L.pair(a, xk);
    if (s % 2) throw InputError("monomial does not move past the denominator");
    RationalX r;
    r.xk = xk;
    r.num = num * TorusElement::mono(num.lattice(), a, c);
    for (auto& [o, m] : den) r.den[o + (int)(s / 2)] += m;
    return r;
}

bool RationalX::equals(const TorusElement& b) const { return num == b * den_product(); }

bool RationalX::equals(const RationalX& o) const { return num * o.den_product() == o.num * den_product(); }

namespace {

RationalX transport_impl(const TorusElement& elt, const Triangulation& t, const FlipReceipt& rc, LatticePtr target,
                         bool sqrt_torus) {
    Matrix eps = t.exchange_matrix();
    int k = rc.kappa;
    size_t n = t.size();
    // mu'(e'_a) = e_a + [eps_ak]_+ e_k ; mu'(e'_k) = -e_k
    Matrix mu(n, std::vector<int>(n, 0));
    for (size_t a = 0; a < n; ++a) {
        if ((int)a == k) {
            mu[k][k] = -1;
            continue;
        }
        mu[a][a] = 1;
        mu[k][a] = std::max(0, eps[a][k]);
    }
    RationalX total;
    total.num = TorusElement(target);
    total.xk = vscale(unit(n, k), sqrt_torus ? -2 : 1);
    for (auto& [lam, c] : elt.terms()) {
        Vec m(n, 0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m[i] += mu[i][j] * lam[j];
        long long e = 0;
        for (size_t b = 0; b < n; ++b) e += (long long)eps[k][b] * m[b];
        if (sqrt_torus) {
            if (e % 2) throw InputError("transport of an unbalanced square-root monomial");
            e = -e / 2;
        }
        int nn = (int)e;
        RationalX term;
        term.xk = total.xk;
        term.num = TorusElement::mono(target, m, c);
        for (int j = 1; j <= nn; ++j) term.num = term.num * term.factor(2 * j - 1);
        for (int j = 0; j < -nn; ++j) term.den[-(2 * j + 1)] += 1;
        total += term;
    }
    return total;
}

}  // namespace

RationalX transport_X(const TorusElement& elt, const Triangulation& t, const FlipReceipt& rc, LatticePtr target) {
    return transport_impl(elt, t, rc, target, false);
}

RationalX transport_Z(const TorusElement& elt, const Triangulation& t, const FlipReceipt& rc, LatticePtr target) {
    return transport_impl(elt, t, rc, target, true);
}

}  // namespace skq
