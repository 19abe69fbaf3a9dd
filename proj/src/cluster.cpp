#include "skq/cluster.hpp"

namespace skq {

namespace {

Matrix transpose(const Matrix& m) {
    Matrix r(m.empty() ? 0 : m[0].size(), std::vector<int>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
    return r;
}

Vec p_row(const Triangulation& t, int k) { return t.p_matrix()[k]; }

}  // namespace

TorusElement ensemble_q(const TorusElement& x, const Triangulation& t) {
    return x.map_exponents(a_lattice(t), transpose(t.p_matrix()));
}

TorusElement ensemble_balanced(const TorusElement& z, const Triangulation& t) {
    auto A = a_lattice(t);
    Matrix pt = transpose(t.p_matrix());
    TorusElement r(A);
    for (auto& [v, c] : z.terms()) {
        Vec w(t.size(), 0);
        for (size_t i = 0; i < w.size(); ++i) {
            long long s = 0;
            for (size_t j = 0; j < v.size(); ++j) s += (long long)pt[i][j] * v[j];
            if (s % 2) throw NotBalanced("exponent vector is not balanced");
            w[i] = (int)(-s / 2);
        }
        r.add(w, c);
    }
    return r;
}

RationalX ensemble_rational(const RationalX& x, const Triangulation& t) {
    RationalX r;
    r.num = ensemble_q(x.num, t);
    Matrix pt = transpose(t.p_matrix());
    r.xk.assign(t.size(), 0);
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = 0; j < x.xk.size(); ++j) r.xk[i] += pt[i][j] * x.xk[j];
    r.den = x.den;
    return r;
}

Vec exchange_base(const Triangulation& t, int kappa) {
    Matrix eps = t.exchange_matrix();
    Vec m(t.size(), 0);
    for (size_t b = 0; b < t.size(); ++b) m[b] = std::max(0, -eps[kappa][b]);
    m[kappa] = -1;
    return m;
}

TorusElement quantum_exchange(const Triangulation& t, int kappa) {
    Matrix eps = t.exchange_matrix();
    auto A = a_lattice(t);
    Vec plus(t.size(), 0), minus(t.size(), 0);
    for (size_t b = 0; b < t.size(); ++b) {
        plus[b] = std::max(0, eps[kappa][b]);
        minus[b] = std::max(0, -eps[kappa][b]);
    }
    plus[kappa] = minus[kappa] = -1;
    return TorusElement::mono(A, plus) + TorusElement::mono(A, minus);
}

RationalX transport_A(const TorusElement& x, const Triangulation& t, const FlipReceipt& rc) {
    int k = rc.kappa;
    auto A = a_lattice(t);
    const SkewLattice& src = *x.lattice();
    TorusElement E = quantum_exchange(t, k);
    Vec M = exchange_base(t, k);
    RationalX total;
    total.num = TorusElement(A);
    total.xk = p_row(t, k);
    std::map<int, RationalX> powers;  // E^c
    auto power = [&](int c) -> const RationalX& {
        auto it = powers.find(c);
        if (it != powers.end()) return it->second;
        RationalX r;
        r.xk = total.xk;
        if (c >= 0) {
            r.num = torus_pow(E, c);
        } else {
            r.num = TorusElement::one(A);
            for (int i = 0; i < -c; ++i) {
                // E^-1 = (1 + v Y)^-1 M^-1
                r.den[1] += 1;
                r = r.times_mono(vscale(M, -1));
            }
        }
        return powers.emplace(c, std::move(r)).first->second;
    };
    for (auto& [lam, c] : x.terms()) {
        int e = lam[k];
        Vec rest = lam;
        rest[k] = 0;
        long long h = -src.half_scale * src.pair(rest, vscale(unit(t.size(), k), e));
        const RationalX& P = power(e);
        RationalX term;
        term.xk = P.xk;
        term.den = P.den;
        term.num = TorusElement::mono(A, rest, c.shift((int)h)) * P.num;
        total += term;
    }
    return total;
}

}  // namespace skq
