#include "skq/qtorus.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <sstream>

namespace skq {

using json = nlohmann::json;

QScalar QScalar::mono(int h, long long c) {
    QScalar s;
    if (c) s.t_[h] = c;
    return s;
}

void QScalar::add(int h, long long c) {
    if (!c) return;
    auto it = t_.find(h);
    if (it == t_.end()) {
        t_.emplace(h, c);
        return;
    }
    it->second += c;
    if (!it->second) t_.erase(it);
}

bool QScalar::nonneg() const {
    for (auto& [h, c] : t_)
        if (c < 0) return false;
    return true;
}

QScalar QScalar::shift(int h) const {
    if (!h) return *this;
    QScalar r;
    for (auto& [e, c] : t_) r.t_.emplace_hint(r.t_.end(), e + h, c);
    return r;
}

QScalar QScalar::scale_exp(int k) const {
    QScalar r;
    for (auto& [e, c] : t_) r.add(e * k, c);
    return r;
}

bool QScalar::single(int& h, long long& c) const {
    if (t_.size() != 1) return false;
    h = t_.begin()->first;
    c = t_.begin()->second;
    return true;
}

int QScalar::min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
int QScalar::max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }

QScalar QScalar::operator-() const {
    QScalar r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
    for (auto& [e, c] : o.t_) add(e, c);
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) {
    for (auto& [e, c] : o.t_) add(e, -c);
    return *this;
}

QScalar operator*(const QScalar& a, const QScalar& b) {
    QScalar r;
    for (auto& [e1, c1] : a.t_)
        for (auto& [e2, c2] : b.t_) r.add(e1 + e2, c1 * c2);
    return r;
}

std::string QScalar::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t_) {
        long long a = c < 0 ? -c : c;
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        if (e % 2 == 0)
            os << "q^" << e / 2;
        else
            os << "q^(" << e << "/2)";
    }
    return os.str();
}

json QScalar::to_json() const {
    json j = json::array();
    for (auto& [e, c] : t_) j.push_back({e, c});
    return j;
}

QScalar QScalar::from_json(const json& j) {
    if (!j.is_array()) throw InputError("scalar must be an array of [half_exponent, coefficient]");
    QScalar s;
    for (auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw InputError("bad scalar term");
        s.add(p[0].get<int>(), p[1].get<long long>());
    }
    return s;
}

// ---- lattice ----

long long SkewLattice::pair(const Vec& a, const Vec& b) const {
    long long s = 0;
    size_t n = rank();
    for (size_t i = 0; i < n; ++i) {
        if (!a[i]) continue;
        long long row = 0;
        for (size_t j = 0; j < n; ++j) row += (long long)form[i][j] * b[j];
        s += a[i] * row;
    }
    return s;
}

int SkewLattice::index(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return (int)i;
    return -1;
}

bool SkewLattice::same(const SkewLattice& o) const {
    return half_scale == o.half_scale && labels == o.labels && form == o.form;
}

void SkewLattice::validate() const {
    size_t n = rank();
    if (form.size() != n) throw InputError("form size does not match labels");
    for (size_t i = 0; i < n; ++i) {
        if (form[i].size() != n) throw InputError("form is not square");
        for (size_t j = 0; j < n; ++j)
            if (form[i][j] != -form[j][i]) throw InputError("form is not antisymmetric");
    }
}

json SkewLattice::to_json() const { return {{"labels", labels}, {"form", form}, {"half_scale", half_scale}}; }

SkewLattice SkewLattice::from_json(const json& j) {
    SkewLattice l;
    l.labels = j.at("labels").get<std::vector<std::string>>();
    l.form = j.at("form").get<std::vector<std::vector<int>>>();
    l.half_scale = j.value("half_scale", 1);
    l.validate();
    return l;
}

LatticePtr make_lattice(std::vector<std::string> labels, std::vector<std::vector<int>> form, int half_scale) {
    auto l = std::make_shared<SkewLattice>();
    l->labels = std::move(labels);
    l->form = std::move(form);
    l->half_scale = half_scale;
    l->validate();
    return l;
}

Vec vadd(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}
Vec vsub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}
Vec vscale(const Vec& a, int k) {
    Vec r(a);
    for (auto& x : r) x *= k;
    return r;
}
Vec unit(size_t n, size_t i) {
    Vec r(n, 0);
    r[i] = 1;
    return r;
}

// ---- torus ----

TorusElement TorusElement::mono(LatticePtr lat, const Vec& v, const QScalar& c) {
    if (v.size() != lat->rank()) throw InputError("vector length does not match lattice rank");
    TorusElement t(std::move(lat));
    t.add(v, c);
    return t;
}

QScalar TorusElement::coeff(const Vec& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? QScalar() : it->second;
}

void TorusElement::add(const Vec& v, const QScalar& c) {
    if (c.zero()) return;
    auto it = terms_.find(v);
    if (it == terms_.end()) {
        terms_.emplace(v, c);
        return;
    }
    it->second += c;
    if (it->second.zero()) terms_.erase(it);
}

void TorusElement::check_same(const TorusElement& o) const {
    if (!lat_ || !o.lat_) return;
    if (lat_ != o.lat_ && !lat_->same(*o.lat_)) throw InputError("lattice mismatch");
}

TorusElement TorusElement::operator-() const {
    TorusElement r = *this;
    for (auto& [v, c] : r.terms_) c = -c;
    return r;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    check_same(o);
    if (!lat_) lat_ = o.lat_;
    for (auto& [v, c] : o.terms_) add(v, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    check_same(o);
    if (!lat_) lat_ = o.lat_;
    for (auto& [v, c] : o.terms_) add(v, -c);
    return *this;
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    a.check_same(b);
    TorusElement r(a.lat_ ? a.lat_ : b.lat_);
    if (a.zero() || b.zero()) return r;
    const SkewLattice& L = *r.lat_;
    for (auto& [va, ca] : a.terms_)
        for (auto& [vb, cb] : b.terms_) {
            int h = (int)(L.half_scale * L.pair(va, vb));
            r.add(vadd(va, vb), (ca * cb).shift(h));
        }
    return r;
}

TorusElement operator*(const QScalar& s, const TorusElement& a) {
    TorusElement r(a.lat_);
    if (s.zero()) return r;
    for (auto& [v, c] : a.terms_) r.add(v, s * c);
    return r;
}

bool TorusElement::operator==(const TorusElement& o) const {
    if (lat_ && o.lat_ && lat_ != o.lat_ && !lat_->same(*o.lat_)) return false;
    return terms_ == o.terms_;
}

TorusElement TorusElement::relabel(LatticePtr lat) const {
    if (lat->rank() != (lat_ ? lat_->rank() : lat->rank())) throw InputError("rank mismatch in relabel");
    TorusElement r(std::move(lat));
    r.terms_ = terms_;
    return r;
}

TorusElement TorusElement::map_exponents(LatticePtr lat, const std::vector<std::vector<int>>& m) const {
    TorusElement r(lat);
    size_t n = lat->rank();
    for (auto& [v, c] : terms_) {
        Vec w(n, 0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < v.size(); ++j) w[i] += m[i][j] * v[j];
        r.add(w, c);
    }
    return r;
}

std::string TorusElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")B[";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << "]";
    }
    return os.str();
}

json TorusElement::to_json() const {
    json terms = json::array();
    for (auto& [v, c] : terms_) terms.push_back({{"coords", v}, {"scalar", c.to_json()}});
    json j = {{"terms", terms}};
    if (lat_) j["lattice"] = lat_->to_json();
    return j;
}

TorusElement TorusElement::from_json(const json& j) {
    auto lat = std::make_shared<SkewLattice>(SkewLattice::from_json(j.at("lattice")));
    TorusElement t(lat);
    for (auto& r : j.at("terms")) {
        Vec v = r.at("coords").get<Vec>();
        if (v.size() != lat->rank()) throw InputError("coords length does not match lattice rank");
        t.add(v, QScalar::from_json(r.at("scalar")));
    }
    return t;
}

TorusElement torus_mul(const TorusElement& a, const TorusElement& b) { return a * b; }

int ordered_product_shift(const SkewLattice& lat, const std::vector<Vec>& monos) {
    long long s = 0;
    for (size_t i = 0; i < monos.size(); ++i)
        for (size_t j = i + 1; j < monos.size(); ++j) s += lat.pair(monos[i], monos[j]);
    return (int)(s * lat.half_scale);
}

TorusElement weyl_product(LatticePtr lat, const std::vector<Vec>& monos) {
    Vec sum(lat->rank(), 0);
    for (auto& m : monos) {
        if (m.size() != lat->rank()) throw InputError("vector length does not match lattice rank");
        sum = vadd(sum, m);
    }
    return TorusElement::mono(lat, sum);
}

TorusElement torus_pow(const TorusElement& x, int n) {
    if (n < 0) throw InputError("negative power of a torus element");
    TorusElement r = TorusElement::one(x.lattice());
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
}

std::vector<long long> chebyshev_coeffs(ChebKind kind, int n) {
    if (n < 0) throw InputError("negative Chebyshev degree");
    std::vector<long long> p0{kind == ChebKind::First ? 2LL : 1LL}, p1{0, 1};
    if (n == 0) return p0;
    for (int k = 2; k <= n; ++k) {
        std::vector<long long> p2(k + 1, 0);
        for (size_t i = 0; i < p1.size(); ++i) p2[i + 1] += p1[i];
        for (size_t i = 0; i < p0.size(); ++i) p2[i] -= p0[i];
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return p1;
}

TorusElement chebyshev_eval(ChebKind kind, int n, const TorusElement& x) {
    return chebyshev_eval_generic(kind, n, x, TorusElement::one(x.lattice()));
}

namespace {

Pointed finish_pointed(const TorusElement& x, const Vec& m) {
    QScalar c = x.coeff(m);
    int h;
    long long k;
    if (!c.single(h, k) || k != 1) throw NotPointed("coefficient at the lowest exponent is not a power of q^{1/2}");
    Pointed p{x.lattice() ? QScalar::mono(-h) * x : x, m, h};
    return p;
}

}  // namespace

Pointed pointed_normalize(const TorusElement& x, const std::vector<int>& positive) {
    if (x.zero()) throw NotPointed("zero element");
    size_t n = x.terms().begin()->first.size();
    std::vector<bool> pos(n, false);
    for (int i : positive) pos.at(i) = true;
    Vec m = x.terms().begin()->first;
    for (auto& [v, c] : x.terms())
        for (size_t i = 0; i < n; ++i) {
            if (pos[i])
                m[i] = std::min(m[i], v[i]);
            else if (v[i] != m[i])
                throw NotPointed("terms differ along a non-positive direction");
        }
    if (x.coeff(m).zero()) throw NotPointed("no term at the lowest exponent");
    return finish_pointed(x, m);
}

Pointed pointed_normalize_dirs(const TorusElement& x, const std::vector<Vec>& dirs) {
    using R = boost::rational<long long>;
    if (x.zero()) throw NotPointed("zero element");
    size_t n = x.terms().begin()->first.size();
    size_t k = dirs.size();
    // invert the matrix whose columns are dirs
    std::vector<std::vector<R>> a(n, std::vector<R>(k + n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) a[i][j] = dirs[j][i];
        a[i][k + i] = 1;
    }
    size_t row = 0;
    std::vector<int> pivcol;
    for (size_t col = 0; col < k && row < n; ++col) {
        size_t p = row;
        while (p < n && a[p][col] == R(0)) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        R d = a[row][col];
        for (auto& v : a[row]) v /= d;
        for (size_t i = 0; i < n; ++i)
            if (i != row && a[i][col] != R(0)) {
                R f = a[i][col];
                for (size_t j = 0; j < k + n; ++j) a[i][j] -= f * a[row][j];
            }
        pivcol.push_back((int)col);
        ++row;
    }
    if (row != k) throw NotPointed("direction vectors are dependent");
    auto coords = [&](const Vec& v, std::vector<R>& c, bool& inspan) {
        c.assign(k, 0);
        for (size_t r = 0; r < k; ++r)
            for (size_t i = 0; i < n; ++i) c[r] += a[r][k + i] * v[i];
        inspan = true;
        for (size_t r = k; r < n; ++r) {
            R s = 0;
            for (size_t i = 0; i < n; ++i) s += a[r][k + i] * v[i];
            if (s != R(0)) inspan = false;
        }
    };
    // lowest candidate: compare every term against every other
    const Vec* best = nullptr;
    for (auto& [m, c0] : x.terms()) {
        bool ok = true;
        for (auto& [v, c] : x.terms()) {
            std::vector<R> c2;
            bool in;
            coords(vsub(v, m), c2, in);
            if (!in) {
                ok = false;
                break;
            }
            for (auto& r : c2)
                if (r < R(0) || r.denominator() != 1) ok = false;
            if (!ok) break;
        }
        if (ok) {
            best = &m;
            break;
        }
    }
    if (!best) throw NotPointed("no term divides all others along the directions");
    return finish_pointed(x, *best);
}

}  // namespace skq
