#pragma once
// Laurent polynomials in q^{1/2} and based quantum tori over skew lattices.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace skq {

using Vec = std::vector<int>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPointed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of Z[q^{+-1/2}]. Keys count powers of q^{1/2}.
class QScalar {
public:
    QScalar() = default;
    QScalar(long long c) { if (c) t_[0] = c; }
    static QScalar mono(int half_exp, long long c = 1);
    static QScalar q(int e) { return mono(2 * e); }

    bool zero() const { return t_.empty(); }
    bool nonneg() const;
    const std::map<int, long long>& terms() const { return t_; }

    // multiply by q^{h/2}
    QScalar shift(int h) const;
    // replace q^{1/2} by q^{k/2}; used to read a v-expression in q (k = -4)
    QScalar scale_exp(int k) const;
    // the unique (half_exp, coeff) if this is a single term
    bool single(int& h, long long& c) const;
    int min_exp() const;
    int max_exp() const;

    QScalar operator-() const;
    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o);
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    bool operator==(const QScalar& o) const { return t_ == o.t_; }
    bool operator<(const QScalar& o) const { return t_ < o.t_; }

    std::string str() const;
    nlohmann::json to_json() const;
    static QScalar from_json(const nlohmann::json& j);

private:
    void add(int h, long long c);
    std::map<int, long long> t_;
};

// half_scale converts the form into powers of q^{1/2}:
// B_a B_b = (q^{1/2})^{half_scale * form(a,b)} B_{a+b}.
// A torus "in q" uses half_scale 1 (so the factor is q^{w/2});
// the X torus is written in v = q^{-2} with factor v^{w/2}, i.e. half_scale -2.
struct SkewLattice {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> form;
    int half_scale = 1;

    size_t rank() const { return labels.size(); }
    long long pair(const Vec& a, const Vec& b) const;
    int index(const std::string& label) const;
    bool same(const SkewLattice& o) const;
    void validate() const;
    nlohmann::json to_json() const;
    static SkewLattice from_json(const nlohmann::json& j);
};
using LatticePtr = std::shared_ptr<const SkewLattice>;
LatticePtr make_lattice(std::vector<std::string> labels, std::vector<std::vector<int>> form, int half_scale);

Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vscale(const Vec& a, int k);
Vec unit(size_t n, size_t i);

class TorusElement {
public:
    TorusElement() = default;
    explicit TorusElement(LatticePtr lat) : lat_(std::move(lat)) {}
    static TorusElement mono(LatticePtr lat, const Vec& v, const QScalar& c = QScalar(1));
    static TorusElement one(LatticePtr lat) { return mono(lat, Vec(lat->rank(), 0)); }

    const LatticePtr& lattice() const { return lat_; }
    const std::map<Vec, QScalar>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    QScalar coeff(const Vec& v) const;
    void add(const Vec& v, const QScalar& c);

    TorusElement operator-() const;
    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
    friend TorusElement operator*(const QScalar& s, const TorusElement& a);
    bool operator==(const TorusElement& o) const;
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

    // same element on another lattice with identical rank (no form check)
    TorusElement relabel(LatticePtr lat) const;
    // apply a linear map to exponents; coefficients unchanged
    TorusElement map_exponents(LatticePtr lat, const std::vector<std::vector<int>>& m) const;

    std::string str() const;
    nlohmann::json to_json() const;
    static TorusElement from_json(const nlohmann::json& j);

private:
    void check_same(const TorusElement& o) const;
    LatticePtr lat_;
    std::map<Vec, QScalar> terms_;
};

TorusElement torus_mul(const TorusElement& a, const TorusElement& b);
TorusElement weyl_product(LatticePtr lat, const std::vector<Vec>& monos);
// q-power relating ordered product to the Weyl normalized one, in half units:
// B_{l1}...B_{lk} = (q^{1/2})^{h} B_{sum}
int ordered_product_shift(const SkewLattice& lat, const std::vector<Vec>& monos);
TorusElement torus_pow(const TorusElement& x, int n);

enum class ChebKind { First, Second };
std::vector<long long> chebyshev_coeffs(ChebKind kind, int n);

template <class R>
R chebyshev_eval_generic(ChebKind kind, int n, const R& x, const R& one) {
    if (n < 0) throw InputError("negative Chebyshev degree");
    R p0 = kind == ChebKind::First ? one + one : one;
    if (n == 0) return p0;
    R p1 = x;
    for (int k = 2; k <= n; ++k) {
        R p2 = x * p1 - p0;
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return p1;
}
TorusElement chebyshev_eval(ChebKind kind, int n, const TorusElement& x);

struct Pointed {
    TorusElement elt;
    Vec lowest;
    int rescale = 0;  // half-exponent removed from the input
};
// lowest term by divisibility along coordinate directions in `positive`;
// other coordinates must agree across all terms
Pointed pointed_normalize(const TorusElement& x, const std::vector<int>& positive);
// same, with arbitrary linearly independent direction vectors spanning the lattice
Pointed pointed_normalize_dirs(const TorusElement& x, const std::vector<Vec>& dirs);

}  // namespace skq
