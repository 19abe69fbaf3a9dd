#pragma once
// Skein algebra of the marked disk D_n and the annulus A11 (one marked point
// on each boundary component): diagram resolution, multicurve and bracelets
// bases, structure constants, Dehn twists and the cutting map.

#include <map>
#include <optional>

#include "skq/trace.hpp"

namespace skq {

// Curve classes. Disk: Chord(a<b) between marked points, including boundary
// edges. Annulus: Bnd(p) boundary edge at point p, Span(k) arc from p0 to p1
// whose lift moves k periods, Core the essential loop z.
struct SkCurve {
    enum Kind { Chord, Bnd, Span, Core } kind = Chord;
    int a = 0, b = 0;

    static SkCurve chord(int i, int j) { return {Chord, std::min(i, j), std::max(i, j)}; }
    static SkCurve bnd(int p) { return {Bnd, p, 0}; }
    static SkCurve span(int k) { return {Span, k, 0}; }
    static SkCurve core() { return {Core, 0, 0}; }

    auto operator<=>(const SkCurve&) const = default;
    std::string str() const;
};

struct SkSurface {
    Model model = Model::Disk;
    int n = 0;  // disk size

    bool operator==(const SkSurface&) const = default;
    bool boundary(const SkCurve& c) const;
    bool valid(const SkCurve& c) const;
    int n_points() const { return model == Model::Disk ? n : 2; }
    static SkSurface disk(int n);
    static SkSurface annulus() { return {Model::Annulus, 0}; }
    static SkSurface of(const Triangulation& t);
};

// simple multicurve: class -> multiplicity (negative only on boundary edges)
using Mono = std::map<SkCurve, int>;
std::string mono_str(const Mono& m);

struct SkeinElement {
    SkSurface surf;
    bool bracelets = false;  // Core multiplicity k means T_k(z) instead of z^k
    std::map<Mono, QScalar> terms;

    static SkeinElement basis(SkSurface s, const Mono& m, bool bracelets = false);
    void add(const Mono& m, const QScalar& c);
    bool zero() const { return terms.empty(); }
    bool positive() const;  // all coefficients in Z>=0[q^{+-1/2}]
    SkeinElement& operator+=(const SkeinElement& o);
    friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
    bool operator==(const SkeinElement& o) const { return surf == o.surf && bracelets == o.bracelets && terms == o.terms; }
    SkeinElement scaled(const QScalar& c) const;
    std::string str() const;
    nlohmann::json to_json() const;
};

SkeinElement to_bracelets(const SkeinElement& x);
SkeinElement from_bracelets(const SkeinElement& x);

// exact plane model of diagrams (integer coordinates)
struct IPt {
    long long x = 0, y = 0;
    bool operator==(const IPt&) const = default;
};

struct Strand {
    std::vector<IPt> pts;
    std::vector<long long> h;  // elevation at each vertex, linear in between
    int start = -1, end = -1;  // marked points; both -1 for a closed strand
    long long shift = 0;       // closed strand on the annulus: pts.back() = pts.front() + (shift, 0)
    bool closed() const { return start < 0; }
};

struct Diagram {
    SkSurface surf;
    std::vector<Strand> strands;
};

class SkeinEngine {
public:
    explicit SkeinEngine(SkSurface s);
    const SkSurface& surface() const { return surf_; }

    // canonical crossingless drawing (non-negative multiplicities)
    Diagram draw(const Mono& m) const;
    // value of an arbitrary diagram in the multicurve basis
    SkeinElement resolve(const Diagram& d) const;
    // same, with the end heights at every marked point read as simultaneous
    SkeinElement resolve_weyl(const Diagram& d) const;
    // relation (C) exponent of the ends of d, in units of q^{1/2}
    int end_order(const Diagram& d) const;
    // Weyl pairing: [A][B] = q^{w/2} [A u B] for disjoint A, B
    int pairing(const Mono& a, const Mono& b);
    SkeinElement multiply(const Mono& x, const Mono& y);
    SkeinElement multiply(const SkeinElement& x, const SkeinElement& y);
    // x stacked above y
    Diagram stack(const Diagram& x, const Diagram& y) const;
    bool compatible(const Mono& a, const Mono& b) const;

    // the two-arc family on the annulus: an arc at p1 running n times around
    // (n-1 self-crossings) together with the boundary edge at p0
    Diagram b_family(int n) const;

    size_t cache_size() const { return mult_cache_.size(); }

private:
    SkSurface surf_;
    std::map<std::pair<Mono, Mono>, SkeinElement> mult_cache_;
    std::map<std::pair<SkCurve, SkCurve>, int> pair_cache_;
    SkeinElement multiply_core(const Mono& x, const Mono& y);
};

// conventions of the right-handed twist: tau(Span k) = Span(k + kTauStep)
extern const int kTauStep;
SkeinElement dehn_twist(const SkeinElement& x, int k);
Mono dehn_twist(const Mono& m, int k);
// z^n, or the Chebyshev polynomial T_n(z) (T_0 = 2), in the multicurve basis
SkeinElement core_power(int n, bool chebyshev);

// intersection number of a class with an ideal arc of a triangulation
int intersection(const SkSurface& s, const SkCurve& c, const IdealArc& e);
// class of an edge of a disk or annulus triangulation
SkCurve curve_of_edge(const Triangulation& t, int e);

// cutting map into the A-torus of t
class Cutter {
public:
    Cutter(const Triangulation& t, SkeinEngine& eng);
    TorusElement cut(const Mono& m);               // multicurve basis element
    TorusElement cut(const SkeinElement& x);       // either basis
    const Triangulation& triangulation() const { return t_; }

private:
    Triangulation t_;
    SkeinEngine& eng_;
    LatticePtr A_;
    std::map<Mono, TorusElement> memo_;
};

// lamination <-> basis element through the M-shift (peripheral weights become
// boundary exponents, loops become Chebyshev bracelets)
Mono mono_of_lamination(const Lamination& L);
Lamination lamination_of_mono(const SkSurface& s, const Mono& m);

}  // namespace skq
