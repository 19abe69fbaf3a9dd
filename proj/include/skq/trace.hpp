#pragma once
// Quantum trace: triangle-local state sums into the square-root torus,
// the congruent part in the X-torus, the duality map for A-laminations,
// and rational transport of torus elements under a flip.

#include "skq/lamination.hpp"

namespace skq {

LatticePtr z_lattice(const Triangulation& t);  // form -eps, read in q
LatticePtr x_lattice(const Triangulation& t);  // form 2 eps, read in v = q^-2
LatticePtr a_lattice(const Triangulation& t);  // form pi, read in q

// states at the two ends of an arc word, -1 or +1
struct EndStates {
    int start = -1, end = -1;
};

TorusElement trace_curve(const CurveWord& w, const Triangulation& t, EndStates ends = {});
TorusElement trace_curve(const Curve& c, const Triangulation& t, EndStates ends = {});
// Z-exponents must all be even; X_a = Z_a^{-2}
TorusElement to_congruent_x(const TorusElement& z, LatticePtr xlat);

struct DualityResult {
    TorusElement x;   // element of the X-torus
    Vec lowest;       // lowest exponent (X-lattice)
    int rescale = 0;  // half-exponent removed by the final normalization
    bool components_exact = true;  // each component power needed no rescaling
};
// product of component images in the square-root torus, normalized so the
// extreme term (largest Z-exponents) has coefficient 1
TorusElement duality_z(const Lamination& L, const Triangulation& t, int* rescale = nullptr, bool* exact = nullptr);
DualityResult duality_A(const Lamination& L, const Triangulation& t);

// numerator * prod (1 + q^{-2o} B_xk)^{-1} over the odd exponents o in `den`
// (denominator on the right; the factors commute with each other). On the
// X-torus q^{-2o} = v^o.
struct RationalX {
    TorusElement num;
    Vec xk;                 // exponent vector of X_k in the lattice of num
    std::map<int, int> den;  // odd v-exponent -> multiplicity

    TorusElement factor(int o) const;
    TorusElement den_product() const;
    RationalX& operator+=(const RationalX& o);
    // (num * D^-1) * c B_a, moving the monomial left past the denominators
    RationalX times_mono(const Vec& a, const QScalar& c = QScalar(1)) const;
    // a/D == b iff a == b*D
    bool equals(const TorusElement& b) const;
    bool equals(const RationalX& o) const;
};

// Monomial map of a flip followed by the finite adjoint action. `elt` lives
// on flip(t).first; the output on t.  On the X-torus X_k is B_{e_k}; on the
// square-root torus it is B_{-2 e_k} (defined on balanced elements).
RationalX transport_X(const TorusElement& elt, const Triangulation& t, const FlipReceipt& rc, LatticePtr target);
RationalX transport_Z(const TorusElement& elt, const Triangulation& t, const FlipReceipt& rc, LatticePtr target);

Pointed pointed_x(const TorusElement& x);  // all X-directions positive
// normalized so the term with the largest Z-exponents has coefficient 1
Pointed pointed_z(const TorusElement& z);

}  // namespace skq
