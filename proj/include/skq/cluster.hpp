#pragma once
// Cluster K2-torus side: ensemble maps, the quantum exchange relation and
// transport of A-torus elements under a flip.

#include "skq/trace.hpp"

namespace skq {

struct NotBalanced : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// B^X_lam -> B^A_{p^T lam}
TorusElement ensemble_q(const TorusElement& x, const Triangulation& t);
// B^Z_lam -> B^A_{-p^T lam / 2}
TorusElement ensemble_balanced(const TorusElement& z, const Triangulation& t);
// numerator and denominator variable pushed through ensemble_q
RationalX ensemble_rational(const RationalX& x, const Triangulation& t);

// A_{k'} expressed in the A-torus of t
TorusElement quantum_exchange(const Triangulation& t, int kappa);
// the exchange sum as M (1 + v p*X_k), M the Weyl monomial of the second term
Vec exchange_base(const Triangulation& t, int kappa);

// x lives in the A-torus of flip(t); output on t, with denominators in p*X_k
RationalX transport_A(const TorusElement& x, const Triangulation& t, const FlipReceipt& rc);

}  // namespace skq
