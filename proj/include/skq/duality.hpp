#pragma once
// Duality map for P-laminations through the skein algebra, stated lifts and
// the state-clasp map, and the verifiers comparing the skein and trace
// pipelines on disks and the annulus.

#include "skq/cluster.hpp"
#include "skq/skein.hpp"

namespace skq {

// skein lift of a P-lamination: M-shifted arcs, bracelets for loops,
// boundary edges raised to the pinning (bracelets basis)
SkeinElement skein_lift_x(const PLamination& Lp, const Triangulation& t);
TorusElement duality_X(const PLamination& Lp, Cutter& cut);
TorusElement duality_X(const PLamination& Lp, const Triangulation& t);

// P-lamination whose lift is the single edge alpha
PLamination elementary_lamination(const Triangulation& t, int alpha);

// x == [A^lowest] * F with F a polynomial in the images p*X_a, constant term 1
bool pointed_over_ensemble(const TorusElement& x, const Vec& lowest, const Triangulation& t);

struct StatedArc {
    Curve curve;
    int weight = 1;
    EndStates states;  // ignored for loops
};
struct StatedElement {
    Model model = Model::Disk;
    int n = 0;
    std::vector<StatedArc> comps;
};

// positive weights get states (-,-); negative peripheral weights (+,+)
StatedElement stated_lift(const Lamination& L);
// throws InputError unless every arc is (-,-), or a peripheral arc with equal states
void check_admissible(const StatedElement& b);
SkeinElement phi_state_clasp(const StatedElement& b);
// Weyl-normalized product of the component traces
TorusElement trace_stated(const StatedElement& b, const Triangulation& t);

struct CheckReport {
    std::string check;
    nlohmann::json inputs;
    TorusElement lhs, rhs;
    bool equal = false;
    nlohmann::json to_json() const;
};

CheckReport verify_square(const Lamination& L, Cutter& cut);
CheckReport verify_trace_cut(const StatedElement& b, Cutter& cut);
// disk only: triangulation containing the M-shift of L; throws InputError if none
Triangulation containing_triangulation(const Lamination& L);
CheckReport containing_monomial_check(const Lamination& L);

// congruent disk lamination with the given a-coordinates, if any
std::optional<Lamination> lamination_from_a(const Triangulation& t, const Vec& a);

struct SpanningReport {
    int elements = 0;
    bool independent = false;
    long long products = 0;
    long long expanded = 0;
    std::string witness;  // first failure
    bool ok() const { return independent && products == expanded; }
};
// duality_A images with every |a_e| <= bound on a disk triangulation
SpanningReport spanning_check(const Triangulation& t, int bound);

}  // namespace skq
