#pragma once

#include "nsset/colimit.hpp"

namespace nsset {

struct DesingStep {
    SimplexId simplex;
    int i;
    int j;
};

// Desingularization by iterated interval collapses: while some
// nondegenerate simplex has equal vertices at positions i < j, push out
// along the degeneracy operator collapsing [i..j].  Each imposed relation
// holds in every quotient with nonsingular target, so the result is the
// reflection into nonsingular simplicial sets.
struct DesingResult {
    Complex dx;
    SimpMap eta;  // X -> dx, degreewise surjective
    std::vector<DesingStep> steps;
};

DesingResult desingularize(Complex x, bool reverse_tiebreak = false);

// Brute-force oracle: enumerate simplicial congruences on the normal forms
// of degrees <= dim+2, keep those with nonsingular quotient, and return the
// quotient by their meet.  Guarded to tiny inputs.
Complex desing_oracle(Complex x);
bool desing_oracle_guard(const FinSimpSet& x);

// D applied to a map, via the factorization property of eta.
SimpMap desing_map(const SimpMap& f, const DesingResult& dx, const DesingResult& dy);

// The structured checks behind the eden-collapse proposition: V embeds as
// an abyss in D(X/A), the point and V are the two fibers of a
// characteristic map, and eta is bijective in degree 0.
struct CollapseReport {
    bool v_injective = false;
    bool v_abyss = false;
    bool fibers_match = false;
    bool degree0_bijective = false;
    int v_vertices = 0;
    Complex dxa;
    bool all() const { return v_injective && v_abyss && fibers_match && degree0_bijective; }
};

CollapseReport verify_collapse_structure(Complex x, const Subcomplex& a);

}  // namespace nsset
