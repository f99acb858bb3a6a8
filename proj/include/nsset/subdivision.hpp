#pragma once

#include "nsset/colimit.hpp"
#include "nsset/poset.hpp"

namespace nsset {

// B(X) = nerve of the face poset.
struct BarrattResult {
    SharpResult sharp;
    NerveResult nerve;
};
BarrattResult barratt(Complex x);

// Shared tables for B(Delta[n]) = Sd(Delta[n]); cached per dimension.
struct BDeltaTables {
    int n;
    Complex delta;        // Delta[n]
    SharpResult sharp;    // its face poset (elements are subsets of [n])
    NerveResult nerve;    // B(Delta[n])

    int element_of_subset(const std::vector<int>& subset) const;
    const std::vector<int>& subset_of_element(int e) const;

    std::vector<std::vector<int>> element_subsets;  // by poset element index
};
const BDeltaTables& bdelta(int n);

// The Kan subdivision computed by skeletal pushouts, together with the
// cell maps Sd(representing map) : B(Delta[n]) -> Sd X and a witness cell
// simplex for every nondegenerate simplex of Sd X.
struct SdResult {
    Complex sd;
    Complex base;
    std::vector<std::vector<SimpMap>> cells;  // [dim][index] : B(Delta[dim]) -> sd
    std::vector<std::vector<std::pair<SimplexId, SimplexId>>> witness;  // sd id -> (x, chain in B(Delta[dim x]))
};

SdResult sd(Complex x);
SdResult sd_iterated(Complex x, int iterations, Complex* intermediate = nullptr);

// Sd(f), computed cellwise from the witnesses.
SimpMap sd_map(const SimpMap& f, const SdResult& sx, const SdResult& sy);

// The natural comparison b_X : Sd X -> B X; degreewise surjective, and an
// isomorphism exactly when X is nonsingular.
SimpMap b_map(const SdResult& sx);

// The last vertex map d_X : Sd X -> X.
SimpMap last_vertex(const SdResult& sx);

// Sd A as a subcomplex of Sd X, for a subcomplex A of X.
Subcomplex sd_subcomplex(const SdResult& sx, const Subcomplex& a);

}  // namespace nsset
