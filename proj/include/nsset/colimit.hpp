#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "nsset/subcomplex.hpp"

namespace nsset {

struct CoproductResult {
    Complex complex;
    std::vector<SimpMap> injections;
};

CoproductResult coproduct(const std::vector<Complex>& parts);
// The map out of a coproduct assembled from maps with a common target.
SimpMap cotuple(const CoproductResult& cp, const std::vector<SimpMap>& maps);

// Degreewise set pushout of B <- A -> C computed on normal forms via
// union-find, then renormalized: a class is degenerate iff it contains a
// member with a non-identity degeneracy; nondegenerate classes are
// re-indexed by their smallest member and the face table rebuilt.
struct PushoutResult {
    Complex apex;
    SimpMap left;   // B -> apex
    SimpMap right;  // C -> apex
};

PushoutResult pushout(const SimpMap& f, const SimpMap& g);

// X/A as the pushout of X <- A -> Delta[0]; A must be nonempty.
PushoutResult collapse(Complex x, const Subcomplex& a);

// The universal map out of a pushout for a commuting cocone (u, v);
// throws if the cocone does not commute with the legs.
SimpMap pushout_induced_map(const PushoutResult& p, const SimpMap& u, const SimpMap& v);

// Factor g through a degreewise surjective e with the same source:
// returns h with g = h . e; throws if e is not surjective on
// nondegenerate classes or no well-defined h exists.
SimpMap factor_through_surjection(const SimpMap& e, const SimpMap& g);

// X x Delta[1] with projections, end inclusions, and normal-form lookup
// for arbitrary (simplex, interval operator) pairs.
struct ProductResult {
    Complex product;
    Complex base;
    SimpMap proj_base;      // X x Delta[1] -> X
    SimpMap proj_interval;  // X x Delta[1] -> Delta[1]
    SimpMap inj0, inj1;     // X -> X x Delta[1]

    // pairs[dim][index] = (X component, interval operator), jointly injective
    std::vector<std::vector<std::pair<NormalSimplex, Operator>>> pairs;
    std::unordered_map<uint64_t, SimplexId> pair_index;

    NormalSimplex pair_normal_form(const NormalSimplex& s, const Operator& t) const;
};

ProductResult product_with_interval(Complex x);

// f x id : X x Delta[1] -> Y x Delta[1].
SimpMap map_times_interval(const SimpMap& f, const ProductResult& px, const ProductResult& py);

// Degreewise cartesianness of a commuting square (top: A -> C, left: A -> B,
// right: C -> D, bottom: B -> D), checked on all degrees up to the bound.
bool is_cartesian_square(const SimpMap& top, const SimpMap& left, const SimpMap& right,
                         const SimpMap& bottom, int max_degree);

}  // namespace nsset
