#pragma once

#include <optional>
#include <vector>

#include "nsset/simpset.hpp"

namespace nsset {

// A simplicial map given by the images of nondegenerate generators; all
// other values follow from the right action.  Construction checks shape
// only; face compatibility is the job of validate_map.
class SimpMap {
public:
    SimpMap(Complex source, Complex target, std::vector<std::vector<NormalSimplex>> images);

    static SimpMap identity(Complex x);

    const Complex& source_ptr() const { return source_; }
    const Complex& target_ptr() const { return target_; }
    const FinSimpSet& source() const { return *source_; }
    const FinSimpSet& target() const { return *target_; }

    NormalSimplex apply(SimplexId x) const;
    NormalSimplex apply(const NormalSimplex& s) const;

    friend bool operator==(const SimpMap& a, const SimpMap& b);

private:
    Complex source_;
    Complex target_;
    std::vector<std::vector<NormalSimplex>> images_;
};

// Face compatibility on every nondegenerate generator.
bool validate_map(const SimpMap& f);
void require_valid(const SimpMap& f, const char* what);

SimpMap compose_maps(const SimpMap& g, const SimpMap& f);

// True iff f sends nondegenerate simplices to nondegenerate simplices
// injectively; equivalent to degreewise injectivity (tested property).
bool is_degreewise_injective(const SimpMap& f);

// Brute-force oracle: injectivity of every degree set up to the stated bound.
bool degreewise_injective_oracle(const SimpMap& f, int max_degree);

bool is_degreewise_surjective(const SimpMap& f);

bool is_isomorphism(const SimpMap& f);
SimpMap invert_isomorphism(const SimpMap& f);

// The representing map of x, as a simplicial map Delta[n] -> X.
SimpMap representing_map(Complex x_owner, SimplexId x);

// N(a) : Delta[m] -> Delta[n] for an operator a : [m] -> [n].
SimpMap operator_simplex_map(const Operator& a);

// The unique maps from/to the (co)terminal objects.
SimpMap terminal_map(Complex x);        // X -> Delta[0]
SimpMap initial_map(Complex x);         // empty -> X
SimpMap constant_map(Complex x, Complex y, SimplexId vertex_in_y);

std::optional<SimpMap> are_isomorphic(Complex x, Complex y);

}  // namespace nsset
