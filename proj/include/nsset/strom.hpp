#pragma once

#include "nsset/desing.hpp"
#include "nsset/subdivision.hpp"

namespace nsset {

// A simplicial homotopy on W, presented on the explicit product complex so
// the defining diagrams become exact map equalities.
struct Homotopy {
    ProductResult prod;  // W x Delta[1]
    SimpMap map;         // W x Delta[1] -> W
};

// A certified witness for the four conditions of a Strom map k : A -> B:
// k embeds A as an eden, factors through an abyss neighborhood W, which
// deformation retracts to A rel A.
struct StromStructure {
    SimpMap k;      // A -> B
    Subcomplex w;   // abyss in B
    Complex wset;   // W as a complex of its own
    SimpMap i;      // A -> W
    SimpMap j;      // W -> B, embedding onto w
    SimpMap r;      // W -> A, retraction of i
    Homotopy eps;   // deformation of W to i(A) rel A

    const Complex& a() const { return k.source_ptr(); }
    const Complex& b() const { return k.target_ptr(); }
};

struct StromReport {
    bool eden_embedding = false;   // k injective with eden image
    bool abyss_factorization = false;  // w abyss, j embeds W onto w, k = j . i
    bool retraction = false;       // r . i = id
    bool deformation = false;      // eps from i.r to id, stationary on A
    bool all() const { return eden_embedding && abyss_factorization && retraction && deformation; }
};

StromReport verify_strom(const StromStructure& s);

// The Barratt nerve of an eden inclusion into a nonsingular complex is a
// Strom map; W is spanned by the simplices with a face in A and r picks the
// greatest such face.
StromStructure strom_from_barratt_eden(Complex x, const Subcomplex& a);

// Sd^2 of any inclusion into X with Sd X nonsingular is a Strom map,
// obtained from the previous constructor through the comparison
// isomorphisms b.
StromStructure strom_sd2(Complex x, const Subcomplex& a);

// Cobase change along f : A -> C with C nonsingular, with every piece of
// the witness rebuilt on the desingularized pushouts.
StromStructure cobase_change_strom(const StromStructure& s, const SimpMap& f);

// B +_W D(W +_A C) = D(B +_A C).
bool gluing_isomorphism_check(const StromStructure& s, const SimpMap& f);

}  // namespace nsset
