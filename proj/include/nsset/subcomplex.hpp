#pragma once

#include <utility>
#include <vector>

#include "nsset/simpmap.hpp"

namespace nsset {

// A simplicial subset of an ambient complex, stored as membership flags on
// nondegenerate simplices.  Invariant: closed under faces.
struct Subcomplex {
    Complex ambient;
    std::vector<std::vector<char>> member;  // [dim][index]

    bool contains(SimplexId x) const {
        return x.dim < static_cast<int>(member.size()) &&
               member[static_cast<size_t>(x.dim)][static_cast<size_t>(x.index)] != 0;
    }
    int member_count() const;
    std::vector<SimplexId> members() const;

    friend bool operator==(const Subcomplex& a, const Subcomplex& b) {
        return structural_equal(*a.ambient, *b.ambient) && a.member == b.member;
    }
};

Subcomplex empty_subcomplex(Complex ambient);
Subcomplex whole_subcomplex(Complex ambient);
Subcomplex subcomplex_closure(Complex ambient, const std::vector<SimplexId>& generators);
bool is_face_closed(const Subcomplex& a);

// The full simplicial subset spanned by a vertex set.
Subcomplex full_subcomplex(Complex ambient, const std::vector<char>& vertex_flags);

// W as a complex of its own, with the inclusion into the ambient set and
// the partial inverse (ambient id -> W id, or (-1,-1)).
struct Materialized {
    Complex complex;
    SimpMap inclusion;
    std::vector<std::vector<SimplexId>> to_sub;  // ambient [dim][index] -> sub id or dim = -1

    SimplexId sub_id(SimplexId ambient_id) const {
        return to_sub[static_cast<size_t>(ambient_id.dim)][static_cast<size_t>(ambient_id.index)];
    }
};
Materialized materialize(const Subcomplex& a);

// Image of a map as a subcomplex of its target.
Subcomplex map_image(const SimpMap& f);

bool is_full(const Subcomplex& a);
bool is_eden(const Subcomplex& a);
bool is_abyss(const Subcomplex& a);

// Slow characterization used as the property-test oracle: every simplex
// whose last (resp. zeroth) vertex lies in A lies in A.
bool eden_last_vertex_oracle(const Subcomplex& a);
bool abyss_zeroth_vertex_oracle(const Subcomplex& a);

// The map X -> Delta[1] labeling A-vertices 0; requires is_eden(a).
SimpMap eden_characteristic(const Subcomplex& a);

// Fiber of a validated map to Delta[1] over an end vertex; checks that the
// resulting square is degreewise cartesian and throws if not.
Subcomplex end_fiber(const SimpMap& chi, int end);

Subcomplex complement_full(const Subcomplex& a);

Subcomplex intersect(const Subcomplex& a, const Subcomplex& b);

}  // namespace nsset
