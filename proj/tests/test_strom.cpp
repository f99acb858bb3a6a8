#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsset/homology.hpp"
#include "nsset/strom.hpp"

using namespace nsset;

namespace {

Subcomplex vertex_sub(const Complex& x, int index) { return subcomplex_closure(x, {{0, index}}); }

}  // namespace

TEST_CASE("strom witness for the eden vertex of the interval") {
    Complex d1 = standard_simplex(1);
    StromStructure s = strom_from_barratt_eden(d1, vertex_sub(d1, 0));
    StromReport report = verify_strom(s);
    CHECK(report.eden_embedding);
    CHECK(report.abyss_factorization);
    CHECK(report.retraction);
    CHECK(report.deformation);
    // W is spanned by {0} and {01} in B(Delta[1]); r collapses both to 0.
    CHECK(f_vector(*s.wset) == std::vector<int>{2, 1});
    CHECK(s.r.apply(SimplexId{0, 0}).base == s.r.apply(SimplexId{0, 1}).base);
}

TEST_CASE("strom witness for the edge eden of the triangle") {
    Complex d2 = standard_simplex(2);
    Subcomplex edge01 = subcomplex_closure(d2, {{1, 0}});
    REQUIRE(is_eden(edge01));
    StromStructure s = strom_from_barratt_eden(d2, edge01);
    CHECK(verify_strom(s).all());
    // W spans the six faces with a face in A: everything except the vertex {2}.
    CHECK(s.wset->count(0) == 6);

    // Break the retraction on purpose: a constant cannot retract a
    // three-vertex A.
    StromStructure broken = s;
    broken.r = constant_map(s.wset, s.a(), {0, 0});
    StromReport bad = verify_strom(broken);
    CHECK(!bad.retraction);
}

TEST_CASE("strom witness when the eden is everything") {
    Complex d2 = standard_simplex(2);
    StromStructure s = strom_from_barratt_eden(d2, whole_subcomplex(d2));
    CHECK(verify_strom(s).all());
    CHECK(structural_equal(*s.wset, s.k.target()));
    CHECK(is_isomorphism(s.r));
}

TEST_CASE("strom witness for the empty eden") {
    Complex d1 = standard_simplex(1);
    StromStructure s = strom_from_barratt_eden(d1, empty_subcomplex(d1));
    CHECK(verify_strom(s).all());
    CHECK(s.a()->empty());
    CHECK(s.wset->empty());
}

TEST_CASE("sd2 of boundary and horn inclusions is strom") {
    Complex d2 = standard_simplex(2);
    Subcomplex boundary = subcomplex_closure(d2, {{1, 0}, {1, 1}, {1, 2}});
    StromStructure s = strom_sd2(d2, boundary);
    CHECK(verify_strom(s).all());
    CHECK(f_vector(*s.a()) == std::vector<int>{12, 12});  // Sd^2 of the hexagon
    CHECK(f_vector(*s.b()) == std::vector<int>{25, 60, 36});

    StromStructure h = strom_sd2(d2, subcomplex_closure(d2, {{1, 0}, {1, 1}}));
    CHECK(verify_strom(h).all());
}

TEST_CASE("strom constructors reject bad input") {
    Complex d2 = standard_simplex(2);
    Subcomplex boundary = subcomplex_closure(d2, {{1, 0}, {1, 1}, {1, 2}});
    CHECK_THROWS_AS(strom_from_barratt_eden(d2, boundary), std::invalid_argument);  // not an eden
    SimpSetBuilder b;
    SimplexId v = b.add_vertex();
    b.add_simplex(1, {nondegenerate(v), nondegenerate(v)});
    Complex circle = b.build();
    CHECK_THROWS_AS(strom_from_barratt_eden(circle, whole_subcomplex(circle)), std::invalid_argument);
}

TEST_CASE("cobase change of a strom map") {
    Complex d1 = standard_simplex(1);
    StromStructure s = strom_from_barratt_eden(d1, vertex_sub(d1, 0));
    // f : BA = point -> point.
    SimpMap f = terminal_map(s.a());
    StromStructure hat = cobase_change_strom(s, f);
    CHECK(verify_strom(hat).all());
    CHECK(gluing_isomorphism_check(s, f));

    // Cobase change along the identity reproduces an equivalent witness.
    SimpMap idf = SimpMap::identity(s.a());
    StromStructure hat2 = cobase_change_strom(s, idf);
    CHECK(verify_strom(hat2).all());
    CHECK(are_isomorphic(hat2.b(), s.b()).has_value());
    CHECK(gluing_isomorphism_check(s, idf));
}

TEST_CASE("cobase change over the empty eden is a disjoint union") {
    Complex d1 = standard_simplex(1);
    StromStructure s = strom_from_barratt_eden(d1, empty_subcomplex(d1));
    SimpMap f = initial_map(standard_simplex(0));
    StromStructure hat = cobase_change_strom(s, f);
    CHECK(verify_strom(hat).all());
    CHECK(hat.b()->count(0) == s.b()->count(0) + 1);
    CHECK(gluing_isomorphism_check(s, f));
}

TEST_CASE("cobase change of the figure situation") {
    // S = Sd^2 of the boundary inclusion of the triangle, f collapses
    // Sd^2(dDelta[2]) to a point; Bhat is the suspension of the 12-gon.
    Complex d2 = standard_simplex(2);
    Subcomplex boundary = subcomplex_closure(d2, {{1, 0}, {1, 1}, {1, 2}});
    StromStructure s = strom_sd2(d2, boundary);
    SimpMap f = terminal_map(s.a());
    StromStructure hat = cobase_change_strom(s, f);
    CHECK(verify_strom(hat).all());
    CHECK(f_vector(*hat.b()) == std::vector<int>{14, 36, 24});
    CHECK(homology(*hat.b()) ==
          HomologyProfile{{HomologyGroup{1, {}}, HomologyGroup{0, {}}, HomologyGroup{1, {}}}});
    CHECK(gluing_isomorphism_check(s, f));

    // Homotopy cocartesian proxy: the pushout and its desingularization
    // have the same homology.
    PushoutResult pb = pushout(s.k, f);
    CHECK(homology(*pb.apex) == homology(*hat.b()));
}

TEST_CASE("iterated cobase change composite stays homotopically sound") {
    Complex d1 = standard_simplex(1);
    StromStructure s1 = strom_from_barratt_eden(d1, vertex_sub(d1, 0));
    SimpMap f1 = terminal_map(s1.a());
    StromStructure hat1 = cobase_change_strom(s1, f1);

    Complex d2 = standard_simplex(2);
    StromStructure s2 = strom_from_barratt_eden(d2, subcomplex_closure(d2, {{1, 0}}));
    SimpMap f2 = constant_map(s2.a(), hat1.b(), {0, 0});
    REQUIRE(validate_map(f2));
    StromStructure hat2 = cobase_change_strom(s2, f2);
    CHECK(verify_strom(hat2).all());

    // Composite C -> Bhat1 -> Bhat2 of two Strom maps; pushout along it is
    // still homologically the same after desingularization.
    SimpMap composite = compose_maps(hat2.k, hat1.k);
    SimpMap h = terminal_map(hat1.a());
    PushoutResult p = pushout(composite, h);
    DesingResult d = desingularize(p.apex);
    CHECK(homology(*p.apex) == homology(*d.dx));
}
