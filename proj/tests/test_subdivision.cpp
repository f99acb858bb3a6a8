#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsset/subdivision.hpp"

using namespace nsset;

namespace {

Complex circle_one_cell() {
    SimpSetBuilder b;
    SimplexId v = b.add_vertex();
    b.add_simplex(1, {nondegenerate(v), nondegenerate(v)});
    return b.build();
}

Complex sphere_one_cell(int n) {
    SimpSetBuilder b;
    SimplexId v = b.add_vertex();
    std::vector<NormalSimplex> faces(
        static_cast<size_t>(n) + 1,
        NormalSimplex{v, Operator(0, std::vector<int>(static_cast<size_t>(n), 0))});
    b.add_simplex(n, std::move(faces));
    return b.build();
}

SimpMap boundary_inclusion(int n) {
    Complex b = standard_boundary(n);
    Complex d = standard_simplex(n);
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(b->dim()) + 1);
    for (int m = 0; m <= b->dim(); ++m)
        for (int i = 0; i < b->count(m); ++i)
            images[static_cast<size_t>(m)].push_back(nondegenerate({m, i}));
    return SimpMap(b, d, std::move(images));
}

}  // namespace

TEST_CASE("barratt nerves of standard complexes") {
    auto b1 = barratt(standard_simplex(1));
    CHECK(f_vector(*b1.nerve.complex) == std::vector<int>{3, 2});
    auto b2 = barratt(standard_simplex(2));
    CHECK(f_vector(*b2.nerve.complex) == std::vector<int>{7, 12, 6});
    auto bc = barratt(circle_one_cell());
    CHECK(are_isomorphic(bc.nerve.complex, standard_simplex(1)).has_value());
}

TEST_CASE("sd of standard complexes") {
    SdResult s1 = sd(standard_simplex(1));
    CHECK(f_vector(*s1.sd) == std::vector<int>{3, 2});
    CHECK(are_isomorphic(s1.sd, barratt(standard_simplex(1)).nerve.complex).has_value());

    SdResult sb2 = sd(standard_boundary(2));
    CHECK(f_vector(*sb2.sd) == std::vector<int>{6, 6});  // hexagon

    SdResult sbb = sd(sb2.sd);
    CHECK(f_vector(*sbb.sd) == std::vector<int>{12, 12});  // 12-gon

    SdResult s2 = sd(standard_simplex(2));
    CHECK(f_vector(*s2.sd) == std::vector<int>{7, 12, 6});
    SdResult s22 = sd(s2.sd);
    CHECK(f_vector(*s22.sd) == std::vector<int>{25, 60, 36});

    SdResult s3 = sd(standard_simplex(3));
    CHECK(f_vector(*s3.sd) == std::vector<int>{15, 50, 60, 24});
}

TEST_CASE("sd of singular complexes") {
    // Sd(Delta[1]/dDelta[1]) is two arcs: nonsingular.
    SdResult sc = sd(circle_one_cell());
    CHECK(f_vector(*sc.sd) == std::vector<int>{2, 2});
    CHECK(sc.sd->is_nonsingular());

    // Sd(Delta[2]/dDelta[2]) is singular.
    SdResult ss = sd(sphere_one_cell(2));
    CHECK(f_vector(*ss.sd) == std::vector<int>{2, 6, 6});
    CHECK(!ss.sd->is_nonsingular());

    SdResult s3 = sd(sphere_one_cell(3));
    CHECK(f_vector(*s3.sd) == std::vector<int>{2, 14, 36, 24});
}

TEST_CASE("sd is functorial") {
    Complex d2 = standard_simplex(2);
    Complex b2 = standard_boundary(2);
    SdResult sd2 = sd(d2);
    SdResult sb2 = sd(b2);

    SimpMap id_sd = sd_map(SimpMap::identity(d2), sd2, sd2);
    CHECK(id_sd == SimpMap::identity(sd2.sd));

    SimpMap incl = boundary_inclusion(2);
    SimpMap sd_incl = sd_map(incl, sb2, sd2);
    CHECK(validate_map(sd_incl));
    CHECK(is_degreewise_injective(sd_incl));

    // Composition: Sd(collapse . inclusion) = Sd(collapse) . Sd(inclusion).
    Complex d0 = standard_simplex(0);
    SdResult sd0 = sd(d0);
    SimpMap col = terminal_map(d2);
    CHECK(sd_map(compose_maps(col, incl), sb2, sd0) ==
          compose_maps(sd_map(col, sd2, sd0), sd_incl));

    // Sd(collapse of an edge) collapses the three subdivision cells.
    Complex d1 = standard_simplex(1);
    SdResult sd1 = sd(d1);
    SimpMap edge_collapse = sd_map(terminal_map(d1), sd1, sd0);
    CHECK(validate_map(edge_collapse));
    CHECK(is_degreewise_surjective(edge_collapse));
    CHECK(!is_degreewise_injective(edge_collapse));
}

TEST_CASE("b map is iso exactly on nonsingular complexes") {
    for (const auto& x : {standard_simplex(2), standard_simplex(3), standard_boundary(3),
                          standard_horn(2, 0)}) {
        SdResult s = sd(x);
        SimpMap b = b_map(s);
        CHECK(is_isomorphism(b));
    }
    for (const auto& x : {circle_one_cell(), sphere_one_cell(2)}) {
        SdResult s = sd(x);
        SimpMap b = b_map(s);
        CHECK(validate_map(b));
        CHECK(is_degreewise_surjective(b));
        CHECK(!is_isomorphism(b));
    }
    // Delta[0]: identity.
    SdResult s0 = sd(standard_simplex(0));
    CHECK(is_isomorphism(b_map(s0)));
}

TEST_CASE("last vertex map") {
    SdResult s0 = sd(standard_simplex(0));
    CHECK(last_vertex(s0) == SimpMap::identity(standard_simplex(0)));

    // On Sd Delta[1] the three vertices {0}, {01}, {1} go to 0, 1, 1.
    Complex d1 = standard_simplex(1);
    SdResult s1 = sd(d1);
    SimpMap d = last_vertex(s1);
    std::multiset<int> targets;
    for (int i = 0; i < s1.sd->count(0); ++i) targets.insert(d.apply(SimplexId{0, i}).base.index);
    CHECK(targets == std::multiset<int>{0, 1, 1});

    // Naturality: d_Y . Sd(f) = f . d_X for the boundary inclusion.
    Complex d2 = standard_simplex(2);
    SdResult sd2 = sd(d2);
    SdResult sb2 = sd(standard_boundary(2));
    SimpMap incl = boundary_inclusion(2);
    CHECK(compose_maps(last_vertex(sd2), sd_map(incl, sb2, sd2)) ==
          compose_maps(incl, last_vertex(sb2)));
}

TEST_CASE("sd creates edens") {
    Complex d2 = standard_simplex(2);
    SdResult s = sd(d2);
    // The boundary is not an eden in Delta[2], but its subdivision is one in Sd Delta[2].
    Subcomplex bd = subcomplex_closure(d2, {{1, 0}, {1, 1}, {1, 2}});
    CHECK(!is_eden(bd));
    Subcomplex sd_bd = sd_subcomplex(s, bd);
    CHECK(is_eden(sd_bd));
    CHECK(eden_last_vertex_oracle(sd_bd));

    Subcomplex horn = subcomplex_closure(d2, {{1, 0}, {1, 1}});
    CHECK(is_eden(sd_subcomplex(s, horn)));

    Subcomplex vertex = subcomplex_closure(d2, {{0, 1}});
    CHECK(is_eden(sd_subcomplex(s, vertex)));
}

TEST_CASE("sd commutes with coproducts and pushouts") {
    Complex d1 = standard_simplex(1);
    Complex d0 = standard_simplex(0);
    auto cp = coproduct({d1, d0});
    SdResult s_cp = sd(cp.complex);
    auto cp_s = coproduct({sd(d1).sd, sd(d0).sd});
    CHECK(are_isomorphic(s_cp.sd, cp_s.complex).has_value());

    // Pushout: the circle as Delta[1] with both endpoints glued.
    SimpMap f = boundary_inclusion(1);
    SimpMap g = terminal_map(standard_boundary(1));
    PushoutResult p = pushout(f, g);
    SdResult sd_apex = sd(p.apex);
    SdResult s_b1 = sd(standard_boundary(1));
    PushoutResult p_sd = pushout(sd_map(f, s_b1, sd(d1)), sd_map(g, s_b1, sd(d0)));
    CHECK(are_isomorphic(sd_apex.sd, p_sd.apex).has_value());
}
