#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsset/poset.hpp"

using namespace nsset;

namespace {

Complex circle_one_cell() {
    SimpSetBuilder b;
    SimplexId v = b.add_vertex();
    b.add_simplex(1, {nondegenerate(v), nondegenerate(v)});
    return b.build();
}

}  // namespace

TEST_CASE("poset basics") {
    FinPoset c2 = FinPoset::chain(2);
    c2.validate();
    CHECK(c2.leq(0, 2));
    CHECK(!c2.leq(2, 0));
    CHECK(c2.pairs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(c2.hasse_pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    CHECK_THROWS_AS(FinPoset(2, {{0, 1}, {1, 0}}), std::logic_error);   // antisymmetry
    CHECK_THROWS_AS(FinPoset(3, {{0, 1}, {1, 2}}), std::logic_error);   // transitivity
}

TEST_CASE("sieves and cosieves") {
    FinPoset c1 = FinPoset::chain(1);
    CHECK(is_sieve(c1, {1, 0}));
    CHECK(!is_sieve(c1, {0, 1}));
    CHECK(is_cosieve(c1, {0, 1}));
    FinPoset c3 = FinPoset::chain(3);
    CHECK(is_sieve(c3, {1, 1, 0, 0}));  // principal downset
    CHECK(is_sieve(c3, {0, 0, 0, 0}));
    CHECK(is_sieve(c3, {1, 1, 1, 1}));
}

TEST_CASE("nerve of chains and antichains") {
    auto n2 = nerve(FinPoset::chain(2));
    n2.complex->validate();
    CHECK(f_vector(*n2.complex) == std::vector<int>{3, 3, 1});
    CHECK(are_isomorphic(n2.complex, standard_simplex(2)).has_value());

    auto na = nerve(FinPoset::antichain(3));
    CHECK(f_vector(*na.complex) == std::vector<int>{3});

    auto face_poset_d2 = sharp(standard_simplex(2));
    auto nerve_of_it = nerve(face_poset_d2.poset);
    nerve_of_it.complex->validate();
    CHECK(f_vector(*nerve_of_it.complex) == std::vector<int>{7, 12, 6});
    CHECK(nerve_of_it.complex->is_nonsingular());
}

TEST_CASE("nerve maps are functorial and normalize chains") {
    FinPoset c2 = FinPoset::chain(2);
    FinPoset c1 = FinPoset::chain(1);
    auto n2 = nerve(c2);
    auto n1 = nerve(c1);
    MonotoneMap collapse{c2, c1, {0, 0, 1}};
    REQUIRE(collapse.validate());
    SimpMap nc = nerve_map(collapse, n2, n1);
    CHECK(validate_map(nc));
    // The top chain (0,1,2) maps to the degenerate chain (0,0,1).
    NormalSimplex img = nc.apply(n2.index_of({0, 1, 2}));
    CHECK(img.base == n1.index_of({0, 1}));
    CHECK(img.degeneracy == Operator(1, {0, 0, 1}));

    MonotoneMap id2 = identity_monotone(c2);
    CHECK(nerve_map(id2, n2, n2) == SimpMap::identity(n2.complex));
}

TEST_CASE("sharp posets") {
    auto s1 = sharp(standard_simplex(1));
    CHECK(s1.poset.size() == 3);
    CHECK(s1.poset.leq(0, 2));  // vertex 0 below the edge
    CHECK(s1.poset.leq(1, 2));
    CHECK(!s1.poset.leq(0, 1));

    auto s2 = sharp(standard_simplex(2));
    CHECK(s2.poset.size() == 7);
    int chains3 = 0;  // height-3 chains v < e < t witness height 3
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
            for (int c = 0; c < 7; ++c)
                if (a != b && b != c && s2.poset.leq(a, b) && s2.poset.leq(b, c)) ++chains3;
    CHECK(chains3 > 0);

    auto sc = sharp(circle_one_cell());
    CHECK(sc.poset.size() == 2);
    CHECK(sc.poset.leq(0, 1));
    CHECK(!sc.poset.leq(1, 0));
}

TEST_CASE("sharp_map is monotone and functorial") {
    Complex d2 = standard_simplex(2);
    Complex d0 = standard_simplex(0);
    auto sx = sharp(d2);
    auto s0 = sharp(d0);
    SimpMap t = terminal_map(d2);
    MonotoneMap st = sharp_map(t, sx, s0);
    for (int v : st.images) CHECK(v == 0);

    MonotoneMap sid = sharp_map(SimpMap::identity(d2), sx, sx);
    CHECK(sid == identity_monotone(sx.poset));

    // Functoriality on a composite through Delta[0].
    SimpMap incl0 = SimpMap(d0, d2, {{nondegenerate({0, 0})}});
    MonotoneMap a = sharp_map(compose_maps(incl0, t), sx, sx);
    MonotoneMap b = compose(sharp_map(incl0, s0, sx), sharp_map(t, sx, s0));
    CHECK(a == b);
}

TEST_CASE("pc reflections") {
    // pc(Delta[n]) = chain [n].
    for (int n = 0; n <= 3; ++n) {
        PcResult r = pc(*standard_simplex(n));
        CHECK(r.poset == FinPoset::chain(n));
    }
    // pc of the collapsed circle is a point.
    CHECK(pc(*circle_one_cell()).poset == FinPoset::chain(0));
    // pc(boundary of a triangle) is the chain [2]: reachability gives 0 <= 1 <= 2.
    CHECK(pc(*standard_boundary(2)).poset == FinPoset::chain(2));

    // A two-cycle collapses to one class.
    SimpSetBuilder b;
    SimplexId v = b.add_vertex();
    SimplexId w = b.add_vertex();
    b.add_simplex(1, {nondegenerate(w), nondegenerate(v)});  // v -> w
    b.add_simplex(1, {nondegenerate(v), nondegenerate(w)});  // w -> v
    PcResult r = pc(*b.build());
    CHECK(r.poset.size() == 1);
    CHECK(r.class_of_vertex == std::vector<int>{0, 0});
}

TEST_CASE("poset isomorphism search") {
    CHECK(poset_iso(FinPoset::chain(2), FinPoset::chain(2)).has_value());
    CHECK(!poset_iso(FinPoset::chain(1), FinPoset::antichain(2)).has_value());
    // chain vs 'V' shape with same size
    FinPoset v_shape(3, {{0, 1}, {0, 2}});
    CHECK(!poset_iso(v_shape, FinPoset::chain(2)).has_value());
    // relabeled V shape
    FinPoset v_shape2(3, {{1, 0}, {1, 2}});
    auto w = poset_iso(v_shape, v_shape2);
    REQUIRE(w.has_value());
    CHECK(w->validate());
    // q(N(P)) = P for the plumbing used by the counit check.
    for (const FinPoset& p : {v_shape, FinPoset::chain(3), FinPoset::antichain(4),
                              FinPoset(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}})}) {
        auto np = nerve(p);
        PcResult q = pc(*np.complex);
        auto iso = poset_iso(q.poset, p);
        CHECK(iso.has_value());
    }
}

TEST_CASE("product with the chain [1]") {
    FinPoset p = FinPoset::chain(1);
    FinPoset p1 = product_with_chain1(p);
    p1.validate();
    CHECK(p1.size() == 4);
    CHECK(p1.leq(0, 3));   // (0,0) <= (1,1)
    CHECK(!p1.leq(1, 2));  // (1,0) vs (0,1) incomparable
}

#include "nsset/corpus.hpp"

TEST_CASE("the face poset of a subcomplex is a sieve") {
    SplitMix rng(2024);
    for (int k = 0; k < 8; ++k) {
        Complex x = corpus_complex(rng.next());
        Subcomplex a = random_subcomplex(rng, x);
        SharpResult sx = sharp(x);
        std::vector<char> flags;
        flags.reserve(sx.elements.size());
        for (SimplexId e : sx.elements) flags.push_back(a.contains(e) ? 1 : 0);
        CHECK(is_sieve(sx.poset, flags));
        // the nerve of any finite poset is nonsingular
        CHECK(nerve(sx.poset).complex->is_nonsingular());
    }
}
