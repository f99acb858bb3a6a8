#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsset/corpus.hpp"
#include "nsset/desing.hpp"
#include "nsset/io.hpp"
#include "nsset/subdivision.hpp"

using namespace nsset;

namespace {

// Committed regression: the first complex of the seed-0 corpus.
const char* kSeedZeroCorpus =
    R"({"counts":[3,5,2,2],"dim":3,"faces":{"1/0/0":"0/1 : 0","1/0/1":"0/0 : 0","1/1/0":"0/2 : 0",)"
    R"("1/1/1":"0/0 : 0","1/2/0":"0/2 : 0","1/2/1":"0/1 : 0","1/3/0":"0/1 : 0","1/3/1":"0/0 : 0",)"
    R"("1/4/0":"0/2 : 0","1/4/1":"0/1 : 0","2/0/0":"0/1 : 0 0","2/0/1":"0/1 : 0 0","2/0/2":"0/1 : 0 0",)"
    R"("2/1/0":"1/1 : 0 1","2/1/1":"1/1 : 0 1","2/1/2":"0/0 : 0 0","3/0/0":"1/1 : 0 0 1",)"
    R"("3/0/1":"1/1 : 0 0 1","3/0/2":"1/1 : 0 0 1","3/0/3":"0/0 : 0 0 0","3/1/0":"1/2 : 0 0 1",)"
    R"("3/1/1":"1/2 : 0 0 1","3/1/2":"1/2 : 0 0 1","3/1/3":"0/1 : 0 0 0"},"labels":{}})";

}  // namespace

TEST_CASE("complex json round trip") {
    std::vector<Complex> corpus = {standard_simplex(2), standard_boundary(3), standard_horn(2, 0),
                                   empty_complex(), sd(standard_boundary(2)).sd};
    {
        SplitMix rng(7);
        for (int k = 0; k < 4; ++k) corpus.push_back(corpus_complex(rng.next()));
    }
    for (const auto& x : corpus) {
        nlohmann::json j = complex_to_json(*x);
        std::string text = canonical_dump(j);
        Complex back = complex_from_json(nlohmann::json::parse(text));
        CHECK(structural_equal(*back, *x));
        // labels survive
        for (int n = 0; n <= x->dim(); ++n)
            for (int i = 0; i < x->count(n); ++i) CHECK(back->label({n, i}) == x->label({n, i}));
        CHECK(canonical_dump(complex_to_json(*back)) == text);
    }
}

TEST_CASE("complex json rejects corruption") {
    nlohmann::json j = complex_to_json(*standard_simplex(2));
    // Point one face of the 2-cell at the wrong edge: simplicial identities fail.
    j["faces"]["2/0/0"] = "1/0 : 0 1";
    CHECK_THROWS(complex_from_json(j));

    nlohmann::json truncated = complex_to_json(*standard_simplex(1));
    truncated["dim"] = 3;
    CHECK_THROWS_AS(complex_from_json(truncated), std::invalid_argument);
}

TEST_CASE("poset json round trip") {
    for (const FinPoset& p : {FinPoset::chain(3), FinPoset::antichain(2),
                              FinPoset(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}})}) {
        nlohmann::json j = poset_to_json(p);
        CHECK(poset_from_json(j) == p);
        CHECK(canonical_dump(poset_to_json(poset_from_json(j))) == canonical_dump(j));
        // Hasse output parses back to the same poset.
        CHECK(poset_from_json(poset_to_json(p, true)) == p);
    }
}

TEST_CASE("subcomplex and map json round trip") {
    Complex d2 = standard_simplex(2);
    Subcomplex bd = subcomplex_closure(d2, {{1, 0}, {1, 1}, {1, 2}});
    nlohmann::json j = subcomplex_to_json(bd);
    Subcomplex back = subcomplex_from_json(j);
    CHECK(back.member == bd.member);
    CHECK(canonical_dump(subcomplex_to_json(back)) == canonical_dump(j));

    SdResult s = sd(d2);
    SimpMap b = b_map(s);
    nlohmann::json mj = map_to_json(b);
    SimpMap mback = map_from_json(mj);
    CHECK(mback == b);
    CHECK(canonical_dump(map_to_json(mback)) == canonical_dump(mj));

    // A non-face-closed member list is rejected.
    nlohmann::json bad = subcomplex_to_json(bd);
    bad["members"] = nlohmann::json::array({"1/0"});
    CHECK_THROWS_AS(subcomplex_from_json(bad), std::invalid_argument);
}

TEST_CASE("corpus generation is reproducible") {
    CorpusSpec spec{314, 3, 12, 5};
    auto a = corpus_complexes(spec);
    auto b = corpus_complexes(spec);
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k)
        CHECK(canonical_dump(complex_to_json(*a[k])) == canonical_dump(complex_to_json(*b[k])));
    CHECK(corpus_complexes({314, 3, 12, 0}).empty());
    for (const auto& x : a) {
        x->validate();
        CHECK(x->total_nondegenerate() <= 12);
        CHECK(x->dim() <= 3);
    }
}

TEST_CASE("seed zero corpus regression") {
    auto items = corpus_complexes({0, 3, 12, 1});
    REQUIRE(items.size() == 1);
    CHECK(canonical_dump(complex_to_json(*items[0])) == kSeedZeroCorpus);
}

TEST_CASE("random posets, edens, and maps are well formed") {
    SplitMix rng(99);
    for (int k = 0; k < 10; ++k) {
        FinPoset p = random_poset(rng, 7);
        p.validate();
        Complex x = corpus_complex(rng.next());
        Subcomplex a = random_eden(rng, x);
        CHECK(is_eden(a));
        Subcomplex s = random_subcomplex(rng, x);
        CHECK(is_face_closed(s));
        Complex z = desingularize(corpus_complex(rng.next(), 2, 6)).dx;
        SimpMap f = random_map(rng, x, z);
        CHECK(validate_map(f));
    }
}

TEST_CASE("normal simplex text encoding") {
    NormalSimplex s{{2, 5}, Operator(2, {0, 1, 1, 2})};
    CHECK(encode_normal_simplex(s) == "2/5 : 0 1 1 2");
    CHECK(decode_normal_simplex("2/5 : 0 1 1 2") == s);
    CHECK_THROWS_AS(decode_normal_simplex("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(decode_normal_simplex("2/5 :"), std::invalid_argument);
}
