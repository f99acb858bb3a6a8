#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsset/delta.hpp"

using namespace nsset;

TEST_CASE("elementary operators") {
    Operator d0 = elementary(OperatorKind::face, 0, 1);
    CHECK(d0.images() == std::vector<int>{1});
    CHECK(d0.source_dim() == 0);
    CHECK(d0.target_dim() == 1);

    Operator e2 = elementary(OperatorKind::vertex, 2, 3);
    CHECK(e2.images() == std::vector<int>{2});

    Operator s0 = elementary(OperatorKind::degeneracy, 0, 2);
    CHECK(s0.images() == std::vector<int>{0, 0, 1});
    CHECK(s0.source_dim() == 2);
    CHECK(s0.target_dim() == 1);

    CHECK_THROWS_AS(elementary(OperatorKind::face, 3, 2), std::out_of_range);
    CHECK_THROWS_AS(elementary(OperatorKind::degeneracy, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(elementary(OperatorKind::vertex, 4, 3), std::out_of_range);
}

TEST_CASE("composition") {
    Operator d0 = Operator::face(0, 1);
    Operator s0 = Operator::degeneracy(0, 1);
    Operator c = compose(d0, s0);
    CHECK(c.images() == std::vector<int>{1, 1});
    CHECK(c.source_dim() == 1);
    CHECK(c.target_dim() == 1);

    Operator a(3, {0, 2, 2, 3});
    CHECK(compose(Operator::identity(3), a) == a);
    CHECK(compose(a, Operator::identity(3)) == a);

    CHECK(compose(Operator::degeneracy(0, 2), Operator::face(1, 2)) == Operator::identity(1));

    CHECK_THROWS_AS(compose(d0, d0), std::invalid_argument);
}

TEST_CASE("epi-mono factorization spec values") {
    Operator a(2, {0, 0, 2});
    auto [epi, mono] = epi_mono_factor(a);
    CHECK(epi.images() == std::vector<int>{0, 0, 1});
    CHECK(mono.images() == std::vector<int>{0, 2});

    auto idf = epi_mono_factor(Operator::identity(4));
    CHECK(idf.epi == Operator::identity(4));
    CHECK(idf.mono == Operator::identity(4));

    auto vf = epi_mono_factor(Operator::vertex(2, 5));
    CHECK(vf.epi == Operator::identity(0));
    CHECK(vf.mono == Operator::vertex(2, 5));
}

TEST_CASE("epi-mono factorization is exact and unique, exhaustively to dim 4") {
    for (int m = 0; m <= 4; ++m) {
        for (int n = 0; n <= 4; ++n) {
            for (const auto& a : all_operators(m, n)) {
                auto [epi, mono] = epi_mono_factor(a);
                CHECK(epi.is_surjective());
                CHECK(mono.is_injective());
                CHECK(compose(mono, epi) == a);
                // Uniqueness: brute force over all candidate factorizations.
                int found = 0;
                for (int k = 0; k <= std::min(m, n); ++k)
                    for (const auto& e : all_surjections(m, k))
                        for (const auto& mo : all_injections(k, n))
                            if (compose(mo, e) == a) ++found;
                CHECK(found == 1);
            }
        }
    }
}

TEST_CASE("factorization respects composition, exhaustively to dim 4") {
    for (int m = 0; m <= 3; ++m)
        for (int k = 0; k <= 4; ++k)
            for (int n = 0; n <= 4; ++n)
                for (const auto& b : all_operators(m, k))
                    for (const auto& a : all_operators(k, n)) {
                        auto f = epi_mono_factor(compose(a, b));
                        CHECK(compose(f.mono, f.epi) == compose(a, b));
                    }
}

TEST_CASE("sections of surjections") {
    for (int m = 0; m <= 4; ++m) {
        for (int k = 0; k <= m; ++k) {
            for (const auto& e : all_surjections(m, k)) {
                auto sections = all_sections(e);
                CHECK(!sections.empty());
                for (const auto& s : sections) {
                    CHECK(s.is_injective());
                    CHECK(compose(e, s) == Operator::identity(k));
                }
                Operator min_section = e.minimal_section();
                CHECK(compose(e, min_section) == Operator::identity(k));
                for (const auto& s : sections)
                    for (size_t i = 0; i < s.images().size(); ++i)
                        CHECK(min_section.images()[i] <= s.images()[i]);
            }
        }
    }
    // The section used by the interval-collapse step: rho given by 0,...,k -> 0
    // has minimal section 0 -> 0.
    Operator rho(1, {0, 0, 1});
    CHECK(rho.minimal_section().images() == std::vector<int>{0, 2});
}

TEST_CASE("operator text round trip") {
    Operator a(3, {0, 2, 2, 3});
    CHECK(a.to_string() == "3 3 : 0 2 2 3");
    CHECK(parse_operator(a.to_string()) == a);
    CHECK_THROWS_AS(parse_operator("junk"), std::invalid_argument);
    CHECK_THROWS_AS(parse_operator("1 1 : 0"), std::invalid_argument);
}

TEST_CASE("classification predicates") {
    CHECK(Operator::identity(2).is_identity());
    CHECK(Operator::identity(2).is_injective());
    CHECK(Operator::identity(2).is_surjective());
    CHECK(Operator::face(1, 3).is_injective());
    CHECK(!Operator::face(1, 3).is_surjective());
    CHECK(Operator::degeneracy(1, 3).is_surjective());
    CHECK(!Operator::degeneracy(1, 3).is_injective());
    CHECK_THROWS_AS(Operator(2, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Operator(2, {0, 3}), std::invalid_argument);
}
