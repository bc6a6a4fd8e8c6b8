#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncq/io.hpp"
#include "ncq/ncpeak.hpp"
#include "ncq/ncqsym.hpp"
#include "ncq/poset.hpp"

using namespace ncq;

TEST_CASE("canonical text round trips") {
    for (const char* s : {"2,5,6|1,3|4", "1,2,3", "1|2|3", "e"})
        CHECK(to_text(parse_setcomp(s)) == s);
    for (const char* s : {"1,4,7/2,5,6/3,8,9", "1,2,3", "1/2/3", "e"})
        CHECK(to_text(parse_setpartition(s)) == s);
    CHECK(to_text(parse_permutation("67325841")) == "6,7,3,2,5,8,4,1");
    CHECK(to_text(parse_permutation("6,7,3,2,5,8,4,1")) == "6,7,3,2,5,8,4,1");
    CHECK(to_text(parse_subset("A={2,4};n=5")) == "A={2,4};n=5");
    CHECK(to_text(parse_subset("B={2,5};n=7"), 'B') == "B={2,5};n=7");
    CHECK(to_text(parse_subset("A={};n=3")) == "A={};n=3");

    // property: print . parse is the identity on every set composition, n <= 5
    for (int n = 0; n <= 5; ++n)
        for (const auto& phi : set_compositions(n)) CHECK(parse_setcomp(to_text(phi)) == phi);
    for (int n = 0; n <= 5; ++n)
        for (const auto& pi : set_partitions(n)) CHECK(parse_setpartition(to_text(pi)) == pi);
}

TEST_CASE("element grammar") {
    Elem e = parse_elem("2*M:1,2 + -1/2*M:1|2");
    CHECK(e.coeff(key_setcomp(Basis::M, parse_setcomp("1,2"))) == Rational(2));
    CHECK(e.coeff(key_setcomp(Basis::M, parse_setcomp("1|2"))) == Rational(BigInt(-1), BigInt(2)));
    CHECK(parse_elem("0").is_zero());
    CHECK(parse_elem("M:1,2") == Elem::single(key_setcomp(Basis::M, parse_setcomp("1,2"))));
    // pair form for Eta/K keys
    Elem k = parse_elem("1*Eta:B={2,5,7};sigma=287134659");
    CHECK(k == Elem::single(key_setcomp(Basis::Eta, parse_setcomp("2,7,8|1,3,4,5,6|9"))));
    CHECK_THROWS_AS(parse_elem("1*Z:1,2"), domain_error);
    CHECK_THROWS_AS(parse_elem("1*K:1,2"), domain_error);  // even block

    // round trip on printed form
    for (int n = 1; n <= 4; ++n)
        for (const auto& phi : set_compositions(n)) {
            Elem x = F_to_M(F_of(phi));
            CHECK(parse_elem(to_text(x)) == x);
        }
}

TEST_CASE("element JSON is byte-stable and round trips") {
    Elem x = K_to_M(K_of(parse_setcomp("1|2,3,4|5")));
    std::string j1 = elem_to_json(x);
    std::string j2 = elem_to_json(elem_from_json(j1));
    CHECK(j1 == j2);
    CHECK(elem_from_json(j1) == x);
    CHECK(j1.find("\"basis\":\"M\"") != std::string::npos);
    // zero element keeps its degree
    Elem z(Basis::M, 3);
    CHECK(elem_from_json(elem_to_json(z)).degree() == 3);
}

TEST_CASE("triple JSON") {
    LabelledPoset t = triple_from_json(
        R"({"vertices":[1,2,3,4], "solid":[[1,2]], "double":[[1,3],[2,4]]})");
    EdgeColouredDigraph g = digraph_of_triple(t);
    CHECK(g.solid == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(g.twin == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
    // explicit labellings survive the round trip
    LabelledPoset t2 = triple_from_json(triple_to_json(t));
    CHECK(digraph_of_triple(t2).solid == g.solid);
    CHECK(digraph_of_triple(t2).twin == g.twin);
    CHECK(Y_expansion_M(t2) == Y_expansion_M(t));
}

TEST_CASE("random rational elements survive the text round trip") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        const auto& all = set_compositions(n);
        Elem e(Basis::M, n);
        for (int t = 0; t < 5; ++t) {
            long long num = static_cast<long long>(rng() % 41) - 20;
            long long den = 1 + static_cast<long long>(rng() % 9);
            e.add(key_setcomp(Basis::M, all[rng() % all.size()]), Rational(BigInt(num), BigInt(den)));
        }
        CHECK(parse_elem(to_text(e)) == e);
        CHECK(elem_from_json(elem_to_json(e)) == e);
    }
}
