#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "finaltypes/enumerate.hpp"
#include "finaltypes/errors.hpp"
#include "finaltypes/orders.hpp"
#include "finaltypes/reference.hpp"

#include "json.hpp"

using namespace finaltypes;

namespace {

Partition P(std::string_view text) {
    return parse_partition(text);
}

}  // namespace

TEST_CASE("right-dominance") {
    CHECK(le_do(P("2,2"), P("3,1")));
    CHECK(le_do(P("4"), P("3,1")));
    CHECK_FALSE(le_do(P("3,1"), P("2,2")));
    CHECK_FALSE(le_do(P("5,1"), P("2,2,2")));
    for (const Partition& d : list_partitions(6)) {
        CHECK(le_do(d, d));
    }
    CHECK_THROWS_AS(le_do(P("3"), P("2,2")), std::invalid_argument);
}

TEST_CASE("left-dominance") {
    CHECK(le_do_left(P("3,1"), P("4")));
    CHECK_FALSE(le_do_left(P("4"), P("3,1")));
    CHECK(le_do_left(P("2,2"), P("3,1")));
    for (const Partition& d : list_partitions(6)) {
        CHECK(le_do_left(d, d));
    }
}

TEST_CASE("dominance variants coincide on equal lengths") {
    for (int g = 1; g <= 10; ++g) {
        const std::vector<Partition> all = list_partitions(g);
        for (const Partition& a : all) {
            for (const Partition& b : all) {
                if (a.size() == b.size()) {
                    CHECK(le_do(a, b) == le_do_left(a, b));
                }
            }
        }
    }
}

TEST_CASE("grouping order") {
    CHECK(le_pp(P("3"), P("1,1,1")));
    CHECK(le_pp(P("3,2"), P("2,1,1,1")));
    CHECK_FALSE(le_pp(P("3,3"), P("2,2,2")));
    CHECK(le_pp(P("4,2"), P("3,2,1")));
    CHECK_FALSE(le_pp(P("2,2"), P("3,1")));
    CHECK(le_pp(P("6,6,5"), P("6,6,5")));
}

TEST_CASE("ft oracle") {
    CHECK(le_ft_oracle(P("3,3"), P("2,2,2")));
    CHECK_FALSE(le_ft_oracle(P("2,2"), P("3,1")));
    CHECK_FALSE(le_ft_oracle(P("3,1"), P("2,2")));
    CHECK(le_ft_oracle(P("3,2,1"), P("3,2,1")));
}

TEST_CASE("stripping common extremes") {
    CHECK(strip_common_extremes(P("3,1"), P("2,1,1")) ==
          std::pair{P("3"), P("2,1")});
    CHECK(strip_common_extremes(P("3,3,1"), P("3,2,1,1")) ==
          std::pair{P("3"), P("2,1")});
    CHECK(strip_common_extremes(P("4,2"), P("3,3")) == std::pair{P("4,2"), P("3,3")});
    // identical pairs reduce to the last part
    CHECK(strip_common_extremes(P("3,2,1"), P("3,2,1")) == std::pair{P("1"), P("1")});
    CHECK(strip_common_extremes(P("2"), P("2")) == std::pair{P("2"), P("2")});

    // each strip preserves the ft verdict (checked via the oracle)
    for (int g = 2; g <= 8; ++g) {
        const std::vector<Partition> all = list_partitions(g);
        for (const Partition& a : all) {
            for (const Partition& b : all) {
                const auto [sa, sb] = strip_common_extremes(a, b);
                if (sa.weight() != a.weight()) {
                    CHECK(le_ft_oracle(a, b) == le_ft_oracle(sa, sb));
                }
            }
        }
    }
}

TEST_CASE("ft decider short-circuits") {
    CHECK(le_ft(P("4,2"), P("3,3")) == Ternary::no);   // same length, distinct
    CHECK(le_ft(P("5,1"), P("3,2,1")) == Ternary::yes);
    CHECK(le_ft(P("2,2,2"), P("3,3")) == Ternary::no); // longer never below shorter
    CHECK(le_ft(P("3,3"), P("2,2,2")) == Ternary::yes);

    // above the enumeration cap: lemmas still decide these
    CHECK(le_ft(P("25,5"), P("10,10,10")) == Ternary::no);       // dominance fails
    CHECK(le_ft(P("14,14"), P("16,11,1")) == Ternary::no);       // last-part-one criterion
    CHECK(le_ft(P("15,15"), P("15,14,1")) == Ternary::yes);      // strips to 15 vs 14,1
    CHECK(le_ft(P("16,14"), P("14,14,2")) == Ternary::yes);      // grouping: 14+2 = 16
    // no lemma reaches this pair and 30 > cap
    CHECK(le_ft(P("15,15"), P("10,10,10")) == Ternary::undecided);
}

TEST_CASE("ft decider equals the oracle on every pair up to g = 9") {
    for (int g = 1; g <= 9; ++g) {
        const std::vector<Partition> all = list_partitions(g);
        for (const Partition& a : all) {
            for (const Partition& b : all) {
                const Ternary t = le_ft(a, b);
                REQUIRE(t != Ternary::undecided);
                CHECK((t == Ternary::yes) == le_ft_oracle(a, b));
            }
        }
    }
}

TEST_CASE("same-length distinct partitions are ft-incomparable") {
    for (int g = 1; g <= 9; ++g) {
        const std::vector<Partition> all = list_partitions(g);
        for (const Partition& a : all) {
            for (const Partition& b : all) {
                if (a != b && a.size() == b.size()) {
                    CHECK_FALSE(le_ft_oracle(a, b));
                }
            }
        }
    }
}

TEST_CASE("ft implies fewer or equal parts and dominance") {
    for (int g = 1; g <= 9; ++g) {
        const std::vector<Partition> all = list_partitions(g);
        for (const Partition& a : all) {
            for (const Partition& b : all) {
                if (le_ft_oracle(a, b)) {
                    CHECK(a.size() <= b.size());
                    CHECK(le_do(a, b));
                }
            }
        }
    }
}

TEST_CASE("grouping any two parts lands ft-below") {
    for (int g = 2; g <= 8; ++g) {
        for (const Partition& b : list_partitions(g)) {
            const int n = b.size();
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    std::vector<int> parts;
                    parts.push_back(b.part(i) + b.part(j));
                    for (int k = 1; k <= n; ++k) {
                        if (k != i && k != j) {
                            parts.push_back(b.part(k));
                        }
                    }
                    std::sort(parts.begin(), parts.end(), std::greater<>());
                    CHECK(le_ft(Partition(parts), b) == Ternary::yes);
                }
            }
        }
    }
}

TEST_CASE("length difference one with last part 1: ft iff pp") {
    for (int g = 2; g <= 8; ++g) {
        const std::vector<Partition> all = list_partitions(g);
        for (const Partition& a : all) {
            for (const Partition& b : all) {
                const int n = a.size();
                if (b.size() == n + 1 && a.part(1) != b.part(1) && b.part(n + 1) == 1 &&
                    a.part(n) != 1) {
                    CHECK(le_ft_oracle(a, b) == le_pp(a, b));
                }
            }
        }
    }
}

TEST_CASE("relation matrix") {
    for (OrderKind kind :
         {OrderKind::pp, OrderKind::ft, OrderKind::do_right, OrderKind::do_left}) {
        const RelationMatrix m = relation_matrix(2, kind);
        REQUIRE(m.size() == 2);
        CHECK(m.vertices[0] == P("2"));
        CHECK(m.vertices[1] == P("1,1"));
        CHECK(m.at(0, 0));
        CHECK(m.at(0, 1));
        CHECK_FALSE(m.at(1, 0));
        CHECK(m.at(1, 1));
    }

    for (int g = 1; g <= 7; ++g) {
        for (OrderKind kind :
             {OrderKind::pp, OrderKind::ft, OrderKind::do_right, OrderKind::do_left}) {
            const RelationMatrix a = relation_matrix(g, kind);
            const RelationMatrix b = relation_matrix_serial(g, kind);
            CHECK(a.rel == b.rel);
        }
    }

    CHECK_THROWS_AS(relation_matrix(kEnumerationCap + 1, OrderKind::ft), ScaleCapError);
    CHECK_NOTHROW(relation_matrix(8, OrderKind::do_right));
}

TEST_CASE("poset axioms hold for all four kinds up to g = 8") {
    for (int g = 1; g <= 8; ++g) {
        for (OrderKind kind :
             {OrderKind::pp, OrderKind::ft, OrderKind::do_right, OrderKind::do_left}) {
            const PosetReport r = poset_check(relation_matrix(g, kind));
            INFO("g=", g, " kind=", order_name(kind));
            CHECK(r.pass());
            CHECK(r.violations.empty());
        }
    }
}

TEST_CASE("poset_check reports violations") {
    RelationMatrix m;
    m.g = 2;
    m.kind = OrderKind::pp;
    m.vertices = list_partitions(2);
    m.rel = {1, 1, 1, 0};  // not reflexive at 1,1; symmetric pair 2 <-> 1,1
    const PosetReport r = poset_check(m);
    CHECK_FALSE(r.pass());
    CHECK_FALSE(r.reflexive);
    CHECK_FALSE(r.antisymmetric);
    CHECK(!r.violations.empty());
}

TEST_CASE("hasse diagrams match the pinned edge sets") {
    for (int g : {3, 4, 5}) {
        const HasseDiagram d = hasse(relation_matrix(g, OrderKind::pp));
        CHECK(d.edges == pinned_hasse_edges(OrderKind::pp, g));
    }
    const HasseDiagram ft6 = hasse(relation_matrix(6, OrderKind::ft));
    CHECK(ft6.edges.size() == 18);
    CHECK(ft6.edges == pinned_hasse_edges(OrderKind::ft, 6));
    CHECK(std::count(ft6.edges.begin(), ft6.edges.end(),
                     std::pair<std::string, std::string>{"3,3", "2,2,2"}) == 1);

    const HasseDiagram trivial = hasse(relation_matrix(1, OrderKind::do_right));
    CHECK(trivial.edges.empty());
    CHECK(trivial.vertices.size() == 1);
}

TEST_CASE("hasse serialization is stable and parseable") {
    const HasseDiagram d = hasse(relation_matrix(4, OrderKind::pp));

    const std::string dot = d.dot();
    CHECK(dot.find("digraph hasse {") == 0);
    CHECK(dot.find("label=\"g=4 order=pp\"") != std::string::npos);
    CHECK(dot.find("\"4\" -> \"3,1\";") != std::string::npos);

    const nlohmann::json j = nlohmann::json::parse(d.json());
    CHECK(j["g"] == 4);
    CHECK(j["kind"] == "pp");
    CHECK(j["vertices"].size() == 5);
    REQUIRE(j["edges"].size() == 5);
    for (const auto& e : j["edges"]) {
        const Partition from = parse_partition(e[0].get<std::string>());
        const Partition to = parse_partition(e[1].get<std::string>());
        CHECK(from.weight() == 4);
        CHECK(to.weight() == 4);
    }
}

TEST_CASE("implication chain with witnesses") {
    const ChainReport g6 = check_chain(6);
    CHECK(g6.chain_holds);
    CHECK(g6.failures.empty());
    CHECK(std::count(g6.ft_not_pp.begin(), g6.ft_not_pp.end(),
                     std::pair<std::string, std::string>{"3,3", "2,2,2"}) == 1);

    const ChainReport g4 = check_chain(4);
    CHECK(g4.chain_holds);
    CHECK(std::count(g4.do_not_ft.begin(), g4.do_not_ft.end(),
                     std::pair<std::string, std::string>{"2,2", "3,1"}) == 1);

    const ChainReport g3 = check_chain(3);
    CHECK(g3.chain_holds);
    CHECK(g3.ft_not_pp.empty());
    CHECK(g3.do_not_ft.empty());
}
