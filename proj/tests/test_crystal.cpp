#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "heckeb/crystal.hpp"
#include "heckeb/format.hpp"
#include "heckeb/partition.hpp"

using namespace heckeb;

namespace {

Multipartition bip(const std::string& text) { return parse_multipartition(text, 2); }

std::set<Multipartition> as_set(const std::vector<Multipartition>& v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("residue") {
    CHECK(residue({1, 1, 2}, {-1, 0}, 2) == 0);
    CHECK(residue({1, 1, 1}, {-1, 0}, 2) == 1);
    CHECK(residue({2, 1, 1}, {0, 0}, 3) == 2);
    CHECK_THROWS_AS(residue({1, 1, 3}, {0, 0}, 2), std::invalid_argument);
}

TEST_CASE("node_above") {
    // Strictly smaller shifted content is above.
    CHECK(node_above({1, 1, 1}, {1, 2, 1}, {0, 0}, NodeOrder::flotw));
    CHECK_FALSE(node_above({1, 2, 1}, {1, 1, 1}, {0, 0}, NodeOrder::flotw));
    // Content ties with equal charges order by component, first above.
    CHECK(node_above({1, 1, 1}, {1, 1, 2}, {0, 0}, NodeOrder::flotw));
    CHECK_FALSE(node_above({1, 1, 2}, {1, 1, 1}, {0, 0}, NodeOrder::flotw));
    // Content ties across distinct charges put the larger component above.
    CHECK(node_above({1, 1, 2}, {1, 2, 1}, {0, 1}, NodeOrder::flotw));
    CHECK_FALSE(node_above({1, 2, 1}, {1, 1, 2}, {0, 1}, NodeOrder::flotw));
    CHECK(node_above({1, 1, 2}, {2, 1, 1}, {1, 0}, NodeOrder::flotw));
    CHECK_FALSE(node_above({2, 1, 1}, {1, 1, 2}, {1, 0}, NodeOrder::flotw));
    // The ariki order ignores charges entirely.
    CHECK(node_above({5, 1, 2}, {1, 9, 1}, {0, 0}, NodeOrder::ariki));
    CHECK(node_above({3, 1, 1}, {1, 1, 1}, {0, 0}, NodeOrder::ariki));
    CHECK_FALSE(node_above({1, 1, 1}, {3, 1, 1}, {0, 0}, NodeOrder::ariki));
}

TEST_CASE("addable and removable nodes") {
    const auto lam = bip("(2,1|1)");
    const auto addable = addable_nodes(lam);
    const auto removable = removable_nodes(lam);
    CHECK(addable.size() == 5);  // rows 1..3 of component 1, rows 1..2 of component 2
    CHECK(removable.size() == 3);
    for (const auto& g : removable)
        CHECK(add_node(remove_node(lam, g), g) == lam);
    for (const auto& g : addable)
        CHECK(remove_node(add_node(lam, g), g) == lam);
}

TEST_CASE("good_node basics") {
    CHECK(good_node(bip("(1|∅)"), 1, {-1, 0}, 2, NodeOrder::flotw) == Node{1, 1, 1});
    CHECK_FALSE(good_node(bip("(∅|∅)"), 0, {-1, 0}, 2, NodeOrder::flotw).has_value());
    CHECK_FALSE(good_node(bip("(∅|∅)"), 1, {-1, 0}, 2, NodeOrder::flotw).has_value());
    // ((1)|(1)) at charges (-1,0): the removable 1-node of component 1 is
    // cancelled by the addable 1-node below it, so no good 1-node exists.
    CHECK_FALSE(good_node(bip("(1|1)"), 1, {-1, 0}, 2, NodeOrder::flotw).has_value());
    CHECK_FALSE(good_node(bip("(1|1)"), 0, {-1, 0}, 2, NodeOrder::flotw).has_value());
}

TEST_CASE("in_uglov basics") {
    CHECK(in_uglov(empty_multipartition(2), {-1, 0}, 2, NodeOrder::flotw));
    CHECK(in_uglov(bip("(1|∅)"), {-1, 0}, 2, NodeOrder::flotw));
    CHECK(in_uglov(bip("(∅|3)"), {-1, 0}, 2, NodeOrder::flotw));
    CHECK_FALSE(in_uglov(bip("(1,1,1|∅)"), {-1, 0}, 2, NodeOrder::flotw));
}

TEST_CASE("uglov sets at n = 3") {
    CHECK(as_set(uglov_set(3, {-1, 0}, 2, NodeOrder::flotw)) ==
          std::set<Multipartition>{bip("(3|∅)"), bip("(∅|3)"), bip("(2|1)"), bip("(1|2)")});
    CHECK(as_set(uglov_set(3, {3, 0}, 2, NodeOrder::flotw)) ==
          std::set<Multipartition>{bip("(3|∅)"), bip("(2,1|∅)"), bip("(2|1)"), bip("(1|2)")});
    CHECK(uglov_set(0, {-1, 0}, 2, NodeOrder::flotw) ==
          std::vector<Multipartition>{empty_multipartition(2)});
}

TEST_CASE("flotw_test examples") {
    CHECK(flotw_test(bip("(2|1)"), {0, 1}, 2));
    CHECK(flotw_test(empty_multipartition(2), {0, 1}, 2));
    CHECK(flotw_test(empty_multipartition(2), {0, 0}, 3));
    CHECK_FALSE(flotw_test(bip("(1,1|∅)"), {0, 0}, 2));
    CHECK(flotw_test(bip("(1,1|∅)"), {0, 0}, 2) ==
          in_uglov(bip("(1,1|∅)"), {0, 0}, 2, NodeOrder::flotw));
    CHECK_THROWS_AS(flotw_test(bip("(1|∅)"), {1, 0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(flotw_test(bip("(1|∅)"), {0, 2}, 2), std::invalid_argument);
}

TEST_CASE("flotw_test matches the recursion for all sorted charges") {
    for (int e = 2; e <= 4; ++e)
        for (int u1 = 0; u1 <= e - 1; ++u1)
            for (int u2 = u1; u2 <= e - 1; ++u2) {
                const ChargeVector u{u1, u2};
                for (int n = 0; n <= 6; ++n)
                    for (const auto& m : enumerate_multipartitions(n, 2))
                        CHECK(flotw_test(m, u, e) == in_uglov(m, u, e, NodeOrder::flotw));
            }
}

TEST_CASE("flotw characterization for one component is e-regularity") {
    for (int e = 2; e <= 4; ++e)
        for (int n = 0; n <= 8; ++n)
            for (const auto& nu : enumerate_partitions(n)) {
                const Multipartition m({nu});
                CHECK(flotw_test(m, {0}, e) == is_e_regular(nu, Order(e)));
                CHECK(in_uglov(m, {0}, e, NodeOrder::flotw) == is_e_regular(nu, Order(e)));
                CHECK(in_uglov(m, {0}, e, NodeOrder::ariki) == is_e_regular(nu, Order(e)));
            }
}

TEST_CASE("kleshchev sets") {
    CHECK(as_set(kleshchev_set(3, 2, 2, {3, 0})) ==
          std::set<Multipartition>{bip("(3|∅)"), bip("(2,1|∅)"), bip("(2|1)"), bip("(1|2)")});
    CHECK(as_set(kleshchev_set(1, 2, 2, {3, 0})) ==
          std::set<Multipartition>{bip("(1|∅)"), bip("(∅|1)")});
    CHECK(kleshchev_set(0, 2, 2, {3, 0}) ==
          std::vector<Multipartition>{empty_multipartition(2)});
}

TEST_CASE("spread charges reduce to the ariki order") {
    for (int e = 2; e <= 3; ++e)
        for (int n = 0; n <= 6; ++n)
            for (int d = 0; d < e; ++d) {
                int u1 = d;
                while (u1 <= n - 1)
                    u1 += e;
                CHECK(as_set(uglov_set(n, {u1, 0}, e, NodeOrder::flotw)) ==
                      as_set(kleshchev_set(n, 2, e, {d, 0})));
            }
}

TEST_CASE("membership is invariant under charge shifts") {
    const std::vector<ChargeVector> bases = {{-1, 0}, {0, 1}, {2, 0}, {0, 0}};
    for (int e = 2; e <= 4; ++e)
        for (const auto& base : bases)
            for (int m = -3; m <= 3; ++m) {
                const ChargeVector shifted{base[0] + m, base[1] + m};
                for (int n = 0; n <= 6; ++n)
                    CHECK(uglov_set(n, base, e, NodeOrder::flotw) ==
                          uglov_set(n, shifted, e, NodeOrder::flotw));
            }
}

TEST_CASE("uglov and kleshchev sets have matching cardinalities") {
    for (int e = 2; e <= 4; ++e)
        for (int s = -3; s <= 3; ++s)
            for (int n = 0; n <= 6; ++n) {
                const int d = ((s % e) + e) % e;
                CHECK(uglov_set(n, {s, 0}, e, NodeOrder::flotw).size() ==
                      kleshchev_set(n, 2, e, {d, 0}).size());
            }
}

TEST_CASE("crystal graph structure") {
    const auto g1 = crystal_graph(1, {-1, 0}, 2, NodeOrder::flotw);
    REQUIRE(g1.levels.size() == 2);
    CHECK(g1.levels[0] == std::vector<Multipartition>{empty_multipartition(2)});
    REQUIRE(g1.edges.size() == 2);
    std::map<Multipartition, int> colour;
    for (const auto& edge : g1.edges) {
        CHECK(edge.from == empty_multipartition(2));
        colour[edge.to] = edge.res;
    }
    CHECK(colour[bip("(1|∅)")] == 1);
    CHECK(colour[bip("(∅|1)")] == 0);

    const auto g = crystal_graph(6, {-1, 0}, 2, NodeOrder::flotw);
    for (size_t n = 0; n < g.levels.size(); ++n)
        CHECK(g.levels[n] == uglov_set(static_cast<int>(n), {-1, 0}, 2, NodeOrder::flotw));

    // Every non-empty vertex is reached (that is the membership recursion),
    // with at most one incoming edge per residue.  Vertices with several
    // parents of different colours exist: ((1)|(3,1)) at size 5 has good 0-
    // and 1-nodes whose removals both land in the graph.
    std::map<Multipartition, int> incoming;
    std::set<std::pair<std::string, int>> seen;
    for (const auto& edge : g.edges) {
        ++incoming[edge.to];
        CHECK(seen.insert({to_text(edge.to), edge.res}).second);
    }
    for (size_t n = 1; n < g.levels.size(); ++n)
        for (const auto& v : g.levels[n])
            CHECK(incoming[v] >= 1);
    const Multipartition doubled = bip("(1|3,1)");
    CHECK(incoming[doubled] == 2);
}

TEST_CASE("incoming edges across parameter grid") {
    const std::vector<ChargeVector> charges = {{0, 0}, {0, 1}, {3, 0}, {-1, 0}};
    for (int e = 2; e <= 3; ++e)
        for (const auto& u : charges)
            for (auto order : {NodeOrder::flotw, NodeOrder::ariki}) {
                const auto g = crystal_graph(6, u, e, order);
                std::map<Multipartition, int> incoming;
                for (const auto& edge : g.edges)
                    ++incoming[edge.to];
                for (size_t n = 1; n < g.levels.size(); ++n)
                    for (const auto& v : g.levels[n]) {
                        CHECK(incoming[v] >= 1);
                        CHECK(incoming[v] <= e);
                    }
            }
}

TEST_CASE("dot and json exports") {
    const auto g = crystal_graph(1, {-1, 0}, 2, NodeOrder::flotw);
    std::ostringstream dot;
    write_dot(g, dot);
    const std::string text = dot.str();
    CHECK(text.find("digraph crystal {") == 0);
    CHECK(text.find("\"(∅|∅)\" -> \"(1|∅)\" [label=\"1\"]") != std::string::npos);
    CHECK(text.find("\"(∅|∅)\" -> \"(∅|1)\" [label=\"0\"]") != std::string::npos);

    const std::string json_text = crystal_json(g);
    CHECK(json_text.find("\"vertices\"") != std::string::npos);
    CHECK(json_text.find("\"residue\"") != std::string::npos);
}
