#include <doctest.h>

#include <algorithm>

#include "clonekit/clone.hpp"

using namespace clonekit;

namespace {

OperationTable xor_table() {
    return OperationTable(Domain(2), 2, {0, 1, 1, 0});
}

OperationTable and_table() {
    return OperationTable(Domain(2), 2, {0, 0, 0, 1});
}

OperationTable or_table() {
    return OperationTable(Domain(2), 2, {0, 1, 1, 1});
}

OperationTable nand_table() {
    return OperationTable(Domain(2), 2, {1, 1, 1, 0});
}

OperationTable majority_table() {
    // maj(x,y,z) over the 8 lex-ordered triples.
    return OperationTable(Domain(2), 3, {0, 0, 0, 1, 0, 1, 1, 1});
}

OperationTable table_from(const Domain& dom, int arity, auto&& fn) {
    std::size_t space = checked_power(dom.size, arity, std::size_t{1} << 20);
    std::vector<Element> values(space);
    for (std::size_t i = 0; i < space; ++i) values[i] = fn(decode_tuple(i, dom, arity));
    return OperationTable(dom, arity, std::move(values));
}

}  // namespace

TEST_CASE("clone layers of the xor clone") {
    Domain dom(2);
    CloneLayer empty = clone_layer(dom, {}, 2);
    CHECK(empty.size() == 2);
    CHECK(empty.contains(projection(dom, 2, 1)));
    CHECK(empty.contains(projection(dom, 2, 2)));

    CloneLayer binary = clone_layer(dom, {xor_table()}, 2);
    CHECK(binary.size() == 4);
    CHECK(binary.contains(xor_table()));
    CHECK(binary.contains(OperationTable(dom, 2, {0, 0, 0, 0})));

    CloneLayer ternary = clone_layer(dom, {xor_table()}, 3);
    CHECK(ternary.size() == 8);
}

TEST_CASE("clone layer is a composition-closed fixpoint containing the projections") {
    Domain dom(2);
    CloneLayer layer = clone_layer(dom, {xor_table()}, 2);
    for (int i = 1; i <= 2; ++i) CHECK(layer.contains(projection(dom, 2, i)));
    for (const OperationTable& g1 : layer.ops) {
        for (const OperationTable& g2 : layer.ops) {
            std::vector<OperationTable> gs{g1, g2};
            REQUIRE(layer.contains(compose(xor_table(), gs)));
        }
    }
}

TEST_CASE("edge identities") {
    Domain dom(2);
    OperationTable sum3 = table_from(dom, 3, [](const Tuple& x) { return x[0] ^ x[1] ^ x[2]; });
    CHECK(is_edge_op(sum3, 2));
    CHECK_FALSE(is_edge_op(projection(dom, 3, 3), 2));

    OperationTable maj = majority_table();
    OperationTable shifted =
        table_from(dom, 4, [&](const Tuple& x) { return clonekit::apply(maj, Tuple{x[1], x[2], x[3]}); });
    CHECK(is_edge_op(shifted, 3));

    CHECK(is_malcev_op(sum3));
    CHECK(is_nu_op(maj));
    CHECK_THROWS_AS(is_edge_op(sum3, 3), std::invalid_argument);
}

TEST_CASE("special term search") {
    Domain two(2);
    OperationTable sum3 = table_from(two, 3, [](const Tuple& x) { return x[0] ^ x[1] ^ x[2]; });
    CHECK(find_malcev(two, {xor_table()}) == sum3);
    CHECK(find_malcev(two, {and_table(), or_table()}) == std::nullopt);

    Domain three(3);
    OperationTable z3_mul = table_from(three, 2, [](const Tuple& x) { return (x[0] + x[1]) % 3; });
    OperationTable z3_inv = table_from(three, 1, [](const Tuple& x) { return (3 - x[0]) % 3; });
    OperationTable z3_malcev =
        table_from(three, 3, [](const Tuple& x) { return (x[0] + 3 - x[1] + x[2]) % 3; });
    CHECK(find_malcev(three, {z3_mul, z3_inv}) == z3_malcev);

    CHECK(find_edge(two, {xor_table()}, 2).has_value());
    CHECK(find_nu(two, {majority_table()}, 3) == majority_table());
    CHECK(find_edge(two, {}, 2) == std::nullopt);
    CHECK(find_edge(two, {}, 3) == std::nullopt);
}

TEST_CASE("value pairs at a word") {
    Domain dom(2);
    CloneLayer projections = clone_layer(dom, {}, 2);
    PhiRelation at_min = phi(projections, Word{0, 0});
    CHECK(at_min.pairs == std::set<std::pair<Element, Element>>{{0, 0}});
    PhiRelation at_max = phi(projections, Word{1, 1});
    CHECK(at_max.pairs == std::set<std::pair<Element, Element>>{{1, 1}});

    CloneLayer layer = clone_layer(dom, {xor_table()}, 2);
    PhiRelation mid = phi(layer, Word{0, 1});
    for (const OperationTable& f : layer.ops) {
        Element v = clonekit::apply(f, Tuple{0, 1});
        REQUIRE(mid.contains(v, v));
    }
    CHECK_THROWS_AS(phi(layer, Word{0}), std::invalid_argument);
}

TEST_CASE("lambda membership") {
    Domain dom(2);
    LayerCache all_ops(dom, {nand_table()});
    for (Element c = 0; c < 2; ++c) {
        for (Element d = 0; d < 2; ++d) {
            CHECK_FALSE(lambda_member(all_ops, c, d, Word{0, 0}));
        }
    }

    LayerCache projections(dom, {});
    CHECK(lambda_member(projections, 0, 1, Word{0, 0}));

    LayerCache xor_cache(dom, {xor_table()});
    CHECK_FALSE(lambda_member(xor_cache, 0, 0, Word{0, 1}));
}

TEST_CASE("supremum of minimal lambda words") {
    Domain dom(2);
    MReport all_ops = compute_m(dom, {nand_table()}, 2);
    CHECK(all_ops.m == 1);
    CHECK(all_ops.all_frontiers_closed);
    for (const auto& pr : all_ops.pairs) CHECK(pr.minimals.empty());

    // For the projection clone, (1,0) is a length-2 minimal of the lambda
    // set at (0,1): it has no deletion predecessors and cannot lie above a
    // one-letter minimal because symbol sets must match.
    MReport projections = compute_m(dom, {}, 2);
    CHECK(projections.m == 2);
    CHECK(projections.all_frontiers_closed);
    bool found_unary_minimal = false;
    for (const auto& pr : projections.pairs) {
        for (const Word& w : pr.minimals) found_unary_minimal |= w.size() == 1;
    }
    CHECK(found_unary_minimal);

    MReport xor_report = compute_m(dom, {xor_table()}, 4);
    CHECK(xor_report.all_frontiers_closed);
    CHECK(xor_report.m >= 1);
}

TEST_CASE("layer as relation") {
    Domain dom(2);
    Relation unary = layer_as_relation(clone_layer(dom, {}, 1));
    CHECK(unary.arity == 2);
    CHECK(unary.tuples == std::vector<Tuple>{{0, 1}});

    Relation binary = layer_as_relation(clone_layer(dom, {}, 2));
    CHECK(binary.tuples == std::vector<Tuple>{{0, 0, 1, 1}, {0, 1, 0, 1}});

    CHECK(layer_as_relation(clone_layer(dom, {xor_table()}, 2)).size() == 4);
}

TEST_CASE("term membership oracles") {
    Domain dom(2);
    Relation xor_graph(dom, 3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(is_term_function({xor_table()}, xor_table(), MembershipMode::exhaustive));
    CHECK(is_term_function({xor_table()}, xor_table(), MembershipMode::via_relations,
                           {xor_graph}));

    OperationTable negation(dom, 1, {1, 0});
    CHECK_FALSE(is_term_function({xor_table()}, negation, MembershipMode::exhaustive));

    Relation leq(dom, 2, {{0, 0}, {0, 1}, {1, 1}});
    Relation zero(dom, 1, {{0}});
    Relation one(dom, 1, {{1}});
    std::vector<OperationTable> lattice{and_table(), or_table()};
    CHECK(is_term_function(lattice, majority_table(), MembershipMode::exhaustive));
    CHECK(is_term_function(lattice, majority_table(), MembershipMode::via_relations,
                           {leq, zero, one}));
}
