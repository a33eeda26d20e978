#include <doctest.h>

#include "clonekit/core.hpp"

using namespace clonekit;

namespace {

OperationTable xor_table() {
    return OperationTable(Domain(2), 2, {0, 1, 1, 0});
}

}  // namespace

TEST_CASE("tuple encoding examples") {
    CHECK(encode_tuple(Tuple{0, 0}, Domain(2)) == 0);
    CHECK(encode_tuple(Tuple{1, 0, 1}, Domain(2)) == 5);
    CHECK(encode_tuple(Tuple{2, 2}, Domain(3)) == 8);
    CHECK(decode_tuple(0, Domain(2), 2) == Tuple{0, 0});
    CHECK(decode_tuple(5, Domain(2), 3) == Tuple{1, 0, 1});
    CHECK(decode_tuple(2, Domain(3), 1) == Tuple{2});
    CHECK_THROWS_AS(encode_tuple(Tuple{2}, Domain(2)), std::invalid_argument);
    CHECK_THROWS_AS(decode_tuple(8, Domain(2), 3), std::invalid_argument);
}

TEST_CASE("encode/decode are mutually inverse bijections for t<=4, n<=6") {
    for (int t = 1; t <= 4; ++t) {
        Domain dom(t);
        for (int n = 1; n <= 6; ++n) {
            std::size_t space = checked_power(t, n, std::size_t{1} << 20);
            for (std::size_t i = 0; i < space; ++i) {
                Tuple x = decode_tuple(i, dom, n);
                REQUIRE(encode_tuple(x, dom) == i);
            }
        }
    }
}

TEST_CASE("index order agrees with lexicographic order for t<=3, n<=4") {
    for (int t = 2; t <= 3; ++t) {
        Domain dom(t);
        for (int n = 1; n <= 4; ++n) {
            std::size_t space = checked_power(t, n, std::size_t{1} << 20);
            Tuple prev = decode_tuple(0, dom, n);
            for (std::size_t i = 1; i < space; ++i) {
                Tuple cur = decode_tuple(i, dom, n);
                REQUIRE(std::lexicographical_compare(prev.begin(), prev.end(), cur.begin(),
                                                     cur.end()));
                prev = cur;
            }
        }
    }
}

TEST_CASE("projection tables") {
    CHECK(projection(Domain(2), 1, 1).values == std::vector<Element>{0, 1});
    CHECK(projection(Domain(2), 2, 2).values == std::vector<Element>{0, 1, 0, 1});
    CHECK(projection(Domain(3), 2, 1).values == std::vector<Element>{0, 0, 0, 1, 1, 1, 2, 2, 2});
    CHECK_THROWS_AS(projection(Domain(2), 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(projection(Domain(2), 2, 0), std::invalid_argument);
}

TEST_CASE("apply") {
    OperationTable x = xor_table();
    CHECK(clonekit::apply(x, Tuple{1, 1}) == 0);
    CHECK(clonekit::apply(x, Tuple{0, 1}) == 1);
    CHECK(clonekit::apply(projection(Domain(2), 3, 2), Tuple{0, 1, 0}) == 1);
    CHECK_THROWS_AS(clonekit::apply(x, Tuple{0}), std::invalid_argument);
    CHECK_THROWS_AS(clonekit::apply(x, Tuple{0, 2}), std::invalid_argument);
}

TEST_CASE("compose") {
    Domain dom(2);
    OperationTable x = xor_table();
    OperationTable e1 = projection(dom, 2, 1);
    OperationTable e2 = projection(dom, 2, 2);

    std::vector<OperationTable> gs{x, e2};
    CHECK(compose(e1, gs) == x);

    std::vector<OperationTable> twice{e1, e1};
    CHECK(compose(x, twice) == OperationTable(dom, 2, {0, 0, 0, 0}));

    std::vector<OperationTable> first_two{projection(dom, 3, 1), projection(dom, 3, 2)};
    OperationTable sum12 = compose(x, first_two);
    for (std::size_t i = 0; i < 8; ++i) {
        Tuple p = decode_tuple(i, dom, 3);
        REQUIRE(clonekit::apply(sum12, p) == (p[0] ^ p[1]));
    }
}

TEST_CASE("projection absorbs composition") {
    Domain dom(2);
    std::vector<OperationTable> gs{xor_table(), projection(dom, 2, 1),
                                   OperationTable(dom, 2, {1, 1, 0, 0})};
    for (int i = 1; i <= 3; ++i) {
        CHECK(compose(projection(dom, 3, i), gs) == gs[static_cast<std::size_t>(i - 1)]);
    }
}

TEST_CASE("subpower closure of Z2") {
    Algebra z2(Domain(2), {xor_table()});
    Relation diag = subpower_closure(z2, 2, {Tuple{1, 1}});
    CHECK(diag.tuples == std::vector<Tuple>{{0, 0}, {1, 1}});

    Relation half = subpower_closure(z2, 2, {Tuple{0, 1}});
    CHECK(half.tuples == std::vector<Tuple>{{0, 0}, {0, 1}});

    Relation full = full_power(Domain(2), 2);
    CHECK(subpower_closure(z2, 2, full.tuples) == full);

    CHECK(subpower_closure(z2, 2, {}).empty());
}

TEST_CASE("subpower closure is idempotent and a subuniverse") {
    Algebra z2(Domain(2), {xor_table()});
    for (std::size_t gen = 0; gen < 4; ++gen) {
        Relation closed = subpower_closure(z2, 2, {decode_tuple(gen, Domain(2), 2)});
        CHECK(subpower_closure(z2, 2, closed.tuples) == closed);
        for (const Tuple& a : closed.tuples) {
            for (const Tuple& b : closed.tuples) {
                Tuple image(2);
                for (int i = 0; i < 2; ++i) {
                    image[static_cast<std::size_t>(i)] =
                        clonekit::apply(z2.basic_ops[0], Tuple{a[static_cast<std::size_t>(i)],
                                                     b[static_cast<std::size_t>(i)]});
                }
                REQUIRE(closed.contains(image));
            }
        }
    }
}

TEST_CASE("operation table validation") {
    CHECK_THROWS_AS(OperationTable(Domain(2), 2, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(OperationTable(Domain(2), 1, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Domain(0), std::invalid_argument);
}

TEST_CASE("checked_power guards the cap") {
    CHECK(checked_power(2, 10, std::size_t{1} << 20) == 1024);
    CHECK_THROWS_AS(checked_power(2, 30, std::size_t{1} << 20), resource_limit_error);
}
