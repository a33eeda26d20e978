#include <doctest.h>

#include "clonekit/clone.hpp"
#include "clonekit/galois.hpp"
#include "clonekit/ppgroup.hpp"

using namespace clonekit;

namespace {

/// Mirrors the constraint semantics: f applied columnwise to the e member
/// tuples of the constraint must land in H.
bool satisfies(const OperationTable& f, const Constraint& constraint, const Relation& h) {
    Tuple image(static_cast<std::size_t>(h.arity));
    for (int j = 0; j < h.arity; ++j) {
        Tuple column;
        for (const Tuple& r : constraint) column.push_back(r[static_cast<std::size_t>(j)]);
        image[static_cast<std::size_t>(j)] = clonekit::apply(f, column);
    }
    return h.contains(image);
}

}  // namespace

TEST_CASE("group construction") {
    GroupTable z2 = GroupTable::cyclic(2);
    CHECK(z2.identity == 0);
    CHECK(clonekit::apply(z2.mul, Tuple{1, 1}) == 0);
    CHECK(clonekit::apply(z2.inv, Tuple{1}) == 1);

    GroupTable z3 = GroupTable::cyclic(3);
    CHECK(clonekit::apply(z3.mul, Tuple{1, 2}) == 0);
    CHECK(clonekit::apply(z3.inv, Tuple{1}) == 2);
    CHECK(z3.mul_graph().size() == 9);

    OperationTable not_assoc(Domain(2), 2, {0, 1, 1, 1});
    CHECK_THROWS_AS(GroupTable::from_mul(not_assoc), std::invalid_argument);
}

TEST_CASE("small generating sets") {
    GroupTable z2 = GroupTable::cyclic(2);
    Domain dom = z2.domain();

    Relation trivial(dom, 2, {{0, 0}});
    CHECK(small_generators(z2, trivial).empty());

    Relation diag(dom, 2, {{0, 0}, {1, 1}});
    CHECK(small_generators(z2, diag) == std::vector<Tuple>{{1, 1}});

    Relation full = full_power(dom, 2);
    std::vector<Tuple> gens = small_generators(z2, full);
    CHECK(gens.size() == 2);
    CHECK(subpower_closure(z2.algebra(), 2, gens) == full);

    Relation not_subgroup(dom, 2, {{1, 1}});
    CHECK_THROWS_AS(small_generators(z2, not_subgroup), std::invalid_argument);
}

TEST_CASE("greedy constraint selection cuts down to the term layer") {
    GroupTable z2 = GroupTable::cyclic(2);
    Relation h = z2.mul_graph();

    std::vector<Constraint> m1 = select_m(z2, 1, h);
    CloneLayer unary = clone_layer(z2.domain(), {z2.mul, z2.inv}, 1);
    CHECK(unary.size() == 2);  // identity and the constant at the group identity
    for (std::size_t code = 0; code < 4; ++code) {
        OperationTable f(z2.domain(), 1,
                         {static_cast<Element>(code / 2), static_cast<Element>(code % 2)});
        bool all_ok = true;
        for (const Constraint& c : m1) all_ok &= satisfies(f, c, h);
        REQUIRE(all_ok == unary.contains(f));
    }

    std::vector<Constraint> m2 = select_m(z2, 2, h);
    CHECK(m2.size() <= 4);  // |G|^e * log2|G|

    Relation useless(z2.domain(), 1, {{0}, {1}});
    CHECK_THROWS_AS(select_m(z2, 1, useless), std::invalid_argument);
}

TEST_CASE("formula round-trip on subgroups") {
    GroupTable z2 = GroupTable::cyclic(2);
    Relation h = z2.mul_graph();
    Algebra alg = z2.algebra();

    SubpowerFamily family = subuniverses(alg, 2);
    int checked = 0;
    for (const Relation& s : family.members) {
        if (s.empty()) continue;
        PPFormula formula = build_pp_formula(z2, h, s);
        CHECK(eval_pp_formula(formula, z2) == s);
        CHECK(formula.l <= 4);            // |G|^{n*log2|G|} = 2^2
        CHECK(formula.m_count <= formula.l);  // l*log2|G| = l
        ++checked;
    }
    CHECK(checked == 5);

    GroupTable z3 = GroupTable::cyclic(3);
    Relation h3 = z3.mul_graph();
    for (const Relation& s : subuniverses(z3.algebra(), 1).members) {
        if (s.empty()) continue;
        PPFormula formula = build_pp_formula(z3, h3, s);
        CHECK(eval_pp_formula(formula, z3) == s);
    }
}

TEST_CASE("constraint data depends only on the generator count") {
    GroupTable z2 = GroupTable::cyclic(2);
    Relation h = z2.mul_graph();
    Domain dom = z2.domain();
    PPFormula diag = build_pp_formula(z2, h, Relation(dom, 2, {{0, 0}, {1, 1}}));
    PPFormula axis = build_pp_formula(z2, h, Relation(dom, 2, {{0, 0}, {0, 1}}));
    CHECK(diag.l == axis.l);
    CHECK(diag.m_count == axis.m_count);
    CHECK(diag.sigma == axis.sigma);
}

TEST_CASE("unconstrained formula yields the full power") {
    GroupTable z2 = GroupTable::cyclic(2);
    PPFormula free;
    free.n = 1;
    free.l = 1;
    free.m_count = 0;
    free.k = 3;
    free.sigma = {};
    free.tau = {1};
    free.h = z2.mul_graph();
    CHECK(eval_pp_formula(free, z2) == full_power(z2.domain(), 1));
}
