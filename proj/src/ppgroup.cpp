#include "clonekit/ppgroup.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "clonekit/clone.hpp"

namespace clonekit {

GroupTable GroupTable::from_mul(const OperationTable& mul) {
    if (mul.arity != 2) throw std::invalid_argument("group multiplication must be binary");
    const int t = mul.domain_size;
    const Domain dom(t);

    auto times = [&](Element x, Element y) { return mul.values[encode_tuple(Tuple{x, y}, dom)]; };

    for (Element x = 0; x < t; ++x) {
        for (Element y = 0; y < t; ++y) {
            for (Element z = 0; z < t; ++z) {
                if (times(times(x, y), z) != times(x, times(y, z))) {
                    throw std::invalid_argument("multiplication table is not associative");
                }
            }
        }
    }

    Element identity = -1;
    for (Element e = 0; e < t; ++e) {
        bool ok = true;
        for (Element x = 0; x < t; ++x) ok &= (times(e, x) == x && times(x, e) == x);
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw std::invalid_argument("multiplication table has no identity");

    std::vector<Element> inv_values(static_cast<std::size_t>(t), -1);
    for (Element x = 0; x < t; ++x) {
        for (Element y = 0; y < t; ++y) {
            if (times(x, y) == identity && times(y, x) == identity) {
                inv_values[static_cast<std::size_t>(x)] = y;
                break;
            }
        }
        if (inv_values[static_cast<std::size_t>(x)] < 0) {
            throw std::invalid_argument("element " + std::to_string(x) + " has no inverse");
        }
    }

    GroupTable g;
    g.size = t;
    g.mul = mul;
    g.inv = OperationTable(dom, 1, std::move(inv_values));
    g.identity = identity;
    return g;
}

GroupTable GroupTable::cyclic(int n) {
    const Domain dom(n);
    std::vector<Element> values;
    values.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) values.push_back((x + y) % n);
    }
    return from_mul(OperationTable(dom, 2, std::move(values)));
}

Algebra GroupTable::algebra() const {
    return Algebra(domain(), {mul, inv});
}

Relation GroupTable::mul_graph() const {
    const Domain dom = domain();
    std::vector<Tuple> tuples;
    tuples.reserve(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    for (Element x = 0; x < size; ++x) {
        for (Element y = 0; y < size; ++y) {
            tuples.push_back(Tuple{x, y, mul.values[encode_tuple(Tuple{x, y}, dom)]});
        }
    }
    return Relation(dom, 3, std::move(tuples));
}

std::vector<Tuple> small_generators(const GroupTable& group, const Relation& subgroup,
                                    const Limits& limits) {
    if (subgroup.domain_size != group.size) {
        throw std::invalid_argument("small_generators: domain mismatch");
    }
    const Algebra alg = group.algebra();
    const int n = subgroup.arity;
    if (subgroup.empty() || subpower_closure(alg, n, subgroup.tuples, limits) != subgroup) {
        throw std::invalid_argument("small_generators: S is not a subgroup");
    }

    const Tuple identity(static_cast<std::size_t>(n), group.identity);
    std::vector<Tuple> gens;
    Relation current = subpower_closure(alg, n, {identity}, limits);
    while (current != subgroup) {
        // Relation tuples are in tuple-index order, so the first tuple
        // outside the closure is the index-least one.
        for (const Tuple& x : subgroup.tuples) {
            if (!current.contains(x)) {
                gens.push_back(x);
                break;
            }
        }
        std::vector<Tuple> with_identity = gens;
        with_identity.push_back(identity);
        current = subpower_closure(alg, n, with_identity, limits);
    }
    return gens;
}

namespace {

/// All e-ary functions on the group's domain in canonical (value-vector) order.
std::vector<OperationTable> all_functions(const Domain& dom, int e, const Limits& limits) {
    const std::size_t space = checked_power(dom.size, e, limits.max_tuple_space);
    std::size_t total = 1;
    for (std::size_t i = 0; i < space; ++i) {
        if (total > limits.max_bruteforce / static_cast<std::size_t>(dom.size)) {
            throw resource_limit_error("select_m: " + std::to_string(dom.size) + "^" +
                                       std::to_string(space) + " functions exceed cap " +
                                       std::to_string(limits.max_bruteforce));
        }
        total *= static_cast<std::size_t>(dom.size);
    }
    std::vector<OperationTable> fns;
    fns.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<Element> values(space);
        std::size_t rest = code;
        for (std::size_t pos = space; pos > 0; --pos) {
            values[pos - 1] = static_cast<Element>(rest % dom.size);
            rest /= static_cast<std::size_t>(dom.size);
        }
        fns.emplace_back(dom, e, std::move(values));
    }
    return fns;
}

bool satisfies(const OperationTable& f, const Constraint& r, const Relation& h) {
    const Domain dom = f.domain();
    Tuple out(static_cast<std::size_t>(h.arity));
    Tuple args(static_cast<std::size_t>(f.arity));
    for (int j = 0; j < h.arity; ++j) {
        for (int q = 0; q < f.arity; ++q) {
            args[static_cast<std::size_t>(q)] =
                r[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(j)] = f.values[encode_tuple(args, dom)];
    }
    return h.contains(out);
}

}  // namespace

std::vector<Constraint> select_m(const GroupTable& group, int e, const Relation& h,
                                 const Limits& limits) {
    if (e < 1) throw std::invalid_argument("select_m: e must be >= 1");
    if (h.domain_size != group.size) throw std::invalid_argument("select_m: domain mismatch");
    const Domain dom = group.domain();

    CloneLayer terms = clone_layer(dom, {group.mul, group.inv}, e, limits);
    std::vector<OperationTable> fns = all_functions(dom, e, limits);

    std::vector<bool> alive(fns.size(), true);
    std::vector<bool> is_term(fns.size());
    for (std::size_t i = 0; i < fns.size(); ++i) is_term[i] = terms.contains(fns[i]);

    // Candidate constraints: H^e in canonical order.
    std::vector<Constraint> candidates;
    if (!h.empty()) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(e), 0);
        while (true) {
            Constraint r;
            r.reserve(static_cast<std::size_t>(e));
            for (std::size_t q = 0; q < static_cast<std::size_t>(e); ++q) {
                r.push_back(h.tuples[pick[q]]);
            }
            candidates.push_back(std::move(r));
            std::size_t pos = static_cast<std::size_t>(e);
            while (pos > 0 && ++pick[pos - 1] == h.size()) pick[--pos] = 0;
            if (pos == 0) break;
        }
    }

    std::vector<Constraint> chosen;
    while (true) {
        std::size_t stray = 0;
        for (std::size_t i = 0; i < fns.size(); ++i) stray += (alive[i] && !is_term[i]);
        if (stray == 0) break;

        std::size_t best = candidates.size();
        std::size_t best_removed = 0;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            std::size_t removed = 0;
            bool hurts_term = false;
            for (std::size_t i = 0; i < fns.size(); ++i) {
                if (!alive[i]) continue;
                if (!satisfies(fns[i], candidates[c], h)) {
                    if (is_term[i]) {
                        hurts_term = true;
                        break;
                    }
                    ++removed;
                }
            }
            if (!hurts_term && removed > best_removed) {
                best = c;
                best_removed = removed;
            }
        }
        if (best == candidates.size()) {
            throw std::invalid_argument(
                "select_m: H does not determine the clone at arity " + std::to_string(e));
        }
        for (std::size_t i = 0; i < fns.size(); ++i) {
            if (alive[i] && !satisfies(fns[i], candidates[best], h)) alive[i] = false;
        }
        chosen.push_back(candidates[best]);
    }
    return chosen;
}

PPFormula build_pp_formula(const GroupTable& group, const Relation& h, const Relation& subgroup,
                           const Limits& limits) {
    const Domain dom = group.domain();
    const int n = subgroup.arity;
    const int k = h.arity;
    std::vector<Tuple> gens = small_generators(group, subgroup, limits);
    const int e = static_cast<int>(gens.size());

    PPFormula formula;
    formula.n = n;
    formula.k = k;
    formula.h = h;

    if (e == 0) {
        // Trivial subgroup. A full diagonal conjunct pins a_1 to the unique
        // element with (a,...,a) in H when that element is the identity; in
        // a group the diagonal of the multiplication graph does exactly
        // that, since x*x = x only for the identity.
        formula.l = 1;
        formula.tau.assign(static_cast<std::size_t>(n), 1);
        std::set<Element> diagonal;
        for (Element a = 0; a < group.size; ++a) {
            if (h.contains(Tuple(static_cast<std::size_t>(k), a))) diagonal.insert(a);
        }
        if (diagonal == std::set<Element>{group.identity}) {
            formula.m_count = 1;
            formula.sigma.push_back(std::vector<int>(static_cast<std::size_t>(k), 1));
        } else {
            formula.m_count = 0;
            formula.singleton_identity = true;
        }
        return formula;
    }

    std::vector<Constraint> constraints = select_m(group, e, h, limits);
    formula.l = static_cast<int>(checked_power(group.size, e, limits.max_tuple_space));
    formula.m_count = static_cast<int>(constraints.size());

    auto variable_of = [&](const Tuple& column) {
        return static_cast<int>(encode_tuple(column, dom)) + 1;
    };

    for (const Constraint& r : constraints) {
        std::vector<int> row(static_cast<std::size_t>(k));
        Tuple column(static_cast<std::size_t>(e));
        for (int j = 0; j < k; ++j) {
            for (int q = 0; q < e; ++q) {
                column[static_cast<std::size_t>(q)] =
                    r[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)];
            }
            row[static_cast<std::size_t>(j)] = variable_of(column);
        }
        formula.sigma.push_back(std::move(row));
    }

    formula.tau.resize(static_cast<std::size_t>(n));
    Tuple column(static_cast<std::size_t>(e));
    for (int j = 0; j < n; ++j) {
        for (int q = 0; q < e; ++q) {
            column[static_cast<std::size_t>(q)] =
                gens[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)];
        }
        formula.tau[static_cast<std::size_t>(j)] = variable_of(column);
    }

    // Size bounds of the construction; l = |G|^e with e <= n*log2|G| makes them
    // automatic, so a violation is a construction bug.
    const double log_g = std::log2(static_cast<double>(group.size));
    if (std::pow(2.0, e) > std::pow(static_cast<double>(group.size), n) + 1e-9 ||
        static_cast<double>(formula.m_count) > formula.l * log_g + 1e-9) {
        throw std::logic_error("build_pp_formula: size bounds violated");
    }
    return formula;
}

Relation eval_pp_formula(const PPFormula& formula, const GroupTable& group,
                         const Limits& limits) {
    const Domain dom = group.domain();
    if (formula.singleton_identity) {
        return Relation(dom, formula.n,
                        {Tuple(static_cast<std::size_t>(formula.n), group.identity)});
    }
    const std::size_t assignments = checked_power(group.size, formula.l, limits.max_bruteforce);
    std::vector<Tuple> out;
    Tuple atom(static_cast<std::size_t>(formula.k));
    for (std::size_t code = 0; code < assignments; ++code) {
        Tuple a = decode_tuple(code, dom, formula.l);
        bool ok = true;
        for (const std::vector<int>& row : formula.sigma) {
            for (int j = 0; j < formula.k; ++j) {
                atom[static_cast<std::size_t>(j)] =
                    a[static_cast<std::size_t>(row[static_cast<std::size_t>(j)] - 1)];
            }
            if (!formula.h.contains(atom)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        Tuple g(static_cast<std::size_t>(formula.n));
        for (int j = 0; j < formula.n; ++j) {
            g[static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(formula.tau[static_cast<std::size_t>(j)] - 1)];
        }
        out.push_back(std::move(g));
    }
    return Relation(dom, formula.n, std::move(out));
}

}  // namespace clonekit
