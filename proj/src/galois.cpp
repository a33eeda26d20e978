#include "clonekit/galois.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "clonekit/clone.hpp"
#include "clonekit/parallel.hpp"

namespace clonekit {

bool preserves(const OperationTable& f, const Relation& r) {
    if (f.domain_size != r.domain_size) {
        throw std::invalid_argument("preserves: domain mismatch");
    }
    if (r.empty()) return true;
    const std::size_t k = static_cast<std::size_t>(f.arity);
    const std::size_t count = r.size();
    std::vector<std::size_t> pick(k, 0);
    Tuple args(k);
    Tuple out(static_cast<std::size_t>(r.arity));
    while (true) {
        for (int coord = 0; coord < r.arity; ++coord) {
            for (std::size_t j = 0; j < k; ++j) {
                args[j] = r.tuples[pick[j]][static_cast<std::size_t>(coord)];
            }
            out[static_cast<std::size_t>(coord)] = f.values[encode_tuple(args, f.domain())];
        }
        if (!r.contains(out)) return false;
        std::size_t pos = k;
        while (pos > 0 && ++pick[pos - 1] == count) pick[--pos] = 0;
        if (pos == 0) break;
    }
    return true;
}

std::vector<OperationTable> pol_layer(const std::vector<Relation>& relations, const Domain& dom,
                                      int n, const Limits& limits) {
    for (const Relation& r : relations) {
        if (r.domain_size != dom.size) throw std::invalid_argument("pol_layer: domain mismatch");
    }
    const std::size_t space = checked_power(dom.size, n, limits.max_tuple_space);
    std::size_t total = 1;
    for (std::size_t i = 0; i < space; ++i) {
        if (total > limits.max_bruteforce / static_cast<std::size_t>(dom.size)) {
            throw resource_limit_error("pol_layer: " + std::to_string(dom.size) + "^" +
                                       std::to_string(space) + " candidate tables exceed cap " +
                                       std::to_string(limits.max_bruteforce));
        }
        total *= static_cast<std::size_t>(dom.size);
    }

    std::vector<std::vector<OperationTable>> chunk_hits(
        static_cast<std::size_t>(std::max(limits.thread_count, 1)));
    parallel_chunks(total, limits.thread_count, [&](std::size_t chunk, std::size_t begin,
                                                    std::size_t end) {
        std::vector<OperationTable>& hits = chunk_hits[chunk];
        for (std::size_t code = begin; code < end; ++code) {
            // The code is the value vector read as a base-t numeral, so
            // ascending codes give canonically ordered tables.
            std::vector<Element> values(space);
            std::size_t rest = code;
            for (std::size_t pos = space; pos > 0; --pos) {
                values[pos - 1] = static_cast<Element>(rest % dom.size);
                rest /= static_cast<std::size_t>(dom.size);
            }
            OperationTable f(dom, n, std::move(values));
            bool ok = true;
            for (const Relation& r : relations) {
                if (!preserves(f, r)) {
                    ok = false;
                    break;
                }
            }
            if (ok) hits.push_back(std::move(f));
        }
    });

    std::vector<OperationTable> result;
    for (std::vector<OperationTable>& hits : chunk_hits) {
        result.insert(result.end(), std::make_move_iterator(hits.begin()),
                      std::make_move_iterator(hits.end()));
    }
    return result;
}

SubpowerFamily subuniverses(const Algebra& alg, int power, const Limits& limits) {
    const Domain dom = alg.domain();
    const std::size_t space = checked_power(dom.size, power, limits.max_power_size);
    const std::size_t subsets = std::size_t{1} << space;

    std::vector<Tuple> all;
    all.reserve(space);
    for (std::size_t idx = 0; idx < space; ++idx) all.push_back(decode_tuple(idx, dom, power));

    std::set<std::vector<Tuple>> seen;
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<Tuple> gens;
        for (std::size_t idx = 0; idx < space; ++idx) {
            if (mask & (std::size_t{1} << idx)) gens.push_back(all[idx]);
        }
        seen.insert(subpower_closure(alg, power, gens, limits).tuples);
    }

    SubpowerFamily family;
    family.domain_size = dom.size;
    family.power = power;
    for (const std::vector<Tuple>& tuples : seen) {
        family.members.push_back(Relation(dom, power, tuples));
    }
    return family;
}

Relation proj_t(const Relation& r, const std::vector<int>& positions) {
    if (positions.empty()) throw std::invalid_argument("proj_t: empty position set");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 1 || positions[i] > r.arity) {
            throw std::invalid_argument("proj_t: position out of range");
        }
        if (i > 0 && positions[i] <= positions[i - 1]) {
            throw std::invalid_argument("proj_t: positions must be strictly increasing");
        }
    }
    std::vector<Tuple> out;
    out.reserve(r.size());
    for (const Tuple& x : r.tuples) {
        Tuple y;
        y.reserve(positions.size());
        for (int p : positions) y.push_back(x[static_cast<std::size_t>(p - 1)]);
        out.push_back(std::move(y));
    }
    return Relation(r.domain(), static_cast<int>(positions.size()), std::move(out));
}

Relation fork(const Relation& r, int i) {
    if (i < 1 || i > r.arity) throw std::invalid_argument("fork: position out of range");
    std::map<Tuple, std::set<Element>> blocks;
    for (const Tuple& x : r.tuples) {
        Tuple prefix(x.begin(), x.begin() + (i - 1));
        blocks[std::move(prefix)].insert(x[static_cast<std::size_t>(i - 1)]);
    }
    std::vector<Tuple> pairs;
    for (const auto& [prefix, values] : blocks) {
        for (Element a : values) {
            for (Element b : values) pairs.push_back(Tuple{a, b});
        }
    }
    return Relation(r.domain(), 2, std::move(pairs));
}

namespace {

bool is_subuniverse(const Relation& r, const Algebra& alg, const Limits& limits) {
    return subpower_closure(alg, r.arity, r.tuples, limits) == r;
}

bool tuple_subset(const Relation& small, const Relation& big) {
    for (const Tuple& x : small.tuples) {
        if (!big.contains(x)) return false;
    }
    return true;
}

}  // namespace

RepVerdict rep_check(const Relation& f_rel, const Relation& g_rel, const Algebra& alg, int k,
                     const Limits& limits) {
    if (k < 2) throw std::invalid_argument("rep_check: k must be > 1");
    if (f_rel.domain_size != alg.domain_size || g_rel.domain_size != alg.domain_size ||
        f_rel.arity != g_rel.arity) {
        throw std::invalid_argument("rep_check: relations must share arity and domain with alg");
    }
    if (!tuple_subset(f_rel, g_rel)) {
        throw std::invalid_argument("rep_check: F must be contained in G");
    }
    if (!is_subuniverse(f_rel, alg, limits) || !is_subuniverse(g_rel, alg, limits)) {
        throw std::invalid_argument("rep_check: F and G must be subuniverses");
    }

    RepVerdict verdict;
    verdict.edge_term_found = find_edge(alg.domain(), alg.basic_ops, k, limits).has_value();

    const int m = f_rel.arity;
    bool hyp = true;
    for (std::size_t mask = 1; mask < (std::size_t{1} << m) && hyp; ++mask) {
        if (std::popcount(mask) >= k) continue;
        std::vector<int> positions;
        for (int p = 0; p < m; ++p) {
            if (mask & (std::size_t{1} << p)) positions.push_back(p + 1);
        }
        if (proj_t(f_rel, positions) != proj_t(g_rel, positions)) hyp = false;
    }
    for (int i = 1; i <= m && hyp; ++i) {
        if (!tuple_subset(fork(g_rel, i), fork(f_rel, i))) hyp = false;
    }
    verdict.hypotheses_hold = hyp;
    verdict.conclusion_holds = (f_rel == g_rel);

    if (verdict.edge_term_found && verdict.hypotheses_hold && !verdict.conclusion_holds) {
        throw std::logic_error("rep_check: hypotheses hold with a k-edge term but F != G");
    }
    return verdict;
}

Relation combine_relations(const std::vector<Relation>& relations, const Domain& dom,
                           const Limits& limits) {
    std::vector<const Relation*> parts;
    int arity = 0;
    std::size_t count = 1;
    for (const Relation& r : relations) {
        if (r.domain_size != dom.size) {
            throw std::invalid_argument("combine_relations: domain mismatch");
        }
        if (r.empty()) continue;  // preserved by every function
        parts.push_back(&r);
        arity += r.arity;
        count *= r.size();
        if (count > limits.max_tuple_space) {
            throw resource_limit_error("combine_relations: product of " + std::to_string(count) +
                                       " tuples exceeds cap");
        }
    }
    if (parts.empty()) return full_power(dom, 1, limits);

    std::vector<Tuple> out;
    out.reserve(count);
    std::vector<std::size_t> pick(parts.size(), 0);
    while (true) {
        Tuple x;
        x.reserve(static_cast<std::size_t>(arity));
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const Tuple& part = parts[j]->tuples[pick[j]];
            x.insert(x.end(), part.begin(), part.end());
        }
        out.push_back(std::move(x));
        std::size_t pos = parts.size();
        while (pos > 0 && ++pick[pos - 1] == parts[pos - 1]->size()) pick[--pos] = 0;
        if (pos == 0) break;
    }
    return Relation(dom, arity, std::move(out));
}

bool verify_determination(const Domain& dom, const std::vector<OperationTable>& generators,
                          const std::vector<Relation>& relations, int n, const Limits& limits) {
    std::vector<OperationTable> pol = pol_layer(relations, dom, n, limits);
    CloneLayer layer = clone_layer(dom, generators, n, limits);
    return pol == layer.ops;
}

}  // namespace clonekit
