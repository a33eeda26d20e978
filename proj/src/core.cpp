#include "clonekit/core.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace clonekit {

std::size_t checked_power(int t, int n, std::size_t cap) {
    std::size_t p = 1;
    for (int i = 0; i < n; ++i) {
        if (p > cap / static_cast<std::size_t>(t)) {
            throw resource_limit_error("tuple space " + std::to_string(t) + "^" +
                                       std::to_string(n) + " exceeds cap " + std::to_string(cap));
        }
        p *= static_cast<std::size_t>(t);
    }
    if (p > cap) {
        throw resource_limit_error("tuple space " + std::to_string(t) + "^" + std::to_string(n) +
                                   " exceeds cap " + std::to_string(cap));
    }
    return p;
}

std::size_t encode_tuple(std::span<const Element> x, const Domain& dom) {
    std::size_t index = 0;
    for (Element e : x) {
        if (!dom.contains(e)) {
            throw std::invalid_argument("tuple entry " + std::to_string(e) +
                                        " outside domain of size " + std::to_string(dom.size));
        }
        index = index * static_cast<std::size_t>(dom.size) + static_cast<std::size_t>(e);
    }
    return index;
}

Tuple decode_tuple(std::size_t index, const Domain& dom, int arity) {
    if (arity < 0) throw std::invalid_argument("negative arity");
    std::size_t space = checked_power(dom.size, arity, std::size_t{1} << 62);
    if (index >= space) {
        throw std::invalid_argument("tuple index " + std::to_string(index) +
                                    " out of range for " + std::to_string(dom.size) + "^" +
                                    std::to_string(arity));
    }
    Tuple x(static_cast<std::size_t>(arity));
    for (int pos = arity - 1; pos >= 0; --pos) {
        x[static_cast<std::size_t>(pos)] = static_cast<Element>(index % dom.size);
        index /= static_cast<std::size_t>(dom.size);
    }
    return x;
}

OperationTable::OperationTable(const Domain& dom, int n, std::vector<Element> vals)
    : domain_size(dom.size), arity(n), values(std::move(vals)) {
    if (n < 1) throw std::invalid_argument("operation arity must be positive");
    std::size_t space = checked_power(dom.size, n, std::size_t{1} << 62);
    if (values.size() != space) {
        throw std::invalid_argument("operation table has " + std::to_string(values.size()) +
                                    " entries, expected " + std::to_string(space));
    }
    for (Element v : values) {
        if (!dom.contains(v)) throw std::invalid_argument("operation value outside domain");
    }
}

Element OperationTable::operator()(std::span<const Element> x) const {
    return apply(*this, x);
}

std::size_t OperationTableHash::operator()(const OperationTable& f) const {
    std::size_t h = std::hash<int>{}(f.domain_size) * 31u + std::hash<int>{}(f.arity);
    for (Element v : f.values) h = h * 1000003u + static_cast<std::size_t>(v) + 1;
    return h;
}

OperationTable projection(const Domain& dom, int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("projection index out of 1..n");
    std::size_t space = checked_power(dom.size, n, std::size_t{1} << 62);
    std::vector<Element> values(space);
    for (std::size_t idx = 0; idx < space; ++idx) {
        Tuple x = decode_tuple(idx, dom, n);
        values[idx] = x[static_cast<std::size_t>(i - 1)];
    }
    return OperationTable(dom, n, std::move(values));
}

Element apply(const OperationTable& f, std::span<const Element> x) {
    if (static_cast<int>(x.size()) != f.arity) {
        throw std::invalid_argument("arity mismatch: table expects " + std::to_string(f.arity) +
                                    " arguments, got " + std::to_string(x.size()));
    }
    return f.values[encode_tuple(x, f.domain())];
}

OperationTable compose(const OperationTable& f, std::span<const OperationTable> gs) {
    if (static_cast<int>(gs.size()) != f.arity) {
        throw std::invalid_argument("compose: outer arity mismatch");
    }
    if (gs.empty()) throw std::invalid_argument("compose: empty inner list");
    const int n = gs.front().arity;
    for (const OperationTable& g : gs) {
        if (g.arity != n || g.domain_size != f.domain_size) {
            throw std::invalid_argument("compose: inner tables must share arity and domain");
        }
    }
    const Domain dom = f.domain();
    std::size_t space = gs.front().values.size();
    std::vector<Element> values(space);
    Tuple inner(gs.size());
    for (std::size_t idx = 0; idx < space; ++idx) {
        for (std::size_t j = 0; j < gs.size(); ++j) inner[j] = gs[j].values[idx];
        values[idx] = f.values[encode_tuple(inner, dom)];
    }
    return OperationTable(dom, n, std::move(values));
}

Algebra::Algebra(const Domain& dom, std::vector<OperationTable> ops)
    : domain_size(dom.size), basic_ops(std::move(ops)) {
    for (const OperationTable& f : basic_ops) {
        if (f.domain_size != domain_size) {
            throw std::invalid_argument("algebra operations must share one domain");
        }
    }
}

Relation::Relation(const Domain& dom, int r, std::vector<Tuple> ts)
    : domain_size(dom.size), arity(r), tuples(std::move(ts)) {
    if (r < 1) throw std::invalid_argument("relation arity must be positive");
    for (const Tuple& x : tuples) {
        if (static_cast<int>(x.size()) != r) {
            throw std::invalid_argument("relation tuple has wrong length");
        }
        for (Element e : x) {
            if (!dom.contains(e)) throw std::invalid_argument("relation entry outside domain");
        }
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

bool Relation::contains(const Tuple& x) const {
    return std::binary_search(tuples.begin(), tuples.end(), x);
}

Relation full_power(const Domain& dom, int n, const Limits& limits) {
    std::size_t space = checked_power(dom.size, n, limits.max_tuple_space);
    std::vector<Tuple> tuples;
    tuples.reserve(space);
    for (std::size_t idx = 0; idx < space; ++idx) tuples.push_back(decode_tuple(idx, dom, n));
    return Relation(dom, n, std::move(tuples));
}

Relation subpower_closure(const Algebra& alg, int arity, const std::vector<Tuple>& generators,
                          const Limits& limits) {
    const Domain dom = alg.domain();
    checked_power(dom.size, arity, limits.max_tuple_space);

    std::vector<Tuple> members;
    std::unordered_set<std::size_t> seen;
    for (const Tuple& g : generators) {
        if (static_cast<int>(g.size()) != arity) {
            throw std::invalid_argument("generator tuple has wrong length");
        }
        if (seen.insert(encode_tuple(g, dom)).second) members.push_back(g);
    }

    // Worklist fixpoint: each round only forms argument combinations that
    // touch at least one tuple added in the previous round.
    std::size_t fresh_begin = 0;
    while (fresh_begin < members.size()) {
        std::size_t round_end = members.size();
        for (const OperationTable& f : alg.basic_ops) {
            const int k = f.arity;
            std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
            Tuple out(static_cast<std::size_t>(arity));
            Tuple args(static_cast<std::size_t>(k));
            while (true) {
                bool touches_fresh = false;
                for (std::size_t p : pick) touches_fresh |= (p >= fresh_begin);
                if (touches_fresh) {
                    for (int coord = 0; coord < arity; ++coord) {
                        for (int j = 0; j < k; ++j) {
                            args[static_cast<std::size_t>(j)] =
                                members[pick[static_cast<std::size_t>(j)]]
                                       [static_cast<std::size_t>(coord)];
                        }
                        out[static_cast<std::size_t>(coord)] = f.values[encode_tuple(args, dom)];
                    }
                    if (seen.insert(encode_tuple(out, dom)).second) members.push_back(out);
                }
                int pos = k - 1;
                while (pos >= 0 && ++pick[static_cast<std::size_t>(pos)] == round_end) {
                    pick[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
        }
        fresh_begin = round_end;
    }
    return Relation(dom, arity, std::move(members));
}

}  // namespace clonekit
