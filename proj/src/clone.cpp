#include "clonekit/clone.hpp"

#include <algorithm>
#include <unordered_set>

#include "clonekit/galois.hpp"

namespace clonekit {

bool CloneLayer::contains(const OperationTable& f) const {
    return std::binary_search(ops.begin(), ops.end(), f);
}

CloneLayer clone_layer(const Domain& dom, const std::vector<OperationTable>& generators,
                       int arity, const Limits& limits) {
    if (arity < 1) throw std::invalid_argument("clone_layer: arity must be positive");
    const int t = dom.size;
    for (const OperationTable& f : generators) {
        if (f.domain_size != t) {
            throw std::invalid_argument("clone_layer: generators must share the given domain");
        }
    }
    checked_power(t, arity, limits.max_tuple_space);

    std::vector<OperationTable> members;
    std::unordered_set<OperationTable, OperationTableHash> seen;
    for (int i = 1; i <= arity; ++i) {
        OperationTable p = projection(dom, arity, i);
        if (seen.insert(p).second) members.push_back(std::move(p));
    }

    std::size_t fresh_begin = 0;
    while (fresh_begin < members.size()) {
        std::size_t round_end = members.size();
        for (const OperationTable& f : generators) {
            const std::size_t k = static_cast<std::size_t>(f.arity);
            std::vector<std::size_t> pick(k, 0);
            std::vector<OperationTable> args(k);
            while (true) {
                bool touches_fresh = fresh_begin == 0;
                for (std::size_t p : pick) touches_fresh |= (p >= fresh_begin);
                if (touches_fresh) {
                    for (std::size_t j = 0; j < k; ++j) args[j] = members[pick[j]];
                    OperationTable g = compose(f, args);
                    if (seen.insert(g).second) {
                        members.push_back(std::move(g));
                        if (members.size() > limits.max_layer_size) {
                            throw resource_limit_error(
                                "clone layer exceeds cap of " +
                                std::to_string(limits.max_layer_size) + " tables");
                        }
                    }
                }
                std::size_t pos = k;
                while (pos > 0 && ++pick[pos - 1] == round_end) pick[--pos] = 0;
                if (pos == 0 && pick[0] == 0) break;
            }
        }
        fresh_begin = round_end;
    }

    std::sort(members.begin(), members.end());
    CloneLayer layer;
    layer.domain_size = t;
    layer.arity = arity;
    layer.ops = std::move(members);
    layer.generated_from = generators;
    return layer;
}

bool is_edge_op(const OperationTable& f, int k) {
    if (k < 2) throw std::invalid_argument("edge operations need k >= 2");
    if (f.arity != k + 1) {
        throw std::invalid_argument("k-edge operation must have arity k+1");
    }
    const int t = f.domain_size;
    Tuple args(static_cast<std::size_t>(k + 1));
    for (Element x = 0; x < t; ++x) {
        for (Element y = 0; y < t; ++y) {
            std::fill(args.begin(), args.end(), x);
            args[0] = y;
            args[1] = y;
            if (clonekit::apply(f, args) != x) return false;
            std::fill(args.begin(), args.end(), x);
            args[0] = y;
            args[2] = y;
            if (clonekit::apply(f, args) != x) return false;
            for (int pos = 3; pos <= k; ++pos) {  // remaining positions carry the lone y
                std::fill(args.begin(), args.end(), x);
                args[static_cast<std::size_t>(pos)] = y;
                if (clonekit::apply(f, args) != x) return false;
            }
        }
    }
    return true;
}

bool is_malcev_op(const OperationTable& f) {
    if (f.arity != 3) return false;
    const int t = f.domain_size;
    for (Element x = 0; x < t; ++x) {
        for (Element y = 0; y < t; ++y) {
            if (clonekit::apply(f, Tuple{x, y, y}) != x) return false;
            if (clonekit::apply(f, Tuple{y, y, x}) != x) return false;
        }
    }
    return true;
}

bool is_nu_op(const OperationTable& f) {
    if (f.arity < 3) return false;
    const int t = f.domain_size;
    Tuple args(static_cast<std::size_t>(f.arity));
    for (Element x = 0; x < t; ++x) {
        for (Element y = 0; y < t; ++y) {
            for (int pos = 0; pos < f.arity; ++pos) {
                std::fill(args.begin(), args.end(), x);
                args[static_cast<std::size_t>(pos)] = y;
                if (clonekit::apply(f, args) != x) return false;
            }
        }
    }
    return true;
}

std::optional<OperationTable> find_malcev(const Domain& dom,
                                          const std::vector<OperationTable>& generators,
                                          const Limits& limits) {
    CloneLayer layer = clone_layer(dom, generators, 3, limits);
    for (const OperationTable& f : layer.ops) {
        if (is_malcev_op(f)) return f;
    }
    return std::nullopt;
}

std::optional<OperationTable> find_edge(const Domain& dom,
                                        const std::vector<OperationTable>& generators, int k,
                                        const Limits& limits) {
    if (k < 2) throw std::invalid_argument("find_edge: k >= 2");
    CloneLayer layer = clone_layer(dom, generators, k + 1, limits);
    for (const OperationTable& f : layer.ops) {
        if (is_edge_op(f, k)) return f;
    }
    return std::nullopt;
}

std::optional<OperationTable> find_nu(const Domain& dom,
                                      const std::vector<OperationTable>& generators, int k,
                                      const Limits& limits) {
    if (k <= 2) throw std::invalid_argument("find_nu: k > 2");
    CloneLayer layer = clone_layer(dom, generators, k, limits);
    for (const OperationTable& f : layer.ops) {
        if (is_nu_op(f)) return f;
    }
    return std::nullopt;
}

PhiRelation phi(const CloneLayer& layer, const Word& a) {
    if (static_cast<int>(a.size()) != layer.arity) {
        throw std::invalid_argument("phi: word length must equal layer arity");
    }
    const Domain dom = layer.domain();
    const std::size_t idx = encode_tuple(a, dom);

    // Agreement below a is an equivalence on the layer; group by the value
    // prefix and pair up values within each block.
    std::map<std::vector<Element>, std::set<Element>> blocks;
    for (const OperationTable& f : layer.ops) {
        std::vector<Element> prefix(f.values.begin(),
                                    f.values.begin() + static_cast<std::ptrdiff_t>(idx));
        blocks[std::move(prefix)].insert(f.values[idx]);
    }
    PhiRelation result;
    result.point = a;
    for (const auto& [prefix, values] : blocks) {
        for (Element c : values) {
            for (Element d : values) result.pairs.insert({c, d});
        }
    }
    return result;
}

LayerCache::LayerCache(const Domain& dom, std::vector<OperationTable> generators, Limits limits)
    : domain_size_(dom.size), generators_(std::move(generators)), limits_(limits) {
    for (const OperationTable& f : generators_) {
        if (f.domain_size != domain_size_) {
            throw std::invalid_argument("LayerCache: generators must share the given domain");
        }
    }
}

const CloneLayer& LayerCache::layer(int arity) {
    auto it = layers_.find(arity);
    if (it == layers_.end()) {
        it = layers_.emplace(arity, clone_layer(Domain(domain_size_), generators_, arity, limits_))
                 .first;
    }
    return it->second;
}

bool lambda_member(LayerCache& cache, Element c, Element d, const Word& a) {
    const CloneLayer& layer = cache.layer(static_cast<int>(a.size()));
    const Domain dom = layer.domain();
    if (!dom.contains(c) || !dom.contains(d)) {
        throw std::invalid_argument("lambda_member: pair outside domain");
    }
    return !phi(layer, a).contains(c, d);
}

MReport compute_m(const Domain& dom, const std::vector<OperationTable>& generators, int max_len,
                  const Limits& limits) {
    if (max_len < 1) throw std::invalid_argument("compute_m: max_len must be >= 1");
    LayerCache cache(dom, generators, limits);

    MReport report;
    for (Element c = 0; c < dom.size; ++c) {
        for (Element d = 0; d < dom.size; ++d) {
            auto member = [&](const Word& a) { return lambda_member(cache, c, d, a); };
            MinimalsReport mins = minimal_elements(member, dom, max_len);
            MReport::PairReport pr;
            pr.c = c;
            pr.d = d;
            pr.minimals = std::move(mins.minimals);
            pr.frontier_closed = mins.frontier_closed;
            report.all_frontiers_closed &= pr.frontier_closed;
            for (const Word& w : pr.minimals) {
                report.m = std::max(report.m, static_cast<int>(w.size()));
            }
            report.pairs.push_back(std::move(pr));
        }
    }
    return report;
}

Relation layer_as_relation(const CloneLayer& layer, const Limits& limits) {
    checked_power(layer.domain_size, layer.arity, limits.max_tuple_space);
    std::vector<Tuple> tuples;
    tuples.reserve(layer.ops.size());
    for (const OperationTable& f : layer.ops) tuples.push_back(f.values);
    return Relation(layer.domain(), static_cast<int>(layer.ops.front().values.size()),
                    std::move(tuples));
}

bool is_term_function(const std::vector<OperationTable>& generators, const OperationTable& f,
                      MembershipMode mode, const std::vector<Relation>& relations,
                      const Limits& limits) {
    for (const OperationTable& g : generators) {
        if (g.domain_size != f.domain_size) {
            throw std::invalid_argument("is_term_function: domain mismatch");
        }
    }
    if (mode == MembershipMode::exhaustive) {
        return clone_layer(f.domain(), generators, f.arity, limits).contains(f);
    }
    for (const Relation& r : relations) {
        if (!preserves(f, r)) return false;
    }
    return true;
}

}  // namespace clonekit
