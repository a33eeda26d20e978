#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "clonekit/core.hpp"
#include "clonekit/wpo.hpp"

// Clone-layer closure, special-term detection, the phi/lambda encoding
// relations and the determining-relation machinery around them.

namespace clonekit {

/// The n-ary part of the clone generated by a set of operations, kept as a
/// canonical sorted deduplicated list. Always contains the n projections.
struct CloneLayer {
    int domain_size = 1;
    int arity = 1;
    std::vector<OperationTable> ops;             // sorted, unique
    std::vector<OperationTable> generated_from;  // the generator set used

    Domain domain() const { return Domain(domain_size); }
    std::size_t size() const { return ops.size(); }
    bool contains(const OperationTable& f) const;
};

/// Least fixpoint: start from the n projections, keep adding compose(f, gs)
/// for every generator f and every tuple gs of current members.
CloneLayer clone_layer(const Domain& dom, const std::vector<OperationTable>& generators,
                       int arity, const Limits& limits = {});

/// The k-edge identities: f(y,y,x,...,x) = f(y,x,y,x,...,x) = x and, for
/// every later position, f(x,...,x,y,x,...,x) = x. Requires arity k+1.
bool is_edge_op(const OperationTable& f, int k);

/// The Malcev identities m(x,y,y) = m(y,y,x) = x.
bool is_malcev_op(const OperationTable& f);

/// Near-unanimity: f(x,...,x,y,x,...,x) = x for y in any single position.
bool is_nu_op(const OperationTable& f);

/// Scan the ternary layer of the clone generated by F for a Malcev table;
/// returns the canonically first hit.
std::optional<OperationTable> find_malcev(const Domain& dom,
                                          const std::vector<OperationTable>& generators,
                                          const Limits& limits = {});

/// Scan layer k+1 for a k-edge table.
std::optional<OperationTable> find_edge(const Domain& dom,
                                        const std::vector<OperationTable>& generators, int k,
                                        const Limits& limits = {});

/// Scan layer k for a k-ary near-unanimity table; requires k > 2.
std::optional<OperationTable> find_nu(const Domain& dom,
                                      const std::vector<OperationTable>& generators, int k,
                                      const Limits& limits = {});

/// The pairs (f(a), g(a)) over layer members f, g that agree on every tuple
/// lexicographically below a.
struct PhiRelation {
    std::set<std::pair<Element, Element>> pairs;
    Word point;

    bool contains(Element c, Element d) const { return pairs.count({c, d}) > 0; }
};

/// Computed by partitioning the layer by its restriction to tuple indices
/// below encode_tuple(a); each block contributes V x V for its value set V
/// at a.
PhiRelation phi(const CloneLayer& layer, const Word& a);

/// Caches clone layers per arity so repeated lambda queries against one
/// generator set stay cheap.
class LayerCache {
public:
    LayerCache(const Domain& dom, std::vector<OperationTable> generators, Limits limits = {});

    const CloneLayer& layer(int arity);
    const std::vector<OperationTable>& generators() const { return generators_; }
    const Limits& limits() const { return limits_; }

private:
    int domain_size_;
    std::vector<OperationTable> generators_;
    Limits limits_;
    std::map<int, CloneLayer> layers_;
};

/// True iff (c, d) is missing from phi at a, for the clone generated by F.
bool lambda_member(LayerCache& cache, Element c, Element d, const Word& a);

struct MReport {
    struct PairReport {
        Element c = 0;
        Element d = 0;
        std::vector<Word> minimals;
        bool frontier_closed = true;
    };
    std::vector<PairReport> pairs;
    int m = 1;  // supremum of minimal-word lengths; 1 when every lambda is empty
    bool all_frontiers_closed = true;
};

/// Bounded search for the minimal words of every lambda set, and the
/// supremum m of their lengths. Any open frontier makes m a lower bound
/// only, flagged in the report.
MReport compute_m(const Domain& dom, const std::vector<OperationTable>& generators, int max_len,
                  const Limits& limits = {});

/// Each n-ary table of the layer becomes one tuple of length t^n.
Relation layer_as_relation(const CloneLayer& layer, const Limits& limits = {});

/// Membership test for the clone generated by F, either by exhausting the
/// layer at f's arity or by checking preservation of supplied relations that
/// are trusted to determine the clone there.
enum class MembershipMode { exhaustive, via_relations };

bool is_term_function(const std::vector<OperationTable>& generators, const OperationTable& f,
                      MembershipMode mode, const std::vector<Relation>& relations = {},
                      const Limits& limits = {});

}  // namespace clonekit
