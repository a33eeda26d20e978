#pragma once

#include <vector>

#include "clonekit/core.hpp"

// Preservation, Pol layers, subuniverse enumeration, and the projection/fork
// representation check behind the determining-relation results.

namespace clonekit {

/// All subuniverses of the j-th power of an algebra, as relations of arity j.
struct SubpowerFamily {
    int domain_size = 1;
    int power = 1;
    std::vector<Relation> members;  // sorted by tuple set
};

/// f preserves R iff every coordinatewise application of f to tuples of R
/// lands in R. Costs |R|^arity(f) membership tests.
bool preserves(const OperationTable& f, const Relation& r);

/// Brute-force filter of all t^(t^n) n-ary tables by preservation of every
/// relation. Feasible only at small t and n; guarded by limits.
std::vector<OperationTable> pol_layer(const std::vector<Relation>& relations, const Domain& dom,
                                      int n, const Limits& limits = {});

/// Enumerates all subuniverses of alg^power by closing every subset of the
/// power; requires t^power within the configured cap.
SubpowerFamily subuniverses(const Algebra& alg, int power, const Limits& limits = {});

/// Projection of R to the positions in T (1-based, strictly increasing).
Relation proj_t(const Relation& r, const std::vector<int>& positions);

/// The fork at position i (1-based): pairs of i-th coordinates of tuples
/// agreeing on all earlier coordinates.
Relation fork(const Relation& r, int i);

struct RepVerdict {
    bool edge_term_found = false;
    bool hypotheses_hold = false;
    bool conclusion_holds = false;
};

/// Checks the representation hypotheses for subuniverses F of G of alg^m:
/// equal projections on all position sets of size < k and fork containment
/// fork(G, i) within fork(F, i), then reports whether F = G. When alg has a
/// verified k-edge term, hypotheses without the conclusion would contradict
/// the underlying representation result; that case throws.
RepVerdict rep_check(const Relation& f_rel, const Relation& g_rel, const Algebra& alg, int k,
                     const Limits& limits = {});

/// Concatenation product of the non-empty members (empty relations are
/// preserved vacuously and are dropped); full A^1 when all are empty.
/// Preserves the Pol layer at every arity.
Relation combine_relations(const std::vector<Relation>& relations, const Domain& dom,
                           const Limits& limits = {});

/// True iff the brute-forced Pol layer of the relations equals the n-ary
/// layer of the clone generated by F.
bool verify_determination(const Domain& dom, const std::vector<OperationTable>& generators,
                          const std::vector<Relation>& relations, int n,
                          const Limits& limits = {});

}  // namespace clonekit
