#pragma once

#include <vector>

#include "clonekit/core.hpp"

// Constructive primitive-positive definitions of subgroups of G^n over a
// single relation H: small generating sets, the greedy constraint set M,
// the sigma/tau index maps, and a brute-force evaluator.

namespace clonekit {

/// A finite group given by its multiplication table; inverse and identity
/// are derived and the group laws are validated on construction.
struct GroupTable {
    int size = 1;
    OperationTable mul;
    OperationTable inv;
    Element identity = 0;

    static GroupTable from_mul(const OperationTable& mul);
    static GroupTable cyclic(int n);

    Domain domain() const { return Domain(size); }
    /// The algebra <G, mul, inv> whose subpowers are the subgroups of G^n.
    Algebra algebra() const;
    /// The graph of multiplication { (x, y, xy) }, the default candidate
    /// for a determining relation.
    Relation mul_graph() const;
};

/// Greedy small generating set for a subgroup S of G^n: repeatedly adjoin
/// the tuple-index-least element outside the current closure. Index
/// doubling bounds the count by log2|S|. Errors if S is not a subgroup.
std::vector<Tuple> small_generators(const GroupTable& group, const Relation& subgroup,
                                    const Limits& limits = {});

/// One constraint: an e-tuple of H-tuples. A function f on G^e satisfies it
/// when applying f coordinatewise to the e arguments lands in H.
using Constraint = std::vector<Tuple>;

/// Greedy constraint set cutting the set of all e-ary functions on G down
/// to the e-ary term functions of the group. Errors when H cannot cut that
/// far (H does not determine the clone at arity e).
std::vector<Constraint> select_m(const GroupTable& group, int e, const Relation& h,
                                 const Limits& limits = {});

/// The data of a primitive-positive definition over a single relation H:
/// existential variables a_1..a_l, conjuncts (a_sigma(i,1),...,a_sigma(i,k))
/// in H, and output reads g_j = a_tau(j). Indices are 1-based.
struct PPFormula {
    int n = 1;        // arity of the defined relation
    int l = 1;        // number of existential variables
    int m_count = 0;  // number of conjuncts
    int k = 1;        // arity of H
    std::vector<std::vector<int>> sigma;  // m_count rows of k indices into 1..l
    std::vector<int> tau;                 // n indices into 1..l
    Relation h;
    // Set when the trivial subgroup could not be pinned through H and the
    // formula stands for the exact identity singleton instead.
    bool singleton_identity = false;
};

/// Assembles l, sigma and tau from the generators of S and the greedy
/// constraint set, with the tuple encoding of G^e as the variable
/// numbering.
PPFormula build_pp_formula(const GroupTable& group, const Relation& h, const Relation& subgroup,
                           const Limits& limits = {});

/// Brute-force enumeration of all |G|^l assignments.
Relation eval_pp_formula(const PPFormula& formula, const GroupTable& group,
                         const Limits& limits = {});

}  // namespace clonekit
