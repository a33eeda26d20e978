#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Core substrate: elements, operation tables, relations, tuple encoding,
// composition, and subpower closure. Elements are 0-based internally and
// rendered 1-based at the CLI/JSON boundary.

namespace clonekit {

using Element = int;
using Tuple = std::vector<Element>;

/// Thrown when a computation would exceed a configured resource cap.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Resource caps for closure, brute-force and enumeration routines.
struct Limits {
    std::size_t max_tuple_space = std::size_t{1} << 20;  // cap on t^n
    std::size_t max_layer_size = 1'000'000;              // cap on clone layer size
    std::size_t max_bruteforce = std::size_t{1} << 20;   // cap on t^(t^n) in pol_layer
    std::size_t max_power_size = 16;                     // cap on t^j in subuniverse enumeration
    int max_word_len = 8;
    int thread_count = 1;
};

struct Domain {
    int size = 1;  // t; elements are 0..t-1

    explicit Domain(int t) : size(t) {
        if (t < 1) throw std::invalid_argument("domain size must be >= 1");
    }
    bool contains(Element x) const { return x >= 0 && x < size; }
    friend bool operator==(const Domain&, const Domain&) = default;
};

/// t^n with an overflow/cap check; the error names the offending size.
std::size_t checked_power(int t, int n, std::size_t cap);

/// Big-endian positional index of x over a t-element domain, so that numeric
/// index order coincides with lexicographic order on tuples.
std::size_t encode_tuple(std::span<const Element> x, const Domain& dom);

/// Inverse of encode_tuple for arity n.
Tuple decode_tuple(std::size_t index, const Domain& dom, int arity);

/// A finitary operation on a t-element domain as a flat value table.
/// Entry at tuple-index i is the value on the i-th tuple in lex order.
struct OperationTable {
    int domain_size = 1;
    int arity = 1;
    std::vector<Element> values;

    OperationTable() = default;
    OperationTable(const Domain& dom, int n, std::vector<Element> vals);

    Domain domain() const { return Domain(domain_size); }
    Element operator()(std::span<const Element> x) const;

    friend bool operator==(const OperationTable&, const OperationTable&) = default;
    friend auto operator<=>(const OperationTable&, const OperationTable&) = default;
};

struct OperationTableHash {
    std::size_t operator()(const OperationTable& f) const;
};

/// The i-th n-ary projection e_i^n (i is 1-based, as in e_1^n..e_n^n).
OperationTable projection(const Domain& dom, int n, int i);

/// f applied to x; checks arity and domain membership.
Element apply(const OperationTable& f, std::span<const Element> x);

/// Superposition x -> f(g_1(x),...,g_k(x)). All gs share arity and domain.
OperationTable compose(const OperationTable& f, std::span<const OperationTable> gs);

struct Algebra {
    int domain_size = 1;
    std::vector<OperationTable> basic_ops;

    Algebra(const Domain& dom, std::vector<OperationTable> ops);
    Domain domain() const { return Domain(domain_size); }
};

/// A finitary relation: a duplicate-free set of tuples, kept sorted in
/// tuple-index order so equality is structural.
struct Relation {
    int domain_size = 1;
    int arity = 1;
    std::vector<Tuple> tuples;  // sorted, unique

    Relation() = default;
    Relation(const Domain& dom, int r, std::vector<Tuple> ts);

    Domain domain() const { return Domain(domain_size); }
    bool contains(const Tuple& x) const;
    std::size_t size() const { return tuples.size(); }
    bool empty() const { return tuples.empty(); }

    friend bool operator==(const Relation&, const Relation&) = default;
};

/// Full power A^n as a relation.
Relation full_power(const Domain& dom, int n, const Limits& limits = {});

/// Smallest subset of A^n containing the generators and closed under
/// coordinatewise application of every basic operation of alg. The closure
/// of the empty set is empty (all operations have positive arity).
Relation subpower_closure(const Algebra& alg, int arity, const std::vector<Tuple>& generators,
                          const Limits& limits = {});

}  // namespace clonekit
