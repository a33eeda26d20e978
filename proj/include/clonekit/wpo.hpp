#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "clonekit/core.hpp"

// The embedding order on nonempty words: b lies above a when b arises from a
// by inserting letters after their first occurrence, keeping the symbol set
// and every first occurrence in place.

namespace clonekit {

/// Nonempty sequence of domain elements. Letters are 0-based like everything
/// else internally; the CLI shifts to 1-based.
using Word = std::vector<Element>;

/// Strictly increasing injection from positions of a shorter word into
/// positions of a longer one. Positions are 0-based.
using Witness = std::vector<int>;

/// Set of letters occurring in a.
std::set<Element> symbols(const Word& a);

/// Final letter of a.
Element last(const Word& a);

/// All but the final letter; requires length >= 2.
Word start(const Word& a);

/// 0-based position of the first occurrence of b in a, or absent.
std::optional<int> first_occ(const Word& a, Element b);

/// True iff h is a valid witness for a embedding into b.
bool is_witness(const Word& a, const Word& b, const Witness& h);

/// Search for a witness that a embeds into b. The first occurrence of every
/// symbol pins part of the map; the remaining positions are matched greedily
/// left-to-right between consecutive pins.
std::optional<Witness> embeds(const Word& a, const Word& b);

/// a <=_E b.
bool word_le(const Word& a, const Word& b);

/// The substitution A^m -> A^n attached to a witness h for a <= b: position
/// j in range(h) reads x at the preimage of j, any other position j reads x
/// at the first occurrence of b_j in a. Every coordinate is a projection.
Tuple t_map(const Word& a, const Word& b, const Witness& h, const Tuple& x);

/// Words obtained by deleting one letter of a at a non-first-occurrence
/// position; each result is strictly below a. Requires length >= 2.
std::set<Word> predecessors(const Word& a);

struct MinimalsReport {
    std::vector<Word> minimals;
    bool frontier_closed = true;
};

/// Bounded search for the minimal elements of an upward closed set given by
/// a membership test. Scans words of length 1..max_len in lex order; a word
/// is reported minimal when it is a member, no deletion-predecessor is a
/// member, and no previously reported minimal embeds into it.
/// frontier_closed is true iff every member of length exactly max_len lies
/// above some reported minimal; otherwise the result is a lower bound only.
MinimalsReport minimal_elements(const std::function<bool(const Word&)>& member, const Domain& dom,
                                int max_len);

/// Least pair (i, j) with i < j and seq[i] <=_E seq[j], in lexicographic
/// order of (i, j). Indices are 0-based.
std::optional<std::pair<std::size_t, std::size_t>> find_good_pair(const std::vector<Word>& seq);

}  // namespace clonekit
