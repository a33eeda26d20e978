#include "clonekit/wpo.hpp"

#include <algorithm>

namespace clonekit {

namespace {

void require_nonempty(const Word& a) {
    if (a.empty()) throw std::invalid_argument("words are nonempty");
}

}  // namespace

std::set<Element> symbols(const Word& a) {
    require_nonempty(a);
    return std::set<Element>(a.begin(), a.end());
}

Element last(const Word& a) {
    require_nonempty(a);
    return a.back();
}

Word start(const Word& a) {
    if (a.size() < 2) throw std::invalid_argument("start requires length >= 2");
    return Word(a.begin(), a.end() - 1);
}

std::optional<int> first_occ(const Word& a, Element b) {
    require_nonempty(a);
    auto it = std::find(a.begin(), a.end(), b);
    if (it == a.end()) return std::nullopt;
    return static_cast<int>(it - a.begin());
}

bool is_witness(const Word& a, const Word& b, const Witness& h) {
    if (a.empty() || b.empty()) return false;
    if (h.size() != a.size()) return false;
    int prev = -1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (h[i] <= prev || h[i] >= static_cast<int>(b.size())) return false;
        if (b[static_cast<std::size_t>(h[i])] != a[i]) return false;
        prev = h[i];
    }
    if (symbols(a) != symbols(b)) return false;
    for (Element c : symbols(a)) {
        int fa = *first_occ(a, c);
        int fb = *first_occ(b, c);
        if (h[static_cast<std::size_t>(fa)] != fb) return false;
    }
    return true;
}

std::optional<Witness> embeds(const Word& a, const Word& b) {
    require_nonempty(a);
    require_nonempty(b);
    if (a.size() > b.size()) return std::nullopt;
    std::set<Element> syms = symbols(a);
    if (syms != symbols(b)) return std::nullopt;

    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    Witness h(a.size(), -1);
    for (Element c : syms) {
        h[static_cast<std::size_t>(*first_occ(a, c))] = *first_occ(b, c);
    }

    // Exclusive upper bound for each position: the next pinned target.
    std::vector<int> bound(a.size() + 1);
    bound[a.size()] = n;
    for (int i = m - 1; i >= 0; --i) {
        bound[static_cast<std::size_t>(i)] =
            h[static_cast<std::size_t>(i)] >= 0 ? h[static_cast<std::size_t>(i)]
                                                : bound[static_cast<std::size_t>(i) + 1];
    }

    int prev = -1;
    for (int i = 0; i < m; ++i) {
        const std::size_t ui = static_cast<std::size_t>(i);
        if (h[ui] >= 0) {
            if (h[ui] <= prev) return std::nullopt;  // pins out of order
            prev = h[ui];
            continue;
        }
        int j = prev + 1;
        const int limit = bound[ui + 1];
        while (j < limit && b[static_cast<std::size_t>(j)] != a[ui]) ++j;
        if (j >= limit) return std::nullopt;
        h[ui] = j;
        prev = j;
    }
    if (!is_witness(a, b, h)) return std::nullopt;
    return h;
}

bool word_le(const Word& a, const Word& b) {
    return embeds(a, b).has_value();
}

Tuple t_map(const Word& a, const Word& b, const Witness& h, const Tuple& x) {
    if (!is_witness(a, b, h)) {
        throw std::invalid_argument("t_map: h does not witness the embedding");
    }
    if (x.size() != a.size()) throw std::invalid_argument("t_map: argument length mismatch");
    std::vector<int> source(b.size(), -1);
    for (std::size_t i = 0; i < h.size(); ++i) source[static_cast<std::size_t>(h[i])] = static_cast<int>(i);
    Tuple out(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        int i = source[j];
        if (i < 0) i = *first_occ(a, b[j]);  // symbol sets agree, so this exists
        out[j] = x[static_cast<std::size_t>(i)];
    }
    return out;
}

std::set<Word> predecessors(const Word& a) {
    if (a.size() < 2) throw std::invalid_argument("predecessors requires length >= 2");
    std::set<Word> result;
    for (std::size_t p = 0; p < a.size(); ++p) {
        if (static_cast<int>(p) == *first_occ(a, a[p])) continue;
        Word w = a;
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
        result.insert(std::move(w));
    }
    return result;
}

MinimalsReport minimal_elements(const std::function<bool(const Word&)>& member, const Domain& dom,
                                int max_len) {
    if (max_len < 1) throw std::invalid_argument("minimal_elements: max_len must be >= 1");
    MinimalsReport report;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t space = checked_power(dom.size, len, std::size_t{1} << 62);
        for (std::size_t idx = 0; idx < space; ++idx) {
            Word a = decode_tuple(idx, dom, len);
            if (!member(a)) continue;
            bool minimal = true;
            if (len >= 2) {
                for (const Word& p : predecessors(a)) {
                    if (member(p)) {
                        minimal = false;
                        break;
                    }
                }
            }
            // Single deletions are not known to generate the covering
            // relation, so also check against the minimals found so far.
            if (minimal) {
                for (const Word& w : report.minimals) {
                    if (word_le(w, a)) {
                        minimal = false;
                        break;
                    }
                }
            }
            if (minimal) report.minimals.push_back(a);
            if (len == max_len) {
                bool covered = false;
                for (const Word& w : report.minimals) {
                    if (word_le(w, a)) {
                        covered = true;
                        break;
                    }
                }
                if (!covered) report.frontier_closed = false;
            }
        }
    }
    return report;
}

std::optional<std::pair<std::size_t, std::size_t>> find_good_pair(const std::vector<Word>& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (word_le(seq[i], seq[j])) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

}  // namespace clonekit
