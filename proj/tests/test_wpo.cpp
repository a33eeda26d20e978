#include <doctest.h>

#include <algorithm>

#include "clonekit/wpo.hpp"

using namespace clonekit;

namespace {

std::vector<Word> words_up_to(int t, int max_len) {
    std::vector<Word> out;
    Word cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (remaining == 0) return;
        for (Element x = 0; x < t; ++x) {
            cur.push_back(x);
            self(self, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, max_len);
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool brute_force_embeds(const Word& a, const Word& b) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    if (m > n) return false;
    Witness h;
    auto rec = [&](auto&& self, int next_pos, int min_target) -> bool {
        if (next_pos == m) return is_witness(a, b, h);
        for (int j = min_target; j <= n - (m - next_pos); ++j) {
            h.push_back(j);
            if (self(self, next_pos + 1, j + 1)) return true;
            h.pop_back();
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace

TEST_CASE("word accessors") {
    Word a{0, 1, 0};
    CHECK(symbols(a) == std::set<Element>{0, 1});
    CHECK(last(a) == 0);
    CHECK(start(a) == Word{0, 1});
    CHECK_THROWS_AS(start(Word{0}), std::invalid_argument);
}

TEST_CASE("first occurrence") {
    Word a{0, 1, 0};
    CHECK(first_occ(a, 0) == 0);
    CHECK(first_occ(a, 2) == std::nullopt);
    CHECK(first_occ(Word{1, 1, 0}, 0) == 2);
}

TEST_CASE("embeds examples") {
    CHECK(embeds(Word{0, 1}, Word{0, 1, 1}) == Witness{0, 1});
    CHECK(embeds(Word{0, 1}, Word{1, 0}) == std::nullopt);
    CHECK(embeds(Word{0}, Word{0, 0, 0}) == Witness{0});
    CHECK(embeds(Word{0, 1}, Word{0, 0, 1}) == Witness{0, 2});
}

TEST_CASE("word_le examples") {
    for (const Word& a : words_up_to(2, 4)) CHECK(word_le(a, a));
    CHECK_FALSE(word_le(Word{0, 1}, Word{1, 0}));
    CHECK(word_le(Word{0, 1}, Word{0, 1, 1, 0}));
}

TEST_CASE("greedy witness search agrees with brute force") {
    for (int t = 2; t <= 3; ++t) {
        std::vector<Word> small = words_up_to(t, 4);
        std::vector<Word> large = words_up_to(t, 6);
        for (const Word& a : small) {
            for (const Word& b : large) {
                std::optional<Witness> h = embeds(a, b);
                bool expected = brute_force_embeds(a, b);
                REQUIRE(h.has_value() == expected);
                if (h) REQUIRE(is_witness(a, b, *h));
            }
        }
    }
}

TEST_CASE("embedding implies equal symbols and non-decreasing length") {
    for (int t = 2; t <= 3; ++t) {
        std::vector<Word> all = words_up_to(t, t == 2 ? 5 : 4);
        for (const Word& a : all) {
            for (const Word& b : all) {
                if (!word_le(a, b)) continue;
                REQUIRE(a.size() <= b.size());
                REQUIRE(symbols(a) == symbols(b));
            }
        }
    }
}

TEST_CASE("t_map examples") {
    Word a{0, 1};
    Word b{0, 1, 1};
    Witness h{0, 1};
    CHECK(t_map(a, b, h, a) == b);
    CHECK(t_map(a, b, h, Tuple{0, 0}) == Tuple{0, 0, 0});
    CHECK(t_map(Word{0}, Word{0, 0}, Witness{0}, Tuple{1}) == Tuple{1, 1});
    CHECK_THROWS_AS(t_map(a, b, Witness{0, 2}, a), std::invalid_argument);
}

TEST_CASE("substitution sends the source to the target and smaller tuples below it") {
    for (int t = 2; t <= 3; ++t) {
        Domain dom(t);
        std::vector<Word> small = words_up_to(t, 3);
        std::vector<Word> large = words_up_to(t, 4);
        for (const Word& a : small) {
            for (const Word& b : large) {
                std::optional<Witness> h = embeds(a, b);
                if (!h) continue;
                REQUIRE(t_map(a, b, *h, a) == b);
                std::size_t bound = encode_tuple(a, dom);
                for (std::size_t i = 0; i < bound; ++i) {
                    Tuple c = decode_tuple(i, dom, static_cast<int>(a.size()));
                    Tuple image = t_map(a, b, *h, c);
                    REQUIRE(encode_tuple(image, dom) < encode_tuple(b, dom));
                }
            }
        }
    }
}

TEST_CASE("predecessors") {
    CHECK(predecessors(Word{0, 1, 1}) == std::set<Word>{{0, 1}});
    CHECK(predecessors(Word{0, 1}).empty());
    CHECK(predecessors(Word{0, 0, 1, 0}) == std::set<Word>{{0, 1, 0}, {0, 0, 1}});
    for (const Word& a : words_up_to(2, 4)) {
        if (a.size() < 2) continue;
        for (const Word& p : predecessors(a)) {
            REQUIRE(word_le(p, a));
            REQUIRE(p != a);
        }
    }
}

TEST_CASE("minimal elements of bounded upward closed sets") {
    Domain dom(2);
    MinimalsReport has_one = minimal_elements(
        [](const Word& w) { return std::find(w.begin(), w.end(), 1) != w.end(); }, dom, 3);
    // (1,0) is minimal too: it cannot lie above (1) since symbol sets differ.
    CHECK(has_one.minimals == std::vector<Word>{{1}, {0, 1}, {1, 0}});
    CHECK(has_one.frontier_closed);

    MinimalsReport none = minimal_elements([](const Word&) { return false; }, dom, 3);
    CHECK(none.minimals.empty());
    CHECK(none.frontier_closed);

    MinimalsReport all = minimal_elements([](const Word&) { return true; }, dom, 3);
    // Minimals are the duplicate-free words: nothing with fewer letters
    // shares their symbol set.
    CHECK(all.minimals == std::vector<Word>{{0}, {1}, {0, 1}, {1, 0}});
    CHECK(all.frontier_closed);

    CHECK_THROWS_AS(minimal_elements([](const Word&) { return true; }, dom, 0),
                    std::invalid_argument);
}

TEST_CASE("good pair search") {
    CHECK(find_good_pair({Word{0}, Word{0}}) == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(find_good_pair({Word{0, 1}, Word{1, 0}}) == std::nullopt);
    // Any sequence longer than the number of distinct bounded words repeats
    // a word, so reflexivity forces a good pair.
    std::vector<Word> seq = words_up_to(2, 2);
    seq.push_back(seq.front());
    CHECK(find_good_pair(seq).has_value());
}
