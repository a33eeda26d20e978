#include "clonekit/acceptance.hpp"

#include <algorithm>
#include <sstream>

#include "clonekit/clone.hpp"
#include "clonekit/galois.hpp"
#include "clonekit/ppgroup.hpp"
#include "clonekit/wpo.hpp"

namespace clonekit {

namespace {

std::vector<Word> words_up_to(const Domain& dom, int max_len) {
    std::vector<Word> words;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t space = checked_power(dom.size, len, std::size_t{1} << 62);
        for (std::size_t idx = 0; idx < space; ++idx) words.push_back(decode_tuple(idx, dom, len));
    }
    return words;
}

/// Exhaustive witness enumeration over all increasing injections.
std::vector<Witness> all_witnesses(const Word& a, const Word& b) {
    std::vector<Witness> found;
    if (a.size() > b.size()) return found;
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    Witness h(a.size());
    auto rec = [&](auto&& self, int i, int next) -> void {
        if (i == m) {
            if (is_witness(a, b, h)) found.push_back(h);
            return;
        }
        for (int j = next; j <= n - (m - i); ++j) {
            h[static_cast<std::size_t>(i)] = j;
            self(self, i + 1, j + 1);
        }
    };
    rec(rec, 0, 0);
    return found;
}

OperationTable xor_table() {
    return OperationTable(Domain(2), 2, {0, 1, 1, 0});
}

OperationTable and_table() {
    return OperationTable(Domain(2), 2, {0, 0, 0, 1});
}

OperationTable or_table() {
    return OperationTable(Domain(2), 2, {0, 1, 1, 1});
}

Relation leq_relation() {
    return Relation(Domain(2), 2, {{0, 0}, {0, 1}, {1, 1}});
}

Relation singleton_relation(Element v) {
    return Relation(Domain(2), 1, {{v}});
}

Relation xor_graph() {
    std::vector<Tuple> tuples;
    for (Element x = 0; x < 2; ++x) {
        for (Element y = 0; y < 2; ++y) tuples.push_back({x, y, x ^ y});
    }
    return Relation(Domain(2), 3, std::move(tuples));
}

std::string word_str(const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i] + 1);
    }
    return s + "]";
}

CriterionResult criterion_order_axioms() {
    CriterionResult r{1, "order axioms on <=E", false, ""};
    for (auto [t, max_len] : {std::pair{2, 5}, std::pair{3, 4}}) {
        const Domain dom(t);
        std::vector<Word> words = words_up_to(dom, max_len);
        const std::size_t n = words.size();
        std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) le[i][j] = word_le(words[i], words[j]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!le[i][i]) {
                r.detail = "reflexivity fails at " + word_str(words[i]);
                return r;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j && le[i][j] && le[j][i]) {
                    r.detail = "antisymmetry fails at " + word_str(words[i]);
                    return r;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    if (le[i][j] && le[j][k] && !le[i][k]) {
                        r.detail = "transitivity fails at " + word_str(words[i]);
                        return r;
                    }
                }
            }
        }
        r.detail += "t=" + std::to_string(t) + ": " + std::to_string(n) + " words ok; ";
    }
    r.pass = true;
    return r;
}

CriterionResult criterion_substitution() {
    CriterionResult r{2, "substitution map along every witness", false, ""};
    std::size_t checked = 0;
    for (int t = 2; t <= 3; ++t) {
        const Domain dom(t);
        std::vector<Word> as = words_up_to(dom, 4);
        std::vector<Word> bs = words_up_to(dom, 5);
        for (const Word& a : as) {
            const std::size_t a_idx = encode_tuple(a, dom);
            for (const Word& b : bs) {
                for (const Witness& h : all_witnesses(a, b)) {
                    if (t_map(a, b, h, a) != b) {
                        r.detail = "T(a) != b at a=" + word_str(a) + " b=" + word_str(b);
                        return r;
                    }
                    for (std::size_t c_idx = 0; c_idx < a_idx; ++c_idx) {
                        Tuple c = decode_tuple(c_idx, dom, static_cast<int>(a.size()));
                        Tuple image = t_map(a, b, h, c);
                        if (encode_tuple(image, dom) >= encode_tuple(b, dom)) {
                            r.detail = "T(c) not below b at a=" + word_str(a) +
                                       " b=" + word_str(b) + " c=" + word_str(c);
                            return r;
                        }
                        ++checked;
                    }
                }
            }
        }
    }
    r.pass = true;
    r.detail = std::to_string(checked) + " transported tuples checked";
    return r;
}

CriterionResult criterion_edge_malcev_bridge() {
    CriterionResult r{3, "edge/Malcev bridge over all 256 ternary tables", false, ""};
    const Domain dom(2);
    for (std::size_t code = 0; code < 256; ++code) {
        std::vector<Element> values(8);
        std::size_t rest = code;
        for (std::size_t pos = 8; pos > 0; --pos) {
            values[pos - 1] = static_cast<Element>(rest % 2);
            rest /= 2;
        }
        OperationTable f(dom, 3, values);
        // m(x,y,z) := f(y,x,z)
        std::vector<Element> swapped(8);
        for (Element x = 0; x < 2; ++x) {
            for (Element y = 0; y < 2; ++y) {
                for (Element z = 0; z < 2; ++z) {
                    swapped[encode_tuple(Tuple{x, y, z}, dom)] =
                        values[encode_tuple(Tuple{y, x, z}, dom)];
                }
            }
        }
        OperationTable m(dom, 3, swapped);
        if (is_edge_op(f, 2) != is_malcev_op(m)) {
            r.detail = "bridge fails at table code " + std::to_string(code);
            return r;
        }
    }
    r.pass = true;
    r.detail = "256 tables checked";
    return r;
}

struct PhiRunOutcome {
    bool phi_monotone = true;
    bool lambda_upward = true;
    std::string report;
    std::string failure;
};

/// Shared sweep for criteria 4 and 5: all embedded pairs with |b| <= 4 over
/// the clone generated by xor.
PhiRunOutcome phi_lambda_sweep(const Limits& limits) {
    PhiRunOutcome outcome;
    const Domain dom(2);
    LayerCache cache(dom, {xor_table()}, limits);
    std::vector<Word> words = words_up_to(dom, 4);
    std::ostringstream report;
    for (const Word& a : words) {
        for (const Word& b : words) {
            if (!word_le(a, b)) continue;
            PhiRelation phi_a = phi(cache.layer(static_cast<int>(a.size())), a);
            PhiRelation phi_b = phi(cache.layer(static_cast<int>(b.size())), b);
            bool contained = std::includes(phi_a.pairs.begin(), phi_a.pairs.end(),
                                           phi_b.pairs.begin(), phi_b.pairs.end());
            report << word_str(a) << "<=" << word_str(b) << " |phi_b|=" << phi_b.pairs.size()
                   << " |phi_a|=" << phi_a.pairs.size() << " contained=" << contained << "\n";
            if (!contained) {
                outcome.phi_monotone = false;
                outcome.failure = "phi not monotone at a=" + word_str(a) + " b=" + word_str(b);
            }
            for (Element c = 0; c < 2 && outcome.lambda_upward; ++c) {
                for (Element d = 0; d < 2; ++d) {
                    if (!phi_a.contains(c, d) && phi_b.contains(c, d)) {
                        outcome.lambda_upward = false;
                        outcome.failure = "lambda not upward closed at a=" + word_str(a) +
                                          " b=" + word_str(b);
                        break;
                    }
                }
            }
        }
    }
    outcome.report = report.str();
    return outcome;
}

CriterionResult criterion_phi_monotone(const Limits& limits) {
    PhiRunOutcome outcome = phi_lambda_sweep(limits);
    CriterionResult r{4, "phi shrinks along embeddings (xor clone)", outcome.phi_monotone,
                      outcome.phi_monotone ? "all embedded pairs with |b|<=4" : outcome.failure};
    return r;
}

CriterionResult criterion_lambda_upward(const Limits& limits) {
    PhiRunOutcome outcome = phi_lambda_sweep(limits);
    CriterionResult r{5, "lambda sets are upward closed (xor clone)", outcome.lambda_upward,
                      outcome.lambda_upward ? "all pairs (c,d), same sweep" : outcome.failure};
    return r;
}

CriterionResult criterion_rep_sweep(const Limits& limits) {
    CriterionResult r{6, "representation sweep over Z2 and Z3 squared", false, ""};
    std::size_t hyp_pairs = 0;
    for (int order : {2, 3}) {
        GroupTable group = GroupTable::cyclic(order);
        Algebra alg = group.algebra();
        SubpowerFamily family = subuniverses(alg, 2, limits);
        for (const Relation& f_rel : family.members) {
            for (const Relation& g_rel : family.members) {
                bool subset = true;
                for (const Tuple& x : f_rel.tuples) subset &= g_rel.contains(x);
                if (!subset) continue;
                RepVerdict verdict;
                try {
                    verdict = rep_check(f_rel, g_rel, alg, 2, limits);
                } catch (const std::logic_error& e) {
                    r.detail = e.what();
                    return r;
                }
                if (verdict.hypotheses_hold) {
                    ++hyp_pairs;
                    if (!verdict.conclusion_holds) {
                        r.detail = "hypotheses without conclusion in Z" + std::to_string(order);
                        return r;
                    }
                }
            }
        }
    }
    r.pass = true;
    r.detail = std::to_string(hyp_pairs) + " hypothesis-satisfying pairs, all collapsed";
    return r;
}

struct DeterminationOutcome {
    bool pass = true;
    std::string report;
    std::string failure;
};

DeterminationOutcome determination_instance(const Limits& limits) {
    DeterminationOutcome outcome;
    const Domain dom(2);
    const std::vector<OperationTable> gens{xor_table()};
    std::ostringstream report;

    MReport m_report = compute_m(dom, gens, 4, limits);
    report << "m=" << m_report.m << " frontiers_closed=" << m_report.all_frontiers_closed << "\n";
    for (const auto& pr : m_report.pairs) {
        report << "pair(" << pr.c + 1 << "," << pr.d + 1 << ") minimals=";
        for (const Word& w : pr.minimals) report << word_str(w);
        report << " closed=" << pr.frontier_closed << "\n";
    }
    if (!m_report.all_frontiers_closed) {
        outcome.pass = false;
        outcome.failure = "frontier did not close at max_len=4";
    }

    std::vector<Relation> relations{layer_as_relation(clone_layer(dom, gens, m_report.m, limits))};
    SubpowerFamily subs = subuniverses(Algebra(dom, gens), 1, limits);
    relations.insert(relations.end(), subs.members.begin(), subs.members.end());

    const std::size_t expected_sizes[] = {2, 4, 8};
    for (int n = 1; n <= 3; ++n) {
        CloneLayer layer = clone_layer(dom, gens, n, limits);
        bool determined = verify_determination(dom, gens, relations, n, limits);
        report << "n=" << n << " layer=" << layer.size() << " determined=" << determined << "\n";
        if (layer.size() != expected_sizes[n - 1]) {
            outcome.pass = false;
            outcome.failure = "unexpected layer size at n=" + std::to_string(n);
        }
        if (!determined) {
            outcome.pass = false;
            outcome.failure = "relations do not determine the clone at n=" + std::to_string(n);
        }
    }
    outcome.report = report.str();
    return outcome;
}

CriterionResult criterion_determination(const Limits& limits) {
    DeterminationOutcome outcome = determination_instance(limits);
    CriterionResult r{7, "determining relations for the xor clone", outcome.pass,
                      outcome.pass ? "m computed, layers 2/4/8 determined" : outcome.failure};
    return r;
}

struct DualOracleOutcome {
    bool pass = true;
    std::string report;
    std::string failure;
};

DualOracleOutcome dual_oracle(const Limits& limits) {
    DualOracleOutcome outcome;
    const Domain dom(2);
    struct Family {
        std::string name;
        std::vector<OperationTable> gens;
        std::vector<Relation> relations;
    };
    const std::vector<Family> families{
        {"lattice", {and_table(), or_table()},
         {leq_relation(), singleton_relation(0), singleton_relation(1)}},
        {"xor", {xor_table()}, {xor_graph()}},
    };
    std::ostringstream report;
    for (const Family& family : families) {
        for (int arity : {2, 3}) {
            std::size_t space = checked_power(2, arity, limits.max_tuple_space);
            std::size_t members = 0;
            CloneLayer layer = clone_layer(dom, family.gens, arity, limits);
            for (std::size_t code = 0; code < (std::size_t{1} << space); ++code) {
                std::vector<Element> values(space);
                for (std::size_t pos = 0; pos < space; ++pos) {
                    values[space - 1 - pos] = static_cast<Element>((code >> pos) & 1);
                }
                OperationTable f(dom, arity, std::move(values));
                bool exhaustive = layer.contains(f);
                bool relational = is_term_function(family.gens, f, MembershipMode::via_relations,
                                                   family.relations, limits);
                if (exhaustive != relational) {
                    outcome.pass = false;
                    outcome.failure = family.name + ": oracles disagree at arity " +
                                      std::to_string(arity) + " code " + std::to_string(code);
                    return outcome;
                }
                members += exhaustive;
            }
            report << family.name << " arity=" << arity << " members=" << members << "\n";
        }
    }
    outcome.report = report.str();
    return outcome;
}

CriterionResult criterion_dual_oracle(const Limits& limits) {
    DualOracleOutcome outcome = dual_oracle(limits);
    CriterionResult r{8, "exhaustive vs relational membership agree", outcome.pass,
                      outcome.pass ? "16+256 tables, two generator families" : outcome.failure};
    return r;
}

CriterionResult criterion_pol_sizes(const Limits& limits) {
    CriterionResult r{9, "Pol layer sizes for the order relation", false, ""};
    const Domain dom(2);
    std::size_t binary = pol_layer({leq_relation()}, dom, 2, limits).size();
    std::size_t unary = pol_layer({leq_relation()}, dom, 1, limits).size();
    r.pass = (binary == 6 && unary == 3);
    r.detail = "binary=" + std::to_string(binary) + " unary=" + std::to_string(unary);
    return r;
}

CriterionResult criterion_combine(const Limits& limits) {
    CriterionResult r{10, "combined relation keeps the Pol layer", false, ""};
    const Domain dom(2);
    const std::vector<Relation> parts{leq_relation(), singleton_relation(0),
                                      singleton_relation(1)};
    Relation combined = combine_relations(parts, dom, limits);
    for (int n = 1; n <= 3; ++n) {
        if (pol_layer(parts, dom, n, limits) != pol_layer({combined}, dom, n, limits)) {
            r.detail = "Pol layers differ at arity " + std::to_string(n);
            return r;
        }
    }
    r.pass = true;
    r.detail = "arities 1..3, combined arity " + std::to_string(combined.arity);
    return r;
}

CriterionResult criterion_group_roundtrip(const Limits& limits) {
    CriterionResult r{11, "group formula round-trip over Z2 squared", false, ""};
    GroupTable group = GroupTable::cyclic(2);
    Relation h = group.mul_graph();
    SubpowerFamily family = subuniverses(group.algebra(), 2, limits);
    std::size_t subgroups = 0;
    for (const Relation& s : family.members) {
        if (s.empty()) continue;  // subuniverse but not a subgroup
        PPFormula formula;
        try {
            formula = build_pp_formula(group, h, s, limits);
        } catch (const std::invalid_argument& e) {
            r.detail = std::string("construction failed: ") + e.what();
            return r;
        }
        if (eval_pp_formula(formula, group, limits) != s) {
            r.detail = "round-trip differs for a subgroup of size " + std::to_string(s.size());
            return r;
        }
        if (formula.l > 4 || formula.m_count > formula.l) {  // |G|^{n log2|G|} = 4, log2|G| = 1
            r.detail = "size bounds violated: l=" + std::to_string(formula.l) +
                       " m=" + std::to_string(formula.m_count);
            return r;
        }
        ++subgroups;
    }
    r.pass = true;
    r.detail = std::to_string(subgroups) + " subgroups round-tripped within bounds";
    return r;
}

CriterionResult criterion_determinism(const Limits& limits) {
    CriterionResult r{12, "byte-identical reports at 1 and 4 threads", false, ""};
    Limits one = limits;
    one.thread_count = 1;
    Limits four = limits;
    four.thread_count = 4;
    if (report_phi_monotonicity(one) != report_phi_monotonicity(four)) {
        r.detail = "phi sweep report differs";
        return r;
    }
    if (report_determination_instance(one) != report_determination_instance(four)) {
        r.detail = "determination report differs";
        return r;
    }
    if (report_dual_oracle(one) != report_dual_oracle(four)) {
        r.detail = "dual oracle report differs";
        return r;
    }
    r.pass = true;
    r.detail = "three reports compared";
    return r;
}

}  // namespace

std::string report_phi_monotonicity(const Limits& limits) {
    return phi_lambda_sweep(limits).report;
}

std::string report_determination_instance(const Limits& limits) {
    return determination_instance(limits).report;
}

std::string report_dual_oracle(const Limits& limits) {
    return dual_oracle(limits).report;
}

std::vector<CriterionResult> run_acceptance(const Limits& limits) {
    std::vector<CriterionResult> results;
    results.push_back(criterion_order_axioms());
    results.push_back(criterion_substitution());
    results.push_back(criterion_edge_malcev_bridge());
    results.push_back(criterion_phi_monotone(limits));
    results.push_back(criterion_lambda_upward(limits));
    results.push_back(criterion_rep_sweep(limits));
    results.push_back(criterion_determination(limits));
    results.push_back(criterion_dual_oracle(limits));
    results.push_back(criterion_pol_sizes(limits));
    results.push_back(criterion_combine(limits));
    results.push_back(criterion_group_roundtrip(limits));
    results.push_back(criterion_determinism(limits));
    return results;
}

}  // namespace clonekit
