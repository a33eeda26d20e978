#include "clonekit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "clonekit/acceptance.hpp"
#include "clonekit/clone.hpp"
#include "clonekit/galois.hpp"
#include "clonekit/json_io.hpp"
#include "clonekit/ppgroup.hpp"
#include "clonekit/wpo.hpp"

namespace clonekit {

namespace {

using nlohmann::json;

struct Config {
    Limits limits;
    unsigned seed = 0;  // reserved for sampled runs; reports are seed-stamped
    bool json_output = false;
};

void apply_config_file(Config& cfg) {
    const char* path = std::getenv("CLONEKIT_CONFIG");
    if (!path) return;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(std::string("cannot open config file: ") + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed config JSON: ") + e.what());
    }
    cfg.limits.max_layer_size = j.value("max_layer_size", cfg.limits.max_layer_size);
    cfg.limits.max_tuple_space = j.value("max_tuple_space", cfg.limits.max_tuple_space);
    cfg.limits.max_bruteforce = j.value("max_bruteforce", cfg.limits.max_bruteforce);
    cfg.limits.max_power_size = j.value("max_power_size", cfg.limits.max_power_size);
    cfg.limits.max_word_len = j.value("max_word_len", cfg.limits.max_word_len);
    cfg.limits.thread_count = j.value("thread_count", cfg.limits.thread_count);
    cfg.seed = j.value("seed", cfg.seed);
}

std::string render_word(const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i] + 1);
    }
    return s + "]";
}

std::string render_tuple(const Tuple& x) {
    return render_word(x);
}

void print_table(std::ostream& out, const OperationTable& f, bool as_json,
                 const std::string& name) {
    if (as_json) {
        json j = operation_to_json(NamedOperation{name, f});
        j["domain_size"] = f.domain_size;
        out << j.dump() << "\n";
        return;
    }
    out << (name.empty() ? "table" : name) << " arity=" << f.arity << " values(1-based)=[";
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (i) out << ",";
        out << f.values[i] + 1;
    }
    out << "]\n";
}

void print_relation(std::ostream& out, const Relation& r, bool as_json) {
    if (as_json) {
        out << relation_to_json(r).dump() << "\n";
        return;
    }
    out << "relation arity=" << r.arity << " size=" << r.size() << " tuples(1-based)=";
    for (const Tuple& x : r.tuples) out << render_tuple(x);
    out << "\n";
}

/// Parses a 1-based word literal; without an explicit domain size the
/// letters are only checked for positivity.
Word parse_cli_word(const std::string& text, int domain_size) {
    return parse_word(text, Domain(domain_size > 0 ? domain_size : 1024));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    try {
        apply_config_file(cfg);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    CLI::App app{"clonekit: finite-algebra clone computations"};
    app.require_subcommand(1);
    app.add_flag("--json", cfg.json_output, "machine-readable reports");
    app.add_option("--max-layer-size", cfg.limits.max_layer_size, "clone layer cap");
    app.add_option("--max-tuple-space", cfg.limits.max_tuple_space, "tuple space cap");
    app.add_option("--max-bruteforce", cfg.limits.max_bruteforce, "brute-force table cap");
    app.add_option("--max-word-len", cfg.limits.max_word_len, "word length cap");
    app.add_option("--threads", cfg.limits.thread_count, "worker thread count");
    app.add_option("--seed", cfg.seed, "seed for sampled property runs");

    // closure
    std::string closure_algebra, closure_generators;
    int closure_arity = 1;
    CLI::App* closure = app.add_subcommand("closure", "subpower closure of generator tuples");
    closure->add_option("--algebra", closure_algebra)->required();
    closure->add_option("--arity", closure_arity)->required();
    closure->add_option("--generators", closure_generators, "relation file of generator tuples")
        ->required();

    // find-term
    std::string ft_kind = "malcev", ft_algebra;
    int ft_k = 2;
    CLI::App* find_term = app.add_subcommand("find-term", "search for a special term");
    find_term->add_option("--kind", ft_kind)
        ->check(CLI::IsMember({"malcev", "edge", "nu"}))
        ->required();
    find_term->add_option("--k", ft_k);
    find_term->add_option("--algebra", ft_algebra)->required();

    // phi
    std::string phi_algebra, phi_word;
    CLI::App* phi_cmd = app.add_subcommand("phi", "value pairs at a word");
    phi_cmd->add_option("--algebra", phi_algebra)->required();
    phi_cmd->add_option("--word", phi_word)->required();

    // lambda
    std::string la_algebra, la_word;
    int la_c = 1, la_d = 1;
    CLI::App* lambda_cmd = app.add_subcommand("lambda", "membership of a word in a lambda set");
    lambda_cmd->add_option("--algebra", la_algebra)->required();
    lambda_cmd->add_option("--c", la_c)->required();
    lambda_cmd->add_option("--d", la_d)->required();
    lambda_cmd->add_option("--word", la_word)->required();

    // compute-m
    std::string cm_algebra;
    int cm_max_len = 4;
    CLI::App* compute_m_cmd = app.add_subcommand("compute-m", "minimal lambda words and their supremum");
    compute_m_cmd->add_option("--algebra", cm_algebra)->required();
    compute_m_cmd->add_option("--max-len", cm_max_len)->required();

    // is-term-function
    std::string itf_mode = "exhaustive", itf_gens, itf_fn;
    std::vector<std::string> itf_relations;
    CLI::App* itf = app.add_subcommand("is-term-function", "clone membership of a function");
    itf->add_option("--mode", itf_mode)->check(CLI::IsMember({"exhaustive", "relations"}));
    itf->add_option("--gens", itf_gens)->required();
    itf->add_option("--fn", itf_fn)->required();
    itf->add_option("--relation", itf_relations);

    // pol
    std::vector<std::string> pol_relations;
    int pol_domain = 2, pol_arity = 1;
    CLI::App* pol_cmd = app.add_subcommand("pol", "all tables preserving the relations");
    pol_cmd->add_option("--relation", pol_relations);
    pol_cmd->add_option("--domain-size", pol_domain)->required();
    pol_cmd->add_option("--arity", pol_arity)->required();

    // preserves
    std::string pres_fn, pres_relation;
    CLI::App* pres = app.add_subcommand("preserves", "does a function preserve a relation");
    pres->add_option("--fn", pres_fn)->required();
    pres->add_option("--relation", pres_relation)->required();

    // subuniverses
    std::string sub_algebra;
    int sub_power = 1;
    CLI::App* sub = app.add_subcommand("subuniverses", "all subuniverses of a power");
    sub->add_option("--algebra", sub_algebra)->required();
    sub->add_option("--power", sub_power)->required();

    // rep-check
    std::string rep_algebra, rep_small, rep_big;
    int rep_k = 2;
    CLI::App* rep = app.add_subcommand("rep-check", "projection/fork representation check");
    rep->add_option("--algebra", rep_algebra)->required();
    rep->add_option("--small", rep_small, "relation file for F")->required();
    rep->add_option("--big", rep_big, "relation file for G")->required();
    rep->add_option("--k", rep_k)->required();

    // combine-relations
    std::vector<std::string> comb_relations;
    int comb_domain = 2;
    CLI::App* comb = app.add_subcommand("combine-relations", "Pol-preserving product");
    comb->add_option("--relation", comb_relations)->required();
    comb->add_option("--domain-size", comb_domain)->required();

    // verify-determination
    std::string vd_algebra;
    std::vector<std::string> vd_relations;
    int vd_arity = 1;
    CLI::App* vd = app.add_subcommand("verify-determination",
                                      "does Pol of the relations equal the clone layer");
    vd->add_option("--algebra", vd_algebra)->required();
    vd->add_option("--relation", vd_relations);
    vd->add_option("--arity", vd_arity)->required();

    // pp-formula
    std::string pp_group, pp_subgroup, pp_relation;
    CLI::App* pp = app.add_subcommand("pp-formula",
                                      "primitive-positive definition of a subgroup");
    pp->add_option("--group", pp_group, "algebra file whose first binary operation is the product")
        ->required();
    pp->add_option("--subgroup", pp_subgroup)->required();
    pp->add_option("--relation", pp_relation, "relation H; defaults to the multiplication graph");

    // wpo
    CLI::App* wpo = app.add_subcommand("wpo", "word-embedding order utilities");
    wpo->require_subcommand(1);
    std::string wpo_a, wpo_b, wpo_x, wpo_algebra;
    int wpo_domain = 0, wpo_c = 1, wpo_d = 1, wpo_max_len = 4;
    CLI::App* wpo_embeds = wpo->add_subcommand("embeds", "witness search");
    wpo_embeds->add_option("--a", wpo_a)->required();
    wpo_embeds->add_option("--b", wpo_b)->required();
    wpo_embeds->add_option("--domain-size", wpo_domain);
    CLI::App* wpo_tmap = wpo->add_subcommand("t-map", "transport a tuple along a witness");
    wpo_tmap->add_option("--a", wpo_a)->required();
    wpo_tmap->add_option("--b", wpo_b)->required();
    wpo_tmap->add_option("--x", wpo_x)->required();
    wpo_tmap->add_option("--domain-size", wpo_domain);
    CLI::App* wpo_minimals = wpo->add_subcommand("minimals", "minimal words of a lambda set");
    wpo_minimals->add_option("--algebra", wpo_algebra)->required();
    wpo_minimals->add_option("--c", wpo_c)->required();
    wpo_minimals->add_option("--d", wpo_d)->required();
    wpo_minimals->add_option("--max-len", wpo_max_len)->required();

    // selftest
    CLI::App* selftest = app.add_subcommand("selftest", "run the full verification matrix");

    std::vector<std::string> argv{"clonekit"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<char*> raw;
    raw.reserve(argv.size());
    for (std::string& s : argv) raw.push_back(s.data());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    const Limits& limits = cfg.limits;
    try {
        if (*closure) {
            AlgebraFile alg = load_algebra(closure_algebra);
            Relation gens = load_relation(closure_generators);
            Relation result = subpower_closure(alg.algebra(), closure_arity, gens.tuples, limits);
            print_relation(out, result, cfg.json_output);
            return exit_ok;
        }
        if (*find_term) {
            AlgebraFile alg = load_algebra(ft_algebra);
            std::optional<OperationTable> found;
            if (ft_kind == "malcev") {
                found = find_malcev(alg.domain(), alg.tables(), limits);
            } else if (ft_kind == "edge") {
                found = find_edge(alg.domain(), alg.tables(), ft_k, limits);
            } else {
                found = find_nu(alg.domain(), alg.tables(), ft_k, limits);
            }
            if (!found) {
                out << "no " << ft_kind << " term\n";
                return exit_negative;
            }
            print_table(out, *found, cfg.json_output, ft_kind);
            return exit_ok;
        }
        if (*phi_cmd) {
            AlgebraFile alg = load_algebra(phi_algebra);
            Word a = parse_word(phi_word, alg.domain());
            CloneLayer layer =
                clone_layer(alg.domain(), alg.tables(), static_cast<int>(a.size()), limits);
            PhiRelation result = phi(layer, a);
            if (cfg.json_output) {
                json pairs = json::array();
                for (const auto& [c, d] : result.pairs) pairs.push_back({c + 1, d + 1});
                out << json{{"word", word_to_json(a)}, {"pairs", pairs}}.dump() << "\n";
            } else {
                out << "phi at " << render_word(a) << ":";
                for (const auto& [c, d] : result.pairs) {
                    out << " (" << c + 1 << "," << d + 1 << ")";
                }
                out << "\n";
            }
            return exit_ok;
        }
        if (*lambda_cmd) {
            AlgebraFile alg = load_algebra(la_algebra);
            Word a = parse_word(la_word, alg.domain());
            LayerCache cache(alg.domain(), alg.tables(), limits);
            bool member = lambda_member(cache, la_c - 1, la_d - 1, a);
            out << (member ? "member" : "not a member") << "\n";
            return member ? exit_ok : exit_negative;
        }
        if (*compute_m_cmd) {
            AlgebraFile alg = load_algebra(cm_algebra);
            MReport report = compute_m(alg.domain(), alg.tables(), cm_max_len, limits);
            if (cfg.json_output) {
                json pairs = json::array();
                for (const auto& pr : report.pairs) {
                    json minimals = json::array();
                    for (const Word& w : pr.minimals) minimals.push_back(word_to_json(w));
                    pairs.push_back({{"c", pr.c + 1},
                                     {"d", pr.d + 1},
                                     {"minimals", minimals},
                                     {"frontier_closed", pr.frontier_closed}});
                }
                out << json{{"m", report.m},
                            {"all_frontiers_closed", report.all_frontiers_closed},
                            {"pairs", pairs}}
                           .dump()
                    << "\n";
            } else {
                out << "m=" << report.m
                    << (report.all_frontiers_closed ? "" : " (lower bound: open frontier)")
                    << "\n";
                for (const auto& pr : report.pairs) {
                    out << "(" << pr.c + 1 << "," << pr.d + 1 << "): ";
                    for (const Word& w : pr.minimals) out << render_word(w) << " ";
                    out << (pr.frontier_closed ? "closed" : "open") << "\n";
                }
            }
            return exit_ok;
        }
        if (*itf) {
            AlgebraFile gens = load_algebra(itf_gens);
            NamedOperation fn = load_operation(itf_fn);
            std::vector<Relation> relations;
            for (const std::string& path : itf_relations) {
                relations.push_back(load_relation(path));
            }
            MembershipMode mode = itf_mode == "exhaustive" ? MembershipMode::exhaustive
                                                           : MembershipMode::via_relations;
            if (mode == MembershipMode::via_relations && relations.empty()) {
                throw std::invalid_argument("relations mode needs at least one --relation");
            }
            bool member = is_term_function(gens.tables(), fn.table, mode, relations, limits);
            out << (member ? "term function" : "not a term function") << "\n";
            return member ? exit_ok : exit_negative;
        }
        if (*pol_cmd) {
            std::vector<Relation> relations;
            for (const std::string& path : pol_relations) relations.push_back(load_relation(path));
            std::vector<OperationTable> layer =
                pol_layer(relations, Domain(pol_domain), pol_arity, limits);
            out << layer.size() << " tables\n";
            for (const OperationTable& f : layer) print_table(out, f, cfg.json_output, "");
            return exit_ok;
        }
        if (*pres) {
            NamedOperation fn = load_operation(pres_fn);
            Relation r = load_relation(pres_relation);
            bool ok = preserves(fn.table, r);
            out << (ok ? "preserves" : "does not preserve") << "\n";
            return ok ? exit_ok : exit_negative;
        }
        if (*sub) {
            AlgebraFile alg = load_algebra(sub_algebra);
            SubpowerFamily family = subuniverses(alg.algebra(), sub_power, limits);
            out << family.members.size() << " subuniverses\n";
            for (const Relation& r : family.members) print_relation(out, r, cfg.json_output);
            return exit_ok;
        }
        if (*rep) {
            AlgebraFile alg = load_algebra(rep_algebra);
            Relation f_rel = load_relation(rep_small);
            Relation g_rel = load_relation(rep_big);
            RepVerdict verdict = rep_check(f_rel, g_rel, alg.algebra(), rep_k, limits);
            out << "edge_term_found=" << verdict.edge_term_found
                << " hypotheses_hold=" << verdict.hypotheses_hold
                << " conclusion_holds=" << verdict.conclusion_holds << "\n";
            return verdict.conclusion_holds ? exit_ok : exit_negative;
        }
        if (*comb) {
            std::vector<Relation> relations;
            for (const std::string& path : comb_relations) relations.push_back(load_relation(path));
            Relation result = combine_relations(relations, Domain(comb_domain), limits);
            print_relation(out, result, cfg.json_output);
            return exit_ok;
        }
        if (*vd) {
            AlgebraFile alg = load_algebra(vd_algebra);
            std::vector<Relation> relations;
            for (const std::string& path : vd_relations) relations.push_back(load_relation(path));
            bool ok = verify_determination(alg.domain(), alg.tables(), relations, vd_arity, limits);
            out << (ok ? "determined" : "not determined") << "\n";
            return ok ? exit_ok : exit_negative;
        }
        if (*pp) {
            AlgebraFile alg = load_algebra(pp_group);
            const OperationTable* mul = nullptr;
            for (const NamedOperation& op : alg.operations) {
                if (op.table.arity == 2) {
                    mul = &op.table;
                    break;
                }
            }
            if (!mul) throw std::invalid_argument("group file has no binary operation");
            GroupTable group = GroupTable::from_mul(*mul);
            Relation subgroup = load_relation(pp_subgroup);
            Relation h = pp_relation.empty() ? group.mul_graph() : load_relation(pp_relation);
            PPFormula formula = build_pp_formula(group, h, subgroup, limits);
            json sigma = json::array();
            for (const std::vector<int>& row : formula.sigma) sigma.push_back(row);
            json doc{{"l", formula.l},       {"m", formula.m_count},
                     {"k", formula.k},       {"sigma", sigma},
                     {"tau", formula.tau},   {"H", relation_to_json(formula.h)},
                     {"singleton_identity", formula.singleton_identity}};
            out << doc.dump() << "\n";
            if (!cfg.json_output) {
                out << "S = { g in G^" << formula.n << " : exists a_1..a_" << formula.l << " : ";
                for (int i = 0; i < formula.m_count; ++i) {
                    out << "(";
                    for (int j = 0; j < formula.k; ++j) {
                        if (j) out << ",";
                        out << "a_" << formula.sigma[static_cast<std::size_t>(i)]
                                                    [static_cast<std::size_t>(j)];
                    }
                    out << ") in H & ";
                }
                for (int j = 0; j < formula.n; ++j) {
                    out << "g_" << j + 1 << " = a_" << formula.tau[static_cast<std::size_t>(j)];
                    if (j + 1 < formula.n) out << " & ";
                }
                out << " }\n";
                if (formula.singleton_identity) {
                    out << "note: trivial subgroup, exact identity singleton\n";
                }
            }
            return exit_ok;
        }
        if (*wpo) {
            if (*wpo_embeds) {
                Word raw_a = parse_cli_word(wpo_a, wpo_domain);
                Word raw_b = parse_cli_word(wpo_b, wpo_domain);
                std::optional<Witness> h = embeds(raw_a, raw_b);
                if (!h) {
                    out << "no witness\n";
                    return exit_negative;
                }
                out << "witness h=(";
                for (std::size_t i = 0; i < h->size(); ++i) {
                    if (i) out << ",";
                    out << (*h)[i] + 1;
                }
                out << ")\n";
                return exit_ok;
            }
            if (*wpo_tmap) {
                Word raw_a = parse_cli_word(wpo_a, wpo_domain);
                Word raw_b = parse_cli_word(wpo_b, wpo_domain);
                Word raw_x = parse_cli_word(wpo_x, wpo_domain);
                std::optional<Witness> h = embeds(raw_a, raw_b);
                if (!h) {
                    out << "no witness\n";
                    return exit_negative;
                }
                out << render_word(t_map(raw_a, raw_b, *h, raw_x)) << "\n";
                return exit_ok;
            }
            AlgebraFile alg = load_algebra(wpo_algebra);
            LayerCache cache(alg.domain(), alg.tables(), limits);
            auto member = [&](const Word& a) { return lambda_member(cache, wpo_c - 1, wpo_d - 1, a); };
            MinimalsReport report = minimal_elements(member, alg.domain(), wpo_max_len);
            out << report.minimals.size() << " minimals, frontier "
                << (report.frontier_closed ? "closed" : "open") << "\n";
            for (const Word& w : report.minimals) {
                out << render_word(w) << " len=" << w.size() << "\n";
            }
            return exit_ok;
        }
        if (*selftest) {
            std::vector<CriterionResult> results = run_acceptance(limits);
            bool all = true;
            for (const CriterionResult& r : results) {
                out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": "
                    << r.detail << "\n";
                all &= r.pass;
            }
            out << (all ? "all criteria passed" : "criteria failed") << "\n";
            return all ? exit_ok : exit_negative;
        }
    } catch (const resource_limit_error& e) {
        err << "resource error: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    err << "error: no subcommand\n";
    return exit_input_error;
}

}  // namespace clonekit
