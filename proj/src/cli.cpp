#include "relhom/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

namespace relhom {

namespace {

BackendKind backend_arg(const std::string& s) {
    if (s == "finab") return BackendKind::FinAb;
    if (s == "pset") return BackendKind::PSet;
    if (s == "fingrp") return BackendKind::FinGrp;
    if (s == "table" || s == "tablecat") return BackendKind::Table;
    throw input_error("--backend: expected finab, pset, fingrp, or tablecat");
}

CategoryView view_for(BackendKind b, long max_size, const std::string& input) {
    switch (b) {
        case BackendKind::FinAb:
            return make_view_finab(max_size ? max_size : 4);
        case BackendKind::PSet:
            return make_view_pset((int)(max_size ? max_size : 3));
        case BackendKind::FinGrp:
            return make_view_fingrp(fingrp_builtin_library(), (int)(max_size ? max_size : 12));
        case BackendKind::Table: {
            if (input.empty())
                throw input_error("tablecat backend needs --input <category file>");
            auto doc = load_document(input);
            if (!doc.table) throw input_error(input + ": no category block");
            return make_view_table(doc.table);
        }
    }
    throw input_error("--backend: unknown backend");
}

std::vector<AxiomId> axioms_arg(const std::string& list) {
    if (list == "all") return all_axioms();
    std::vector<AxiomId> ids;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto id = parse_axiom_id(tok);
        if (!id) throw input_error("unknown axiom id '" + tok + "'");
        ids.push_back(*id);
    }
    if (ids.empty()) throw input_error("--axioms: empty list");
    return ids;
}

bool matches_expect(const Verdict& v, const std::string& expect) {
    return expect == "fails" ? v.status == Status::Fails : v.status == Status::Holds;
}

void append_verdict(Json& o, const Verdict& v) {
    Json vj = verdict_to_json(v);
    for (auto it = vj.begin(); it != vj.end(); ++it) o[it.key()] = it.value();
}

// no argv echo and no wall time: reports are byte-stable across machines
Json report_head(const std::string& command) {
    Json j = Json::object();
    j["format-version"] = "1";
    j["engine-version"] = kEngineVersion;
    j["command"] = command;
    return j;
}

std::string verdict_line(const Verdict& v) {
    std::string s = status_name(v.status) + " (checked " + std::to_string(v.instances_checked) +
                    ", inapplicable " + std::to_string(v.inapplicable) + ")";
    if (!v.detail.empty()) s += " -- " + v.detail;
    return s;
}

// matrix payload without the decimal-string quoting, e.g. [[1]]
std::string human_payload(const Morphism& f) {
    if (backend_of(f) == BackendKind::FinAb) {
        const auto& m = std::get<FinAbMorphism>(f).m;
        std::string s = "[";
        for (int i = 0; i < m.rows; ++i) {
            if (i) s += ",";
            s += "[";
            for (int j = 0; j < m.cols; ++j) {
                if (j) s += ",";
                s += m.at(i, j).str();
            }
            s += "]";
        }
        return s + "]";
    }
    return morphism_to_json(f).dump();
}

// fixed subset of arrows run in index order across jobs workers; results land
// by index so the output is independent of scheduling
template <typename Fn>
void for_indices(long n, int jobs, Fn fn) {
    if (jobs <= 1 || n <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (long i = next++; i < n; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

struct CommonOpts {
    std::string backend = "finab";
    std::string cls;
    std::string input;
    std::string expect = "holds";
    std::string witness_out;
    long max_size = 0;
    int jobs = 1;
    bool json = false;
};

int run_check(const CommonOpts& o, const std::string& axioms) {
    auto view = view_for(backend_arg(o.backend), o.max_size, o.input);
    auto cls = parse_class_selector(o.cls.empty() ? "regular_epi" : o.cls);
    auto ids = axioms_arg(axioms);
    std::vector<Verdict> vs(ids.size());
    for_indices((long)ids.size(), o.jobs,
                [&](long i) { vs[i] = check_axiom(view, cls, ids[i]); });
    bool all_match = true;
    Json results = Json::array();
    for (size_t i = 0; i < ids.size(); ++i) {
        bool m = matches_expect(vs[i], o.expect);
        all_match = all_match && m;
        if (o.json) {
            Json r = Json::object();
            r["axiom"] = axiom_name(ids[i]);
            append_verdict(r, vs[i]);
            r["match"] = m;
            results.push_back(std::move(r));
        } else {
            std::cout << "axiom " << axiom_name(ids[i]) << ": " << verdict_line(vs[i]) << "\n";
        }
        if (!o.witness_out.empty() && vs[i].witness) {
            write_json_file(o.witness_out, diagram_to_json(*vs[i].witness));
        }
    }
    if (o.json) {
        Json j = report_head("check");
        j["backend"] = o.backend;
        j["class"] = o.cls.empty() ? "regular_epi" : o.cls;
        j["bound"] = view.bound_desc;
        j["expect"] = o.expect;
        j["results"] = std::move(results);
        j["match"] = all_match;
        std::cout << dump_json(j);
    } else {
        std::cout << (all_match ? "expectation met" : "expectation not met") << " (expect "
                  << o.expect << ")\n";
    }
    return all_match ? 0 : 1;
}

int run_search(const CommonOpts& o, const std::string& axiom) {
    auto view = view_for(backend_arg(o.backend), o.max_size, o.input);
    auto cls = parse_class_selector(o.cls.empty() ? "regular_epi" : o.cls);
    auto id = parse_axiom_id(axiom);
    if (!id) throw input_error("unknown axiom id '" + axiom + "'");
    auto w = search_counterexample(view, cls, *id);
    if (w && !o.witness_out.empty()) write_json_file(o.witness_out, diagram_to_json(*w));
    if (o.json) {
        Json j = report_head("search");
        j["axiom"] = axiom_name(*id);
        j["bound"] = view.bound_desc;
        j["found"] = (bool)w;
        if (w) j["witness"] = diagram_to_json(*w);
        std::cout << dump_json(j);
    } else if (w) {
        std::cout << dump_json(diagram_to_json(*w));
    } else {
        std::cout << "none up to bound (" << view.bound_desc << ")\n";
    }
    return 0;
}

EClass class_for(const InputDocument& doc, const std::string& flag) {
    if (!flag.empty()) return parse_class_selector(flag);
    if (!doc.class_selector.empty()) return parse_class_selector(doc.class_selector);
    throw input_error("no class: pass --class or put one in the input file");
}

int run_exact(const CommonOpts& o) {
    auto doc = load_document(o.input);
    auto cls = class_for(doc, o.cls);
    auto seq = sequence_from_document(doc);
    auto overall = is_e_exact(seq, cls);
    if (o.json) {
        Json j = report_head("exact");
        Json nodes = Json::array();
        for (int i = 1; i < (int)seq.arrows.size(); ++i) {
            Json n = Json::object();
            n["node"] = i;
            append_verdict(n, is_e_exact_at(seq, i, cls));
            nodes.push_back(std::move(n));
        }
        j["nodes"] = std::move(nodes);
        append_verdict(j, overall);
        std::cout << dump_json(j);
    } else {
        for (int i = 1; i < (int)seq.arrows.size(); ++i)
            std::cout << "node " << i << ": " << verdict_line(is_e_exact_at(seq, i, cls))
                      << "\n";
        std::cout << "sequence: " << verdict_line(overall) << "\n";
    }
    return overall.status == Status::Holds ? 0 : 1;
}

int run_snake(const CommonOpts& o, const std::string& mode) {
    auto doc = load_document(o.input);
    auto in = snake_from_document(doc, class_for(doc, o.cls));
    SnakeMode m = mode == "weak" ? SnakeMode::Weak : SnakeMode::Homological;
    auto r = snake(in, m);
    bool all_exact = true;
    for (const auto& [node, v] : r.exact_at) all_exact = all_exact && v.status == Status::Holds;
    if (o.json) {
        Json j = report_head("snake");
        j["mode"] = mode;
        j["d"] = morphism_to_json(r.d);
        Json six = Json::array();
        for (const auto& a : r.six_term.arrows) six.push_back(morphism_to_json(a));
        j["six-term"] = std::move(six);
        Json nodes = Json::array();
        for (const auto& [node, v] : r.exact_at) {
            Json n = Json::object();
            n["node"] = node;
            append_verdict(n, v);
            nodes.push_back(std::move(n));
        }
        j["exact-at"] = std::move(nodes);
        j["side-conditions"] = verdict_to_json(r.side_conditions);
        j["exact"] = all_exact;
        std::cout << dump_json(j);
    } else {
        std::cout << "hypotheses: ok\n";
        std::cout << "d: " << human_payload(r.d) << "\n";
        for (const auto& [node, v] : r.exact_at)
            std::cout << "exact at " << node << ": " << verdict_line(v) << "\n";
        if (m == SnakeMode::Weak)
            std::cout << "side conditions: " << verdict_line(r.side_conditions) << "\n";
    }
    return all_exact ? 0 : 1;
}

int run_3x3(const CommonOpts& o, const std::string& direction) {
    auto doc = load_document(o.input);
    auto in = grid_from_document(doc, class_for(doc, o.cls));
    GridDirection dir = GridDirection::Both;
    if (direction == "first-from-last") dir = GridDirection::FirstFromLast;
    else if (direction == "last-from-first") dir = GridDirection::LastFromFirst;
    else if (direction != "both") throw input_error("--direction: unknown direction");
    auto v = three_by_three(in, dir);
    if (o.json) {
        Json j = report_head("3x3");
        j["direction"] = direction;
        append_verdict(j, v);
        std::cout << dump_json(j);
    } else {
        std::cout << "3x3 (" << direction << "): " << verdict_line(v) << "\n";
    }
    if (v.status == Status::Holds) return 0;
    return v.status == Status::Fails ? 1 : 3;
}

int run_recheck(const CommonOpts& o, const std::string& axiom) {
    auto view = view_for(backend_arg(o.backend), o.max_size, o.input.empty() ? "" : o.input);
    auto cls = parse_class_selector(o.cls.empty() ? "regular_epi" : o.cls);
    auto id = parse_axiom_id(axiom);
    if (!id) throw input_error("unknown axiom id '" + axiom + "'");
    auto doc = load_document(o.witness_out.empty() ? o.input : o.witness_out);
    auto v = recheck_axiom(view, cls, *id, doc.diagram);
    bool match = matches_expect(v, o.expect);
    if (o.json) {
        Json j = report_head("recheck");
        j["axiom"] = axiom_name(*id);
        append_verdict(j, v);
        j["expect"] = o.expect;
        j["match"] = match;
        std::cout << dump_json(j);
    } else {
        std::cout << "axiom " << axiom_name(*id) << ": " << verdict_line(v) << "\n";
    }
    return match ? 0 : 1;
}

int run_verify(const CommonOpts& o, const std::string& corpus, int max_morphisms) {
    if (corpus != "tablecat") throw input_error("--corpus: only tablecat is available");
    auto entries = tablecat_corpus(max_morphisms);
    std::vector<std::pair<std::string, AxiomStatuses>> st(entries.size());
    for_indices((long)entries.size(), o.jobs, [&](long i) {
        st[i] = {entries[i].name, check_all_axioms(entries[i].view, entries[i].cls)};
    });
    bool violated = false;
    Json results = Json::array();
    for (auto t : all_theorems()) {
        auto v = verify_implication(st, t);
        violated = violated || v.status == Status::Fails;
        if (o.json) {
            Json r = Json::object();
            r["theorem"] = theorem_name(t);
            append_verdict(r, v);
            results.push_back(std::move(r));
        } else {
            std::cout << "theorem " << theorem_name(t) << ": " << verdict_line(v) << "\n";
        }
    }
    if (o.json) {
        Json j = report_head("verify-theorems");
        j["corpus"] = corpus;
        j["max-morphisms"] = max_morphisms;
        j["corpus-size"] = (long)entries.size();
        j["results"] = std::move(results);
        j["violations"] = violated;
        std::cout << dump_json(j);
    } else {
        std::cout << "corpus: " << entries.size() << " entries, "
                  << (violated ? "violations found" : "zero violations") << "\n";
    }
    return violated ? 1 : 0;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_backend) {
    if (with_backend) {
        cmd->add_option("--backend", o.backend, "finab | pset | fingrp | tablecat");
        cmd->add_option("--max-size", o.max_size, "object-size bound for the view");
        cmd->add_option("--expect", o.expect, "holds | fails")
            ->check(CLI::IsMember({"holds", "fails"}));
    }
    cmd->add_option("--class", o.cls, "class selector");
    cmd->add_option("--input", o.input, "input document");
    cmd->add_option("--jobs", o.jobs, "worker count (default 1, reproducible)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--json", o.json, "machine-readable report on stdout");
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"exact checker for relative homological categories"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kEngineVersion);

    CommonOpts o;
    std::string axioms = "all", axiom, mode = "homological", direction = "both";
    std::string corpus = "tablecat";
    int max_morphisms = 6;

    auto* check = app.add_subcommand("check", "check axioms over a bounded view");
    add_common(check, o, true);
    check->add_option("--axioms", axioms, "comma list of axiom ids, or all");
    check->add_option("--witness-out", o.witness_out, "write the first witness here");

    auto* search = app.add_subcommand("search", "least counterexample for one axiom");
    add_common(search, o, true);
    search->add_option("--axiom", axiom, "axiom id")->required();
    search->add_option("--witness-out", o.witness_out, "write the witness here");

    auto* exact = app.add_subcommand("exact", "E-exactness of a sequence file");
    add_common(exact, o, false);
    exact->get_option("--input")->required();

    auto* snake = app.add_subcommand("snake", "run the snake construction on a grid file");
    add_common(snake, o, false);
    snake->get_option("--input")->required();
    snake->add_option("--mode", mode, "homological | weak")
        ->check(CLI::IsMember({"homological", "weak"}));

    auto* grid = app.add_subcommand("3x3", "3x3 lemma on a grid file");
    add_common(grid, o, false);
    grid->get_option("--input")->required();
    grid->add_option("--direction", direction, "first-from-last | last-from-first | both");

    auto* recheck = app.add_subcommand("recheck", "re-evaluate a witness file");
    add_common(recheck, o, true);
    recheck->add_option("--axiom", axiom, "axiom id")->required();
    recheck->add_option("--witness", o.witness_out, "witness file (defaults to --input)");

    auto* verify = app.add_subcommand("verify-theorems", "meta-theorems over a corpus");
    add_common(verify, o, false);
    verify->add_option("--corpus", corpus, "corpus name (tablecat)");
    verify->add_option("--max-morphisms", max_morphisms, "table-category size bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (app.got_subcommand(check)) return run_check(o, axioms);
        if (app.got_subcommand(search)) return run_search(o, axiom);
        if (app.got_subcommand(exact)) return run_exact(o);
        if (app.got_subcommand(snake)) return run_snake(o, mode);
        if (app.got_subcommand(grid)) return run_3x3(o, direction);
        if (app.got_subcommand(recheck)) return run_recheck(o, axiom);
        if (app.got_subcommand(verify)) return run_verify(o, corpus, max_morphisms);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const hypothesis_error& e) {
        std::cerr << "hypothesis error: " << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const missing_limit_error& e) {
        std::cerr << "missing limit: " << e.what() << "\n";
        return 3;
    } catch (const inconsistency_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace relhom
