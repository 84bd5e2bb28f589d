// Command line front end over the C API.

#include <chromkh/chromkh.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using nlohmann::ordered_json;

namespace {

struct Failure {
    int code;
    std::string message;
};

void check(chromkh_status s) {
    if (s != CHROMKH_OK) throw Failure{static_cast<int>(s), chromkh_last_error()};
}

struct Groups {
    chromkh_groups* h = nullptr;
    ~Groups() { chromkh_groups_free(h); }
};

struct Globals {
    uint64_t budget = 0;
    unsigned threads = 1;
    std::string format = "table";
    uint64_t seed = 20130101;
};

// "i=6..8,j=10..20", "i=3", "j=..5"
void parse_window(const std::string& text, chromkh_options& opt) {
    if (text.empty()) return;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos || eq == 0) throw Failure{CHROMKH_ERR_PARSE, "bad window item '" + part + "'"};
        std::string axis = part.substr(0, eq), range = part.substr(eq + 1);
        std::string lo = range, hi = range;
        if (auto dots = range.find(".."); dots != std::string::npos) {
            lo = range.substr(0, dots);
            hi = range.substr(dots + 2);
        }
        auto number = [&](const std::string& s, int& out) {
            if (s.empty()) return false;
            try {
                std::size_t used = 0;
                out = std::stoi(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
            } catch (const std::exception&) {
                throw Failure{CHROMKH_ERR_PARSE, "bad window bound '" + s + "'"};
            }
            return true;
        };
        if (axis == "i") {
            opt.has_i_min = number(lo, opt.i_min);
            opt.has_i_max = number(hi, opt.i_max);
        } else if (axis == "j") {
            opt.has_j_min = number(lo, opt.j_min);
            opt.has_j_max = number(hi, opt.j_max);
        } else {
            throw Failure{CHROMKH_ERR_PARSE, "window axis must be i or j, got '" + axis + "'"};
        }
    }
}

chromkh_options make_options(const Globals& g, const std::string& window) {
    chromkh_options opt;
    chromkh_options_init(&opt);
    if (g.budget) opt.budget = g.budget;
    opt.threads = g.threads;
    parse_window(window, opt);
    return opt;
}

std::string torsion_text(const chromkh_groups* h, size_t k, size_t t) {
    char buf[4096];
    check(chromkh_groups_torsion(h, k, t, buf, sizeof buf));
    return buf;
}

ordered_json groups_json(const chromkh_groups* h) {
    ordered_json out = ordered_json::array();
    for (size_t k = 0; k < chromkh_groups_count(h); ++k) {
        int i = 0, j = 0;
        size_t free_rank = 0, tc = 0;
        check(chromkh_groups_get(h, k, &i, &j, &free_rank, &tc));
        ordered_json tor = ordered_json::array();
        for (size_t t = 0; t < tc; ++t) tor.push_back(torsion_text(h, k, t));
        out.push_back({{"i", i}, {"j", j}, {"free", free_rank}, {"torsion", tor}});
    }
    return out;
}

std::string group_string(const ordered_json& g) {
    std::vector<std::string> parts;
    std::size_t free_rank = g["free"];
    if (free_rank == 1) parts.push_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    std::map<std::string, std::size_t> counts;
    std::vector<std::string> order;
    for (const auto& t : g["torsion"]) {
        std::string s = t;
        if (!counts.count(s)) order.push_back(s);
        ++counts[s];
    }
    for (const auto& s : order) parts.push_back("Z" + s + (counts[s] > 1 ? "^" + std::to_string(counts[s]) : ""));
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) out += " + " + parts[k];
    return out;
}

void print_groups_table(const ordered_json& doc) {
    for (const auto& [key, value] : doc.items()) {
        if (key == "groups" || key == "oriented" || key.rfind("mod_", 0) == 0) continue;
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    auto block = [](const std::string& title, const ordered_json& groups) {
        std::cout << title << "\n";
        std::printf("%6s %6s  %s\n", "i", "j", "group");
        for (const auto& g : groups)
            std::printf("%6d %6d  %s\n", g["i"].get<int>(), g["j"].get<int>(), group_string(g).c_str());
    };
    block("groups", doc["groups"]);
    if (doc.contains("oriented")) block("oriented (h, q)", doc["oriented"]);
    for (const auto& [key, value] : doc.items()) {
        if (key.rfind("mod_", 0) != 0) continue;
        std::cout << key << "\n";
        std::printf("%6s %6s  %s\n", "i", "j", "rank");
        for (const auto& g : value)
            std::printf("%6d %6d  %zu\n", g["i"].get<int>(), g["j"].get<int>(), g["free"].get<std::size_t>());
    }
}

void emit(const ordered_json& doc, const Globals& g) {
    if (g.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        print_groups_table(doc);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    chromkh_string_free(s);
    return out;
}

// ---------------------------------------------------------------------------

int run_graph(const Globals& g, const std::string& path, const std::string& theory, bool homology,
              const std::string& window) {
    chromkh_graph* graph = nullptr;
    check(chromkh_graph_load(path.c_str(), &graph));
    std::unique_ptr<chromkh_graph, void (*)(chromkh_graph*)> own(graph, chromkh_graph_free);
    char hash[17];
    check(chromkh_graph_hash(graph, hash));
    auto opt = make_options(g, window);
    Groups h;
    auto t = theory == "delta" ? CHROMKH_THEORY_DELTA : CHROMKH_THEORY_CHROMATIC;
    check(chromkh_chromatic(graph, t, homology ? 0 : 1, &opt, &h.h));
    ordered_json doc;
    doc["theory"] = theory;
    doc["graph"] = hash;
    doc["vertices"] = chromkh_graph_vertices(graph);
    doc["edges"] = chromkh_graph_edges(graph);
    doc["kind"] = homology ? "homology" : "cohomology";
    if (!window.empty()) doc["window"] = window;
    if (window.empty()) {
        char* text = nullptr;
        check(chromkh_groups_euler(h.h, 0, &text));
        doc["euler"] = take_string(text);
    }
    doc["groups"] = groups_json(h.h);
    emit(doc, g);
    return 0;
}

std::vector<unsigned> parse_primes(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) continue;
        try {
            out.push_back(static_cast<unsigned>(std::stoul(part)));
        } catch (const std::exception&) {
            throw Failure{CHROMKH_ERR_PARSE, "bad prime '" + part + "'"};
        }
    }
    return out;
}

int run_link(const Globals& g, const std::string& pd, const std::string& braid, const std::string& window,
             const std::string& primes, bool oriented) {
    chromkh_link* link = nullptr;
    if (!braid.empty())
        check(chromkh_link_parse_braid(braid.c_str(), &link));
    else if (std::ifstream(pd).good())
        check(chromkh_link_load_pd(pd.c_str(), &link));
    else
        check(chromkh_link_parse_pd(pd.c_str(), &link));
    std::unique_ptr<chromkh_link, void (*)(chromkh_link*)> own(link, chromkh_link_free);

    auto opt = make_options(g, window);
    Groups h;
    check(chromkh_khovanov(link, &opt, &h.h));
    char* text = nullptr;
    check(chromkh_link_pd(link, &text));
    ordered_json doc;
    doc["theory"] = "khovanov";
    doc["convention"] = "framed-unoriented";
    doc["diagram"] = take_string(text);
    doc["crossings"] = chromkh_link_crossings(link);
    doc["components"] = chromkh_link_components(link);
    doc["writhe"] = chromkh_link_writhe(link);
    if (!window.empty()) {
        doc["window"] = window;
    } else {
        check(chromkh_link_bracket(link, &text));
        std::string bracket = take_string(text);
        check(chromkh_groups_euler(h.h, 1, &text));
        std::string euler = take_string(text);
        doc["bracket"] = bracket;
        doc["euler_matches_bracket"] = euler == bracket;
    }
    doc["groups"] = groups_json(h.h);
    ordered_json torsion = ordered_json::array();
    for (const auto& e : doc["groups"])
        if (!e["torsion"].empty()) torsion.push_back({{"i", e["i"]}, {"j", e["j"]}, {"torsion", e["torsion"]}});
    doc["torsion_summary"] = torsion.empty() ? ordered_json("none") : ordered_json(std::to_string(torsion.size()) + " bidegrees");
    if (oriented) {
        Groups o;
        check(chromkh_groups_oriented(h.h, chromkh_link_writhe(link), &o.h));
        doc["oriented"] = groups_json(o.h);
    }
    for (unsigned p : parse_primes(primes)) {
        Groups r;
        check(chromkh_khovanov_mod_p(link, p, &opt, &r.h));
        doc["mod_" + std::to_string(p)] = groups_json(r.h);
    }
    emit(doc, g);
    if (!window.empty() || doc["euler_matches_bracket"].get<bool>()) return 0;
    std::cerr << "error: Euler characteristic differs from the bracket\n";
    return CHROMKH_ERR_ASSERTION;
}

int run_verify(const Globals& g, const std::string& suite) {
    std::vector<std::string> names;
    if (suite == "all")
        for (size_t k = 0; k < chromkh_suite_count(); ++k) names.push_back(chromkh_suite_name(k));
    else
        names.push_back(suite);
    bool all_passed = true;
    ordered_json reports = ordered_json::array();
    for (const auto& name : names) {
        chromkh_report* r = nullptr;
        check(chromkh_verify(name.c_str(), g.seed, g.threads, g.budget, &r));
        std::unique_ptr<chromkh_report, void (*)(chromkh_report*)> own(r, chromkh_report_free);
        bool passed = chromkh_report_passed(r);
        all_passed = all_passed && passed;
        ordered_json rep;
        rep["suite"] = name;
        rep["title"] = chromkh_report_title(r);
        rep["passed"] = passed;
        rep["checked"] = chromkh_report_checked(r);
        rep["seconds"] = chromkh_report_seconds(r);
        rep["failures"] = ordered_json::array();
        for (size_t k = 0; k < chromkh_report_failure_count(r); ++k) rep["failures"].push_back(chromkh_report_failure(r, k));
        rep["notes"] = ordered_json::array();
        for (size_t k = 0; k < chromkh_report_note_count(r); ++k) rep["notes"].push_back(chromkh_report_note(r, k));
        if (g.format == "json") {
            reports.push_back(rep);
            continue;
        }
        std::printf("%s %s (%zu checks, %.1f s): %s\n", passed ? "PASS" : "FAIL", name.c_str(),
                    chromkh_report_checked(r), chromkh_report_seconds(r), chromkh_report_title(r));
        for (const auto& f : rep["failures"]) std::printf("  failure: %s\n", f.get<std::string>().c_str());
        for (const auto& n : rep["notes"]) std::printf("  note: %s\n", n.get<std::string>().c_str());
        std::fflush(stdout);
    }
    if (g.format == "json") std::cout << reports.dump(2) << "\n";
    return all_passed ? 0 : 1;
}

std::vector<int> parse_exponents(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) continue;
        try {
            auto dots = part.find("..");
            if (dots == std::string::npos) {
                out.push_back(std::stoi(part));
            } else {
                int lo = std::stoi(part.substr(0, dots)), hi = std::stoi(part.substr(dots + 2));
                for (int e = lo; e <= hi; ++e) out.push_back(e);
            }
        } catch (const std::exception&) {
            throw Failure{CHROMKH_ERR_PARSE, "bad exponent '" + part + "'"};
        }
    }
    return out;
}

int run_survey(const Globals& g, const std::vector<std::string>& words, const std::string& exponents,
               std::size_t max_syllables, std::size_t max_crossings, const std::string& window, bool z4_only) {
    auto opt = make_options(g, window);
    chromkh_survey* s = nullptr;
    if (!words.empty()) {
        std::vector<const char*> ptrs;
        for (const auto& w : words) ptrs.push_back(w.c_str());
        check(chromkh_survey_words(ptrs.data(), ptrs.size(), &opt, &s));
    } else {
        auto e = parse_exponents(exponents);
        check(chromkh_survey_three_braids(e.data(), e.size(), max_syllables, max_crossings, &opt, &s));
    }
    std::unique_ptr<chromkh_survey, void (*)(chromkh_survey*)> own(s, chromkh_survey_free);

    ordered_json rows = ordered_json::array();
    for (size_t k = 0; k < chromkh_survey_count(s); ++k) {
        size_t crossings = 0, components = 0;
        int adequate = 0, skipped = 0;
        check(chromkh_survey_info(s, k, &crossings, &components, &adequate, &skipped));
        Groups tor;
        check(chromkh_survey_torsion(s, k, &tor.h));
        auto groups = groups_json(tor.h);
        std::set<std::string> orders;
        bool z4 = false;
        for (const auto& e : groups)
            for (const auto& t : e["torsion"]) {
                std::string o = t;
                orders.insert(o);
                // the last two decimal digits decide divisibility by 4
                if (std::stoi(o.size() > 2 ? o.substr(o.size() - 2) : o) % 4 == 0) z4 = true;
            }
        if (z4_only && !z4) continue;
        ordered_json row;
        row["braid"] = chromkh_survey_braid(s, k);
        row["crossings"] = crossings;
        row["components"] = components;
        row["adequate"] = adequate != 0;
        row["skipped"] = skipped != 0;
        if (skipped) row["skip_reason"] = chromkh_survey_skip_reason(s, k);
        row["torsion_orders"] = orders;
        row["only_z2"] = !skipped && !orders.empty() && orders == std::set<std::string>{"2"};
        row["divisible_by_4"] = z4;
        row["torsion"] = groups;
        rows.push_back(row);
    }
    if (g.format == "json") {
        std::cout << ordered_json{{"entries", rows}}.dump(2) << "\n";
    } else {
        std::cout << "braid,crossings,components,adequate,skipped,torsion_orders,only_z2,divisible_by_4\n";
        for (const auto& r : rows) {
            std::string orders;
            for (const auto& o : r["torsion_orders"]) orders += (orders.empty() ? "" : " ") + o.get<std::string>();
            std::cout << '"' << r["braid"].get<std::string>() << "\"," << r["crossings"] << ',' << r["components"] << ','
                      << r["adequate"] << ',' << r["skipped"] << ",\"" << orders << "\"," << r["only_z2"] << ','
                      << r["divisible_by_4"] << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chromatic graph homology and Khovanov homology over the integers"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--budget", g.budget, "Generator budget (default 5000000, or CHROMKH_BUDGET)");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", g.seed, "Seed for random corpora");
    app.set_version_flag("--version", std::string(chromkh_version()));

    auto* graph = app.add_subcommand("graph-homology", "Chromatic (co)homology of a graph");
    std::string graph_path, theory = "chromatic", graph_window;
    bool homology = false;
    graph->add_option("--graph", graph_path, "Graph JSON file {\"vertices\": n, \"edges\": [[u, w], ...]}")->required();
    graph->add_option("--theory", theory, "chromatic or delta")->check(CLI::IsMember({"chromatic", "delta"}));
    graph->add_flag("--homology,!--cohomology", homology, "Homology instead of cohomology (default cohomology)");
    graph->add_option("--window", graph_window, "Degree window, e.g. i=0..2,j=3");

    auto* link = app.add_subcommand("link-homology", "Khovanov homology of a link diagram");
    std::string pd, braid, link_window, primes;
    bool oriented = false;
    auto* pd_opt = link->add_option("--pd", pd, "PD code file or PD text");
    auto* braid_opt = link->add_option("--braid", braid, "Braid word BR[n,{...}]");
    pd_opt->excludes(braid_opt);
    link->add_option("--window", link_window, "Degree window, e.g. i=6..8,j=10..20");
    link->add_option("--primes", primes, "Also report ranks over F_p, e.g. 2,3");
    link->add_flag("--oriented", oriented, "Also report the oriented (h, q) normalization");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    std::vector<std::string> suites{"all"};
    for (size_t k = 0; k < chromkh_suite_count(); ++k) suites.push_back(chromkh_suite_name(k));
    verify->add_option("suite", suite, "Suite name or all")->required()->check(CLI::IsMember(suites));

    auto* survey = app.add_subcommand("survey", "Torsion survey of braid closures");
    std::vector<std::string> words;
    std::string exponents = "1..3";
    std::size_t max_syllables = 6, max_crossings = 12;
    std::string survey_window;
    bool z4_only = false;
    survey->add_option("--braid", words, "Explicit braid words (repeatable)");
    survey->add_option("--exponents", exponents, "Syllable exponents of the 3-braid family, e.g. 1..3 or -3..-1");
    survey->add_option("--max-syllables", max_syllables, "Syllables per word");
    survey->add_option("--max-crossings", max_crossings, "Crossings per word");
    survey->add_option("--window", survey_window, "Degree window");
    survey->add_flag("--z4-only", z4_only, "Keep only entries with torsion of order divisible by 4");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : CHROMKH_ERR_INVALID;
    }
    if (*link && pd.empty() && braid.empty()) {
        std::cerr << "error: link-homology needs --pd or --braid\n";
        return CHROMKH_ERR_INVALID;
    }

    try {
        if (*graph) return run_graph(g, graph_path, theory, homology, graph_window);
        if (*link) return run_link(g, pd, braid, link_window, primes, oriented);
        if (*verify) return run_verify(g, suite);
        return run_survey(g, words, exponents, max_syllables, max_crossings, survey_window, z4_only);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    }
}
