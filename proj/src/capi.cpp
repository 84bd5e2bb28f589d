#include "chromkh/chromkh.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chromkh/chromatic.hpp"
#include "chromkh/delta.hpp"
#include "chromkh/error.hpp"
#include "chromkh/graph.hpp"
#include "chromkh/invariants.hpp"
#include "chromkh/khovanov.hpp"
#include "chromkh/link.hpp"
#include "chromkh/survey.hpp"
#include "chromkh/verify.hpp"

struct chromkh_graph {
    chromkh::Multigraph g;
};

struct chromkh_link {
    chromkh::LinkDiagram d;
};

struct chromkh_groups {
    std::vector<std::pair<chromkh::Bidegree, chromkh::AbelianGroup>> items;
};

struct chromkh_report {
    chromkh::SuiteReport r;
};

struct chromkh_survey {
    std::vector<chromkh::SurveyEntry> entries;
};

namespace {

thread_local std::string last_error;

chromkh_status set_error(chromkh_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

template <class Fn>
chromkh_status guarded(Fn&& fn) {
    try {
        fn();
        last_error.clear();
        return CHROMKH_OK;
    } catch (const chromkh::Error& e) {
        return set_error(static_cast<chromkh_status>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(CHROMKH_ERR_BUDGET, "out of memory");
    } catch (const std::exception& e) {
        return set_error(CHROMKH_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string read_file(const char* path) {
    std::ifstream in(path);
    if (!in) throw chromkh::ParseError(std::string("cannot open ") + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

chromkh::KhovanovOptions kh_options(const chromkh_options* opt) {
    chromkh::KhovanovOptions o;
    o.budget = chromkh::default_budget();
    if (!opt) return o;
    if (opt->has_i_min) o.i_min = opt->i_min;
    if (opt->has_i_max) o.i_max = opt->i_max;
    if (opt->has_j_min) o.j_min = opt->j_min;
    if (opt->has_j_max) o.j_max = opt->j_max;
    if (opt->budget) o.budget = opt->budget;
    o.threads = opt->threads ? opt->threads : 1;
    return o;
}

chromkh::ChromaticOptions chrom_options(const chromkh_options* opt) {
    chromkh::ChromaticOptions o;
    auto k = kh_options(opt);
    o.i_min = k.i_min;
    o.i_max = k.i_max;
    o.j_min = k.j_min;
    o.j_max = k.j_max;
    o.budget = k.budget;
    o.threads = k.threads;
    return o;
}

chromkh_groups* wrap(const chromkh::BigradedGroups& h) {
    auto* out = new chromkh_groups;
    for (const auto& [deg, g] : h)
        if (!g.is_trivial()) out->items.emplace_back(deg, g);
    return out;
}

chromkh::BigradedGroups unwrap(const chromkh_groups* h) {
    chromkh::BigradedGroups out;
    for (const auto& [deg, g] : h->items) out[deg] = g;
    return out;
}

chromkh_status need(const void* p, const char* what) {
    return p ? CHROMKH_OK : set_error(CHROMKH_ERR_INVALID, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* chromkh_version(void) { return "1.0.0"; }

const char* chromkh_last_error(void) { return last_error.c_str(); }

void chromkh_options_init(chromkh_options* opt) {
    if (!opt) return;
    *opt = chromkh_options{};
    opt->budget = chromkh::default_budget();
    opt->threads = 1;
}

uint64_t chromkh_default_budget(void) { return chromkh::default_budget(); }

void chromkh_string_free(char* s) { delete[] s; }

// ---------------------------------------------------------------------------

chromkh_status chromkh_graph_parse_json(const char* text, chromkh_graph** out) {
    if (auto s = need(text, "text"); s != CHROMKH_OK) return s;
    if (auto s = need(out, "out"); s != CHROMKH_OK) return s;
    return guarded([&] { *out = new chromkh_graph{chromkh::graph_from_json(text)}; });
}

chromkh_status chromkh_graph_load(const char* path, chromkh_graph** out) {
    if (auto s = need(path, "path"); s != CHROMKH_OK) return s;
    if (auto s = need(out, "out"); s != CHROMKH_OK) return s;
    return guarded([&] { *out = new chromkh_graph{chromkh::load_graph(path)}; });
}

void chromkh_graph_free(chromkh_graph* g) { delete g; }

size_t chromkh_graph_vertices(const chromkh_graph* g) { return g ? g->g.vertex_count() : 0; }

size_t chromkh_graph_edges(const chromkh_graph* g) { return g ? g->g.edge_count() : 0; }

chromkh_status chromkh_graph_hash(const chromkh_graph* g, char out[17]) {
    if (auto s = need(g, "graph"); s != CHROMKH_OK) return s;
    if (auto s = need(out, "out"); s != CHROMKH_OK) return s;
    return guarded([&] {
        auto h = chromkh::graph_hash(g->g);
        std::memcpy(out, h.c_str(), 17);
    });
}

// ---------------------------------------------------------------------------

chromkh_status chromkh_link_parse_pd(const char* text, chromkh_link** out) {
    if (auto s = need(text, "text"); s != CHROMKH_OK) return s;
    if (auto s = need(out, "out"); s != CHROMKH_OK) return s;
    return guarded([&] { *out = new chromkh_link{chromkh::parse_pd(text)}; });
}

chromkh_status chromkh_link_parse_braid(const char* text, chromkh_link** out) {
    if (auto s = need(text, "text"); s != CHROMKH_OK) return s;
    if (auto s = need(out, "out"); s != CHROMKH_OK) return s;
    return guarded([&] { *out = new chromkh_link{chromkh::braid_closure(chromkh::parse_braid(text))}; });
}

chromkh_status chromkh_link_load_pd(const char* path, chromkh_link** out) {
    if (auto s = need(path, "path"); s != CHROMKH_OK) return s;
    if (auto s = need(out, "out"); s != CHROMKH_OK) return s;
    return guarded([&] { *out = new chromkh_link{chromkh::parse_pd(read_file(path))}; });
}

void chromkh_link_free(chromkh_link* l) { delete l; }

size_t chromkh_link_crossings(const chromkh_link* l) { return l ? l->d.crossing_count() : 0; }

size_t chromkh_link_components(const chromkh_link* l) { return l ? chromkh::link_components(l->d) : 0; }

int chromkh_link_writhe(const chromkh_link* l) { return l ? chromkh::writhe(l->d) : 0; }

chromkh_status chromkh_link_pd(const chromkh_link* l, char** text) {
    if (auto s = need(l, "link"); s != CHROMKH_OK) return s;
    if (auto s = need(text, "text"); s != CHROMKH_OK) return s;
    return guarded([&] { *text = dup_string(l->d.str()); });
}

chromkh_status chromkh_link_bracket(const chromkh_link* l, char** text) {
    if (auto s = need(l, "link"); s != CHROMKH_OK) return s;
    if (auto s = need(text, "text"); s != CHROMKH_OK) return s;
    return guarded([&] { *text = dup_string(chromkh::unreduced_bracket(l->d).str()); });
}

// ---------------------------------------------------------------------------

chromkh_status chromkh_chromatic(const chromkh_graph* g, chromkh_theory theory, int cohomology, const chromkh_options* opt,
                                 chromkh_groups** out) {
    if (auto s = need(g, "graph"); s != CHROMKH_OK) return s;
    if (auto s = need(out, "out"); s != CHROMKH_OK) return s;
    if (theory != CHROMKH_THEORY_CHROMATIC && theory != CHROMKH_THEORY_DELTA)
        return set_error(CHROMKH_ERR_INVALID, "unknown theory");
    return guarded([&] {
        auto o = chrom_options(opt);
        if (theory == CHROMKH_THEORY_DELTA) o.variant = chromkh::ChromaticVariant::kDelta;
        auto r = chromkh::chromatic_groups(g->g, o);
        *out = wrap(cohomology ? r.cohomology : r.homology);
    });
}

chromkh_status chromkh_khovanov(const chromkh_link* l, const chromkh_options* opt, chromkh_groups** out) {
    if (auto s = need(l, "link"); s != CHROMKH_OK) return s;
    if (auto s = need(out, "out"); s != CHROMKH_OK) return s;
    return guarded([&] { *out = wrap(chromkh::khovanov_homology(l->d, kh_options(opt))); });
}

chromkh_status chromkh_khovanov_mod_p(const chromkh_link* l, uint32_t p, const chromkh_options* opt, chromkh_groups** out) {
    if (auto s = need(l, "link"); s != CHROMKH_OK) return s;
    if (auto s = need(out, "out"); s != CHROMKH_OK) return s;
    return guarded([&] {
        chromkh::BigradedGroups h;
        for (const auto& [deg, r] : chromkh::khovanov_mod_p(l->d, p, kh_options(opt))) h[deg] = chromkh::AbelianGroup::free(r);
        *out = wrap(h);
    });
}

chromkh_status chromkh_groups_oriented(const chromkh_groups* h, int writhe, chromkh_groups** out) {
    if (auto s = need(h, "groups"); s != CHROMKH_OK) return s;
    if (auto s = need(out, "out"); s != CHROMKH_OK) return s;
    return guarded([&] { *out = wrap(chromkh::to_oriented(unwrap(h), writhe)); });
}

chromkh_status chromkh_groups_euler(const chromkh_groups* h, int khovanov, char** text) {
    if (auto s = need(h, "groups"); s != CHROMKH_OK) return s;
    if (auto s = need(text, "text"); s != CHROMKH_OK) return s;
    return guarded([&] {
        auto mode = khovanov ? chromkh::EulerMode::kKhovanov : chromkh::EulerMode::kChromatic;
        *text = dup_string(chromkh::euler_characteristic(unwrap(h), mode).str());
    });
}

size_t chromkh_groups_count(const chromkh_groups* h) { return h ? h->items.size() : 0; }

chromkh_status chromkh_groups_get(const chromkh_groups* h, size_t k, int* i, int* j, size_t* free_rank,
                                  size_t* torsion_count) {
    if (auto s = need(h, "groups"); s != CHROMKH_OK) return s;
    if (k >= h->items.size()) return set_error(CHROMKH_ERR_INVALID, "group index out of range");
    const auto& [deg, g] = h->items[k];
    if (i) *i = deg.first;
    if (j) *j = deg.second;
    if (free_rank) *free_rank = g.free_rank();
    if (torsion_count) *torsion_count = g.torsion().size();
    return CHROMKH_OK;
}

chromkh_status chromkh_groups_torsion(const chromkh_groups* h, size_t k, size_t t, char* buf, size_t len) {
    if (auto s = need(h, "groups"); s != CHROMKH_OK) return s;
    if (auto s = need(buf, "buffer"); s != CHROMKH_OK) return s;
    if (k >= h->items.size() || t >= h->items[k].second.torsion().size())
        return set_error(CHROMKH_ERR_INVALID, "torsion index out of range");
    auto text = h->items[k].second.torsion()[t].str();
    if (text.size() + 1 > len) return set_error(CHROMKH_ERR_INVALID, "buffer too small");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return CHROMKH_OK;
}

void chromkh_groups_free(chromkh_groups* h) { delete h; }

// ---------------------------------------------------------------------------

size_t chromkh_suite_count(void) { return chromkh::suite_names().size(); }

const char* chromkh_suite_name(size_t k) {
    static const std::vector<std::string> names = chromkh::suite_names();
    return k < names.size() ? names[k].c_str() : nullptr;
}

chromkh_status chromkh_verify(const char* suite, uint64_t seed, unsigned threads, uint64_t budget, chromkh_report** out) {
    if (auto s = need(suite, "suite"); s != CHROMKH_OK) return s;
    if (auto s = need(out, "out"); s != CHROMKH_OK) return s;
    return guarded([&] {
        chromkh::VerifyOptions o;
        o.seed = seed;
        o.threads = threads ? threads : 1;
        o.budget = budget ? budget : chromkh::default_budget();
        *out = new chromkh_report{chromkh::run_suite(suite, o)};
    });
}

const char* chromkh_report_title(const chromkh_report* r) { return r ? r->r.title.c_str() : ""; }

int chromkh_report_passed(const chromkh_report* r) { return r && r->r.passed ? 1 : 0; }

size_t chromkh_report_checked(const chromkh_report* r) { return r ? r->r.checked : 0; }

double chromkh_report_seconds(const chromkh_report* r) { return r ? r->r.seconds : 0; }

size_t chromkh_report_failure_count(const chromkh_report* r) { return r ? r->r.failures.size() : 0; }

const char* chromkh_report_failure(const chromkh_report* r, size_t k) {
    return r && k < r->r.failures.size() ? r->r.failures[k].c_str() : nullptr;
}

size_t chromkh_report_note_count(const chromkh_report* r) { return r ? r->r.notes.size() : 0; }

const char* chromkh_report_note(const chromkh_report* r, size_t k) {
    return r && k < r->r.notes.size() ? r->r.notes[k].c_str() : nullptr;
}

void chromkh_report_free(chromkh_report* r) { delete r; }

// ---------------------------------------------------------------------------

chromkh_status chromkh_survey_words(const char* const* words, size_t count, const chromkh_options* opt,
                                    chromkh_survey** out) {
    if (count && !words) return set_error(CHROMKH_ERR_INVALID, "words is null");
    if (auto s = need(out, "out"); s != CHROMKH_OK) return s;
    return guarded([&] {
        std::vector<chromkh::BraidWord> family;
        for (size_t k = 0; k < count; ++k) family.push_back(chromkh::parse_braid(words[k]));
        *out = new chromkh_survey{chromkh::survey_braids(family, kh_options(opt))};
    });
}

chromkh_status chromkh_survey_three_braids(const int* exponents, size_t exponent_count, size_t max_syllables,
                                           size_t max_crossings, const chromkh_options* opt, chromkh_survey** out) {
    if (exponent_count && !exponents) return set_error(CHROMKH_ERR_INVALID, "exponents is null");
    if (auto s = need(out, "out"); s != CHROMKH_OK) return s;
    return guarded([&] {
        std::vector<int> e(exponents, exponents + exponent_count);
        auto family = chromkh::three_braid_family(e, max_syllables, max_crossings);
        *out = new chromkh_survey{chromkh::survey_braids(family, kh_options(opt))};
    });
}

size_t chromkh_survey_count(const chromkh_survey* s) { return s ? s->entries.size() : 0; }

const char* chromkh_survey_braid(const chromkh_survey* s, size_t k) {
    return s && k < s->entries.size() ? s->entries[k].braid.c_str() : nullptr;
}

chromkh_status chromkh_survey_info(const chromkh_survey* s, size_t k, size_t* crossings, size_t* components,
                                   int* adequate, int* skipped) {
    if (auto st = need(s, "survey"); st != CHROMKH_OK) return st;
    if (k >= s->entries.size()) return set_error(CHROMKH_ERR_INVALID, "entry index out of range");
    const auto& e = s->entries[k];
    if (crossings) *crossings = e.crossings;
    if (components) *components = e.components;
    if (adequate) *adequate = e.adequate_plus && e.adequate_minus;
    if (skipped) *skipped = e.skipped;
    return CHROMKH_OK;
}

const char* chromkh_survey_skip_reason(const chromkh_survey* s, size_t k) {
    return s && k < s->entries.size() ? s->entries[k].skip_reason.c_str() : nullptr;
}

chromkh_status chromkh_survey_torsion(const chromkh_survey* s, size_t k, chromkh_groups** out) {
    if (auto st = need(s, "survey"); st != CHROMKH_OK) return st;
    if (auto st = need(out, "out"); st != CHROMKH_OK) return st;
    if (k >= s->entries.size()) return set_error(CHROMKH_ERR_INVALID, "entry index out of range");
    return guarded([&] { *out = wrap(s->entries[k].torsion); });
}

void chromkh_survey_free(chromkh_survey* s) { delete s; }

}  // extern "C"
