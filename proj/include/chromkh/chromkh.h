#ifndef CHROMKH_H
#define CHROMKH_H

/* C interface to the chromatic graph homology and Khovanov homology library.
 * Every object is an opaque handle released with its *_free function.
 * Functions that can fail return a chromkh_status; on failure the message is
 * available from chromkh_last_error() on the same thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CHROMKH_API __declspec(dllexport)
#else
#define CHROMKH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chromkh_status {
    CHROMKH_OK = 0,
    CHROMKH_ERR_ASSERTION = 1, /* internal consistency check failed (e.g. d*d != 0) */
    CHROMKH_ERR_PARSE = 2,
    CHROMKH_ERR_BUDGET = 3,
    CHROMKH_ERR_INVALID = 4, /* bad argument or precondition */
    CHROMKH_ERR_INTERNAL = 5
} chromkh_status;

typedef enum chromkh_theory { CHROMKH_THEORY_CHROMATIC = 0, CHROMKH_THEORY_DELTA = 1 } chromkh_theory;

typedef struct chromkh_graph chromkh_graph;
typedef struct chromkh_link chromkh_link;
typedef struct chromkh_groups chromkh_groups;
typedef struct chromkh_report chromkh_report;
typedef struct chromkh_survey chromkh_survey;

/* Window bounds are used only when the matching has_* flag is nonzero. */
typedef struct chromkh_options {
    int has_i_min, i_min;
    int has_i_max, i_max;
    int has_j_min, j_min;
    int has_j_max, j_max;
    uint64_t budget; /* generators; 0 means the default */
    unsigned threads;
} chromkh_options;

CHROMKH_API const char* chromkh_version(void);
CHROMKH_API const char* chromkh_last_error(void);
/* Whole window, default budget (CHROMKH_BUDGET overrides), one thread. */
CHROMKH_API void chromkh_options_init(chromkh_options* opt);
CHROMKH_API uint64_t chromkh_default_budget(void);
CHROMKH_API void chromkh_string_free(char* s);

/* Graphs: {"vertices": n, "edges": [[u, w], ...]} */
CHROMKH_API chromkh_status chromkh_graph_parse_json(const char* text, chromkh_graph** out);
CHROMKH_API chromkh_status chromkh_graph_load(const char* path, chromkh_graph** out);
CHROMKH_API void chromkh_graph_free(chromkh_graph* g);
CHROMKH_API size_t chromkh_graph_vertices(const chromkh_graph* g);
CHROMKH_API size_t chromkh_graph_edges(const chromkh_graph* g);
/* 16 hex digits and a terminating zero. */
CHROMKH_API chromkh_status chromkh_graph_hash(const chromkh_graph* g, char out[17]);

/* Links: PD text ("X[1,4,2,5]; ..." or "Loop[1]") or a braid "BR[n,{...}]". */
CHROMKH_API chromkh_status chromkh_link_parse_pd(const char* text, chromkh_link** out);
CHROMKH_API chromkh_status chromkh_link_parse_braid(const char* text, chromkh_link** out);
CHROMKH_API chromkh_status chromkh_link_load_pd(const char* path, chromkh_link** out);
CHROMKH_API void chromkh_link_free(chromkh_link* l);
CHROMKH_API size_t chromkh_link_crossings(const chromkh_link* l);
CHROMKH_API size_t chromkh_link_components(const chromkh_link* l);
CHROMKH_API int chromkh_link_writhe(const chromkh_link* l);
/* Canonical PD text of the diagram. Free with chromkh_string_free. */
CHROMKH_API chromkh_status chromkh_link_pd(const chromkh_link* l, char** text);
/* Unreduced Kauffman bracket as a Laurent polynomial in A. */
CHROMKH_API chromkh_status chromkh_link_bracket(const chromkh_link* l, char** text);

/* Chromatic cohomology (cohomology != 0) or homology of a graph. */
CHROMKH_API chromkh_status chromkh_chromatic(const chromkh_graph* g, chromkh_theory theory, int cohomology,
                                             const chromkh_options* opt, chromkh_groups** out);
/* Khovanov homology, framed unoriented convention. */
CHROMKH_API chromkh_status chromkh_khovanov(const chromkh_link* l, const chromkh_options* opt, chromkh_groups** out);
/* Ranks over F_p, reported as free ranks. */
CHROMKH_API chromkh_status chromkh_khovanov_mod_p(const chromkh_link* l, uint32_t p, const chromkh_options* opt,
                                                  chromkh_groups** out);
/* Shift Khovanov gradings to the oriented normalization (h, q). */
CHROMKH_API chromkh_status chromkh_groups_oriented(const chromkh_groups* h, int writhe, chromkh_groups** out);
/* Euler characteristic: Khovanov (in A) when khovanov != 0, else chromatic (in q). */
CHROMKH_API chromkh_status chromkh_groups_euler(const chromkh_groups* h, int khovanov, char** text);

/* Nonzero groups in increasing (i, j) order. */
CHROMKH_API size_t chromkh_groups_count(const chromkh_groups* h);
CHROMKH_API chromkh_status chromkh_groups_get(const chromkh_groups* h, size_t k, int* i, int* j, size_t* free_rank,
                                              size_t* torsion_count);
/* Torsion coefficient t of group k in decimal. */
CHROMKH_API chromkh_status chromkh_groups_torsion(const chromkh_groups* h, size_t k, size_t t, char* buf, size_t len);
CHROMKH_API void chromkh_groups_free(chromkh_groups* h);

/* Verification suites. */
CHROMKH_API size_t chromkh_suite_count(void);
CHROMKH_API const char* chromkh_suite_name(size_t k);
CHROMKH_API chromkh_status chromkh_verify(const char* suite, uint64_t seed, unsigned threads, uint64_t budget,
                                          chromkh_report** out);
CHROMKH_API const char* chromkh_report_title(const chromkh_report* r);
CHROMKH_API int chromkh_report_passed(const chromkh_report* r);
CHROMKH_API size_t chromkh_report_checked(const chromkh_report* r);
CHROMKH_API double chromkh_report_seconds(const chromkh_report* r);
CHROMKH_API size_t chromkh_report_failure_count(const chromkh_report* r);
CHROMKH_API const char* chromkh_report_failure(const chromkh_report* r, size_t k);
CHROMKH_API size_t chromkh_report_note_count(const chromkh_report* r);
CHROMKH_API const char* chromkh_report_note(const chromkh_report* r, size_t k);
CHROMKH_API void chromkh_report_free(chromkh_report* r);

/* Braid surveys: integer Khovanov homology of each closure; words over
 * budget are kept and marked skipped. */
CHROMKH_API chromkh_status chromkh_survey_words(const char* const* words, size_t count, const chromkh_options* opt,
                                                chromkh_survey** out);
/* Positive (or, with negative exponents, negative) 3-braids with
 * alternating generators. */
CHROMKH_API chromkh_status chromkh_survey_three_braids(const int* exponents, size_t exponent_count, size_t max_syllables,
                                                       size_t max_crossings, const chromkh_options* opt,
                                                       chromkh_survey** out);
CHROMKH_API size_t chromkh_survey_count(const chromkh_survey* s);
CHROMKH_API const char* chromkh_survey_braid(const chromkh_survey* s, size_t k);
CHROMKH_API chromkh_status chromkh_survey_info(const chromkh_survey* s, size_t k, size_t* crossings, size_t* components,
                                               int* adequate, int* skipped);
CHROMKH_API const char* chromkh_survey_skip_reason(const chromkh_survey* s, size_t k);
/* Torsion subgroups of entry k, by bidegree. */
CHROMKH_API chromkh_status chromkh_survey_torsion(const chromkh_survey* s, size_t k, chromkh_groups** out);
CHROMKH_API void chromkh_survey_free(chromkh_survey* s);

#ifdef __cplusplus
}
#endif

#endif
