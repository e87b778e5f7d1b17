#ifndef CHROMA_CHROMA_H
#define CHROMA_CHROMA_H

/* C interface to the chroma library. Every handle is opaque and owned by the
 * caller once returned; release it with the matching *_free function. Strings
 * returned through char ** are heap copies released with chroma_string_free.
 * Functions report failure through chroma_status; chroma_last_error gives the
 * message of the most recent failure on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CHROMA_API __declspec(dllexport)
#else
#define CHROMA_API __attribute__((visibility("default")))
#endif

typedef enum chroma_status {
    CHROMA_OK = 0,
    CHROMA_ERR_INVALID_ARGUMENT = 1,
    CHROMA_ERR_PARSE = 2,
    CHROMA_ERR_OUT_OF_RANGE = 3,
    CHROMA_ERR_INTERNAL = 4,
} chroma_status;

typedef struct chroma_graph chroma_graph;
typedef struct chroma_poly chroma_poly;
typedef struct chroma_report chroma_report;

CHROMA_API const char * chroma_version(void);
CHROMA_API const char * chroma_last_error(void);
CHROMA_API void chroma_string_free(char * s);

/* Graphs */
CHROMA_API chroma_status chroma_graph_from_graph6(const char * text, chroma_graph ** out);
CHROMA_API void chroma_graph_free(chroma_graph * g);
CHROMA_API chroma_status chroma_graph_to_graph6(const chroma_graph * g, char ** out);
CHROMA_API chroma_status chroma_graph_canonical(const chroma_graph * g, char ** out);
CHROMA_API int chroma_graph_order(const chroma_graph * g);
CHROMA_API int chroma_graph_size(const chroma_graph * g);
CHROMA_API chroma_status chroma_graph_chromatic_number(const chroma_graph * g, int * out);

/* Counting. Counts are decimal strings since they can exceed 64 bits. */
CHROMA_API chroma_status chroma_count_colourings(const chroma_graph * g, uint64_t x, char ** out);
/* x(x-1)...(x-k+1) (x-1)^(n-k), with x given in decimal. */
CHROMA_API chroma_status chroma_tomescu_bound(int k, int n, const char * x, char ** out);

/* Polynomials */
CHROMA_API chroma_status chroma_chromatic_polynomial(const chroma_graph * g, chroma_poly ** out);
/* Forbidden colours as JSON: {"y_plus_1_label": int|null, "forbidden": [[...], ...]}. */
CHROMA_API chroma_status chroma_list_polynomial(const chroma_graph * g, const char * forbidden_json, chroma_poly ** out);
CHROMA_API void chroma_poly_free(chroma_poly * p);
CHROMA_API int chroma_poly_degree(const chroma_poly * p);
/* {"var": "x"|"y", "coeffs": ["c0", "c1", ...]} */
CHROMA_API chroma_status chroma_poly_to_json(const chroma_poly * p, char ** out);
CHROMA_API chroma_status chroma_poly_to_string(const chroma_poly * p, char ** out);
/* Value at a decimal integer or a rational "p/q"; the result uses the same form. */
CHROMA_API chroma_status chroma_poly_eval(const chroma_poly * p, const char * at, char ** out);

/* Enumeration: canonical graph6 strings, one per line, sorted. chi = 0 keeps
 * every chromatic number. */
CHROMA_API chroma_status chroma_enumerate(int n, int connected, int chi, int allow_long, char ** out);

/* Verification */
typedef enum chroma_suite {
    CHROMA_SUITE_TOMESCU = 0,
    CHROMA_SUITE_LEMMAS = 1,
    CHROMA_SUITE_TRIANGLE_FREE = 2,
    CHROMA_SUITE_CENSUS = 3,
    CHROMA_SUITE_TWO_INDUCED = 4,
} chroma_suite;

typedef struct chroma_verify_options {
    chroma_suite suite;
    int n_max;
    const int * xs;
    size_t xs_len;
    const int * ys;
    size_t ys_len;
    int workers;
    int allow_long;
    int sample_rational;
    /* Record wall-clock time in runtime_ms; otherwise it stays 0 so output is
     * reproducible byte for byte. */
    int record_timing;
} chroma_verify_options;

CHROMA_API void chroma_verify_options_init(chroma_verify_options * options, chroma_suite suite);
CHROMA_API chroma_status chroma_verify(const chroma_verify_options * options, chroma_report ** out);
CHROMA_API void chroma_report_free(chroma_report * r);
CHROMA_API int chroma_report_passed(const chroma_report * r);
CHROMA_API chroma_status chroma_report_to_json(const chroma_report * r, char ** out);
CHROMA_API chroma_status chroma_report_summary(const chroma_report * r, char ** out);

#ifdef __cplusplus
}
#endif

#endif
