#ifndef NEUTRO_H
#define NEUTRO_H

/* C interface to the neutro library. All strings are UTF-8. Strings returned
 * through `char** out` are owned by the caller and released with
 * neutro_string_free(). On failure a function returns a nonzero status and
 * neutro_last_error() describes it; `out` is left untouched. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NEUTRO_API __declspec(dllexport)
#else
#define NEUTRO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum neutro_status {
  NEUTRO_OK = 0,
  NEUTRO_E_USAGE = 1,
  NEUTRO_E_PARSE = 2,
  NEUTRO_E_SHAPE = 3,
  NEUTRO_E_SIZE_GUARD = 4,
  NEUTRO_E_NOT_FOUND = 5,
  NEUTRO_E_DOMAIN = 6,
  NEUTRO_E_NULL = 7,
  NEUTRO_E_INTERNAL = 9
} neutro_status;

typedef enum neutro_format { NEUTRO_FORMAT_PLAIN = 0, NEUTRO_FORMAT_STRUCTURED = 1 } neutro_format;

typedef enum neutro_kind {
  NEUTRO_KIND_ANY = 0,
  NEUTRO_KIND_GRAPH = 1,
  NEUTRO_KIND_NEUTRO_GRAPH = 2,
  NEUTRO_KIND_RELATION = 3,
  NEUTRO_KIND_CONCEPT_MODEL = 4,
  NEUTRO_KIND_RELATIONAL_MODEL = 5
} neutro_kind;

/* graph analysis sections */
enum {
  NEUTRO_GRAPH_DEGREES = 1 << 0,
  NEUTRO_GRAPH_CONNECTIVITY = 1 << 1,
  NEUTRO_GRAPH_METRICS = 1 << 2,
  NEUTRO_GRAPH_BIPARTITE = 1 << 3,
  NEUTRO_GRAPH_EULER = 1 << 4,
  NEUTRO_GRAPH_HAMILTON = 1 << 5,
  NEUTRO_GRAPH_COLORING = 1 << 6,
  NEUTRO_GRAPH_POLYNOMIAL = 1 << 7,
  NEUTRO_GRAPH_SPANNING_TREES = 1 << 8,
  NEUTRO_GRAPH_TUTTE = 1 << 9,
  NEUTRO_GRAPH_ALL = (1 << 10) - 1
};

/* neutrosophic graph report sections */
enum {
  NEUTRO_NGRAPH_CLASSIFY = 1 << 0,
  NEUTRO_NGRAPH_DEGREES = 1 << 1,
  NEUTRO_NGRAPH_COMPONENTS = 1 << 2,
  NEUTRO_NGRAPH_TREE = 1 << 3,
  NEUTRO_NGRAPH_EULER = 1 << 4,
  NEUTRO_NGRAPH_COLORING = 1 << 5,
  NEUTRO_NGRAPH_ADJACENCY = 1 << 6,
  NEUTRO_NGRAPH_ALL = (1 << 7) - 1
};

typedef enum neutro_side { NEUTRO_SIDE_DOMAIN = 0, NEUTRO_SIDE_RANGE = 1 } neutro_side;

typedef enum neutro_pattern { NEUTRO_PATTERN_FIXED_POINT = 0, NEUTRO_PATTERN_LIMIT_CYCLE = 1 } neutro_pattern;

typedef struct neutro_model neutro_model;
typedef struct neutro_run neutro_run;

/* ---- general ---- */
NEUTRO_API const char* neutro_version(void);
/* Message of the last failure on the calling thread ("" if none). */
NEUTRO_API const char* neutro_last_error(void);
NEUTRO_API const char* neutro_status_name(neutro_status status);
NEUTRO_API void neutro_string_free(char* s);

/* ---- models ---- */
/* Model file text, or raw text of kind `hint` when the header is absent. */
NEUTRO_API neutro_status neutro_model_load_text(const char* text, neutro_kind hint, neutro_model** out);
NEUTRO_API neutro_status neutro_model_load_file(const char* path, neutro_kind hint, neutro_model** out);
/* Matrix CSV for concept models, relational models and relations. */
NEUTRO_API neutro_status neutro_model_load_csv(const char* text, neutro_kind kind, neutro_model** out);
NEUTRO_API void neutro_model_free(neutro_model* m);
NEUTRO_API neutro_status neutro_model_kind(const neutro_model* m, neutro_kind* out);
NEUTRO_API neutro_status neutro_model_serialize(const neutro_model* m, char** out);
NEUTRO_API neutro_status neutro_model_export_dot(const neutro_model* m, char** out);

/* ---- graphs ---- */
/* "complete:4", "complete-bipartite:3:3", "cycle:5", "path:4", "star:5", "wheel:5", "petersen". */
NEUTRO_API neutro_status neutro_graph_generate(const char* family, neutro_model** out);
NEUTRO_API neutro_status neutro_graph_analyze(const neutro_model* g, unsigned sections, uint64_t seed,
                                              unsigned repetitions, neutro_format fmt, char** out);
/* op: "complement", "line", "closure". */
NEUTRO_API neutro_status neutro_graph_transform(const neutro_model* g, const char* op, neutro_model** out);

/* ---- neutrosophic graphs ---- */
/* kind: "vertex", "edge", "strong". */
NEUTRO_API neutro_status neutro_ngraph_petersen(const char* kind, size_t vertex_k, size_t edge_k, neutro_model** out);
NEUTRO_API neutro_status neutro_ngraph_report(const neutro_model* g, unsigned sections, neutro_format fmt, char** out);
NEUTRO_API neutro_status neutro_ngraph_walk(const neutro_model* g, const char* walk, neutro_format fmt, char** out);
NEUTRO_API neutro_status neutro_ngraph_isomorphic(const neutro_model* a, const neutro_model* b, neutro_format fmt,
                                                  char** out);

/* ---- relations ---- */
NEUTRO_API neutro_status neutro_rel_compose(const neutro_model* p, const neutro_model* q, neutro_model** out);
NEUTRO_API neutro_status neutro_rel_inverse(const neutro_model* r, neutro_model** out);
NEUTRO_API neutro_status neutro_rel_closure(const neutro_model* r, neutro_model** out);
NEUTRO_API neutro_status neutro_rel_report(const neutro_model* r, neutro_format fmt, char** out);
/* epsilon: rational text such as "0.5" or "1/2"; NULL means 1/2. */
NEUTRO_API neutro_status neutro_rel_properties(const neutro_model* r, const char* epsilon, neutro_format fmt,
                                               char** out);
NEUTRO_API neutro_status neutro_rel_summary(const neutro_model* r, neutro_format fmt, char** out);
NEUTRO_API neutro_status neutro_rel_join(const neutro_model* p, const neutro_model* q, neutro_format fmt, char** out);
/* mapping: "a=alpha, b=beta" over row labels of r and q. */
NEUTRO_API neutro_status neutro_rel_homomorphism(const neutro_model* r, const neutro_model* q, const char* mapping,
                                                 int strong, neutro_format fmt, char** out);

/* ---- cognitive maps ---- */
/* Exactly one of `on` (concept names or 1-based positions, comma separated)
 * and `state` (full vector such as "1 0 I 0") must be non-NULL. `clamp` may be
 * NULL: the model's clamp line is used, else the concepts on at the start. */
NEUTRO_API neutro_status neutro_cm_run(const neutro_model* m, const char* on, const char* state, const char* clamp,
                                       int degrade, neutro_run** out);
NEUTRO_API neutro_status neutro_rm_run(const neutro_model* m, neutro_side side, const char* on, const char* state,
                                       const char* clamp, neutro_run** out);
NEUTRO_API void neutro_run_free(neutro_run* r);
NEUTRO_API neutro_status neutro_run_report(const neutro_run* r, neutro_format fmt, char** out);
/* Pattern of the single map, or of the domain side of a relational run. */
NEUTRO_API neutro_status neutro_run_pattern(const neutro_run* r, neutro_pattern* out);
NEUTRO_API neutro_status neutro_run_iterations(const neutro_run* r, size_t* out);
/* First state of the hidden pattern; for relational runs `side` selects the space. */
NEUTRO_API neutro_status neutro_run_state(const neutro_run* r, neutro_side side, char** out);

NEUTRO_API neutro_status neutro_cm_balance(const neutro_model* m, neutro_format fmt, char** out);
NEUTRO_API neutro_status neutro_cm_convertible(const neutro_model* m, neutro_format fmt, char** out);
NEUTRO_API neutro_status neutro_cm_degrade(const neutro_model* m, neutro_model** out);
/* states: one state vector per line. threads = 0 picks the hardware count. */
NEUTRO_API neutro_status neutro_cm_sweep(const neutro_model* m, const char* states, unsigned threads,
                                         neutro_format fmt, char** out);

/* Linked product of `count` concept/relational models. The sign-thresholded
 * matrix is reported when `with_signed` is nonzero or `printed` is given;
 * `printed` (may be NULL) is compared with it entry by entry. */
NEUTRO_API neutro_status neutro_link(const neutro_model* const* chain, size_t count, int with_signed,
                                     const neutro_model* printed, neutro_format fmt, char** out);

/* ---- values and matrices ---- */
NEUTRO_API neutro_status neutro_value_canonical(const char* token, char** out);
NEUTRO_API neutro_status neutro_matrix_mul(const char* a, const char* b, neutro_format fmt, char** out);
NEUTRO_API neutro_status neutro_matrix_rank(const char* a, neutro_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif
