#ifndef CHORDATLAS_H
#define CHORDATLAS_H

#if defined(__GNUC__)
#define CA_API __attribute__((visibility("default")))
#else
#define CA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; values match the library's error kinds. */
typedef enum ca_status {
    CA_OK = 0,
    CA_DUPLICATE_POINT = 1,
    CA_GAP_IN_SUPPORT,
    CA_REVERSED_PAIR,
    CA_INTERVAL_OUT_OF_RANGE,
    CA_NOT_CONNECTED,
    CA_SIZE_ONE,
    CA_NOT_INVOLUTION,
    CA_ROOT_NOT_FIXED,
    CA_NOT_TRANSITIVE,
    CA_CORNER_OUT_OF_RANGE,
    CA_NOT_BRIDGELESS,
    CA_NOT_PLANAR,
    CA_NOT_INDECOMPOSABLE,
    CA_BUDGET_EXCEEDED,
    CA_TRUNCATION_TOO_TIGHT,
    CA_BAD_MULTISET,
    CA_UNKNOWN_SUITE,
    CA_UNKNOWN_FORMAT,
    CA_PARSE,
    CA_INTERNAL,
    CA_INVALID_ARGUMENT = 100
} ca_status;

typedef struct ca_diagram ca_diagram;
typedef struct ca_map ca_map;

/* Size budgets; ca_options_default applies CHORD_ATLAS_BUDGET. */
typedef struct ca_options {
    int diagrams;
    int maps;
    int qft;
    int allow_large;
    unsigned long long seed;
    int threads;
} ca_options;

CA_API void ca_options_default(ca_options* out);

/* Message of the last failure on the calling thread. */
CA_API const char* ca_last_error(void);
CA_API const char* ca_status_name(ca_status s);
/* Strings returned through char** out-parameters are released with ca_free. */
CA_API void ca_free(char* s);

/* Diagrams: JSON {"pairs": [[a,b],...]} or text "0-3 1-5 2-4". */
CA_API ca_status ca_diagram_parse(const char* text, ca_diagram** out);
CA_API void ca_diagram_free(ca_diagram* d);
CA_API int ca_diagram_size(const ca_diagram* d);
CA_API int ca_diagram_is_connected(const ca_diagram* d);
CA_API int ca_diagram_is_indecomposable(const ca_diagram* d);
/* format: "json", "dot" or "arcs-text" */
CA_API ca_status ca_diagram_export(const ca_diagram* d, const char* format, char** out);

/* Maps: JSON {"sigma": [...], "alpha": [...], "root": r}. */
CA_API ca_status ca_map_parse(const char* text, ca_map** out);
CA_API void ca_map_free(ca_map* m);
CA_API int ca_map_size(const ca_map* m);
CA_API int ca_map_is_bridgeless(const ca_map* m);
CA_API int ca_map_is_planar(const ca_map* m);
/* Equal up to relabeling of half-edges. */
CA_API int ca_map_isomorphic(const ca_map* a, const ca_map* b);
CA_API ca_status ca_map_export(const ca_map* m, const char* format, char** out);

/* Bijections. phi: all maps to indecomposable diagrams; theta: bridgeless maps to connected diagrams. */
CA_API ca_status ca_phi(const ca_map* m, ca_diagram** out);
CA_API ca_status ca_phi_inv(const ca_diagram* d, ca_map** out);
CA_API ca_status ca_theta(const ca_map* m, ca_diagram** out);
CA_API ca_status ca_theta_inv(const ca_diagram* d, ca_map** out);

/* Enumeration in deterministic order. The callback returns nonzero to stop early.
   Diagram classes: all, connected, indecomposable. Map classes: all, bridgeless, planar. */
typedef int (*ca_diagram_cb)(const ca_diagram* d, void* user);
typedef int (*ca_map_cb)(const ca_map* m, void* user);
CA_API ca_status ca_enumerate_diagrams(int n, const char* cls, const ca_options* opt, ca_diagram_cb cb, void* user);
CA_API ca_status ca_enumerate_maps(int n, const char* cls, const ca_options* opt, ca_map_cb cb, void* user);

/* Statistic profiles as JSON. order: intersection, peeling or first-endpoint. */
CA_API ca_status ca_diagram_stats(const ca_diagram* d, const char* order, char** json_out);
CA_API ca_status ca_map_stats(const ca_map* m, char** json_out);

/* Generating series B or C through z^zmax; format "text" or "json". */
CA_API ca_status ca_series(const char* which, int zmax, int crossings, const ca_options* opt, const char* format, char** out);

typedef struct ca_qft_request {
    int s;
    int xmax;
    int lmax;
    const char* order;      /* nu, omega-inter, omega-peel */
    const char* side;       /* diagram, map, both */
    const char* specialize; /* "k,i=value;k,i=value" or NULL */
    const char* check;      /* NULL, dse-simple, dse-general, crazy, map-identity */
} ca_qft_request;

CA_API void ca_qft_request_default(ca_qft_request* out);
/* JSON with the requested series and, when a check is named, its reports. */
CA_API ca_status ca_qft(const ca_qft_request* req, const ca_options* opt, char** json_out, int* passed);

/* Runs a verification suite; *passed is 1 iff every property holds. */
CA_API ca_status ca_verify(const char* suite, int nmax, const ca_options* opt, char** json_out, int* passed);
/* Space-separated suite names. */
CA_API const char* ca_suite_names(void);

#ifdef __cplusplus
}
#endif

#endif
