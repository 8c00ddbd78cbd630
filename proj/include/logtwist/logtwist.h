/* C interface to the logtwist library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Functions returning lt_status set a message retrievable
 * with lt_last_error() on the calling thread. Strings returned through
 * `char** out` are allocated by the library and released with
 * lt_string_free(). */
#ifndef LOGTWIST_H
#define LOGTWIST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LOGTWIST_BUILDING)
#define LT_API __declspec(dllexport)
#else
#define LT_API __declspec(dllimport)
#endif
#else
#define LT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lt_status {
  LT_OK = 0,
  LT_ERR_INTERNAL = 1,
  LT_ERR_INVALID = 2,     /* malformed or inconsistent input */
  LT_ERR_UNSUPPORTED = 3, /* input outside the supported regime */
  LT_ERR_ARGUMENT = 4     /* null pointer or out-of-range argument */
} lt_status;

typedef struct lt_fixture lt_fixture;
typedef struct lt_monoid lt_monoid;

typedef struct lt_options {
  int max_contact;
  uint64_t seed;
  int placements;
} lt_options;

LT_API lt_options lt_default_options(void);

/* Parses a fixture document (graph, signature and optional structure,
 * signs, involution, hyperelliptic signature). */
LT_API lt_status lt_fixture_parse(const char* json, lt_fixture** out);
LT_API void lt_fixture_free(lt_fixture* f);
/* Overrides the fixture's gluing signs; `text` is "+,-" or a JSON array. */
LT_API lt_status lt_fixture_set_signs(lt_fixture* f, const char* text);
/* Overrides the fixture's involution with a JSON object. */
LT_API lt_status lt_fixture_set_involution_json(lt_fixture* f, const char* json);

LT_API lt_status lt_run_enumerate(const lt_fixture* f, const lt_options* o, char** out);
LT_API lt_status lt_run_monoid(const lt_fixture* f, const lt_options* o, char** out);
LT_API lt_status lt_run_spin(const lt_fixture* f, const lt_options* o, char** out);
LT_API lt_status lt_run_hyper(const lt_fixture* f, const lt_options* o, char** out);
LT_API lt_status lt_run_report(const lt_fixture* f, const lt_options* o, char** out);
/* Graphviz text for the graph, oriented by the structure when present. */
LT_API lt_status lt_graph_dot(const lt_fixture* f, char** out);

LT_API lt_status lt_minimal_monoid(const lt_fixture* f, lt_monoid** out);
LT_API void lt_monoid_free(lt_monoid* m);
LT_API size_t lt_monoid_rank(const lt_monoid* m);
LT_API int lt_monoid_is_sharp(const lt_monoid* m);
/* Writes the image of `symbol` (e.g. "e_R") into `coords`, which must hold
 * lt_monoid_rank() entries. Fails with LT_ERR_INVALID if a coordinate does
 * not fit in int64_t. */
LT_API lt_status lt_monoid_image(const lt_monoid* m, const char* symbol, int64_t* coords, size_t len);

LT_API const char* lt_last_error(void);
LT_API void lt_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
