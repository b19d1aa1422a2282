/* C interface to the B2 crystal-graph library.
 *
 * All functions returning b2c_status set a thread-local message retrievable
 * via b2c_last_error() on failure. Strings returned through char** are
 * heap-allocated and must be released with b2c_string_free().
 */
#ifndef B2CRYSTAL_H
#define B2CRYSTAL_H

#ifdef __cplusplus
extern "C" {
#endif

#ifndef B2C_API
#define B2C_API __attribute__((visibility("default")))
#endif

typedef enum b2c_status {
    B2C_OK = 0,
    B2C_VIOLATIONS = 1,   /* input well-formed but checks failed */
    B2C_ERR_USAGE = 2,    /* bad arguments or missing preconditions */
    B2C_ERR_PARSE = 3,    /* malformed document */
    B2C_ERR_INTERNAL = 4
} b2c_status;

typedef struct b2c_graph b2c_graph; /* crystal or generic red/green graph */
typedef struct b2c_sky b2c_sky;    /* contracted green/blue graph */

B2C_API const char* b2c_version(void);
B2C_API const char* b2c_last_error(void);
B2C_API void b2c_string_free(char* s);

/* Generates the decorated interval crystal; a must be even and both
 * parameters nonnegative. */
B2C_API b2c_status b2c_generate(int h, int a, b2c_graph** out);
B2C_API b2c_status b2c_graph_from_json(const char* json_text, b2c_graph** out);
B2C_API b2c_status b2c_graph_to_json(const b2c_graph* g, char** out);
B2C_API b2c_status b2c_graph_to_dot(const b2c_graph* g, char** out);
B2C_API int b2c_graph_vertex_count(const b2c_graph* g);
B2C_API int b2c_graph_edge_count(const b2c_graph* g);
B2C_API void b2c_graph_free(b2c_graph* g);

/* check: "ALL", one of K0..K5, or a derived check id
 * (half-edge-corollary, half-edge-context, star-squares, double-half,
 * label-consistency). include_derived applies to "ALL". Writes a JSON
 * report; returns B2C_OK when it passed, B2C_VIOLATIONS otherwise. */
B2C_API b2c_status b2c_verify(const b2c_graph* g, const char* check, int include_derived,
                              int with_stats, char** report_json);

/* Vertex/edge/fat counts, source and sink weights, expected dimension.
 * Requires a generated crystal. */
B2C_API b2c_status b2c_stats_json(const b2c_graph* g, char** out);

B2C_API b2c_status b2c_sky_contract(const b2c_graph* g, b2c_sky** out);
/* The glued-sail reference for interval parameters (h, a). */
B2C_API b2c_status b2c_sky_reference(int h, int a, b2c_sky** out);
B2C_API b2c_status b2c_sky_from_json(const char* json_text, b2c_sky** out);
B2C_API b2c_status b2c_sky_to_json(const b2c_sky* s, char** out);
B2C_API b2c_status b2c_sky_to_dot(const b2c_sky* s, char** out);
B2C_API int b2c_sky_vertex_count(const b2c_sky* s);
/* Interval parameters attached to the sky, or -1 when unknown. */
B2C_API int b2c_sky_param_h(const b2c_sky* s);
B2C_API int b2c_sky_param_a(const b2c_sky* s);
/* Degree, label-distinctness and forbidden-shape checks. */
B2C_API b2c_status b2c_sky_check(const b2c_sky* s, char** report_json);
B2C_API b2c_status b2c_sky_iso(const b2c_sky* a, const b2c_sky* b, int* isomorphic);
B2C_API void b2c_sky_free(b2c_sky* s);

/* Canonical coordinates for one vertex (vertex_id >= 0) or all (-1).
 * When check is nonzero, validates words, cones, the coordinate transform
 * and the sum identities; failures yield B2C_VIOLATIONS. Requires a
 * generated crystal. */
B2C_API b2c_status b2c_coords_json(const b2c_graph* g, int vertex_id, int check, char** out);

#ifdef __cplusplus
}
#endif

#endif /* B2CRYSTAL_H */
