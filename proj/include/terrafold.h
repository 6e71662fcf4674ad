/* terrafold — unfold orthogonal terrains (closed heightfield polyhedra) into
 * planar nets and certify the result with exact rational arithmetic.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed here; every fallible call returns tf_status, with a
 * human-readable explanation available from tf_last_error() on the same
 * thread. Strings returned through char** are heap-allocated and must be
 * released with tf_string_free().
 */

#ifndef TERRAFOLD_H
#define TERRAFOLD_H

#include <stddef.h>
#include <stdint.h>

#ifndef TF_API
#  if defined(_WIN32)
#    define TF_API
#  else
#    define TF_API __attribute__((visibility("default")))
#  endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
  TF_OK = 0,
  TF_ERR_SYNTAX = 1,                /* unparsable number or malformed document */
  TF_ERR_MALFORMED_GRID = 2,        /* ragged rows or wrong-sized vectors */
  TF_ERR_NONPOSITIVE_DIMENSION = 3, /* height, width or depth <= 0 */
  TF_ERR_EMPTY_GRID = 4,            /* no cells */
  TF_ERR_INVALID_ARGUMENT = 5,      /* null handle, bad index or parameter */
  TF_ERR_INTERNAL = 6
} tf_status;

typedef enum tf_format {
  TF_FORMAT_CSV = 0,
  TF_FORMAT_JSON = 1
} tf_format;

typedef struct tf_heightfield tf_heightfield;
typedef struct tf_mesh tf_mesh;
typedef struct tf_layout tf_layout;
typedef struct tf_report tf_report;

TF_API const char* tf_version(void);

/* Message for the most recent failure on this thread; empty string if none. */
TF_API const char* tf_last_error(void);

TF_API void tf_string_free(char* s);

/* ---- heightfields ------------------------------------------------------ */

/* CSV: one row per line of comma-separated heights ("p", "p/q" or decimal),
 * with optional "#widths: ..." / "#depths: ..." directive lines.
 * JSON: {"heights": [[...]], "col_widths": [...]?, "row_depths": [...]?}. */
TF_API tf_status tf_heightfield_parse(const char* text, tf_format format, tf_heightfield** out);

/* Unit cells, integer heights uniform in [1, max_height], drawn from
 * SplitMix64(seed) with rejection sampling. Deterministic in all arguments. */
TF_API tf_status tf_heightfield_generate(uint32_t rows, uint32_t cols, uint64_t max_height,
                                  uint64_t seed, tf_heightfield** out);

TF_API tf_status tf_heightfield_to_csv(const tf_heightfield* hf, char** out_text);
TF_API tf_status tf_heightfield_to_json(const tf_heightfield* hf, char** out_text);
TF_API tf_status tf_heightfield_dims(const tf_heightfield* hf, uint32_t* rows, uint32_t* cols);
TF_API void tf_heightfield_free(tf_heightfield* hf);

/* ---- meshes ------------------------------------------------------------ */

/* Every face of the closed polyhedron over the heightfield, one top per cell. */
TF_API tf_status tf_mesh_build(const tf_heightfield* hf, tf_mesh** out);
TF_API tf_status tf_mesh_face_count(const tf_mesh* mesh, size_t* out);
/* Total face area as an exact rational string. */
TF_API tf_status tf_mesh_surface_area(const tf_mesh* mesh, char** out_rational);
TF_API void tf_mesh_free(tf_mesh* mesh);

/* ---- layouts ----------------------------------------------------------- */

/* Unfolds the mesh into a single planar piece. */
TF_API tf_status tf_layout_compute(const tf_mesh* mesh, tf_layout** out);

/* Slanted-axis variant; `slope` is a rational string such as "577/1000".
 * Slope "0" is identical to tf_layout_compute. The result may self-overlap;
 * feed it to tf_verify to find out. */
TF_API tf_status tf_layout_shear(const tf_mesh* mesh, const char* slope, tf_layout** out);

TF_API tf_status tf_layout_to_json(const tf_layout* layout, char** out_text);
TF_API tf_status tf_layout_from_json(const char* text, tf_layout** out);
TF_API tf_status tf_layout_to_svg(const tf_layout* layout, char** out_text);
TF_API tf_status tf_layout_face_count(const tf_layout* layout, size_t* out);
TF_API void tf_layout_free(tf_layout* layout);

/* ---- verification ------------------------------------------------------ */

/* Certifies the layout against a mesh rebuilt from the heightfield alone:
 * weak simplicity (no interior overlap, exact), exact area conservation,
 * spanning fold tree, and the refold identity. Failures carry witnesses in
 * the report JSON. */
TF_API tf_status tf_verify(const tf_layout* layout, const tf_heightfield* hf, tf_report** out);

TF_API tf_status tf_report_all_passed(const tf_report* report, int* out);
TF_API tf_status tf_report_to_json(const tf_report* report, char** out_text);
TF_API void tf_report_free(tf_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TERRAFOLD_H */
