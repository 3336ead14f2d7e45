#ifndef SIERPINSKI_H
#define SIERPINSKI_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SierpFamily {
  SIERP_FAMILY_NNN = 0,
  SIERP_FAMILY_FNN = 1,
  SIERP_FAMILY_FFN = 2,
  SIERP_FAMILY_FFF = 3,
} SierpFamily;

typedef enum SierpStatus {
  SIERP_STATUS_OK = 0,
  SIERP_STATUS_NULL_POINTER = 1,
  SIERP_STATUS_INVALID_PARAMS = 2,
  SIERP_STATUS_DEGENERATE_TRIANGLE = 3,
  SIERP_STATUS_FAMILY_DOMAIN_VIOLATION = 4,
  SIERP_STATUS_SINGULAR_MAP = 5,
  SIERP_STATUS_CONSISTENCY_FAILURE = 6,
  SIERP_STATUS_INVALID_RATIO = 7,
  SIERP_STATUS_BRACKET_FAILURE = 8,
  SIERP_STATUS_NO_CONVERGENCE = 9,
  SIERP_STATUS_DOMAIN_EDGE = 10,
  SIERP_STATUS_DEPTH_CAP = 11,
  SIERP_STATUS_EMPTY_SET = 12,
  SIERP_STATUS_BAD_VIEWPORT = 13,
  SIERP_STATUS_WORD_LENGTH_MISMATCH = 14,
  SIERP_STATUS_INVALID_WORD = 15,
  SIERP_STATUS_UNSUPPORTED = 16,
  SIERP_STATUS_PARSE = 17,
  SIERP_STATUS_IO = 18,
  SIERP_STATUS_BUFFER_TOO_SMALL = 19,
  SIERP_STATUS_OUT_OF_RANGE = 20,
  SIERP_STATUS_PANIC = 99,
} SierpStatus;

typedef struct SierpCover SierpCover;

typedef struct SierpIfs SierpIfs;

typedef struct SierpTiling SierpTiling;

/**
 * `x' = m11·x + m12·y + tx`, `y' = m21·x + m22·y + ty`.
 */
typedef struct SierpAffine {
  double m11;
  double m12;
  double m21;
  double m22;
  double tx;
  double ty;
} SierpAffine;

typedef struct SierpPoint {
  double x;
  double y;
} SierpPoint;

typedef struct SierpTile {
  struct SierpAffine transform;
  double scale;
  struct SierpPoint outline[3];
} SierpTile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *sierp_last_error_message(void);

/**
 * # Safety
 * `out_ifs` must be a valid pointer to writable storage for one pointer.
 */
enum SierpStatus sierp_ifs_new(enum SierpFamily family,
                               double a,
                               double b,
                               struct SierpIfs **out_ifs);

/**
 * # Safety
 * `ifs` must come from `sierp_ifs_new` or `sierp_ifs_from_text`, or be NULL.
 */
void sierp_ifs_free(struct SierpIfs *ifs);

/**
 * Writes `(α, β, γ)` to `out_ratios[0..3]`.
 *
 * # Safety
 * `out_ratios` must point to three writable doubles.
 */
enum SierpStatus sierp_ifs_ratios(const struct SierpIfs *ifs, double *out_ratios);

/**
 * Map `index` (0 = f_A, 1 = f_B, 2 = f_C).
 *
 * # Safety
 * Pointers must be valid.
 */
enum SierpStatus sierp_ifs_map(const struct SierpIfs *ifs,
                               size_t index,
                               struct SierpAffine *out_map);

/**
 * Vertices `A, B, C`.
 *
 * # Safety
 * `out_points` must point to three writable `SierpPoint`s.
 */
enum SierpStatus sierp_ifs_vertices(const struct SierpIfs *ifs, struct SierpPoint *out_points);

/**
 * Touching points `M` (on AC), `N` (on AB) and `O` (on BC).
 *
 * # Safety
 * `out_points` must point to three writable `SierpPoint`s.
 */
enum SierpStatus sierp_ifs_overlap_points(const struct SierpIfs *ifs,
                                          struct SierpPoint *out_points);

/**
 * Runs the full construction invariant check.
 *
 * # Safety
 * `ifs` must be valid.
 */
enum SierpStatus sierp_ifs_check(const struct SierpIfs *ifs);

/**
 * Text serialization; release the string with `sierp_string_free`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SierpStatus sierp_ifs_to_text(const struct SierpIfs *ifs, char **out_text);

/**
 * Parses text from `sierp_ifs_to_text` and rebuilds the system, failing
 * with `CONSISTENCY_FAILURE` if stored maps disagree with a fresh build.
 *
 * # Safety
 * `text` must be NUL-terminated; `out_ifs` must be valid.
 */
enum SierpStatus sierp_ifs_from_text(const char *text, struct SierpIfs **out_ifs);

/**
 * # Safety
 * `s` must come from this library, or be NULL.
 */
void sierp_string_free(char *s);

/**
 * Solves `Σ ratios[i]^d = 1`.
 *
 * # Safety
 * `ratios` must point to `len` doubles.
 */
enum SierpStatus sierp_moran_dimension(const double *ratios, size_t len, double tol, double *out_d);

/**
 * Dimension of `family` at `(a, b)`; `out_residual` may be NULL.
 *
 * # Safety
 * `out_d` must be valid.
 */
enum SierpStatus sierp_dimension_of(enum SierpFamily family,
                                    double a,
                                    double b,
                                    double tol,
                                    double *out_d,
                                    double *out_residual);

/**
 * Writes `n` chaos-game points into `out_points`, which must hold at
 * least `capacity` points.
 *
 * # Safety
 * `out_points` must point to `capacity` writable `SierpPoint`s.
 */
enum SierpStatus sierp_chaos_game(const struct SierpIfs *ifs,
                                  size_t n,
                                  uint64_t seed,
                                  size_t burn_in,
                                  bool uniform,
                                  struct SierpPoint *out_points,
                                  size_t capacity);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SierpStatus sierp_cover_new(const struct SierpIfs *ifs,
                                 size_t depth,
                                 struct SierpCover **out_cover);

/**
 * Number of triangles, or 0 for NULL.
 *
 * # Safety
 * `cover` must be valid or NULL.
 */
size_t sierp_cover_len(const struct SierpCover *cover);

/**
 * # Safety
 * `out_points` must point to three writable `SierpPoint`s.
 */
enum SierpStatus sierp_cover_triangle(const struct SierpCover *cover,
                                      size_t index,
                                      struct SierpPoint *out_points);

/**
 * # Safety
 * `cover` must come from `sierp_cover_new`, or be NULL.
 */
void sierp_cover_free(struct SierpCover *cover);

/**
 * Builds `T_{θ,k}`; `theta` uses the `3(12)` notation.
 *
 * # Safety
 * `theta` must be NUL-terminated; other pointers valid.
 */
enum SierpStatus sierp_tiling_new(const struct SierpIfs *ifs,
                                  const char *theta,
                                  size_t k,
                                  struct SierpTiling **out_tiling);

/**
 * # Safety
 * `tiling` must be valid or NULL.
 */
size_t sierp_tiling_len(const struct SierpTiling *tiling);

/**
 * Tile `index` in lexicographic word order.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SierpStatus sierp_tiling_tile(const struct SierpTiling *tiling,
                                   size_t index,
                                   struct SierpTile *out_tile);

/**
 * Tiling as an SVG document; release with `sierp_string_free`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SierpStatus sierp_tiling_svg(const struct SierpTiling *tiling, char **out_text);

/**
 * # Safety
 * `tiling` must come from `sierp_tiling_new`, or be NULL.
 */
void sierp_tiling_free(struct SierpTiling *tiling);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIERPINSKI_H */
