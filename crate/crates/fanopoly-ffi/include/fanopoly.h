#ifndef FANOPOLY_H
#define FANOPOLY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result of a call.
 */
typedef enum FpStatus {
  FP_STATUS_OK = 0,
  FP_STATUS_NULL_POINTER = 1,
  FP_STATUS_INVALID_UTF8 = 2,
  FP_STATUS_PARSE = 3,
  FP_STATUS_NOT_FANO = 4,
  FP_STATUS_NO_MUTATION = 5,
  FP_STATUS_BAD_INPUT = 6,
  FP_STATUS_OVERFLOW = 7,
  FP_STATUS_CROSS_CHECK = 8,
  FP_STATUS_INTERNAL = 9,
} FpStatus;

/*
 Opaque polygon handle.
 */
typedef struct FpPolygon FpPolygon;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parse a polygon from text (JSON `[[x,y],...]` or `x,y;x,y;...`).

 # Safety
 `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum FpStatus fp_polygon_parse(const char *text, struct FpPolygon **out);

/*
 Release a handle. Null is ignored.

 # Safety
 `p` must come from this library and not be used afterwards.
 */
void fp_polygon_free(struct FpPolygon *p);

/*
 Number of vertices.

 # Safety
 `p` must be a live handle and `out` a valid pointer.
 */
enum FpStatus fp_polygon_vertex_count(const struct FpPolygon *p, size_t *out);

/*
 Copy vertex `i` into `x`, `y`. Fails with `FP_STATUS_OVERFLOW` when a
 coordinate does not fit in 64 bits.

 # Safety
 `p` must be a live handle; `x` and `y` valid pointers.
 */
enum FpStatus fp_polygon_vertex(const struct FpPolygon *p, size_t i, int64_t *x, int64_t *y);

/*
 Anticanonical degree as a reduced fraction `num/den`.

 # Safety
 `p` must be a live handle; `num` and `den` valid pointers.
 */
enum FpStatus fp_polygon_degree(const struct FpPolygon *p, int64_t *num, int64_t *den);

/*
 Whether no single mutation lowers the boundary point count.

 # Safety
 `p` must be a live handle and `out` a valid pointer.
 */
enum FpStatus fp_polygon_is_minimal(const struct FpPolygon *p, bool *out);

/*
 Mutate at edge `edge` (edges are numbered from vertex `edge` to the next).
 The result is in canonical form and must be freed by the caller.

 # Safety
 `p` must be a live handle and `out` a valid pointer.
 */
enum FpStatus fp_polygon_mutate(const struct FpPolygon *p, size_t edge, struct FpPolygon **out);

/*
 Full analysis as a JSON string (content, degree, Hilbert coefficients up
 to `hilbert_degree`, divisors, minimality, quiver). Free with `fp_string_free`.

 # Safety
 `p` must be a live handle and `out` a valid pointer.
 */
enum FpStatus fp_polygon_analyze_json(const struct FpPolygon *p,
                                      uint32_t hilbert_degree,
                                      char **out);

/*
 Release a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not be used afterwards.
 */
void fp_string_free(char *s);

/*
 Message for the last failed call on this thread. Valid until the next
 failing call on the same thread; empty if nothing failed yet.
 */
const char *fp_last_error(void);

/*
 Static name of a status code.
 */
const char *fp_status_name(enum FpStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FANOPOLY_H */
