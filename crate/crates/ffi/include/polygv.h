#ifndef POLYGV_H
#define POLYGV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Return codes. Zero is success.
typedef enum PolygvStatus {
  POLYGV_STATUS_OK = 0,
  POLYGV_STATUS_NULL_POINTER = 1,
  POLYGV_STATUS_INVALID_PARAMETER = 2,
  POLYGV_STATUS_PARSE = 3,
  POLYGV_STATUS_TOO_MANY_VERTICES = 4,
  POLYGV_STATUS_INVALID_UTF8 = 5,
  POLYGV_STATUS_COMPLEX = 6,
  POLYGV_STATUS_PANIC = 7,
} PolygvStatus;

// Opaque handle to a simplicial complex.
typedef struct PolygvComplex PolygvComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Boundary of the cyclic polytope `C(dim, m)` on vertices `c1..cm`.
enum PolygvStatus polygv_cyclic(size_t dim, size_t m, struct PolygvComplex **out);

// Boundary of the McMullen-Walkup polytope `MW(k, d, n)`.
enum PolygvStatus polygv_mw(size_t k, size_t d, size_t n, struct PolygvComplex **out);

// Boundary of the diamond `D_a(k, d, n)`.
enum PolygvStatus polygv_diamond(size_t k,
                                 size_t d,
                                 size_t n,
                                 size_t a,
                                 struct PolygvComplex **out);

// Parses a complex from its JSON form.
//
// # Safety
// `json` must be null or a valid nul-terminated string.
enum PolygvStatus polygv_complex_from_json(const char *json, struct PolygvComplex **out);

// Releases a handle. Null is accepted and ignored.
//
// # Safety
// `complex` must be null or a handle from this library not yet freed.
void polygv_complex_free(struct PolygvComplex *complex);

// The complex as JSON: `{"dim", "vertices", "facets"}`.
//
// # Safety
// `complex` must be a live handle; `out` must be writable.
enum PolygvStatus polygv_complex_to_json(const struct PolygvComplex *complex, char **out);

// f-vector as a JSON array `[f_-1, f_0, ...]`.
//
// # Safety
// `complex` must be a live handle; `out` must be writable.
enum PolygvStatus polygv_complex_f_vector(const struct PolygvComplex *complex, char **out);

// h-vector as a JSON array.
//
// # Safety
// `complex` must be a live handle; `out` must be writable.
enum PolygvStatus polygv_complex_h_vector(const struct PolygvComplex *complex, char **out);

// g-vector as a JSON array.
//
// # Safety
// `complex` must be a live handle; `out` must be writable.
enum PolygvStatus polygv_complex_g_vector(const struct PolygvComplex *complex, char **out);

// Number of facets.
//
// # Safety
// `complex` must be a live handle; `out` must be writable.
enum PolygvStatus polygv_complex_num_facets(const struct PolygvComplex *complex, size_t *out);

// Long cubical g-vector of `Q(k, d, n)` as a JSON array.
//
// # Safety
// `out` must be writable.
enum PolygvStatus polygv_gc_q(size_t k, size_t d, size_t n, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void polygv_string_free(char *s);

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next call into this library on the same thread.
const char *polygv_last_error(void);

// Library version, static storage.
const char *polygv_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYGV_H */
