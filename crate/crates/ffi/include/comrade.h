#ifndef COMRADE_H
#define COMRADE_H

#include <stddef.h>
#include <stdint.h>

// Field the algorithms run in.
typedef enum ComradeMode {
  COMRADE_MODE_EXACT = 0,
  COMRADE_MODE_SYMBOLIC = 1,
  COMRADE_MODE_FLOAT = 2,
} ComradeMode;

// Status code of every fallible call.
typedef enum ComradeStatus {
  COMRADE_STATUS_OK = 0,
  COMRADE_STATUS_NULL_POINTER = 1,
  COMRADE_STATUS_INVALID_UTF8 = 2,
  COMRADE_STATUS_PARSE = 3,
  COMRADE_STATUS_SINGULAR = 4,
  COMRADE_STATUS_ZERO_PIVOT = 5,
  COMRADE_STATUS_POLE = 6,
  COMRADE_STATUS_OUT_OF_RANGE = 7,
  COMRADE_STATUS_INTERNAL = 8,
} ComradeStatus;

// Opaque comrade matrix.
typedef struct ComradeHandle ComradeHandle;

// Opaque inverse of a comrade matrix.
typedef struct InverseHandle InverseHandle;

// Message of the last failed call on this thread, or NULL if none.
// Valid until the next failing call on the same thread; do not free.
const char *comrade_last_error_message(void);

// Builds an order-`n` matrix from rational strings ("p/q" or "p").
// `beta` has `n` entries, `alpha` and `gamma` (γ2…γn) `n - 1`, `a` (a3…an) `n - 2`.
//
// # Safety
// Every array must hold the stated number of valid NUL-terminated strings and
// `out` must be a valid pointer.
enum ComradeStatus comrade_matrix_new(size_t n,
                                      const char *const *beta,
                                      const char *const *alpha,
                                      const char *const *gamma,
                                      const char *const *a,
                                      struct ComradeHandle **out);

// Parses a matrix file's JSON text.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum ComradeStatus comrade_matrix_from_json(const char *json, struct ComradeHandle **out);

// # Safety
// `m` must be NULL or a handle from this library not yet freed.
void comrade_matrix_free(struct ComradeHandle *m);

// Order of the matrix, 0 for NULL.
//
// # Safety
// `m` must be NULL or a live handle.
size_t comrade_matrix_order(const struct ComradeHandle *m);

// Determinant as a string: "p/q" in exact and symbolic mode, a decimal in float mode.
//
// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum ComradeStatus comrade_det(const struct ComradeHandle *m, enum ComradeMode mode, char **out);

// Determinant rounded to the nearest double.
//
// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum ComradeStatus comrade_det_f64(const struct ComradeHandle *m,
                                   enum ComradeMode mode,
                                   double *out);

// Inverts the matrix.
//
// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum ComradeStatus comrade_invert(const struct ComradeHandle *m,
                                  enum ComradeMode mode,
                                  struct InverseHandle **out);

// # Safety
// `inv` must be NULL or a handle from this library not yet freed.
void comrade_inverse_free(struct InverseHandle *inv);

// Order of the inverse, 0 for NULL.
//
// # Safety
// `inv` must be NULL or a live handle.
size_t comrade_inverse_order(const struct InverseHandle *inv);

// Entry `(i, j)`, 0-based, as a string.
//
// # Safety
// `inv` must be a live handle and `out` a valid pointer.
enum ComradeStatus comrade_inverse_entry(const struct InverseHandle *inv,
                                         size_t i,
                                         size_t j,
                                         char **out);

// Entry `(i, j)`, 0-based, rounded to the nearest double.
//
// # Safety
// `inv` must be a live handle and `out` a valid pointer.
enum ComradeStatus comrade_inverse_entry_f64(const struct InverseHandle *inv,
                                             size_t i,
                                             size_t j,
                                             double *out);

// Determinant carried by an inverse, as a string.
//
// # Safety
// `inv` must be a live handle and `out` a valid pointer.
enum ComradeStatus comrade_inverse_det(const struct InverseHandle *inv, char **out);

// Releases a string returned by this library.
//
// # Safety
// `s` must be NULL or a string from this library not yet freed.
void comrade_string_free(char *s);

#endif  /* COMRADE_H */
