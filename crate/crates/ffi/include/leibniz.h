#ifndef LEIBNIZ_H
#define LEIBNIZ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LbStatus {
  LB_STATUS_OK = 0,
  LB_STATUS_NULL_POINTER = 1,
  LB_STATUS_INVALID_UTF8 = 2,
  LB_STATUS_PARSE = 3,
  LB_STATUS_NOT_LEIBNIZ = 4,
  LB_STATUS_DIMENSION_MISMATCH = 5,
  LB_STATUS_NOT_FACTORIZABLE = 6,
  LB_STATUS_MATH = 7,
  LB_STATUS_UNKNOWN_FIXTURE = 8,
  LB_STATUS_PANIC = 9,
} LbStatus;

/**
 * Opaque handle to a Leibniz algebra.
 */
typedef struct LbAlgebra LbAlgebra;

/**
 * Opaque handle to an element of `A ⊗ A`.
 */
typedef struct LbTensor2 LbTensor2;

typedef struct LbClassification {
  bool is_bialgebra;
  bool quasi_triangular;
  bool triangular;
  bool factorizable;
} LbClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an algebra file and checks the Leibniz identity.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` writable.
 */
enum LbStatus lb_algebra_from_json(const char *json, struct LbAlgebra **out);

/**
 * Looks up a registry algebra such as `"e4"` or `"abelian5"`.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` writable.
 */
enum LbStatus lb_algebra_fixture(const char *name, struct LbAlgebra **out);

/**
 * Dimension of the algebra, 0 for a null handle.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
size_t lb_algebra_dim(const struct LbAlgebra *alg);

/**
 * # Safety
 * `alg` must be null or a handle not yet freed.
 */
void lb_algebra_free(struct LbAlgebra *alg);

/**
 * Parses a `tensor2` file.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` writable.
 */
enum LbStatus lb_tensor2_from_json(const char *json, struct LbTensor2 **out);

/**
 * # Safety
 * `r` must be null or a handle not yet freed.
 */
void lb_tensor2_free(struct LbTensor2 *r);

/**
 * Writes whether the left Leibniz identity holds.
 *
 * # Safety
 * `alg` must be a live handle and `holds` writable.
 */
enum LbStatus lb_check_leibniz(const struct LbAlgebra *alg, bool *holds);

/**
 * Writes whether `[[r, r]] = 0`.
 *
 * # Safety
 * Handles must be live and `holds` writable.
 */
enum LbStatus lb_check_clybe(const struct LbAlgebra *alg, const struct LbTensor2 *r, bool *holds);

/**
 * # Safety
 * Handles must be live and `out` writable.
 */
enum LbStatus lb_classify(const struct LbAlgebra *alg,
                          const struct LbTensor2 *r,
                          struct LbClassification *out);

/**
 * Splits `x = x1 - x2` along a factorizable `r`. `coords` is a
 * comma-separated list of rationals; the result is
 * `{"x1": [...], "x2": [...]}` and must be released with [`lb_string_free`].
 *
 * # Safety
 * Handles must be live, `coords` nul-terminated and `out` writable.
 */
enum LbStatus lb_factorize(const struct LbAlgebra *alg,
                           const struct LbTensor2 *r,
                           const char *coords,
                           char **out);

/**
 * Quadratic Rota-Baxter data of weight `lambda` from a factorizable `r`,
 * as `{"omega": [[...]], "beta": [[...]], "weight": "..."}` with
 * row-major matrices. Release with [`lb_string_free`].
 *
 * # Safety
 * Handles must be live, `lambda` nul-terminated and `out` writable.
 */
enum LbStatus lb_quadratic_rb_from_factorizable(const struct LbAlgebra *alg,
                                                const struct LbTensor2 *r,
                                                const char *lambda,
                                                char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void lb_string_free(char *s);

/**
 * Message for the last failed call on this thread, empty after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *lb_last_error_message(void);

const char *lb_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEIBNIZ_H */
