#ifndef APTRI_H
#define APTRI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum AptriStatus {
  APTRI_STATUS_OK = 0,
  APTRI_STATUS_NULL_POINTER = 1,
  APTRI_STATUS_INVALID_ARGUMENT = 2,
  APTRI_STATUS_NON_POSITIVE = 3,
  APTRI_STATUS_TRIANGLE_INEQUALITY = 4,
  APTRI_STATUS_RHO_OUT_OF_RANGE = 5,
  APTRI_STATUS_NOT_COPRIME = 6,
  APTRI_STATUS_RATIO_CONDITION = 7,
  APTRI_STATUS_PARITY = 8,
  APTRI_STATUS_OVERFLOW = 9,
  APTRI_STATUS_INDEX_OUT_OF_RANGE = 10,
  APTRI_STATUS_INTERNAL = 11,
} AptriStatus;

/**
 * Opaque list of triangles.
 */
typedef struct AptriTriangleList AptriTriangleList;

/**
 * An integer triangle with a 60° middle angle and its generating parameters.
 */
typedef struct AptriTriangle {
  uint64_t alpha;
  uint64_t beta;
  uint64_t gamma;
  uint64_t d;
  uint64_t kappa;
  uint64_t lambda;
  /**
   * ρ = (α + β + γ) / β in lowest terms.
   */
  uint64_t rho_num;
  uint64_t rho_den;
  /**
   * sin A = (sin_a_num / sin_a_den)·√3.
   */
  uint64_t sin_a_num;
  uint64_t sin_a_den;
  double a_deg;
  double phi_deg;
  double gamma_deg;
} AptriTriangle;

/**
 * A triangle built from β and ρ. Sides are rounded to `double`.
 */
typedef struct AptriConstruction {
  double alpha;
  double beta;
  double gamma;
  /**
   * True when the sides are exact rationals of the inputs.
   */
  bool exact;
  double a_deg;
  double b_deg;
  double gamma_deg;
} AptriConstruction;

/**
 * Both sides of one equivalence checked on a triangle.
 */
typedef struct AptriEquivalence {
  bool lhs_holds;
  bool rhs_holds;
  double lhs_residual;
  double rhs_residual;
} AptriEquivalence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the triangle for parameters `(d, kappa, lambda)`.
 *
 * # Safety
 * Every pointer argument must be null or valid for writes of its type.
 */
enum AptriStatus aptri_triangle_from_params(uint64_t d,
                                            uint64_t kappa,
                                            uint64_t lambda,
                                            struct AptriTriangle *result);

/**
 * Sets `*holds` to whether the integer triangle `(a, b, c)` has a 60° angle.
 *
 * # Safety
 * Every pointer argument must be null or valid for writes of its type.
 */
enum AptriStatus aptri_has_sixty_degree_angle(uint64_t a, uint64_t b, uint64_t c, bool *holds);

/**
 * Returns every triangle with largest side at most `max_gamma`, one row per
 * side triple, ordered by `(gamma, beta, alpha)`.
 *
 * # Safety
 * Every pointer argument must be null or valid for writes of its type.
 */
enum AptriStatus aptri_enumerate(uint64_t max_gamma, struct AptriTriangleList **list);

/**
 * Returns the twelve reference triangles.
 *
 * # Safety
 * Every pointer argument must be null or valid for writes of its type.
 */
enum AptriStatus aptri_table(struct AptriTriangleList **list);

/**
 * Number of triangles in `list`, or 0 for null.
 *
 * # Safety
 * `list` must be null or a live handle returned by this library.
 */
size_t aptri_list_len(const struct AptriTriangleList *list);

/**
 * Copies entry `index` of `list` into `*result`.
 *
 * # Safety
 * `list` must be null or a live handle returned by this library, and
 * `result` null or valid for writes.
 */
enum AptriStatus aptri_list_get(const struct AptriTriangleList *list,
                                size_t index,
                                struct AptriTriangle *result);

/**
 * Releases a list. Null is ignored.
 *
 * # Safety
 * `list` must be null or a handle returned by this library that has not
 * been freed yet.
 */
void aptri_list_free(struct AptriTriangleList *list);

/**
 * Builds the triangle with middle side `beta` and shape ratio `rho`,
 * where 2 < rho <= 3.
 *
 * # Safety
 * Every pointer argument must be null or valid for writes of its type.
 */
enum AptriStatus aptri_construct(double beta, double rho, struct AptriConstruction *result);

/**
 * Whether `x² + 3y² = z²`.
 */
bool aptri_is_dio_solution(uint64_t x, uint64_t y, uint64_t z);

/**
 * Writes the solution of `x² + 3y² = z²` generated by `(d, kappa, lambda)`.
 *
 * # Safety
 * Every pointer argument must be null or valid for writes of its type.
 */
enum AptriStatus aptri_dio_from_params(uint64_t d,
                                       uint64_t kappa,
                                       uint64_t lambda,
                                       uint64_t *x,
                                       uint64_t *y,
                                       uint64_t *z);

/**
 * Checks equivalence number `id` (1 to 7) on the triangle with sides
 * `a`, `b`, `c` in any order.
 *
 * # Safety
 * Every pointer argument must be null or valid for writes of its type.
 */
enum AptriStatus aptri_check_equivalence(uint32_t id,
                                         double a,
                                         double b,
                                         double c,
                                         double tolerance,
                                         struct AptriEquivalence *result);

/**
 * Shape ratio (perimeter over middle side) of a triangle with sides in
 * any order.
 *
 * # Safety
 * Every pointer argument must be null or valid for writes of its type.
 */
enum AptriStatus aptri_rho_of(double a, double b, double c, double *rho);

/**
 * Static, NUL-terminated description of `status`.
 */
const char *aptri_status_message(enum AptriStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* APTRI_H */
