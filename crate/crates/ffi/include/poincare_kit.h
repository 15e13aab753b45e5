#ifndef POINCARE_KIT_H
#define POINCARE_KIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PkStatus {
  PK_STATUS_OK = 0,
  PK_STATUS_NULL_POINTER = 1,
  PK_STATUS_NON_FINITE = 2,
  PK_STATUS_HERMITICITY = 3,
  PK_STATUS_DETERMINANT_DRIFT = 4,
  PK_STATUS_NON_POSITIVE_ENERGY = 5,
  PK_STATUS_SPACELIKE_UNSUPPORTED = 6,
  PK_STATUS_KIND_MISMATCH = 7,
  PK_STATUS_INVALID_ARGUMENT = 8,
  PK_STATUS_INVALID_COHERENCY = 9,
  PK_STATUS_ZERO_MOMENTUM = 10,
  PK_STATUS_OUT_OF_RANGE = 11,
  PK_STATUS_PANIC = 99,
} PkStatus;

typedef enum PkGenerator {
  PK_GENERATOR_PHASE_Z = 0,
  PK_GENERATOR_ROT_Y = 1,
  PK_GENERATOR_BOOST_Z = 2,
} PkGenerator;

typedef enum PkMassTag {
  PK_MASS_TAG_MASSIVE = 0,
  PK_MASS_TAG_MASSLESS = 1,
  PK_MASS_TAG_SPACELIKE = 2,
} PkMassTag;

typedef enum PkLittleKind {
  PK_LITTLE_KIND_Z_PHASE = 0,
  PK_LITTLE_KIND_Y_ROTATION = 1,
  PK_LITTLE_KIND_GAUGE_TRIANGULAR = 2,
} PkLittleKind;

/**
 * Opaque coherency matrix.
 */
typedef struct PkCoherency PkCoherency;

/**
 * Opaque SL(2,C) element.
 */
typedef struct PkGroup PkGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *pk_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *pk_version(void);

/**
 * Creates a generator `Z(φ)`, `R(θ)` or `B(μ)`.
 *
 * # Safety
 * `out_group` must be writable.
 */
enum PkStatus pk_group_generator(enum PkGenerator kind, double param, struct PkGroup **out_group);

/**
 * Creates an element from an explicit matrix; `det` must be 1.
 *
 * # Safety
 * `re` and `im` must point to 4 doubles each; `out_group` must be writable.
 */
enum PkStatus pk_group_from_matrix(const double *re, const double *im, struct PkGroup **out_group);

/**
 * `out = a · b` (b acts first).
 *
 * # Safety
 * `a` and `b` must be live handles; `out_group` must be writable.
 */
enum PkStatus pk_group_compose(const struct PkGroup *a,
                               const struct PkGroup *b,
                               struct PkGroup **out_group);

/**
 * # Safety
 * `g` must be a live handle; `out_group` must be writable.
 */
enum PkStatus pk_group_inverse(const struct PkGroup *g, struct PkGroup **out_group);

/**
 * Applies `X → G X G†` to a four-vector.
 *
 * # Safety
 * `g` must be a live handle; `v` and `out_v` must point to 4 doubles.
 */
enum PkStatus pk_group_act(const struct PkGroup *g, const double *v, double *out_v);

/**
 * The induced 4×4 Lorentz matrix, row-major.
 *
 * # Safety
 * `g` must be a live handle; `out_m` must point to 16 doubles.
 */
enum PkStatus pk_group_covering_map(const struct PkGroup *g, double *out_m);

/**
 * # Safety
 * `g` must be a live handle; `re` and `im` must point to 4 doubles each.
 */
enum PkStatus pk_group_matrix(const struct PkGroup *g, double *re, double *im);

/**
 * Frees a handle. Null is ignored.
 *
 * # Safety
 * `g` must be null or a handle not yet freed.
 */
void pk_group_free(struct PkGroup *g);

/**
 * # Safety
 * `p` must point to 4 doubles; `tag` and `mass_squared` must be writable.
 */
enum PkStatus pk_classify(const double *p, enum PkMassTag *tag, double *mass_squared);

/**
 * Wigner residual `‖W X_P W† − X_P‖_max` of the little-group element of the
 * given kind, carried from the standard form to `p`.
 *
 * # Safety
 * `p` must point to 4 doubles; `residual` must be writable.
 */
enum PkStatus pk_little_group_residual(const double *p,
                                       enum PkLittleKind kind,
                                       double param,
                                       double *residual);

/**
 * Closed-form coherency matrix `a²[[1, e^{−σ−iφ}], [e^{−σ+iφ}, 1]]`.
 *
 * # Safety
 * `out_c` must be writable.
 */
enum PkStatus pk_coherency_closed_form(double a,
                                       double phi,
                                       double sigma,
                                       struct PkCoherency **out_c);

/**
 * Coherency matrix of the field after the Jones map `ψ → Gψ`.
 *
 * # Safety
 * `g` and `c` must be live handles; `out_c` must be writable.
 */
enum PkStatus pk_coherency_transform(const struct PkGroup *g,
                                     const struct PkCoherency *c,
                                     struct PkCoherency **out_c);

/**
 * Stokes parameters in `(S0, S3, S1, S2)` order.
 *
 * # Safety
 * `c` must be a live handle; `out_s` must point to 4 doubles.
 */
enum PkStatus pk_coherency_stokes(const struct PkCoherency *c, double *out_s);

/**
 * # Safety
 * `c` must be a live handle; `re` and `im` must point to 4 doubles each.
 */
enum PkStatus pk_coherency_matrix(const struct PkCoherency *c, double *re, double *im);

/**
 * Frees a handle. Null is ignored.
 *
 * # Safety
 * `c` must be null or a handle not yet freed.
 */
void pk_coherency_free(struct PkCoherency *c);

/**
 * Energies `E1 = √(p² + m1²)`, `E2 = √(p² + m2²)` at mass angle `χ`.
 *
 * # Safety
 * `e1` and `e2` must be writable.
 */
enum PkStatus pk_desitter_energies(double m, double chi, double p, double *e1, double *e2);

/**
 * # Safety
 * `sigma` must be writable.
 */
enum PkStatus pk_sigma_from_chi(double m, double chi, double p, double *sigma);

/**
 * Returns `PK_STATUS_OUT_OF_RANGE` when `σ` exceeds the bound reached at
 * `χ = π/2`.
 *
 * # Safety
 * `chi` must be writable.
 */
enum PkStatus pk_chi_from_sigma(double m, double p, double sigma, double *chi);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POINCARE_KIT_H */
