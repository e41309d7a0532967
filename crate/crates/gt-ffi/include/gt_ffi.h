#ifndef GT_FFI_H
#define GT_FFI_H

/* Generated with cbindgen:0.27.0 */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GtOperator {
  GtOperator_Interior = 0,
  GtOperator_Closure = 1,
  GtOperator_DerivedSet = 2,
} GtOperator;

/**
 * Status codes returned by every fallible call.
 */
typedef enum GtStatus {
  GtStatus_Ok = 0,
  /**
   * Input was not valid JSON for the expected document schema.
   */
  GtStatus_ParseError = 1,
  /**
   * The document parsed but violates the space or mapping axioms.
   */
  GtStatus_InvalidInput = 2,
  /**
   * A null pointer or out-of-range argument was passed.
   */
  GtStatus_BadArgument = 3,
} GtStatus;

/**
 * Opaque validated surjection.
 */
typedef struct GtMappingHandle GtMappingHandle;

/**
 * Opaque validated space.
 */
typedef struct GtSpaceHandle GtSpaceHandle;

/**
 * Flat classification result: the definition-mode class flags plus the
 * hereditary variants.
 */
typedef struct GtClassification {
  bool g_continuous;
  bool open;
  bool closed;
  bool pseudo_open;
  bool quotient;
  bool hereditarily_open;
  bool hereditarily_closed;
  bool hereditarily_pseudo_open;
  bool hereditarily_quotient;
} GtClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse and validate a space document. On success writes a new handle to
 * `out`; on failure optionally writes an error message to `err` (release
 * with `gt_string_free`).
 *
 * # Safety
 * `json` must be a valid NUL-terminated UTF-8 string and `out` a valid
 * pointer; `err` may be null.
 */
enum GtStatus gt_space_parse(const char *json, struct GtSpaceHandle **out, char **err);

/**
 * # Safety
 * `handle` must come from `gt_space_parse` and not already be freed.
 */
void gt_space_free(struct GtSpaceHandle *handle);

/**
 * Number of points in the ground set; 0 for a null handle.
 *
 * # Safety
 * `handle` must be a live space handle or null.
 */
size_t gt_space_points(const struct GtSpaceHandle *handle);

/**
 * # Safety
 * `handle` must be a live space handle or null.
 */
bool gt_space_is_topology(const struct GtSpaceHandle *handle);

/**
 * Apply an operator to the subset encoded by `bits` and write the result
 * pattern to `out`.
 *
 * # Safety
 * `handle` must be a live space handle; `out` must be a valid pointer.
 */
enum GtStatus gt_space_operator(const struct GtSpaceHandle *handle,
                                enum GtOperator op,
                                uint32_t bits,
                                uint32_t *out);

/**
 * Intersection of all opens containing the point.
 *
 * # Safety
 * `handle` must be a live space handle; `out` must be a valid pointer.
 */
enum GtStatus gt_space_neighborhood_core(const struct GtSpaceHandle *handle,
                                         size_t point,
                                         uint32_t *out);

/**
 * Canonical JSON echo of the space (release with `gt_string_free`).
 *
 * # Safety
 * `handle` must be a live space handle; `out` must be a valid pointer.
 */
enum GtStatus gt_space_to_json(const struct GtSpaceHandle *handle, char **out);

/**
 * Parse and validate a mapping document (inline spaces only).
 *
 * # Safety
 * As for `gt_space_parse`.
 */
enum GtStatus gt_mapping_parse(const char *json, struct GtMappingHandle **out, char **err);

/**
 * # Safety
 * `handle` must come from `gt_mapping_parse` and not already be freed.
 */
void gt_mapping_free(struct GtMappingHandle *handle);

/**
 * Classify the mapping by definition-mode predicates and hereditary flags.
 *
 * # Safety
 * `handle` must be a live mapping handle; `out` must be a valid pointer.
 */
enum GtStatus gt_mapping_classify(const struct GtMappingHandle *handle,
                                  struct GtClassification *out);

/**
 * Image (forward) or preimage (inverse) of a subset under the mapping.
 *
 * # Safety
 * `handle` must be a live mapping handle; `out` must be a valid pointer.
 */
enum GtStatus gt_mapping_image(const struct GtMappingHandle *handle,
                               uint32_t bits,
                               bool inverse,
                               uint32_t *out);

/**
 * Release a string allocated by this library.
 *
 * # Safety
 * `s` must have been returned by a `gt_*` function and not already freed.
 */
void gt_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GT_FFI_H */
