#ifndef NICHOLS_H
#define NICHOLS_H

/* Generated by cbindgen from nichols-capi; edit the Rust source, not this file. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Success.
#define NICHOLS_OK 0

// The computation itself failed (unbounded case, internal mismatch, ...).
#define NICHOLS_ERR_RUNTIME 1

// The input could not be parsed or does not fit the requested operation.
#define NICHOLS_ERR_INVALID 2

// A configured degree bound refused the computation.
#define NICHOLS_ERR_DEGREE 3

// A parsed braiding description.  Opaque; create with
// [`nichols_braiding_parse`], release with [`nichols_braiding_free`].
typedef struct NicholsBraiding NicholsBraiding;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message from this thread's most recent failing call, as a
// NUL-terminated string.  Never null; empty before the first failure.
// Valid until the next failing call on the same thread.
const char *nichols_last_error(void);

// Parse a JSON braiding description into a fresh handle.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must point to writable
// pointer storage.  On success `*out` owns the handle.
int32_t nichols_braiding_parse(const char *json, struct NicholsBraiding **out);

// Release a handle returned by [`nichols_braiding_parse`].  Null is a
// no-op; anything else must be released exactly once.
//
// # Safety
// `handle` must be null or a pointer returned by [`nichols_braiding_parse`]
// that has not been freed yet.
void nichols_braiding_free(struct NicholsBraiding *handle);

// Release a string returned through an `out` parameter.  Null is a no-op.
//
// # Safety
// `s` must be null or a string pointer produced by this library that has
// not been freed yet.
void nichols_string_free(char *s);

// The dimension of the underlying braided vector space.
//
// # Safety
// `handle` must be a live handle; `out` must point to writable storage.
int32_t nichols_braiding_dim(const struct NicholsBraiding *handle, uint32_t *out);

// Graded dimensions up to `kmax`, as JSON
// `{dims, terminated, total, factorization}`.
//
// # Safety
// `handle` must be a live handle; `out` must point to writable pointer
// storage.
int32_t nichols_hilbert_json(const struct NicholsBraiding *handle,
                             uint32_t kmax,
                             uint32_t block_cap,
                             char **out);

// Kernel relations in one degree, as JSON `{degree, relations: [...]}` with
// coefficient strings.
//
// # Safety
// `handle` must be a live handle; `out` must point to writable pointer
// storage.
int32_t nichols_relations_json(const struct NicholsBraiding *handle,
                               uint32_t degree,
                               uint32_t block_cap,
                               char **out);

// Cartan matrix of a diagonal braiding, as JSON `{cartan: [[...]]}`.
//
// # Safety
// `handle` must be a live handle; `out` must point to writable pointer
// storage.
int32_t nichols_cartan_json(const struct NicholsBraiding *handle, char **out);

// Reflection closure of a diagonal braiding, as JSON (objects, arrows,
// status, and the three type counts).
//
// # Safety
// `handle` must be a live handle; `out` must point to writable pointer
// storage.
int32_t nichols_weylgroupoid_json(const struct NicholsBraiding *handle, char **out);

// Reflection closure rendered in graphviz dot.
//
// # Safety
// `handle` must be a live handle; `out` must point to writable pointer
// storage.
int32_t nichols_weylgroupoid_dot(const struct NicholsBraiding *handle, char **out);

// Root system over the reflection closure, as JSON with a `violations`
// array from the built-in consistency re-check.
//
// # Safety
// `handle` must be a live handle; `out` must point to writable pointer
// storage.
int32_t nichols_roots_json(const struct NicholsBraiding *handle, char **out);

// Admissible rank-2 sequence classes of the given length, as a JSON array.
//
// # Safety
// `out` must point to writable pointer storage.
int32_t nichols_rank2_classes_json(uint32_t length, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NICHOLS_H */
