#ifndef ENDOAIP_H
#define ENDOAIP_H

#include <stdbool.h>
#include <stddef.h>

// Result of every fallible call.
typedef enum EndoaipStatus {
  ENDOAIP_STATUS_OK = 0,
  ENDOAIP_STATUS_NULL_POINTER = 1,
  ENDOAIP_STATUS_INVALID_UTF8 = 2,
  ENDOAIP_STATUS_MALFORMED = 3,
  ENDOAIP_STATUS_SIZE_CAP_EXCEEDED = 4,
  ENDOAIP_STATUS_UNKNOWN_PROPERTY = 5,
  ENDOAIP_STATUS_RING_MISMATCH = 6,
  ENDOAIP_STATUS_INTERNAL = 7,
} EndoaipStatus;

// Opaque finite right module.
typedef struct EndoaipModule EndoaipModule;

// Opaque finite ring.
typedef struct EndoaipRing EndoaipRing;

// Size limits; see [`endoaip_default_caps`].
typedef struct EndoaipCaps {
  size_t ring;
  size_t module;
  size_t lattice;
} EndoaipCaps;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The built-in size limits.
struct EndoaipCaps endoaip_default_caps(void);

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on the same thread.
const char *endoaip_last_error(void);

// Library version as a static string.
const char *endoaip_version(void);

// Builds a ring from a JSON ring description. `caps` may be null.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum EndoaipStatus endoaip_ring_from_json(const char *json,
                                          const struct EndoaipCaps *caps,
                                          struct EndoaipRing **out);

// Builds a module from a JSON module description. A ring description yields
// its regular module. `caps` may be null.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum EndoaipStatus endoaip_module_from_json(const char *json,
                                            const struct EndoaipCaps *caps,
                                            struct EndoaipModule **out);

// The regular module of a ring.
//
// # Safety
// `ring` must be a live handle; `out` must be writable.
enum EndoaipStatus endoaip_module_regular(const struct EndoaipRing *ring,
                                          struct EndoaipModule **out);

// The ring a module is defined over, as a new handle.
//
// # Safety
// `module` must be a live handle; `out` must be writable.
enum EndoaipStatus endoaip_module_ring(const struct EndoaipModule *module,
                                       struct EndoaipRing **out);

// Number of elements of the ring, or 0 for a null handle.
//
// # Safety
// `ring` must be null or a live handle.
size_t endoaip_ring_order(const struct EndoaipRing *ring);

// Number of elements of the module, or 0 for a null handle.
//
// # Safety
// `module` must be null or a live handle.
size_t endoaip_module_order(const struct EndoaipModule *module);

// Decides a module property (or, with a `ring:` prefix or a ring-only name,
// a property of the module's ring). `holds` and `verdict_json` may be null;
// a returned verdict string must be freed with [`endoaip_string_free`].
//
// # Safety
// `module` must be a live handle and `property` a NUL-terminated string.
enum EndoaipStatus endoaip_module_check(const struct EndoaipModule *module,
                                        const char *property,
                                        const struct EndoaipCaps *caps,
                                        bool *holds,
                                        char **verdict_json);

// Decides a ring property. `mirrored` selects the mirrored annihilator
// orientation. `holds` and `verdict_json` may be null.
//
// # Safety
// `ring` must be a live handle and `property` a NUL-terminated string.
enum EndoaipStatus endoaip_ring_check(const struct EndoaipRing *ring,
                                      const char *property,
                                      bool mirrored,
                                      const struct EndoaipCaps *caps,
                                      bool *holds,
                                      char **verdict_json);

// Re-validates a verdict produced for this module (module- or ring-level)
// through the independent replay path. `valid` receives the outcome; a
// rejection reason is available from [`endoaip_last_error`].
//
// # Safety
// `module` must be a live handle and `verdict_json` a NUL-terminated string.
enum EndoaipStatus endoaip_module_replay(const struct EndoaipModule *module,
                                         const char *verdict_json,
                                         const struct EndoaipCaps *caps,
                                         bool *valid);

// JSON summary (orders, lattice counts, uniform dimension) of a described
// structure.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum EndoaipStatus endoaip_describe(const char *json, const struct EndoaipCaps *caps, char **out);

// Runs the theorem suite. `corpus_json` is a corpus spec (null for the
// default corpus) and `theorems` a comma-separated id list (null for all).
// Writes the report JSON and the violation count.
//
// # Safety
// Non-null string arguments must be NUL-terminated; `report_json` must be writable.
enum EndoaipStatus endoaip_suite(const char *corpus_json,
                                 const char *theorems,
                                 char **report_json,
                                 size_t *violations);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void endoaip_string_free(char *s);

// Releases a ring handle. Null is ignored.
//
// # Safety
// `ring` must come from this library and not have been freed.
void endoaip_ring_free(struct EndoaipRing *ring);

// Releases a module handle. Null is ignored.
//
// # Safety
// `module` must come from this library and not have been freed.
void endoaip_module_free(struct EndoaipModule *module);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ENDOAIP_H */
