#ifndef GPAUTO_H
#define GPAUTO_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum GpaStatus {
  GPA_STATUS_OK = 0,
  GPA_STATUS_NULL_POINTER = 1,
  GPA_STATUS_INVALID_UTF8 = 2,
  /**
   * Graph parsing and validation.
   */
  GPA_STATUS_GRAPH_CORE = 3,
  /**
   * Word parsing and normal forms.
   */
  GPA_STATUS_WORD_ENGINE = 4,
  /**
   * Partial conjugations and automorphism words.
   */
  GPA_STATUS_AUT_CALCULUS = 5,
  /**
   * Preconditions of the structural predicates.
   */
  GPA_STATUS_STRUCTURE = 6,
  /**
   * Handles belong to different graphs.
   */
  GPA_STATUS_GRAPH_MISMATCH = 7,
  GPA_STATUS_PANIC = 8,
} GpaStatus;

/**
 * An automorphism fixing every vertex up to conjugacy, tied to its graph.
 */
typedef struct GpaAut GpaAut;

/**
 * A labeled graph.
 */
typedef struct GpaGraph GpaGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or "" after a success.
 * Valid until the next call on the same thread.
 */
const char *gpa_last_error(void);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void gpa_string_free(char *s);

/**
 * Parses the text graph format.
 *
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
enum GpaStatus gpa_graph_parse(const char *src, struct GpaGraph **out);

/**
 * # Safety
 * `g` comes from [`gpa_graph_parse`], or is null.
 */
void gpa_graph_free(struct GpaGraph *g);

/**
 * Number of vertices; 0 for a null handle.
 *
 * # Safety
 * `g` is a live handle or null.
 */
size_t gpa_graph_vertex_count(const struct GpaGraph *g);

/**
 * The graph in its canonical text form.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum GpaStatus gpa_graph_to_string(const struct GpaGraph *g, char **out);

/**
 * Normal form of a word such as `"v1 v2^-1 v1"`. The identity is "".
 *
 * # Safety
 * `g` is a live handle; `word` is NUL-terminated; `out` is writable.
 */
enum GpaStatus gpa_normal_form(const struct GpaGraph *g, const char *word, char **out);

/**
 * All partial conjugations, space separated, in canonical order.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum GpaStatus gpa_partial_conjugations(const struct GpaGraph *g, char **out);

/**
 * The reduced generating set, space separated.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum GpaStatus gpa_pc_zero(const struct GpaGraph *g, char **out);

/**
 * Least separating intersection of links as `"i=.. j=.. R={..}"`, or "none".
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum GpaStatus gpa_sil(const struct GpaGraph *g, char **out);

/**
 * Whether the pure outer automorphism group is abelian.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum GpaStatus gpa_out0_abelian(const struct GpaGraph *g, bool *out);

/**
 * Virtual cohomological dimension of `Out`, defined for trees with
 * finite orders. `defined` is set false otherwise and `vcd` is left alone.
 *
 * # Safety
 * `g` is a live handle; `defined` and `vcd` are writable.
 */
enum GpaStatus gpa_vcd(const struct GpaGraph *g, bool *defined, size_t *vcd);

/**
 * Full structure report in `key: value` lines.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum GpaStatus gpa_structure_report(const struct GpaGraph *g, char **out);

/**
 * Evaluates a word in partial conjugations such as `"x2:8,15 x1:4'"`.
 * The empty string gives the identity.
 *
 * # Safety
 * `g` is a live handle; `word` is NUL-terminated; `out` is writable.
 */
enum GpaStatus gpa_aut_parse(const struct GpaGraph *g, const char *word, struct GpaAut **out);

/**
 * # Safety
 * `a` comes from this library, or is null.
 */
void gpa_aut_free(struct GpaAut *a);

/**
 * `first ∘ second`; both must belong to the same graph.
 *
 * # Safety
 * Both handles are live; `out` is writable.
 */
enum GpaStatus gpa_aut_compose(const struct GpaAut *first,
                               const struct GpaAut *second,
                               struct GpaAut **out);

/**
 * Image of a word, in normal form.
 *
 * # Safety
 * `a` is live; `word` is NUL-terminated; `out` is writable.
 */
enum GpaStatus gpa_aut_apply(const struct GpaAut *a, const char *word, char **out);

/**
 * Whether the automorphism is the identity.
 *
 * # Safety
 * `a` is live; `out` is writable.
 */
enum GpaStatus gpa_aut_is_identity(const struct GpaAut *a, bool *out);

/**
 * Whether the automorphism is inner. When it is and `witness` is not null,
 * a conjugating word is stored there (free with [`gpa_string_free`]);
 * otherwise `*witness` is set to null.
 *
 * # Safety
 * `a` is live; `inner` is writable; `witness` is writable or null.
 */
enum GpaStatus gpa_aut_is_inner(const struct GpaAut *a, bool *inner, char **witness);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GPAUTO_H */
