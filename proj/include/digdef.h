/* C interface to the digraph embeddability library.
 *
 * All handles are opaque; every function that can fail returns a dd_status
 * and leaves a human-readable description in dd_last_error() (thread-local,
 * valid until the next failing call on the same thread). Strings returned
 * through char** out-parameters are heap-allocated and must be released
 * with dd_string_free(); integer arrays with dd_ints_free(); digraph lists
 * with dd_digraph_list_free().
 */
#ifndef DIGDEF_H
#define DIGDEF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dd_status {
    DD_OK = 0,
    DD_ERR_ARGUMENT = 1, /* invalid argument or malformed spec */
    DD_ERR_PARSE = 2,    /* malformed digraph text */
    DD_ERR_IO = 3,       /* file could not be read or written */
    DD_ERR_SHAPE = 4,    /* digraph does not have the required shape */
    DD_ERR_INTERNAL = 5
} dd_status;

typedef struct dd_digraph dd_digraph;
typedef struct dd_universe dd_universe;

const char* dd_last_error(void);

void dd_string_free(char* s);
void dd_ints_free(int32_t* p);
void dd_digraph_list_free(dd_digraph** list, size_t count);

/* ---- digraphs ---------------------------------------------------------- */

/* Text format: first non-comment line is the vertex count, then one "u v"
 * edge per line, 1-based; '#' starts a comment line. */
dd_status dd_digraph_parse(const char* text, dd_digraph** out);
/* edge_pairs holds edge_count (u,v) pairs, 0-based. */
dd_status dd_digraph_create(int32_t n, const int32_t* edge_pairs,
                            size_t edge_count, dd_digraph** out);
void dd_digraph_free(dd_digraph* g);

int32_t dd_digraph_vertices(const dd_digraph* g);
int32_t dd_digraph_edges(const dd_digraph* g);
int32_t dd_digraph_loops(const dd_digraph* g);

dd_status dd_digraph_format(const dd_digraph* g, char** out);
dd_status dd_digraph_to_dot(const dd_digraph* g, const char* name, char** out);
/* Canonical key as "n:<hex>"; equal keys iff isomorphic. */
dd_status dd_digraph_canonical_key(const dd_digraph* g, char** out);

/* ---- gadget constructions --------------------------------------------- */

/* Compact spec grammar, e.g. "O:5", "Ostar:3", "male_L:4",
 * "Falpha:2,3:[1,2]". Some specs name a finite family; all members are
 * returned. */
dd_status dd_gadget_make(const char* spec, dd_digraph*** out_list,
                         size_t* out_count);
/* Newline-separated list of accepted spec names. */
dd_status dd_gadget_names(char** out);

/* ---- embeddability ----------------------------------------------------- */

/* Sets *embeddable to 1/0. If embeddable and map_out is non-NULL, map_out
 * must have room for n(g) entries and receives a witness (0-based images). */
dd_status dd_embed_check(const dd_digraph* g, const dd_digraph* h,
                         int32_t* embeddable, int32_t* map_out);

/* ---- universe of isomorphism types ------------------------------------ */

dd_status dd_universe_build(int32_t bound, int32_t threads, dd_universe** out);
dd_status dd_universe_save(const dd_universe* u, const char* path);
dd_status dd_universe_load(const char* path, dd_universe** out);
void dd_universe_free(dd_universe* u);

int32_t dd_universe_bound(const dd_universe* u);
int64_t dd_universe_types(const dd_universe* u);
/* Hasse diagram (DOT) of the sub-poset of types with at most max_vertices
 * vertices; pass 0 for the whole universe. */
dd_status dd_universe_hasse_dot(const dd_universe* u, int32_t max_vertices,
                                char** out);

/* ---- verification ------------------------------------------------------ */

/* Runs every registry entry; *failed is set to 1 iff some entry failed.
 * with_millis=0 drops wall times, making the JSON deterministic. */
dd_status dd_verify_all(const dd_universe* u, int32_t threads,
                        int32_t with_millis, char** json_out, int32_t* failed);
dd_status dd_verify_one(const dd_universe* u, const char* id,
                        int32_t with_millis, char** json_out, int32_t* failed);
/* Newline-separated registry ids. */
dd_status dd_verify_ids(char** out);

/* ---- category object encoding ----------------------------------------- */

/* Attaches the cycle bundle to g; order is a permutation of 0..n-1 (NULL
 * means identity). */
dd_status dd_encode_object(const dd_digraph* g, const int32_t* order,
                           dd_digraph** out);
/* Inverts dd_encode_object: recovers the plain digraph and the order.
 * order_out (if non-NULL) receives a malloc'd array of *n_out entries. */
dd_status dd_decode_object(const dd_digraph* x, dd_digraph** plain_out,
                           int32_t** order_out, int32_t* n_out);

#ifdef __cplusplus
}
#endif

#endif /* DIGDEF_H */
