#include "digdef.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "digdef/canonical.hpp"
#include "digdef/category.hpp"
#include "digdef/digraph.hpp"
#include "digdef/embed.hpp"
#include "digdef/gadgets.hpp"
#include "digdef/universe.hpp"
#include "digdef/verify.hpp"

struct dd_digraph {
    digdef::Digraph g;
};

struct dd_universe {
    digdef::Universe u;
};

namespace {

thread_local std::string g_last_error;

dd_status fail(dd_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

/// Runs fn, translating exceptions into error codes. invalid_argument maps
/// to `bad_input` (parse errors vs bad arguments vs bad shapes differ only
/// in which call site raised them).
template <typename Fn>
dd_status guarded(dd_status bad_input, Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(bad_input, e.what());
    } catch (const std::runtime_error& e) {
        return fail(DD_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(DD_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(DD_ERR_INTERNAL, e.what());
    }
}

dd_status require(bool ok, const char* what) {
    return ok ? DD_OK : fail(DD_ERR_ARGUMENT, what);
}

}  // namespace

extern "C" {

const char* dd_last_error(void) { return g_last_error.c_str(); }

void dd_string_free(char* s) { delete[] s; }

void dd_ints_free(int32_t* p) { delete[] p; }

void dd_digraph_list_free(dd_digraph** list, size_t count) {
    if (!list)
        return;
    for (size_t i = 0; i < count; ++i)
        delete list[i];
    delete[] list;
}

dd_status dd_digraph_parse(const char* text, dd_digraph** out) {
    if (dd_status s = require(text && out, "null argument"))
        return s;
    return guarded(DD_ERR_PARSE, [&] {
        *out = new dd_digraph{digdef::parse_digraph(text)};
        return DD_OK;
    });
}

dd_status dd_digraph_create(int32_t n, const int32_t* edge_pairs,
                            size_t edge_count, dd_digraph** out) {
    if (dd_status s = require(out && (edge_pairs || edge_count == 0),
                              "null argument"))
        return s;
    return guarded(DD_ERR_ARGUMENT, [&] {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i)
            edges.emplace_back(edge_pairs[2 * i], edge_pairs[2 * i + 1]);
        *out = new dd_digraph{digdef::Digraph(n, edges)};
        return DD_OK;
    });
}

void dd_digraph_free(dd_digraph* g) { delete g; }

int32_t dd_digraph_vertices(const dd_digraph* g) { return g ? g->g.n() : -1; }

int32_t dd_digraph_edges(const dd_digraph* g) {
    return g ? g->g.edge_count() : -1;
}

int32_t dd_digraph_loops(const dd_digraph* g) {
    return g ? g->g.loop_count() : -1;
}

dd_status dd_digraph_format(const dd_digraph* g, char** out) {
    if (dd_status s = require(g && out, "null argument"))
        return s;
    return guarded(DD_ERR_INTERNAL, [&] {
        *out = copy_string(digdef::format_digraph(g->g));
        return DD_OK;
    });
}

dd_status dd_digraph_to_dot(const dd_digraph* g, const char* name, char** out) {
    if (dd_status s = require(g && out, "null argument"))
        return s;
    return guarded(DD_ERR_INTERNAL, [&] {
        *out = copy_string(digdef::to_dot(g->g, name ? name : "G"));
        return DD_OK;
    });
}

dd_status dd_digraph_canonical_key(const dd_digraph* g, char** out) {
    if (dd_status s = require(g && out, "null argument"))
        return s;
    return guarded(DD_ERR_INTERNAL, [&] {
        *out = copy_string(digdef::key_hex(digdef::canonicalize(g->g)));
        return DD_OK;
    });
}

dd_status dd_gadget_make(const char* spec, dd_digraph*** out_list,
                         size_t* out_count) {
    if (dd_status s = require(spec && out_list && out_count, "null argument"))
        return s;
    return guarded(DD_ERR_ARGUMENT, [&] {
        std::vector<digdef::Digraph> made = digdef::gadgets::make_from_spec(spec);
        dd_digraph** list = new dd_digraph*[made.size()]();
        for (size_t i = 0; i < made.size(); ++i)
            list[i] = new dd_digraph{std::move(made[i])};
        *out_list = list;
        *out_count = made.size();
        return DD_OK;
    });
}

dd_status dd_gadget_names(char** out) {
    if (dd_status s = require(out != nullptr, "null argument"))
        return s;
    return guarded(DD_ERR_INTERNAL, [&] {
        std::string joined;
        for (const auto& name : digdef::gadgets::spec_names()) {
            joined += name;
            joined += '\n';
        }
        *out = copy_string(joined);
        return DD_OK;
    });
}

dd_status dd_embed_check(const dd_digraph* g, const dd_digraph* h,
                         int32_t* embeddable, int32_t* map_out) {
    if (dd_status s = require(g && h && embeddable, "null argument"))
        return s;
    return guarded(DD_ERR_INTERNAL, [&] {
        auto witness = digdef::find_embedding(g->g, h->g);
        *embeddable = witness ? 1 : 0;
        if (witness && map_out)
            for (int i = 0; i < g->g.n(); ++i)
                map_out[i] = witness->map[i];
        return DD_OK;
    });
}

dd_status dd_universe_build(int32_t bound, int32_t threads, dd_universe** out) {
    if (dd_status s = require(out != nullptr, "null argument"))
        return s;
    return guarded(DD_ERR_ARGUMENT, [&] {
        *out = new dd_universe{digdef::enumerate_universe(bound, threads)};
        return DD_OK;
    });
}

dd_status dd_universe_save(const dd_universe* u, const char* path) {
    if (dd_status s = require(u && path, "null argument"))
        return s;
    return guarded(DD_ERR_IO, [&] {
        digdef::save_universe(u->u, path);
        return DD_OK;
    });
}

dd_status dd_universe_load(const char* path, dd_universe** out) {
    if (dd_status s = require(path && out, "null argument"))
        return s;
    return guarded(DD_ERR_IO, [&] {
        *out = new dd_universe{digdef::load_universe(path)};
        return DD_OK;
    });
}

void dd_universe_free(dd_universe* u) { delete u; }

int32_t dd_universe_bound(const dd_universe* u) { return u ? u->u.bound : -1; }

int64_t dd_universe_types(const dd_universe* u) {
    return u ? static_cast<int64_t>(u->u.types.size()) : -1;
}

dd_status dd_universe_hasse_dot(const dd_universe* u, int32_t max_vertices,
                                char** out) {
    if (dd_status s = require(u && out, "null argument"))
        return s;
    return guarded(DD_ERR_INTERNAL, [&] {
        int cap = max_vertices > 0 ? max_vertices : u->u.bound;
        *out = copy_string(digdef::hasse_dot(
            u->u, [&](int i) { return u->u.vertex_count[i] <= cap; }));
        return DD_OK;
    });
}

dd_status dd_verify_all(const dd_universe* u, int32_t threads,
                        int32_t with_millis, char** json_out, int32_t* failed) {
    if (dd_status s = require(u && json_out && failed, "null argument"))
        return s;
    return guarded(DD_ERR_INTERNAL, [&] {
        auto reports = digdef::verify::verify_all(u->u, threads);
        *json_out = copy_string(
            digdef::verify::reports_to_json(reports, with_millis != 0));
        *failed = digdef::verify::any_fail(reports) ? 1 : 0;
        return DD_OK;
    });
}

dd_status dd_verify_one(const dd_universe* u, const char* id,
                        int32_t with_millis, char** json_out, int32_t* failed) {
    if (dd_status s = require(u && id && json_out && failed, "null argument"))
        return s;
    return guarded(DD_ERR_ARGUMENT, [&] {
        std::vector<digdef::verify::VerificationReport> reports{
            digdef::verify::verify(id, u->u)};
        *json_out = copy_string(
            digdef::verify::reports_to_json(reports, with_millis != 0));
        *failed = digdef::verify::any_fail(reports) ? 1 : 0;
        return DD_OK;
    });
}

dd_status dd_verify_ids(char** out) {
    if (dd_status s = require(out != nullptr, "null argument"))
        return s;
    return guarded(DD_ERR_INTERNAL, [&] {
        std::string joined;
        for (const auto& entry : digdef::verify::registry()) {
            joined += entry.id;
            joined += '\n';
        }
        *out = copy_string(joined);
        return DD_OK;
    });
}

dd_status dd_encode_object(const dd_digraph* g, const int32_t* order,
                           dd_digraph** out) {
    if (dd_status s = require(g && out, "null argument"))
        return s;
    return guarded(DD_ERR_ARGUMENT, [&] {
        std::vector<int> perm(g->g.n());
        for (int i = 0; i < g->g.n(); ++i)
            perm[i] = order ? order[i] : i;
        auto enc = digdef::category::encode_object(g->g, perm);
        *out = new dd_digraph{std::move(enc.encoded)};
        return DD_OK;
    });
}

dd_status dd_decode_object(const dd_digraph* x, dd_digraph** plain_out,
                           int32_t** order_out, int32_t* n_out) {
    if (dd_status s = require(x && plain_out && n_out, "null argument"))
        return s;
    return guarded(DD_ERR_SHAPE, [&] {
        auto enc = digdef::category::decode_object(x->g);
        *n_out = enc.plain.n();
        if (order_out) {
            int32_t* order = new int32_t[enc.order.size()];
            for (std::size_t i = 0; i < enc.order.size(); ++i)
                order[i] = enc.order[i];
            *order_out = order;
        }
        *plain_out = new dd_digraph{std::move(enc.plain)};
        return DD_OK;
    });
}

}  // extern "C"
