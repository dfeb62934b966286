// Command-line front end. Links only against the C API in digdef.h.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "digdef.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(dd_status status, const std::string& what) {
    if (status != DD_OK)
        throw UsageError(what + ": " + dd_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content))
        throw UsageError("cannot write " + path);
}

struct DigraphHandle {
    dd_digraph* g = nullptr;
    ~DigraphHandle() { dd_digraph_free(g); }
};

struct UniverseHandle {
    dd_universe* u = nullptr;
    ~UniverseHandle() { dd_universe_free(u); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { dd_string_free(s); }
};

void load_digraph(const std::string& path, DigraphHandle& out) {
    check(dd_digraph_parse(read_file(path).c_str(), &out.g), path);
}

/// Loads the universe from --universe, or from the cache directory
/// ($DIGDEF_CACHE, default ".") keyed by --n, building and caching on a
/// miss.
void resolve_universe(const std::string& universe_path, int n, int threads,
                      UniverseHandle& out) {
    if (!universe_path.empty()) {
        check(dd_universe_load(universe_path.c_str(), &out.u), universe_path);
        return;
    }
    if (n <= 0)
        throw UsageError("need --universe FILE or --n N");
    const char* env = std::getenv("DIGDEF_CACHE");
    std::string cache =
        (env && *env ? std::string(env) : std::string(".")) + "/u" +
        std::to_string(n) + ".bin";
    if (std::ifstream(cache).good()) {
        check(dd_universe_load(cache.c_str(), &out.u), cache);
        if (dd_universe_bound(out.u) == n)
            return;
        std::cerr << "cache " << cache << " has the wrong bound; rebuilding\n";
        dd_universe_free(out.u);
        out.u = nullptr;
    }
    std::cerr << "building universe for N=" << n << "\n";
    check(dd_universe_build(n, threads, &out.u), "universe build");
    check(dd_universe_save(out.u, cache.c_str()), cache);
}

int run(int argc, char** argv) {
    CLI::App app{"finite-digraph embeddability order toolkit"};
    app.require_subcommand(1);
    int seed = 0;  // reserved; all current computations are deterministic
    app.add_option("--seed", seed, "random seed (reserved)");

    // ---- universe ------------------------------------------------------
    auto* universe = app.add_subcommand("universe", "build or inspect caches");
    universe->require_subcommand(1);

    auto* ubuild = universe->add_subcommand("build", "enumerate and cache");
    int ubuild_n = 3, ubuild_threads = 1;
    std::string ubuild_out;
    ubuild->add_option("--n", ubuild_n, "vertex bound")->required();
    ubuild->add_option("--out", ubuild_out, "cache file")->required();
    ubuild->add_option("--threads", ubuild_threads, "worker cap");
    ubuild->callback([&] {
        UniverseHandle u;
        check(dd_universe_build(ubuild_n, ubuild_threads, &u.u), "build");
        check(dd_universe_save(u.u, ubuild_out.c_str()), ubuild_out);
        std::cout << "types=" << dd_universe_types(u.u) << "\n";
    });

    auto* uinfo = universe->add_subcommand("info", "print cache summary");
    std::string uinfo_path;
    uinfo->add_option("--universe", uinfo_path, "cache file")->required();
    uinfo->callback([&] {
        UniverseHandle u;
        check(dd_universe_load(uinfo_path.c_str(), &u.u), uinfo_path);
        std::cout << "N=" << dd_universe_bound(u.u)
                  << " types=" << dd_universe_types(u.u) << "\n";
    });

    // ---- embed ---------------------------------------------------------
    auto* embed = app.add_subcommand("embed", "embeddability checks");
    embed->require_subcommand(1);
    auto* echeck = embed->add_subcommand("check", "is G embeddable into H");
    std::vector<std::string> echeck_files;
    echeck->add_option("files", echeck_files, "G and H digraph files")
        ->expected(2);
    echeck->callback([&] {
        DigraphHandle g, h;
        load_digraph(echeck_files[0], g);
        load_digraph(echeck_files[1], h);
        int32_t found = 0;
        std::vector<int32_t> map(dd_digraph_vertices(g.g));
        check(dd_embed_check(g.g, h.g, &found, map.data()), "embed check");
        if (!found) {
            std::cout << "NOT-EMBEDDABLE\n";
            return;
        }
        std::cout << "MAP";
        for (std::size_t i = 0; i < map.size(); ++i)
            std::cout << " " << i + 1 << "->" << map[i] + 1;
        std::cout << "\n";
    });

    // ---- gadget --------------------------------------------------------
    auto* gadget = app.add_subcommand("gadget", "construct gadget digraphs");
    gadget->require_subcommand(1);

    auto* gmake = gadget->add_subcommand("make", "build from a spec string");
    std::string gmake_spec, gmake_out, gmake_dot;
    gmake->add_option("spec", gmake_spec, "e.g. O:5, Ostar:3, Falpha:2,3:[1,2]")
        ->required();
    gmake->add_option("--out", gmake_out, "write text format here");
    gmake->add_option("--dot", gmake_dot, "write DOT here");
    gmake->callback([&] {
        dd_digraph** list = nullptr;
        size_t count = 0;
        check(dd_gadget_make(gmake_spec.c_str(), &list, &count), gmake_spec);
        std::string text, dot;
        for (size_t i = 0; i < count; ++i) {
            StringHandle t, d, k;
            check(dd_digraph_format(list[i], &t.s), "format");
            check(dd_digraph_to_dot(list[i], "G", &d.s), "dot");
            check(dd_digraph_canonical_key(list[i], &k.s), "key");
            text += std::string("# ") + gmake_spec + " [" + std::to_string(i) +
                    "] key " + k.s + "\n" + t.s;
            dot += d.s;
        }
        dd_digraph_list_free(list, count);
        if (!gmake_out.empty())
            write_file(gmake_out, text);
        else
            std::cout << text;
        if (!gmake_dot.empty())
            write_file(gmake_dot, dot);
    });

    auto* glist = gadget->add_subcommand("list", "accepted spec names");
    glist->callback([&] {
        StringHandle names;
        check(dd_gadget_names(&names.s), "gadget names");
        std::cout << names.s;
    });

    // ---- encode / decode ----------------------------------------------
    auto* encode = app.add_subcommand("encode", "attach the cycle bundle");
    std::string encode_file, encode_order;
    encode->add_option("file", encode_file, "digraph file")->required();
    encode->add_option("--order", encode_order,
                       "comma-separated 1-based assignment of cycles to "
                       "vertices (default identity)");
    encode->callback([&] {
        DigraphHandle g;
        load_digraph(encode_file, g);
        std::vector<int32_t> order;
        if (!encode_order.empty()) {
            std::stringstream ss(encode_order);
            std::string item;
            while (std::getline(ss, item, ','))
                order.push_back(std::stoi(item) - 1);
            if (static_cast<int32_t>(order.size()) != dd_digraph_vertices(g.g))
                throw UsageError("--order length must match the vertex count");
        }
        DigraphHandle enc;
        check(dd_encode_object(g.g, order.empty() ? nullptr : order.data(),
                               &enc.g),
              "encode");
        StringHandle text;
        check(dd_digraph_format(enc.g, &text.s), "format");
        std::cout << text.s;
    });

    auto* decode = app.add_subcommand("decode", "recover digraph and order");
    std::string decode_file;
    decode->add_option("file", decode_file, "anchored digraph file")->required();
    decode->callback([&] {
        DigraphHandle x;
        load_digraph(decode_file, x);
        DigraphHandle plain;
        int32_t* order = nullptr;
        int32_t n = 0;
        check(dd_decode_object(x.g, &plain.g, &order, &n), "decode");
        StringHandle text;
        check(dd_digraph_format(plain.g, &text.s), "format");
        std::cout << "# order";
        for (int32_t i = 0; i < n; ++i)
            std::cout << " " << order[i] + 1;
        std::cout << "\n" << text.s;
        dd_ints_free(order);
    });

    // ---- verify --------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run lemma verifications");
    verify->require_subcommand(1);
    bool verify_failed = false;

    std::string vall_universe, vall_json;
    int vall_n = 0, vall_threads = 1;
    bool vall_millis = false;
    auto* vall = verify->add_subcommand("all", "run every registry entry");
    vall->add_option("--universe", vall_universe, "universe cache file");
    vall->add_option("--n", vall_n, "build/load a cached universe instead");
    vall->add_option("--json", vall_json, "write the JSON report here");
    vall->add_option("--threads", vall_threads, "worker cap");
    vall->add_flag("--millis", vall_millis, "include wall times in the JSON");
    vall->callback([&] {
        UniverseHandle u;
        resolve_universe(vall_universe, vall_n, vall_threads, u);
        StringHandle json;
        int32_t failed = 0;
        check(dd_verify_all(u.u, vall_threads, vall_millis ? 1 : 0, &json.s,
                            &failed),
              "verify all");
        if (!vall_json.empty())
            write_file(vall_json, json.s);
        else
            std::cout << json.s;
        verify_failed = failed != 0;
    });

    std::string vone_id, vone_universe, vone_json;
    int vone_n = 0, vone_threads = 1;
    bool vone_millis = false;
    auto* vone = verify->add_subcommand("one", "run a single registry entry");
    vone->add_option("id", vone_id, "registry id")->required();
    vone->add_option("--universe", vone_universe, "universe cache file");
    vone->add_option("--n", vone_n, "build/load a cached universe instead");
    vone->add_option("--json", vone_json, "write the JSON report here");
    vone->add_option("--threads", vone_threads, "worker cap");
    vone->add_flag("--millis", vone_millis, "include wall times in the JSON");
    vone->callback([&] {
        UniverseHandle u;
        resolve_universe(vone_universe, vone_n, vone_threads, u);
        StringHandle json;
        int32_t failed = 0;
        check(dd_verify_one(u.u, vone_id.c_str(), vone_millis ? 1 : 0, &json.s,
                            &failed),
              vone_id);
        if (!vone_json.empty())
            write_file(vone_json, json.s);
        else
            std::cout << json.s;
        verify_failed = failed != 0;
    });

    auto* vlist = verify->add_subcommand("list", "print registry ids");
    vlist->callback([&] {
        StringHandle ids;
        check(dd_verify_ids(&ids.s), "registry");
        std::cout << ids.s;
    });

    // ---- export --------------------------------------------------------
    auto* exp = app.add_subcommand("export", "DOT exports");
    exp->require_subcommand(1);

    auto* ehasse = exp->add_subcommand("hasse", "Hasse diagram of a sub-poset");
    std::string ehasse_universe, ehasse_dot;
    int ehasse_n = 0;
    ehasse->add_option("--universe", ehasse_universe, "cache file")->required();
    ehasse->add_option("--n", ehasse_n, "restrict to types with <= n vertices");
    ehasse->add_option("--dot", ehasse_dot, "write DOT here");
    ehasse->callback([&] {
        UniverseHandle u;
        check(dd_universe_load(ehasse_universe.c_str(), &u.u), ehasse_universe);
        StringHandle dot;
        check(dd_universe_hasse_dot(u.u, ehasse_n, &dot.s), "hasse");
        if (!ehasse_dot.empty())
            write_file(ehasse_dot, dot.s);
        else
            std::cout << dot.s;
    });

    auto* edot = exp->add_subcommand("dot", "DOT rendering of one digraph");
    std::string edot_file, edot_out;
    edot->add_option("file", edot_file, "digraph file")->required();
    edot->add_option("--dot", edot_out, "write DOT here");
    edot->callback([&] {
        DigraphHandle g;
        load_digraph(edot_file, g);
        StringHandle dot;
        check(dd_digraph_to_dot(g.g, "G", &dot.s), "dot");
        if (!edot_out.empty())
            write_file(edot_out, dot.s);
        else
            std::cout << dot.s;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    return verify_failed ? kExitFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
