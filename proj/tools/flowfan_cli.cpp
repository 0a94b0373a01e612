// flowfan: command-line front end over the flowfan library.
// Exit codes: 0 success, 1 a check failed (or the library rejected the input), 2 usage error.

#include "flowfan/arcs.hpp"
#include "flowfan/dkk.hpp"
#include "flowfan/families.hpp"
#include "flowfan/graph.hpp"
#include "flowfan/intflow.hpp"
#include "flowfan/io.hpp"
#include "flowfan/polytope.hpp"
#include "flowfan/quiver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

using namespace flowfan;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string graph;
    std::string format = "json";
    std::uint64_t seed = 1;
    std::size_t cap = 1000000;
    std::string out;
};

// result of one subcommand: text to emit and whether every check held
struct Output {
    std::string text;
    bool ok = true;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f) return;
    std::string list;
    for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
    throw UsageError("--format " + o.format + " is not available here (use " + list + ")");
}

FramedGraph graph_of(const Options& o) {
    if (o.graph.empty()) throw UsageError("--graph is required");
    try {
        return io::load_graph(o.graph);
    } catch (const Error& e) {
        if (e.code() == Errc::Parse) throw UsageError(e.what());
        throw;
    }
}

std::string line(const json& j) { return j.dump() + "\n"; }

json rational_array(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) {
        if (denominator(x) == 1) a.push_back(static_cast<std::int64_t>(numerator(x)));
        else a.push_back(to_string(x));
    }
    return a;
}

std::string big(const BigInt& z) { return z.str(); }

// --- subcommands ------------------------------------------------------------------

Output cmd_validate(const Options& o) {
    require_format(o, {"json", "dot"});
    auto fg = graph_of(o);
    const auto& g = fg.graph();
    auto rep = validate(g);
    bool acyclic = g.acyclic();
    std::optional<bool> ample;
    if (!acyclic) ample = fg.has_colouring() && is_cyclic_ample(fg);
    bool ok = rep.valid && (acyclic || *ample);
    if (o.format == "dot") return {io::graph_dot(fg), ok};

    json j;
    j["valid"] = rep.valid;
    j["full"] = rep.full;
    j["acyclic"] = acyclic;
    j["cyclic_ample"] = ample ? json(*ample) : json(nullptr);
    j["vertices"] = g.vertex_count();
    j["edges"] = rep.edges;
    j["sources"] = rep.sources;
    j["sinks"] = rep.sinks;
    j["internal"] = rep.internal;
    j["minimal_cycles"] = fg.minimal_cycles().size();
    j["violations"] = rep.violations;
    return {line(j), ok};
}

Output cmd_routes(const Options& o) {
    require_format(o, {"json", "csv"});
    auto fg = graph_of(o);
    auto rs = route_system(fg, {o.cap});
    return {o.format == "csv" ? io::routes_csv(fg, rs) : io::routes_json(fg, rs)};
}

Output cmd_cliques(const Options& o, bool verify, int samples) {
    require_format(o, {"json"});
    auto fg = graph_of(o);
    auto rs = route_system(fg, {o.cap});
    auto cl = maximal_cliques(rs, o.cap);
    if (!verify) return {io::cliques_json(cl)};

    auto rep = verify_triangulation(fg, rs, cl, samples, o.seed);
    json j;
    j["cliques"] = cl;
    j["triangulation"] = {{"ok", rep.ok},
                          {"cones", rep.cones},
                          {"cardinality", rep.cardinality},
                          {"edges_covered", rep.edges_covered},
                          {"sampling", rep.sampling},
                          {"cyclic_union", rep.cyclic_union},
                          {"failures", rep.failures}};
    j["meta"] = {{"seed", o.seed}, {"samples", rep.samples}};
    return {line(j), rep.ok};
}

Output cmd_decompose(const Options& o, const std::string& flow_arg) {
    require_format(o, {"json"});
    if (flow_arg.empty()) throw UsageError("--flow is required (JSON text or a file)");
    auto fg = graph_of(o);
    std::string text = flow_arg;
    if (flow_arg.front() != '{') {
        std::ifstream in(flow_arg);
        if (!in) throw UsageError("cannot read flow file '" + flow_arg + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    QVec f;
    try {
        f = io::parse_flow_json(fg.graph(), text);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    auto rs = route_system(fg, {o.cap});
    return {io::decomposition_json(decompose_flow(fg, rs, f))};
}

Output cmd_flows(const Options& o) {
    require_format(o, {"json", "csv"});
    auto fg = graph_of(o);
    std::vector<IVec> flows;
    for (auto& vf : volume_flows(fg, o.cap)) flows.push_back(std::move(vf.flow));
    const auto& g = fg.graph();
    return {o.format == "csv" ? io::flows_csv(g, flows) : io::flows_json(g, flows)};
}

Output cmd_volume(const Options& o) {
    require_format(o, {"json"});
    return {big(flow_complex_volume(graph_of(o))) + "\n"};
}

Output cmd_gvectors(const Options& o) {
    require_format(o, {"json", "dot"});
    auto fg = graph_of(o);
    auto qp = quiver_from_graph(fg);
    if (o.format == "dot") return {io::quiver_dot(qp.restricted)};

    const auto& g = fg.graph();
    auto rs = route_system(fg, {o.cap});
    json j;
    j["vertices"] = json::array();
    for (int v : fg.internal()) j["vertices"].push_back(g.name(v));
    j["routes"] = json::array();
    bool ok = true;
    for (std::size_t i = 0; i < rs.routes.size(); ++i) {
        if (rs.exceptional[i]) continue;
        const auto& r = rs.routes[i];
        json jr;
        jr["index"] = i;
        jr["edges"] = json::array();
        for (int e : r.edges) jr["edges"].push_back(g.edge(e).id);
        jr["module"] = to_string(fg, gamma(fg, qp, r));
        auto gv = g_vector(fg, route_string(fg, r));
        auto ph = phi_map(fg, to_qvec(indicator(g, r)));
        jr["g"] = gv;
        jr["phi"] = rational_array(ph);
        ok = ok && ph == to_qvec(gv);
        j["routes"].push_back(jr);
    }
    j["phi_equals_g"] = ok;
    return {line(j), ok};
}

ReducedFan reduced_fan_of(const FramedGraph& fg, std::size_t cap) {
    auto rs = route_system(fg, {cap});
    return reduced_fan(fg, rs, maximal_cliques(rs, cap));
}

Output cmd_svg(const Options& o);

Output cmd_fan(const Options& o) {
    require_format(o, {"json", "svg"});
    if (o.format == "svg") return cmd_svg(o);
    auto fg = graph_of(o);
    auto rf = reduced_fan_of(fg, o.cap);
    return {io::fan_json(rf.fan), rf.complete};
}

// Drawn with rays phi(1_r), written in a basis of W for cyclic graphs; this is
// linearly isomorphic to the reduced fan and matches the usual pictures.
Output cmd_svg(const Options& o) {
    require_format(o, {"json", "svg"});
    auto fg = graph_of(o);
    auto rs = route_system(fg, {o.cap});
    auto cl = maximal_cliques(rs, o.cap);
    auto fan = phi_image_fan(fg, rs, cl);
    if (!fg.graph().acyclic()) fan = fan_in_basis(fan, w_basis(fg));
    if (fan.dim != 2) throw UsageError("svg needs a 2-dimensional reduced fan, this one has dimension " + std::to_string(fan.dim));
    return {io::fan_svg(fan), fan_is_complete(fan)};
}

// cycle:n when the graph was given by that builtin name
std::optional<int> cycle_length(const std::string& source) {
    if (source.rfind("cycle:", 0) != 0) return std::nullopt;
    return std::stoi(source.substr(6));
}

Output cmd_polytope(const Options& o) {
    require_format(o, {"json", "svg"});
    auto fg = graph_of(o);
    auto rs = route_system(fg, {o.cap});
    auto cl = maximal_cliques(rs, o.cap);

    std::vector<LatticePolytope> summands;
    Fan candidate;
    if (fg.graph().acyclic()) {
        summands = order_polytope_summands(fg);
        candidate = phi_image_fan(fg, rs, cl);
    } else if (auto n = cycle_length(o.graph)) {
        summands = cyclohedron_summands(*n);
        candidate = fan_in_basis(phi_image_fan(fg, rs, cl), w_basis(fg));
    } else {
        throw UsageError("polytope: only acyclic graphs and cycle:n have a construction");
    }
    if (summands.empty()) throw UsageError("polytope: the graph has no internal vertices");
    auto cert = certify_normal_fan(summands, candidate);
    for (const auto& f : cert.failures) std::cerr << "certificate: " << f << "\n";
    auto verts = minkowski_sum_vertices(summands);
    int dim = summands.front().dim;
    if (o.format == "svg") {
        if (dim != 2) throw UsageError("svg needs a polygon, this polytope lives in dimension " + std::to_string(dim));
        return {io::polygon_svg(convex_hull_2d(verts)), cert.ok};
    }
    return {io::polytope_json(dim, verts), cert.ok};
}

Output cmd_shard(const Options& o, int n, int a, int b, const std::vector<int>& A, const std::vector<int>& B, int ladder) {
    require_format(o, {"json"});
    if (ladder > 0) {
        json j;
        int count = 0, good = 0;
        for (const auto& s : all_ladder_strings(ladder)) {
            ++count;
            good += theta_iota_check(ladder, s) ? 1 : 0;
        }
        j["n"] = ladder;
        j["strings"] = count;
        j["matching"] = good;
        return {line(j), good == count};
    }
    Arc arc{a, b, A, B};
    std::sort(arc.A.begin(), arc.A.end());
    std::sort(arc.B.begin(), arc.B.end());
    if (!valid_arc(n, arc)) throw UsageError("shard: need 1 <= a < b <= n with A, B partitioning [a+1, b-1]");
    auto ms = alternating_matchings(arc);
    auto sp = shard_polytope(n, arc);
    json j;
    j["n"] = n;
    j["arc"] = {{"a", a}, {"b", b}, {"A", arc.A}, {"B", arc.B}};
    j["matchings"] = ms;
    j["points"] = json::array();
    for (const auto& m : ms) j["points"].push_back(characteristic_vector(n, m));
    j["vertices"] = json::array();
    for (const auto& v : sp.vertices()) j["vertices"].push_back(rational_array(v));
    return {line(j)};
}

Output cmd_family(const Options& o, const std::string& name, int c, int p, int k, const std::vector<int>& a,
                  const std::string& word) {
    require_format(o, {"json"});
    json j;
    j["family"] = name;
    if (name == "hcp") {
        if (c < 1 || p < 1) throw UsageError("family hcp needs --c and --p");
        auto n = volume_flows(h_cp(c, p), o.cap).size();
        auto m = multinomial_volume(c, p);
        j["c"] = c;
        j["p"] = p;
        j["cyclic_volume_flows"] = n;
        j["multinomial"] = big(m);
        return {line(j), BigInt(n) == m};
    }
    if (name == "path") {
        if (k < 0) throw UsageError("family path needs --k");
        auto vol = flow_complex_volume(path_graph(k));
        auto catalan = binomial(2 * (k + 1), k + 1) / (k + 2);
        j["k"] = k;
        j["volume"] = big(vol);
        j["catalan"] = big(catalan);
        return {line(j), vol == catalan};
    }
    if (name == "barred") {
        if (p < 1 || static_cast<int>(a.size()) != p) throw UsageError("family barred needs --p and --a with p entries");
        for (int x : a)
            if (x < 0) throw UsageError("--a entries must be nonnegative");
        auto g = h_cp(1, p);
        j["p"] = p;
        j["a"] = a;
        if (!word.empty()) {
            BarredWord w;
            try {
                w = parse_barred_word(p, a, word);
            } catch (const Error& e) {
                throw UsageError(e.what());
            }
            int zero = -1;
            auto f = barred_word_to_flow(w, &zero);
            auto back = format_barred_word(flow_to_barred_word(p, f));
            json jf = json::object();
            for (int e = 0; e < g.graph().edge_count(); ++e) jf[g.graph().edge(e).id] = f[e];
            j["word"] = format_barred_word(w);
            j["flow"] = jf;
            j["zero_red"] = zero;
            j["roundtrip"] = back;
            return {line(j), back == format_barred_word(w)};
        }
        auto words = all_barred_words(p, a);
        auto flows = cyclic_flows_h1p(p, a);
        std::set<IVec> images;
        bool ok = true;
        for (const auto& w : words) {
            auto f = barred_word_to_flow(w);
            images.insert(f);
            ok = ok && format_barred_word(flow_to_barred_word(p, f)) == format_barred_word(w);
        }
        int total = std::accumulate(a.begin(), a.end(), 0);
        auto expect = binomial(total + 2 * p - 2, p - 1);
        ok = ok && images == std::set<IVec>(flows.begin(), flows.end()) && BigInt(words.size()) == expect;
        j["words"] = words.size();
        j["flows"] = flows.size();
        j["binomial"] = big(expect);
        j["bijective"] = ok;
        return {line(j), ok};
    }
    throw UsageError("family: --name must be hcp, path or barred");
}

Output cmd_mutoperhedron(const Options& o, int c, bool fvec, bool hvec, bool pentagon, const std::string& mode_name) {
    require_format(o, {"json"});
    if (c < 1 || c > 7) throw UsageError("mutoperhedron: --c must lie in [1, 7]");
    FaceMode mode;
    if (mode_name == "stacked") mode = FaceMode::Stacked;
    else if (mode_name == "noninterfering") mode = FaceMode::Noninterfering;
    else throw UsageError("--mode must be stacked or noninterfering");

    if (pentagon) {
        if (c != 3) throw UsageError("the pentagon certificate is for --c 3");
        auto pc = pentagon_certificate();
        json j;
        j["facet"] = format_bipartition(pc.facet);
        j["neighbours"] = json::array();
        for (const auto& q : pc.neighbours) j["neighbours"].push_back(format_bipartition(q));
        j["is_pentagon"] = pc.is_pentagon;
        j["permutohedron_two_faces"] = pc.permutohedron_two_faces;
        j["ok"] = pc.ok;
        return {line(j), pc.ok};
    }
    auto f = f_vector(c, mode);
    std::vector<std::int64_t> proper(f.begin(), f.end() - 1);  // drop the polytope itself
    if (fvec) return {line(json(proper))};
    auto h = h_vector(f);
    if (hvec) return {line(json(h))};
    auto pf = permutohedron_f_vector(c);
    json j;
    j["c"] = c;
    j["mode"] = mode_name;
    j["f_vector"] = proper;
    j["h_vector"] = h;
    j["permutohedron_f_vector"] = std::vector<std::int64_t>(pf.begin(), pf.end() - 1);
    j["two_face_sizes"] = two_face_sizes(c, mode);
    return {line(j), f == pf};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flowfan: DKK triangulations, flows, fans and polytopes of framed graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--graph", o.graph, "builtin (x, xx, cycle:n, hcp:c:p, path:k) or graph JSON file");
    app.add_option("--format", o.format, "json, csv, dot or svg")->check(CLI::IsMember({"json", "csv", "dot", "svg"}));
    app.add_option("--seed", o.seed, "seed for Monte-Carlo checks");
    app.add_option("--cap", o.cap, "enumeration cap");
    app.add_option("--out", o.out, "write output here instead of stdout");

    std::function<Output()> run;

    app.add_subcommand("validate", "check the graph conventions and framing")->callback([&] { run = [&] { return cmd_validate(o); }; });
    app.add_subcommand("routes", "list routes and mark the exceptional ones")->callback([&] { run = [&] { return cmd_routes(o); }; });

    bool verify = false;
    int samples = 200;
    auto* sc = app.add_subcommand("cliques", "maximal cliques of compatible routes");
    sc->add_flag("--verify", verify, "check the triangulation, sampling random flows");
    sc->add_option("--samples", samples, "random flows for --verify")->check(CLI::NonNegativeNumber);
    sc->callback([&] { run = [&] { return cmd_cliques(o, verify, samples); }; });

    std::string flow;
    auto* sd = app.add_subcommand("decompose", "write a flow as a combination of one clique's routes");
    sd->add_option("--flow", flow, "flow JSON {edge id: value}, inline or a file");
    sd->callback([&] { run = [&] { return cmd_decompose(o, flow); }; });

    app.add_subcommand("flows", "volume integer flows")->callback([&] { run = [&] { return cmd_flows(o); }; });
    app.add_subcommand("volume", "normalized volume (maximal cliques, checked against volume flows)")
        ->callback([&] { run = [&] { return cmd_volume(o); }; });
    app.add_subcommand("gvectors", "g-vectors and phi images of non-exceptional routes")
        ->callback([&] { run = [&] { return cmd_gvectors(o); }; });
    app.add_subcommand("fan", "reduced DKK fan")->callback([&] { run = [&] { return cmd_fan(o); }; });
    app.add_subcommand("svg", "reduced DKK fan as SVG")->callback([&] { run = [&] { return cmd_svg(o); }; });
    app.add_subcommand("polytope", "Minkowski sum realizing the reduced fan, with its certificate")
        ->callback([&] { run = [&] { return cmd_polytope(o); }; });

    int n = 0, a = 0, b = 0, ladder = 0;
    std::vector<int> A, B;
    auto* ss = app.add_subcommand("shard", "shard polytope of an arc, or the ladder-quiver check");
    ss->add_option("--n", n, "ambient size");
    ss->add_option("--a", a, "left end");
    ss->add_option("--b", b, "right end");
    ss->add_option("--A", A, "points above the arc")->delimiter(',');
    ss->add_option("--B", B, "points below the arc")->delimiter(',');
    ss->add_option("--ladder", ladder, "compare HN and shard polytopes for all strings of the ladder quiver on n vertices");
    ss->callback([&] { run = [&] { return cmd_shard(o, n, a, b, A, B, ladder); }; });

    std::string fname, word;
    int fc = 0, fp = 0, fk = -1;
    std::vector<int> fa;
    auto* sf = app.add_subcommand("family", "closed-form counts: hcp, path, barred");
    sf->add_option("--name", fname, "hcp, path or barred")->required();
    sf->add_option("--c", fc);
    sf->add_option("--p", fp);
    sf->add_option("--k", fk);
    sf->add_option("--a", fa, "source inflows, comma separated")->delimiter(',');
    sf->add_option("--word", word, "barred word such as 11112|22334|44|456||66");
    sf->callback([&] { run = [&] { return cmd_family(o, fname, fc, fp, fk, fa, word); }; });

    int mc = 0;
    bool fvec = false, hvec = false, pent = false;
    std::string mode = "noninterfering";
    auto* sm = app.add_subcommand("mutoperhedron", "face numbers of the arc-diagram complex");
    sm->add_option("--c", mc)->required();
    sm->add_flag("--fvector", fvec, "only the f-vector of proper faces, vertices first");
    sm->add_flag("--hvector", hvec, "only the h-vector");
    sm->add_flag("--pentagon", pent, "pentagon certificate (c = 3)");
    sm->add_option("--mode", mode, "noninterfering (the mutoperhedron, default) or stacked (the permutohedron)");
    sm->callback([&] { run = [&] { return cmd_mutoperhedron(o, mc, fvec, hvec, pent, mode); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Output out;
    try {
        out = run();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
        return 1;
    }

    if (o.out.empty()) {
        std::cout << out.text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "usage error: cannot write '" << o.out << "'\n";
            return 2;
        }
        f << out.text;
    }
    return out.ok ? 0 : 1;
}
