#include "flowfan/io.hpp"

#include "flowfan/families.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace flowfan::io {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::Parse, what); }

const char* colour_name(Colour c) { return c == Colour::Red ? "red" : "blue"; }

std::vector<int> parse_ints(const std::string& s, char sep) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            parse_error("expected an integer, got '" + tok + "'");
        }
        if (used != tok.size()) parse_error("expected an integer, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

json rational_json(const Rational& q) {
    if (denominator(q) == 1) {
        const BigInt& z = numerator(q);
        if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
            return json(static_cast<std::int64_t>(z));
    }
    return json(to_string(q));
}

Rational json_rational(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    parse_error("flow values must be integers or \"p/q\" strings");
}

std::string dump(const json& j) { return j.dump() + "\n"; }

// fixed-precision decimal, "-0.000000" normalised
std::string fmt(double x) {
    if (std::fabs(x) < 5e-7) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

const char* kSvgHead =
    "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.2 -1.2 2.4 2.4\" width=\"480\" height=\"480\">\n"
    "<g transform=\"scale(1,-1)\">\n";
const char* kSvgTail = "</g>\n</svg>\n";

}  // namespace

FramedGraph parse_graph_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        parse_error("graph JSON needs \"vertices\" and \"edges\"");

    Digraph g;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) parse_error("vertex ids must be strings");
        auto name = v.get<std::string>();
        if (g.vertex_index(name)) parse_error("duplicate vertex '" + name + "'");
        g.add_vertex(name);
    }
    std::vector<Colour> colours;
    bool all_coloured = true;
    for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("tail") || !e.contains("head"))
            parse_error("each edge needs \"tail\" and \"head\"");
        auto tail = g.vertex_index(e["tail"].get<std::string>());
        auto head = g.vertex_index(e["head"].get<std::string>());
        if (!tail || !head) parse_error("edge endpoint is not a listed vertex");
        std::string id = e.contains("id") ? e["id"].get<std::string>() : "e" + std::to_string(g.edge_count());
        if (g.edge_index(id)) parse_error("duplicate edge id '" + id + "'");
        g.add_edge(*tail, *head, id);
        if (e.contains("colour")) {
            auto c = e["colour"].get<std::string>();
            if (c == "red") colours.push_back(Colour::Red);
            else if (c == "blue") colours.push_back(Colour::Blue);
            else parse_error("colour must be \"red\" or \"blue\", got '" + c + "'");
        } else {
            all_coloured = false;
        }
    }
    if (all_coloured && g.edge_count() > 0) return FramedGraph(std::move(g), std::move(colours));
    if (!j.contains("orders")) parse_error("graph JSON needs a colour on every edge, or \"orders\"");

    std::map<int, VertexOrder> orders;
    for (const auto& [name, o] : j["orders"].items()) {
        auto v = g.vertex_index(name);
        if (!v) parse_error("orders: unknown vertex '" + name + "'");
        VertexOrder vo;
        for (const char* side : {"in", "out"}) {
            if (!o.contains(side)) continue;
            auto& dst = std::string(side) == "in" ? vo.in : vo.out;
            for (const auto& id : o[side]) {
                auto e = g.edge_index(id.get<std::string>());
                if (!e) parse_error("orders: unknown edge '" + id.get<std::string>() + "'");
                dst.push_back(*e);
            }
        }
        orders[*v] = std::move(vo);
    }
    return FramedGraph(std::move(g), std::move(orders));
}

std::string graph_json(const FramedGraph& fg) {
    const auto& g = fg.graph();
    json j;
    j["vertices"] = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.name(v));
    j["edges"] = json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        json je;
        je["id"] = g.edge(e).id;
        je["tail"] = g.name(g.edge(e).tail);
        je["head"] = g.name(g.edge(e).head);
        if (fg.has_colouring()) je["colour"] = colour_name(fg.colour(e));
        j["edges"].push_back(je);
    }
    if (!fg.has_colouring()) {
        json jo = json::object();
        for (const auto& [v, o] : fg.orders()) {
            json x;
            x["in"] = json::array();
            x["out"] = json::array();
            for (int e : o.in) x["in"].push_back(g.edge(e).id);
            for (int e : o.out) x["out"].push_back(g.edge(e).id);
            jo[g.name(v)] = x;
        }
        j["orders"] = jo;
    }
    return dump(j);
}

std::optional<FramedGraph> builtin_graph(const std::string& name) {
    if (name == "x") return x_graph();
    if (name == "xx") return xx_graph();
    auto colon = name.find(':');
    if (colon == std::string::npos) return std::nullopt;
    auto kind = name.substr(0, colon);
    if (kind != "cycle" && kind != "hcp" && kind != "path") return std::nullopt;
    auto args = parse_ints(name.substr(colon + 1), ':');
    if (kind == "cycle") {
        if (args.size() != 1 || args[0] < 1) parse_error("cycle:n needs n >= 1");
        return blossomed_cycle(args[0]);
    }
    if (kind == "hcp") {
        if (args.size() != 2 || args[0] < 1 || args[1] < 1) parse_error("hcp:c:p needs c, p >= 1");
        return h_cp(args[0], args[1]);
    }
    if (args.size() != 1 || args[0] < 0) parse_error("path:k needs k >= 0");
    return path_graph(args[0]);
}

FramedGraph load_graph(const std::string& source) {
    if (auto b = builtin_graph(source)) return std::move(*b);
    std::ifstream in(source);
    if (!in) parse_error("'" + source + "' is neither a builtin graph nor a readable file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph_json(ss.str());
}

std::string graph_dot(const FramedGraph& fg) {
    const auto& g = fg.graph();
    std::ostringstream os;
    os << "digraph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) os << "  \"" << g.name(v) << "\";\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        os << "  \"" << g.name(ed.tail) << "\" -> \"" << g.name(ed.head) << "\" [label=\"" << ed.id << "\"";
        if (fg.has_colouring()) os << ", color=" << colour_name(fg.colour(e));
        else os << ", taillabel=\"" << fg.rank_out(e) << "\", headlabel=\"" << fg.rank_in(e) << "\"";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string quiver_json(const Quiver& q) {
    json j;
    j["vertices"] = q.vertices;
    j["arrows"] = json::array();
    for (const auto& a : q.arrows) {
        json ja;
        ja["id"] = a.id;
        ja["s"] = q.vertices[a.s];
        ja["t"] = q.vertices[a.t];
        j["arrows"].push_back(ja);
    }
    j["relations"] = json::array();
    for (auto [a, b] : q.relations) j["relations"].push_back({q.arrows[a].id, q.arrows[b].id});
    return dump(j);
}

std::string quiver_dot(const Quiver& q) {
    std::ostringstream os;
    os << "digraph Q {\n";
    for (const auto& v : q.vertices) os << "  \"" << v << "\";\n";
    for (const auto& a : q.arrows)
        os << "  \"" << q.vertices[a.s] << "\" -> \"" << q.vertices[a.t] << "\" [label=\"" << a.id << "\"];\n";
    for (auto [a, b] : q.relations)
        os << "  // relation " << q.arrows[a].id << " " << q.arrows[b].id << "\n";
    os << "}\n";
    return os.str();
}

std::string routes_json(const FramedGraph& fg, const RouteSystem& rs) {
    const auto& g = fg.graph();
    json j = json::array();
    for (std::size_t i = 0; i < rs.routes.size(); ++i) {
        const auto& r = rs.routes[i];
        json jr;
        jr["index"] = i;
        jr["kind"] = r.is_cycle() ? "cycle" : "path";
        jr["exceptional"] = static_cast<bool>(rs.exceptional[i]);
        jr["edges"] = json::array();
        for (int e : r.edges) jr["edges"].push_back(g.edge(e).id);
        j.push_back(jr);
    }
    return dump(j);
}

std::string routes_csv(const FramedGraph& fg, const RouteSystem& rs) {
    const auto& g = fg.graph();
    std::ostringstream os;
    os << "index,kind,exceptional,edges\n";
    for (std::size_t i = 0; i < rs.routes.size(); ++i) {
        const auto& r = rs.routes[i];
        os << i << ',' << (r.is_cycle() ? "cycle" : "path") << ',' << (rs.exceptional[i] ? 1 : 0) << ',';
        for (std::size_t k = 0; k < r.edges.size(); ++k) os << (k ? " " : "") << g.edge(r.edges[k]).id;
        os << '\n';
    }
    return os.str();
}

std::string cliques_json(const std::vector<Clique>& cliques) {
    json j = json::array();
    for (const auto& k : cliques) j.push_back(k);
    return dump(j);
}

QVec parse_flow_json(const Digraph& g, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error(std::string("flow JSON: ") + e.what());
    }
    if (!j.is_object()) parse_error("flow JSON must be an object {edge id: value}");
    QVec f(g.edge_count(), Rational(0));
    for (const auto& [id, v] : j.items()) {
        auto e = g.edge_index(id);
        if (!e) parse_error("flow JSON: unknown edge '" + id + "'");
        f[*e] = json_rational(v);
    }
    return f;
}

std::string decomposition_json(const std::map<int, Rational>& d) {
    json j = json::object();
    for (const auto& [r, c] : d) j[std::to_string(r)] = to_string(c);
    return dump(j);
}

std::string flows_json(const Digraph& g, const std::vector<IVec>& flows) {
    json j = json::array();
    for (const auto& f : flows) {
        json jf = json::object();
        for (int e = 0; e < g.edge_count(); ++e) jf[g.edge(e).id] = f[e];
        j.push_back(jf);
    }
    return dump(j);
}

std::string flows_csv(const Digraph& g, const std::vector<IVec>& flows) {
    std::ostringstream os;
    for (int e = 0; e < g.edge_count(); ++e) os << (e ? "," : "") << g.edge(e).id;
    os << '\n';
    for (const auto& f : flows) {
        for (int e = 0; e < g.edge_count(); ++e) os << (e ? "," : "") << f[e];
        os << '\n';
    }
    return os.str();
}

std::string fan_json(const Fan& f) {
    json j;
    j["dim"] = f.dim;
    j["rays"] = f.rays;
    j["cones"] = f.cones;
    return dump(j);
}

std::string polytope_json(int dim, const QMat& points) {
    json j;
    j["dim"] = dim;
    j["points"] = json::array();
    for (const auto& p : points) {
        json jp = json::array();
        for (const auto& x : p) jp.push_back(rational_json(x));
        j["points"].push_back(jp);
    }
    return dump(j);
}

std::string fan_svg(const Fan& f) {
    if (f.dim != 2) throw Error(Errc::Precondition, "SVG output needs a 2-dimensional fan, got dimension " + std::to_string(f.dim));
    std::vector<std::pair<double, double>> unit;
    for (const auto& r : f.rays) {
        if (r.size() != 2) throw Error(Errc::Precondition, "fan rays must have 2 coordinates");
        double x = static_cast<double>(r[0]), y = static_cast<double>(r[1]);
        double n = std::hypot(x, y);
        unit.emplace_back(x / n, y / n);
    }
    std::ostringstream os;
    os << kSvgHead;
    for (const auto& c : f.cones) {
        if (c.size() != 2) continue;
        const auto& [x1, y1] = unit[c[0]];
        const auto& [x2, y2] = unit[c[1]];
        os << "<polygon class=\"cone\" points=\"0,0 " << fmt(x1) << ',' << fmt(y1) << ' ' << fmt(x2) << ','
           << fmt(y2) << "\" fill=\"#9ecae1\" fill-opacity=\"0.4\" stroke=\"none\"/>\n";
    }
    for (std::size_t i = 0; i < unit.size(); ++i)
        os << "<line class=\"ray\" data-index=\"" << i << "\" x1=\"0\" y1=\"0\" x2=\"" << fmt(unit[i].first)
           << "\" y2=\"" << fmt(unit[i].second) << "\" stroke=\"black\" stroke-width=\"0.02\"/>\n";
    os << kSvgTail;
    return os.str();
}

std::string polygon_svg(const QMat& ccw) {
    if (ccw.empty() || ccw[0].size() != 2) throw Error(Errc::Precondition, "SVG output needs a polygon in the plane");
    std::vector<std::pair<double, double>> pts;
    double cx = 0, cy = 0;
    for (const auto& p : ccw) {
        pts.emplace_back(static_cast<double>(p[0]), static_cast<double>(p[1]));
        cx += pts.back().first;
        cy += pts.back().second;
    }
    cx /= pts.size();
    cy /= pts.size();
    double radius = 0;
    for (auto& [x, y] : pts) {
        x -= cx;
        y -= cy;
        radius = std::max(radius, std::hypot(x, y));
    }
    if (radius == 0) radius = 1;
    std::ostringstream os;
    os << kSvgHead << "<polygon class=\"polytope\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
        os << (i ? " " : "") << fmt(pts[i].first / radius) << ',' << fmt(pts[i].second / radius);
    os << "\" fill=\"#fdd0a2\" stroke=\"black\" stroke-width=\"0.02\"/>\n";
    for (const auto& [x, y] : pts)
        os << "<circle class=\"vertex\" cx=\"" << fmt(x / radius) << "\" cy=\"" << fmt(y / radius) << "\" r=\"0.03\"/>\n";
    os << kSvgTail;
    return os.str();
}

int svg_ray_count(const std::string& svg) {
    int n = 0;
    const std::string tag = "class=\"ray\"";
    for (auto pos = svg.find(tag); pos != std::string::npos; pos = svg.find(tag, pos + tag.size())) ++n;
    return n;
}

}  // namespace flowfan::io
