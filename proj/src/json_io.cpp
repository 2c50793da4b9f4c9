#include "dgraph/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dgraph::io {

using nlohmann::json;

std::string graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph json needs \"vertices\" and \"edges\"");
    Graph g;
    for (const auto& v : j["vertices"]) g.add_vertex(v.get<VertexId>());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        g.add_edge(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return g;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return graph_from_json(ss.str());
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << graph_to_json(g) << "\n";
}

std::string function_to_json(const VertexFunction& f) {
    json vals = json::object();
    for (const auto& [v, r] : f.values) vals[std::to_string(v)] = r.str();
    json j;
    j["values"] = std::move(vals);
    return j.dump();
}

VertexFunction function_from_json(const std::string& text) {
    json j = json::parse(text);
    VertexFunction f;
    for (const auto& [k, v] : j.at("values").items()) {
        Rational r = v.is_number_integer() ? Rational(v.get<long long>())
                                           : Rational::parse(v.get<std::string>());
        f.values[std::stoi(k)] = r;
    }
    return f;
}

VertexFunction load_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return function_from_json(ss.str());
}

std::string cycle_to_json(const Cycle& c) {
    json j;
    j["cycle"] = c.vertices;
    return j.dump();
}

Cycle cycle_from_json(const std::string& text) {
    json j = json::parse(text);
    Cycle c;
    for (const auto& v : j.at("cycle")) c.vertices.push_back(v.get<VertexId>());
    return c;
}

std::string classification_to_json(const Classification& c) {
    json j;
    j["tag"] = tag_name(c.tag);
    j["dimension"] = c.dimension;
    json tags = json::array();
    for (const auto& td : c.all_tags) {
        json t;
        t["tag"] = tag_name(td.tag);
        t["dimension"] = td.dim;
        tags.push_back(std::move(t));
    }
    j["tags"] = std::move(tags);
    if (!c.reason.empty()) j["reason"] = c.reason;
    return j.dump();
}

namespace {

json edge_to_json(const Edge& e) { return json::array({e.first, e.second}); }

Edge edge_from_json(const json& j) { return make_edge(j[0].get<VertexId>(), j[1].get<VertexId>()); }

}  // namespace

std::string trace_to_json(const ConstructionTrace& t) {
    json steps = json::array();
    for (const auto& step : t.steps) {
        json s;
        if (const auto* carve = std::get_if<CarveCavityStep>(&step)) {
            s["kind"] = "carve_cavity";
            s["center"] = carve->center;
            s["sphere"] = carve->sphere;
        } else if (const auto* ab = std::get_if<AbsorbBoxedPointStep>(&step)) {
            s["kind"] = "absorb_boxed_point";
            s["point"] = ab->point;
            s["absorbed"] = ab->absorbed;
        } else if (const auto* dr = std::get_if<DrillHoleStep>(&step)) {
            s["kind"] = "drill_hole";
            s["edge"] = edge_to_json(dr->removed_edge);
            json rs = json::array();
            for (const auto& simplex : dr->removed_simplices) rs.push_back(simplex);
            s["removed_simplices"] = std::move(rs);
        } else if (const auto* bc = std::get_if<BoundaryCycleStep>(&step)) {
            s["kind"] = "boundary_cycle";
            s["component"] = bc->component;
            s["cycle"] = bc->cycle;
        } else if (const auto* br = std::get_if<BridgeStep>(&step)) {
            s["kind"] = "bridge";
            s["face_a"] = br->bridge.face_a;
            s["face_b"] = br->bridge.face_b;
            json cross = json::array();
            for (const auto& e : br->bridge.cross_edges) cross.push_back(edge_to_json(e));
            s["cross_edges"] = std::move(cross);
            s["remove"] = {edge_to_json(br->bridge.remove_edges[0]),
                           edge_to_json(br->bridge.remove_edges[1])};
            s["insert"] = {edge_to_json(br->bridge.insert_edges[0]),
                           edge_to_json(br->bridge.insert_edges[1])};
        } else if (const auto* de = std::get_if<DetourStep>(&step)) {
            s["kind"] = "detour";
            s["vertex"] = de->vertex;
            s["replaced"] = edge_to_json(de->replaced);
        }
        steps.push_back(std::move(s));
    }
    json j;
    j["steps"] = std::move(steps);
    return j.dump();
}

ConstructionTrace trace_from_json(const std::string& text) {
    json j = json::parse(text);
    ConstructionTrace t;
    for (const auto& s : j.at("steps")) {
        std::string kind = s.at("kind").get<std::string>();
        if (kind == "carve_cavity") {
            CarveCavityStep st;
            st.center = s.at("center").get<VertexId>();
            for (const auto& v : s.at("sphere")) st.sphere.push_back(v.get<VertexId>());
            t.steps.push_back(std::move(st));
        } else if (kind == "absorb_boxed_point") {
            t.steps.push_back(AbsorbBoxedPointStep{s.at("point").get<VertexId>(),
                                                   s.at("absorbed").get<VertexId>()});
        } else if (kind == "drill_hole") {
            DrillHoleStep st;
            st.removed_edge = edge_from_json(s.at("edge"));
            for (const auto& simplex : s.at("removed_simplices")) {
                Simplex x;
                for (const auto& v : simplex) x.push_back(v.get<VertexId>());
                st.removed_simplices.push_back(std::move(x));
            }
            t.steps.push_back(std::move(st));
        } else if (kind == "boundary_cycle") {
            BoundaryCycleStep st;
            st.component = s.at("component").get<int>();
            for (const auto& v : s.at("cycle")) st.cycle.push_back(v.get<VertexId>());
            t.steps.push_back(std::move(st));
        } else if (kind == "bridge") {
            BridgeStep st;
            for (const auto& v : s.at("face_a")) st.bridge.face_a.push_back(v.get<VertexId>());
            for (const auto& v : s.at("face_b")) st.bridge.face_b.push_back(v.get<VertexId>());
            for (const auto& e : s.at("cross_edges")) st.bridge.cross_edges.push_back(edge_from_json(e));
            st.bridge.remove_edges = {edge_from_json(s.at("remove")[0]),
                                      edge_from_json(s.at("remove")[1])};
            st.bridge.insert_edges = {edge_from_json(s.at("insert")[0]),
                                      edge_from_json(s.at("insert")[1])};
            t.steps.push_back(std::move(st));
        } else if (kind == "detour") {
            t.steps.push_back(DetourStep{s.at("vertex").get<VertexId>(),
                                         edge_from_json(s.at("replaced"))});
        } else {
            throw std::invalid_argument("unknown trace step kind: " + kind);
        }
    }
    return t;
}

std::string level_surface_to_json(const LevelSurface& s) {
    json j = json::parse(graph_to_json(s.graph));
    json carrier = json::object();
    for (const auto& [v, simplex] : s.carrier) carrier[std::to_string(v)] = simplex;
    j["carrier"] = std::move(carrier);
    return j.dump();
}

std::string refinement_carrier_to_json(const Refinement& r) {
    json carrier = json::object();
    for (const auto& [v, simplex] : r.carrier) carrier[std::to_string(v)] = simplex;
    json j;
    j["carrier"] = std::move(carrier);
    return j.dump();
}

std::string graph_to_dot(const Graph& g, const Cycle* cycle) {
    std::set<Edge> on_cycle;
    if (cycle)
        for (std::size_t i = 0; i < cycle->vertices.size(); ++i)
            on_cycle.insert(make_edge(cycle->vertices[i],
                                      cycle->vertices[(i + 1) % cycle->vertices.size()]));
    std::ostringstream out;
    out << "graph g {\n  node [shape=circle];\n";
    for (VertexId v : g.vertices()) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (on_cycle.count({u, v})) out << " [color=red, penwidth=2.5]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace dgraph::io
