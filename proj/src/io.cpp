#include "hoffman/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hoffman {

namespace {

Json edge_list(const std::vector<Edge>& edges) {
    Json a = Json::array();
    for (auto [u, v] : edges) a.push_back({u, v});
    return a;
}

std::vector<Edge> read_edges(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("edges must be an array");
    std::vector<Edge> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument("each edge must be a pair of integers");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

std::vector<Vertex> read_ids(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw std::invalid_argument(std::string("missing array: ") + key);
    std::vector<Vertex> out;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer()) throw std::invalid_argument("vertex ids must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

int read_n(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("graph object needs an integer \"n\"");
    int n = j["n"].get<int>();
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    return n;
}

}  // namespace

Json to_json(const Graph& g) { return Json{{"n", g.order()}, {"edges", edge_list(g.edges())}}; }

Json to_json(const EdgeSignedGraph& s) {
    return Json{{"n", s.order()}, {"plus", edge_list(s.plus_edges())}, {"minus", edge_list(s.minus_edges())}};
}

Json to_json(const HoffmanGraph& h) {
    return Json{{"slim", h.slims()}, {"fat", h.fats()}, {"edges", edge_list(h.graph().edges())}};
}

Json to_json(const HoffmanGraph& h, const ReducedRep& psi) {
    Json vectors = Json::object();
    for (int i = 0; i < h.slim_count(); ++i) vectors[std::to_string(h.slims()[i])] = psi.vectors.at(i);
    return Json{{"dim", psi.dim}, {"vectors", vectors}};
}

Json to_json(const FullRep& phi) {
    Json vectors = Json::object();
    for (std::size_t v = 0; v < phi.vectors.size(); ++v) vectors[std::to_string(v)] = phi.vectors[v];
    return Json{{"dim", phi.dim}, {"vectors", vectors}};
}

Json to_json(const SymmetricIntMatrix& m) { return Json(m.rows()); }

Graph graph_from_json(const Json& j) {
    int n = read_n(j);
    if (!j.contains("edges")) throw std::invalid_argument("graph object needs \"edges\"");
    return Graph(n, read_edges(j["edges"]));
}

EdgeSignedGraph signed_graph_from_json(const Json& j) {
    int n = read_n(j);
    if (!j.contains("plus") || !j.contains("minus")) throw std::invalid_argument("signed graph needs plus and minus");
    return EdgeSignedGraph(n, read_edges(j["plus"]), read_edges(j["minus"]));
}

HoffmanGraph hoffman_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("Hoffman graph must be a JSON object");
    if (!j.contains("slim") && j.contains("n")) return HoffmanGraph(graph_from_json(j), std::vector<Label>(read_n(j), Label::Slim));
    auto slims = read_ids(j, "slim");
    auto fats = read_ids(j, "fat");
    if (!j.contains("edges")) throw std::invalid_argument("Hoffman graph needs \"edges\"");
    return HoffmanGraph::from_lists(slims, fats, read_edges(j["edges"]));
}

ReducedRep reduced_rep_from_json(const HoffmanGraph& h, const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer() || !j.contains("vectors") ||
        !j["vectors"].is_object())
        throw std::invalid_argument("representation needs \"dim\" and a \"vectors\" object");
    ReducedRep r{j["dim"].get<int>(), std::vector<IntVector>(h.slim_count())};
    if (static_cast<int>(j["vectors"].size()) != h.slim_count())
        throw std::invalid_argument("representation must list every slim vertex once");
    for (const auto& [key, value] : j["vectors"].items()) {
        int id = -1;
        try {
            id = std::stoi(key);
        } catch (const std::exception&) {
            throw std::invalid_argument("vector keys must be vertex ids");
        }
        if (id < 0 || id >= h.order() || !h.is_slim(id)) throw std::invalid_argument("vector key is not a slim vertex");
        r.vectors[h.slim_index(id)] = value.get<IntVector>();
    }
    return r;
}

HoffmanGraph read_hoffman_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    try {
        return hoffman_from_json(j);
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("invalid Hoffman graph: ") + e.what());
    }
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const HoffmanGraph& h) {
    std::ostringstream out;
    out << "graph H {\n";
    for (Vertex v = 0; v < h.order(); ++v)
        out << "  " << v << (h.is_fat(v) ? " [shape=square, style=filled];\n" : " [shape=circle];\n");
    for (auto [u, v] : h.graph().edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const EdgeSignedGraph& s) {
    std::ostringstream out;
    out << "graph S {\n";
    for (Vertex v = 0; v < s.order(); ++v) out << "  " << v << ";\n";
    const auto& edges = s.underlying().edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        out << "  " << edges[i].first << " -- " << edges[i].second
            << (s.signs()[i] > 0 ? " [style=solid, label=\"+\"];\n" : " [style=dashed, label=\"-\"];\n");
    out << "}\n";
    return out.str();
}

}  // namespace hoffman
