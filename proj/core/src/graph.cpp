#include "liebasis/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace liebasis {

Graph::Graph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges, int pivot_id)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), pivot_id_(pivot_id) {
    if (vertices_.empty()) throw InputError("graph needs at least one vertex");
    std::set<int> ids;
    for (const auto& v : vertices_) {
        if (v.label.empty()) throw InputError("vertex label must be nonempty");
        if (!ids.insert(v.id).second)
            throw InputError("duplicate vertex id " + std::to_string(v.id));
    }
    if (!ids.count(pivot_id_)) throw InputError("pivot id not among vertices");
    if (edges_.size() + 1 != vertices_.size())
        throw InputError("graph must have exactly one edge fewer than vertices");
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : edges_) {
        if (!ids.count(e.from) || !ids.count(e.to))
            throw InputError("edge endpoint is not a vertex id");
        if (e.from == e.to) throw InputError("self-loop on vertex " + std::to_string(e.from));
        auto key = std::minmax(e.from, e.to);
        if (!pairs.insert(key).second)
            throw InputError("repeated edge between " + std::to_string(e.from) + " and " +
                             std::to_string(e.to));
    }
    // With n-1 distinct undirected edges and no loops, connectivity suffices
    // for tree shape.
    if (static_cast<int>(traversal_order().size()) != size())
        throw InputError("graph is not connected");
}

int Graph::index_of(int id) const {
    for (int i = 0; i < size(); ++i)
        if (vertices_[i].id == id) return i;
    throw InputError("unknown vertex id " + std::to_string(id));
}

const std::string& Graph::label_of(int id) const { return vertices_[index_of(id)].label; }

std::vector<std::string> Graph::label_multiset() const {
    std::vector<std::string> out;
    out.reserve(size());
    for (const auto& v : vertices_) out.push_back(v.label);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Graph::traversal_order() const {
    // Adjacency with neighbours in vertex input order.
    std::map<int, std::vector<int>> adj;
    for (const auto& v : vertices_) adj[v.id];
    for (const auto& e : edges_) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    std::map<int, int> input_pos;
    for (int i = 0; i < size(); ++i) input_pos[vertices_[i].id] = i;
    for (auto& [id, ns] : adj)
        std::sort(ns.begin(), ns.end(),
                  [&](int a, int b) { return input_pos[a] < input_pos[b]; });

    std::vector<int> order;
    std::set<int> seen{pivot_id_};
    std::deque<int> queue{pivot_id_};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int n : adj[v])
            if (seen.insert(n).second) queue.push_back(n);
    }
    return order;
}

namespace {

std::string canonical_rec(const Graph& g, const std::map<int, std::vector<std::pair<int, char>>>& adj,
                          int v, int parent) {
    std::vector<std::string> children;
    for (const auto& [n, dir] : adj.at(v))
        if (n != parent) children.push_back(dir + canonical_rec(g, adj, n, v));
    std::sort(children.begin(), children.end());
    std::string out = g.label_of(v) + "(";
    for (size_t i = 0; i < children.size(); ++i) {
        if (i) out += ',';
        out += children[i];
    }
    out += ')';
    return out;
}

}  // namespace

std::string Graph::canonical_string() const {
    std::map<int, std::vector<std::pair<int, char>>> adj;
    for (const auto& v : vertices_) adj[v.id];
    for (const auto& e : edges_) {
        adj[e.from].emplace_back(e.to, '>');   // edge leaves v
        adj[e.to].emplace_back(e.from, '<');   // edge enters v
    }
    return canonical_rec(*this, adj, pivot_id_, -1);
}

std::string Graph::to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : vertices_)
        j["vertices"].push_back({{"id", v.id}, {"label", v.label}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : edges_)
        j["edges"].push_back({{"from", e.from}, {"to", e.to}});
    j["pivot"] = pivot_id_;
    return j.dump();
}

Graph Graph::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    try {
        std::vector<GraphVertex> vertices;
        for (const auto& v : j.at("vertices"))
            vertices.push_back({v.at("id").get<int>(), v.at("label").get<std::string>()});
        std::vector<GraphEdge> edges;
        for (const auto& e : j.at("edges"))
            edges.push_back({e.at("from").get<int>(), e.at("to").get<int>()});
        return Graph(std::move(vertices), std::move(edges), j.at("pivot").get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON structure: ") + e.what());
    }
}

}  // namespace liebasis
