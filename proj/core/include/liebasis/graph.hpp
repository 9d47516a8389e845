#pragma once

#include "liebasis/types.hpp"

#include <string>
#include <vector>

namespace liebasis {

struct GraphVertex {
    int id;
    std::string label;
};

struct GraphEdge {
    int from, to;  // vertex ids
};

// A connected acyclic graph with directed edges, labelled vertices and a
// distinguished pivot vertex.  Immutable after construction; the constructor
// validates tree shape (n-1 edges, connected, no self-loops or doubled pairs).
class Graph {
public:
    Graph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges, int pivot_id);

    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<GraphVertex>& vertices() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    int pivot_id() const { return pivot_id_; }

    const std::string& label_of(int id) const;

    // Sorted label multiset, for the degree-matching fast path of the pairing.
    std::vector<std::string> label_multiset() const;

    // Pivot-rooted serialization, invariant under vertex renumbering and
    // reordering: equal strings iff the graphs are isomorphic respecting
    // labels, edge directions and pivot.
    std::string canonical_string() const;

    // Traversal indices from the pivot (breadth-first, neighbours in input
    // order); position i holds the id of the i-th vertex reached.
    std::vector<int> traversal_order() const;

    std::string to_json() const;
    static Graph from_json(const std::string& text);

private:
    int index_of(int id) const;

    std::vector<GraphVertex> vertices_;
    std::vector<GraphEdge> edges_;
    int pivot_id_;
};

}  // namespace liebasis
