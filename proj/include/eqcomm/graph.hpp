#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqcomm {

// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected multigraph on vertices 0..k-1. Parallel edges are capped at
// multiplicity 2 (a doubled edge models a bridge taken twice).
class Graph {
public:
    Graph() = default;
    explicit Graph(int k) : k_(k) {}

    int vertex_count() const { return k_; }

    // Number of edge copies (doubled edges count twice).
    int edge_count() const;

    // Number of distinct underlying edges.
    int underlying_edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    int multiplicity(int edge_index) const { return mult_[edge_index]; }
    int multiplicity(int u, int v) const;

    bool is_simple() const;
    bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }

    // Adds one copy of {u,v}; throws on self-loops, out-of-range vertices,
    // or a third parallel copy.
    void add_edge(int u, int v);

    // Every edge copy as its own entry, in sorted edge order. Copy indices
    // are the variable/cut indexing used throughout bounds.
    std::vector<Edge> edge_copies() const;

    // Neighbours de-duplicated, ascending.
    std::vector<std::vector<int>> adjacency() const;

    int degree(int v) const;  // counts multiplicity
    bool is_connected() const;

    std::string to_edge_list() const;

private:
    int k_ = 0;
    std::vector<Edge> edges_;  // sorted, unique
    std::vector<int> mult_;    // parallel to edges_, values 1 or 2
};

// Canonical vertex bipartition: `side` is the subset not containing vertex 0,
// given as a bitmask over vertices. `crossing` lists edge-copy indices with
// exactly one endpoint inside.
struct Cut {
    std::uint32_t side = 0;
    std::vector<int> crossing;
};

// Ears as vertex sequences. ears[0] is a cycle (closing edge implicit);
// every later ear is a path whose endpoints lie on earlier ears and whose
// internal vertices are new.
struct EarDecomposition {
    std::vector<std::vector<int>> ears;
    int vertex_count = 0;

    int ear_count() const { return static_cast<int>(ears.size()); }
};

// Bijection vertices -> {1..k} following the ear-by-ear numbering scheme.
struct VertexNumbering {
    std::vector<int> number;     // vertex id -> 1..k
    std::vector<int> vertex_at;  // 1..k -> vertex id; slot 0 unused

    int vertex_count() const { return static_cast<int>(number.size()); }
};

// One direction per underlying edge of a simple graph.
struct Orientation {
    std::vector<std::pair<int, int>> arcs;  // (from, to), aligned with Graph::edges()
};

struct BlockDecomposition {
    std::vector<Graph> blocks;
    std::vector<std::vector<int>> vertex_maps;  // block-local id -> original id
    std::vector<int> cut_vertices;              // ascending
};

// Witness that a graph is not 2-connected: a separating vertex or a bridge
// (for bridges both endpoints are set).
struct NonBiconnectedWitness {
    std::optional<int> cut_vertex;
    std::optional<Edge> bridge;
    std::string reason;
};

// Thrown when an exhaustive routine is asked to exceed its configured limit.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultVertexLimit = 16;

// --- parsing and the built-in zoo ---

// Text format: header "k m", then m lines "u v"; '#' starts a comment.
// A repeated edge line raises multiplicity to 2.
Graph parse_graph(const std::string& text);

// Named constructors: "petersen", "cycle:k", "complete:k", "path:k",
// "complete_bipartite:s:t", "theta:a:b:c" (three disjoint paths of a, b and
// c edges joining two branch vertices).
Graph named_graph(const std::string& name);

Graph make_cycle(int k);
Graph make_path(int k);
Graph make_complete(int k);
Graph make_complete_bipartite(int s, int t);
Graph make_theta(int a, int b, int c);
Graph make_petersen();

// --- structural algorithms ---

BlockDecomposition blocks(const Graph& g);

bool is_two_edge_connected(const Graph& g);

bool is_biconnected(const Graph& g);

// Witness when is_biconnected fails (cut vertex or bridge); nullopt when the
// graph is in fact 2-connected.
std::optional<NonBiconnectedWitness> biconnectivity_witness(const Graph& g);

// Requires a simple 2-connected graph on >= 3 vertices. Deterministic:
// chain decomposition along a DFS that visits neighbours in ascending order.
EarDecomposition ear_decomposition(const Graph& g);

VertexNumbering ear_numbering(const EarDecomposition& d);

// Initial cycle oriented cyclically, each later ear a directed path running
// from its higher-numbered endpoint to the lower one.
Orientation positive_indegree_orientation(const Graph& g);

std::vector<int> indegrees(const Graph& g, const Orientation& o);

// All 2^(k-1) - 1 canonical bipartitions with their crossing edge copies.
std::vector<Cut> enumerate_cuts(const Graph& g, int vertex_limit = kDefaultVertexLimit);

int independence_number(const Graph& g, int vertex_limit = kDefaultVertexLimit);

bool is_hamiltonian(const Graph& g, int vertex_limit = kDefaultVertexLimit);

}  // namespace eqcomm
