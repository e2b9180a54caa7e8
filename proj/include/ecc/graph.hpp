#pragma once

#include <string>
#include <vector>

namespace ecc {

// An unordered edge {u, v}, stored with u < v.
struct EdgeRef {
    int u = 0;
    int v = 0;

    EdgeRef() = default;
    EdgeRef(int a, int b);

    bool operator==(const EdgeRef&) const = default;
    bool operator<(const EdgeRef& o) const {
        return u != o.u ? u < o.u : v < o.v;
    }
};

// Simple undirected graph with dense symmetric adjacency.
class Graph {
public:
    explicit Graph(int order);

    int order() const { return order_; }
    int edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const { return adj_[idx(u, v)]; }
    bool has_edge(const EdgeRef& e) const { return adjacent(e.u, e.v); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::vector<EdgeRef> edges() const;
    std::vector<int> neighbors(int v) const;

    bool operator==(const Graph&) const = default;

private:
    int order_;
    int edge_count_ = 0;
    std::vector<char> adj_;  // row-major order_ x order_

    std::size_t idx(int u, int v) const;
};

// Parameters of K_{a_1} o_k K_{a_2} o_k ... o_k K_{a_l}: l complete graphs
// glued along a shared K_k. Vertices 0..k-1 are the shared clique; each part
// then contributes a_i - k private vertices, in order.
struct CoalescenceSpec {
    int k = 0;
    std::vector<int> parts;

    int total_order() const;
    int total_size() const;
    void validate() const;  // throws std::invalid_argument on violation

    // First private vertex of part i (0-based); part i occupies
    // [part_begin(i), part_begin(i) + parts[i] - k).
    int part_begin(int i) const;
};

// K_{2n} o_n K_{2n} o_n ... o_n K_{2n}, l copies.
struct FamilySpec {
    int n = 0;
    int l = 0;

    CoalescenceSpec to_coalescence() const;
    void validate() const;
};

// Structural position of an edge relative to the shared clique.
enum class EdgeCase {
    CliqueInternal,   // both endpoints in the shared clique
    CliqueIncident,   // exactly one endpoint in the shared clique
    CliqueExternal,   // both endpoints private to one part
};

const char* to_string(EdgeCase c);

struct DistanceInfo {
    std::vector<std::vector<int>> dist;  // hop counts, symmetric, zero diagonal
    std::vector<int> ecc;                // ecc[v] = max_u dist[v][u]
    int diameter = 0;
};

Graph build_complete(int n);
Graph build_coalescence(const CoalescenceSpec& spec);
Graph build_family(const FamilySpec& spec);
Graph build_friendship(int m);

// Returns a copy of g with e removed. Throws if e is not an edge. If
// require_connected is set, throws when the result is disconnected.
Graph delete_edge(const Graph& g, const EdgeRef& e, bool require_connected = false);

bool is_connected(const Graph& g);

// BFS all-pairs distances. Throws std::invalid_argument on disconnected input.
DistanceInfo distances(const Graph& g);

EdgeCase classify_edge(const CoalescenceSpec& spec, const EdgeRef& e);

// The cell structure used throughout: shared clique first, then one cell of
// private vertices per part.
std::vector<std::vector<int>> natural_partition(const CoalescenceSpec& spec);

// Text format: first line "N M", then M lines "u v" with u < v.
std::string write_graph(const Graph& g);
Graph read_graph(const std::string& text);
Graph read_graph_file(const std::string& path);

}  // namespace ecc
