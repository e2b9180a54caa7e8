#include "ecc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ecc {

EdgeRef::EdgeRef(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("EdgeRef: loop (u == v)");
    if (a < 0 || b < 0) throw std::invalid_argument("EdgeRef: negative vertex index");
}

Graph::Graph(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("Graph: order must be positive");
    adj_.assign(static_cast<std::size_t>(order) * order, 0);
}

std::size_t Graph::idx(int u, int v) const {
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw std::out_of_range("Graph: vertex index out of range");
    return static_cast<std::size_t>(u) * order_ + v;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("Graph: loop edges not allowed");
    if (!adj_[idx(u, v)]) {
        adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
        ++edge_count_;
    }
}

void Graph::remove_edge(int u, int v) {
    if (!adjacent(u, v)) throw std::invalid_argument("Graph: removing a non-edge");
    adj_[idx(u, v)] = adj_[idx(v, u)] = 0;
    --edge_count_;
}

std::vector<EdgeRef> Graph::edges() const {
    std::vector<EdgeRef> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (adjacent(u, v)) out.push_back(EdgeRef(u, v));
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < order_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

int CoalescenceSpec::total_order() const {
    int n = k;
    for (int a : parts) n += a - k;
    return n;
}

int CoalescenceSpec::total_size() const {
    int m = 0;
    for (int a : parts) m += a * (a - 1) / 2;
    m -= static_cast<int>(parts.size() - 1) * (k * (k - 1) / 2);
    return m;
}

void CoalescenceSpec::validate() const {
    if (parts.size() < 2) throw std::invalid_argument("CoalescenceSpec: need at least two parts");
    if (k < 1) throw std::invalid_argument("CoalescenceSpec: clique size must be positive");
    for (int a : parts) {
        if (a < 3) throw std::invalid_argument("CoalescenceSpec: every part order must be >= 3");
        if (k >= a) throw std::invalid_argument("CoalescenceSpec: clique size must be < every part order");
    }
}

int CoalescenceSpec::part_begin(int i) const {
    int off = k;
    for (int j = 0; j < i; ++j) off += parts[j] - k;
    return off;
}

CoalescenceSpec FamilySpec::to_coalescence() const {
    validate();
    return CoalescenceSpec{n, std::vector<int>(static_cast<std::size_t>(l), 2 * n)};
}

void FamilySpec::validate() const {
    if (n < 2) throw std::invalid_argument("FamilySpec: n must be >= 2");
    if (l < 2) throw std::invalid_argument("FamilySpec: l must be >= 2");
}

const char* to_string(EdgeCase c) {
    switch (c) {
        case EdgeCase::CliqueInternal: return "clique_internal";
        case EdgeCase::CliqueIncident: return "clique_incident";
        case EdgeCase::CliqueExternal: return "clique_external";
    }
    return "?";
}

Graph build_complete(int n) {
    if (n < 1) throw std::invalid_argument("build_complete: n must be positive");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph build_coalescence(const CoalescenceSpec& spec) {
    spec.validate();
    Graph g(spec.total_order());
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        // vertex set of part i: the shared clique plus its private block
        std::vector<int> block;
        for (int v = 0; v < spec.k; ++v) block.push_back(v);
        int begin = spec.part_begin(static_cast<int>(i));
        for (int v = begin; v < begin + spec.parts[i] - spec.k; ++v) block.push_back(v);
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                if (!g.adjacent(block[a], block[b])) g.add_edge(block[a], block[b]);
    }
    return g;
}

Graph build_family(const FamilySpec& spec) {
    return build_coalescence(spec.to_coalescence());
}

Graph build_friendship(int m) {
    if (m < 1) throw std::invalid_argument("build_friendship: m must be positive");
    Graph g(2 * m + 1);
    for (int v = 1; v <= 2 * m; ++v) g.add_edge(0, v);
    for (int i = 1; i <= m; ++i) g.add_edge(2 * i - 1, 2 * i);
    return g;
}

Graph delete_edge(const Graph& g, const EdgeRef& e, bool require_connected) {
    if (!g.has_edge(e)) throw std::invalid_argument("delete_edge: not an edge");
    Graph out = g;
    out.remove_edge(e.u, e.v);
    if (require_connected && !is_connected(out))
        throw std::invalid_argument("delete_edge: deletion disconnects the graph");
    return out;
}

namespace {

// BFS from s; fills row with hop counts (-1 = unreachable).
void bfs(const Graph& g, int s, std::vector<int>& row) {
    row.assign(g.order(), -1);
    row[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < g.order(); ++v) {
            if (g.adjacent(u, v) && row[v] < 0) {
                row[v] = row[u] + 1;
                q.push(v);
            }
        }
    }
}

}  // namespace

bool is_connected(const Graph& g) {
    std::vector<int> row;
    bfs(g, 0, row);
    return std::all_of(row.begin(), row.end(), [](int d) { return d >= 0; });
}

DistanceInfo distances(const Graph& g) {
    DistanceInfo info;
    info.dist.assign(g.order(), {});
    info.ecc.assign(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        bfs(g, s, info.dist[s]);
        for (int d : info.dist[s]) {
            if (d < 0) throw std::invalid_argument("distances: graph is disconnected");
            info.ecc[s] = std::max(info.ecc[s], d);
        }
        info.diameter = std::max(info.diameter, info.ecc[s]);
    }
    return info;
}

EdgeCase classify_edge(const CoalescenceSpec& spec, const EdgeRef& e) {
    spec.validate();
    if (e.v >= spec.total_order())
        throw std::invalid_argument("classify_edge: vertex out of range");
    int in_clique = (e.u < spec.k ? 1 : 0) + (e.v < spec.k ? 1 : 0);
    if (in_clique == 2) return EdgeCase::CliqueInternal;
    if (in_clique == 1) return EdgeCase::CliqueIncident;
    // both private: must lie in the same part to be an edge at all
    auto part_of = [&](int v) {
        for (std::size_t i = 0; i < spec.parts.size(); ++i) {
            int b = spec.part_begin(static_cast<int>(i));
            if (v >= b && v < b + spec.parts[i] - spec.k) return static_cast<int>(i);
        }
        return -1;
    };
    if (part_of(e.u) != part_of(e.v))
        throw std::invalid_argument("classify_edge: not an edge of the coalescence");
    return EdgeCase::CliqueExternal;
}

std::vector<std::vector<int>> natural_partition(const CoalescenceSpec& spec) {
    spec.validate();
    std::vector<std::vector<int>> cells;
    std::vector<int> clique(static_cast<std::size_t>(spec.k));
    std::iota(clique.begin(), clique.end(), 0);
    cells.push_back(std::move(clique));
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        int b = spec.part_begin(static_cast<int>(i));
        std::vector<int> cell(static_cast<std::size_t>(spec.parts[i] - spec.k));
        std::iota(cell.begin(), cell.end(), b);
        cells.push_back(std::move(cell));
    }
    return cells;
}

std::string write_graph(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.edge_count() << '\n';
    for (const EdgeRef& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Graph read_graph(const std::string& text) {
    std::istringstream is(text);
    int n = 0, m = 0;
    if (!(is >> n >> m)) throw std::invalid_argument("read_graph: missing header");
    if (n < 1 || m < 0) throw std::invalid_argument("read_graph: bad header");
    Graph g(n);
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(is >> u >> v)) throw std::invalid_argument("read_graph: truncated edge list");
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
            throw std::invalid_argument("read_graph: edge must satisfy 0 <= u < v < N");
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("read_graph: duplicate edge");
        g.add_edge(u, v);
    }
    int extra;
    if (is >> extra) throw std::invalid_argument("read_graph: trailing data");
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return read_graph(buf.str());
}

}  // namespace ecc
