#include "ecc/eccentricity.hpp"

#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ecc {

EccMatrix ecc_matrix(const Graph& g) {
    DistanceInfo info = distances(g);
    int n = g.order();
    EccMatrix out;
    out.entries = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int d = info.dist[i][j];
            if (d == std::min(info.ecc[i], info.ecc[j])) out.entries(i, j) = d;
        }
    return out;
}

Graph eccentric_graph(const Graph& g) {
    EccMatrix m = ecc_matrix(g);
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (m.entries(u, v) != 0) out.add_edge(u, v);
    return out;
}

bool is_ecc_irreducible(const Graph& g) {
    return is_connected(eccentric_graph(g));
}

namespace {

// Reachability from vertex 0 over nonzero entries, following rows of m
// (or columns, when transpose is set).
std::vector<char> reach(const Eigen::MatrixXi& m, bool transpose) {
    int n = static_cast<int>(m.rows());
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v) {
            int entry = transpose ? m(v, u) : m(u, v);
            if (entry != 0 && !seen[v]) {
                seen[v] = 1;
                q.push(v);
            }
        }
    }
    return seen;
}

}  // namespace

bool support_strongly_connected(const Eigen::MatrixXi& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("support_strongly_connected: not square");
    if (m.rows() == 0) throw std::invalid_argument("support_strongly_connected: empty matrix");
    for (bool t : {false, true}) {
        std::vector<char> seen = reach(m, t);
        for (char s : seen)
            if (!s) return false;
    }
    return true;
}

bool entrywise_leq(const EccMatrix& a, const EccMatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("entrywise_leq: order mismatch");
    return (a.entries.array() <= b.entries.array()).all();
}

std::string write_matrix(const Eigen::MatrixXi& m) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace ecc
