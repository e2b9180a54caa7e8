#pragma once

#include <Eigen/Core>
#include <string>

#include "ecc/graph.hpp"

namespace ecc {

// Eccentricity matrix: the distance matrix with entry (i,j) kept iff
// d(i,j) = min(e(i), e(j)), other entries zeroed. Integer-exact.
struct EccMatrix {
    Eigen::MatrixXi entries;

    int order() const { return static_cast<int>(entries.rows()); }
};

EccMatrix ecc_matrix(const Graph& g);

// Graph on V(g) with u ~ v iff the (u,v) entry of ecc_matrix(g) is nonzero.
Graph eccentric_graph(const Graph& g);

// True iff eccentric_graph(g) is connected (the matrix-irreducibility
// criterion for the eccentricity matrix).
bool is_ecc_irreducible(const Graph& g);

// Direct matrix-level test: strong connectivity of the support digraph.
// Kept as an independent cross-check of is_ecc_irreducible.
bool support_strongly_connected(const Eigen::MatrixXi& m);

// Entrywise a <= b; matrices must have equal order.
bool entrywise_leq(const EccMatrix& a, const EccMatrix& b);

// Dump format: N lines of N space-separated integers.
std::string write_matrix(const Eigen::MatrixXi& m);

}  // namespace ecc
