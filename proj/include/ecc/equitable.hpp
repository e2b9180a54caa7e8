#pragma once

#include <string>
#include <vector>

#include "ecc/spectral.hpp"

namespace ecc {

// Ordered partition of the index set {0..N-1} into nonempty disjoint cells.
struct Partition {
    std::vector<std::vector<int>> cells;

    // Throws unless the cells are nonempty, disjoint, and cover 0..n-1.
    void validate(int n) const;

    std::vector<int> sizes() const;
    int cell_count() const { return static_cast<int>(cells.size()); }
};

// Quotient of a matrix under an equitable partition: entry (i,j) is the
// common row sum of block (i,j).
struct QuotientMatrix {
    Eigen::MatrixXd entries;
    std::vector<int> source_sizes;

    int order() const { return static_cast<int>(entries.rows()); }
};

// True iff every block of m under p has constant row sums. Exact comparison
// for integral matrices, tolerance 1e-9 otherwise.
bool is_equitable(const SymMatrix& m, const Partition& p);

// Throws std::invalid_argument when (m, p) is not equitable.
QuotientMatrix quotient(const SymMatrix& m, const Partition& p);

// Similarity scaling D^{1/2} Q D^{-1/2} with D = diag(cell sizes); symmetric
// for equitable quotients of symmetric matrices, with the same eigenvalues.
// Throws if the result is asymmetric beyond 1e-9.
SymMatrix symmetrized_quotient(const QuotientMatrix& q);

// Eigenvalues of a quotient, computed through the symmetrized form.
Spectrum quotient_spectrum(const QuotientMatrix& q);

struct QuotientTheoremReport {
    bool equitable = false;
    bool containment_ok = false;       // quotient spectrum within full spectrum
    bool radius_applicable = false;    // quotient nonnegative and irreducible
    bool radius_ok = false;
    double radius_diff = 0.0;
    bool pass = false;
    std::string detail;
};

// Runtime check of the two quotient theorems: eigenvalue containment, and
// spectral-radius equality when the quotient is nonnegative irreducible.
QuotientTheoremReport verify_quotient_theorems(const SymMatrix& m, const Partition& p,
                                               double tol = 1e-7);

// Partition file format: one line per cell, space-separated vertex indices.
Partition read_partition(const std::string& text);
Partition read_partition_file(const std::string& path);

}  // namespace ecc
