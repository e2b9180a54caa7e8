#pragma once

#include <Eigen/Core>
#include <vector>

#include "ecc/eccentricity.hpp"

namespace ecc {

// Real symmetric matrix entering the eigensolver. Construction checks
// symmetry and finiteness.
struct SymMatrix {
    Eigen::MatrixXd m;

    explicit SymMatrix(Eigen::MatrixXd mat);
    static SymMatrix from_ecc(const EccMatrix& e);

    int order() const { return static_cast<int>(m.rows()); }
};

// Full real spectrum, sorted descending, with a certified residual scale
// (max over eigenpairs of ||A x - lambda x||_2).
struct Spectrum {
    std::vector<double> values;
    double residual_bound = 0.0;

    int size() const { return static_cast<int>(values.size()); }
};

struct Inertia {
    int negatives = 0;
    int zeros = 0;
    int positives = 0;
    double zero_tolerance = 0.0;

    bool operator==(const Inertia& o) const {
        return negatives == o.negatives && zeros == o.zeros && positives == o.positives;
    }
};

// Dense symmetric eigendecomposition. Enforces the relative residual
// contract (1e-10 * ||m||); deterministic for identical input.
Spectrum eig_sym(const SymMatrix& m);

Spectrum eig_sym(const EccMatrix& m);

// Sum of absolute eigenvalues.
double energy(const Spectrum& s);

// Eigenvalue counts below -tol, within [-tol, tol], above tol.
Inertia inertia(const Spectrum& s, double zero_tolerance);

// tau = 1e-6 * max(1, rho).
double default_zero_tolerance(const Spectrum& s);

double spectral_radius(const Spectrum& s);

// Sorted greedy pairing; true iff sizes match and every paired difference
// is <= tol.
bool multiset_match(const Spectrum& a, const Spectrum& b, double tol);
bool multiset_match(std::vector<double> a, std::vector<double> b, double tol);

// True iff sub injects into super within tol (both as multisets).
bool multiset_contains(std::vector<double> sub, std::vector<double> super, double tol);

}  // namespace ecc
