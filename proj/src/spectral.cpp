#include "ecc/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ecc {

SymMatrix::SymMatrix(Eigen::MatrixXd mat) : m(std::move(mat)) {
    if (m.rows() != m.cols()) throw std::invalid_argument("SymMatrix: not square");
    if (!m.allFinite()) throw std::invalid_argument("SymMatrix: non-finite entries");
    if (m.rows() > 0) {
        double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
        if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
            throw std::invalid_argument("SymMatrix: not symmetric");
    }
}

SymMatrix SymMatrix::from_ecc(const EccMatrix& e) {
    return SymMatrix(e.entries.cast<double>());
}

Spectrum eig_sym(const SymMatrix& sm) {
    const Eigen::MatrixXd& a = sm.m;
    int n = sm.order();
    if (n == 0) throw std::invalid_argument("eig_sym: empty matrix");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eig_sym: solver failed");

    Spectrum s;
    s.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::reverse(s.values.begin(), s.values.end());  // descending

    // Certify: residual of every eigenpair against the relative contract.
    const Eigen::MatrixXd& vecs = solver.eigenvectors();
    double anorm = a.cwiseAbs().rowwise().sum().maxCoeff();  // infinity norm
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = (a * vecs.col(i) - solver.eigenvalues()[i] * vecs.col(i)).norm();
        worst = std::max(worst, r);
    }
    s.residual_bound = std::max(worst, 1e-15 * std::max(1.0, anorm));
    if (worst > 1e-10 * std::max(1.0, anorm))
        throw std::runtime_error("eig_sym: residual exceeds contract");
    return s;
}

Spectrum eig_sym(const EccMatrix& m) {
    return eig_sym(SymMatrix::from_ecc(m));
}

double energy(const Spectrum& s) {
    double e = 0.0;
    for (double v : s.values) e += std::abs(v);
    return e;
}

Inertia inertia(const Spectrum& s, double zero_tolerance) {
    if (zero_tolerance <= 0) throw std::invalid_argument("inertia: tolerance must be positive");
    Inertia out;
    out.zero_tolerance = zero_tolerance;
    for (double v : s.values) {
        if (v < -zero_tolerance)
            ++out.negatives;
        else if (v > zero_tolerance)
            ++out.positives;
        else
            ++out.zeros;
    }
    return out;
}

double default_zero_tolerance(const Spectrum& s) {
    return 1e-6 * std::max(1.0, spectral_radius(s));
}

double spectral_radius(const Spectrum& s) {
    if (s.values.empty()) throw std::invalid_argument("spectral_radius: empty spectrum");
    return std::max(std::abs(s.values.front()), std::abs(s.values.back()));
}

bool multiset_match(const Spectrum& a, const Spectrum& b, double tol) {
    return multiset_match(a.values, b.values, tol);
}

bool multiset_match(std::vector<double> a, std::vector<double> b, double tol) {
    if (tol <= 0) throw std::invalid_argument("multiset_match: tolerance must be positive");
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

bool multiset_contains(std::vector<double> sub, std::vector<double> super, double tol) {
    if (tol <= 0) throw std::invalid_argument("multiset_contains: tolerance must be positive");
    if (sub.size() > super.size()) return false;
    std::sort(sub.begin(), sub.end());
    std::sort(super.begin(), super.end());
    std::size_t j = 0;
    for (double v : sub) {
        while (j < super.size() && super[j] < v - tol) ++j;
        if (j == super.size() || std::abs(super[j] - v) > tol) return false;
        ++j;
    }
    return true;
}

}  // namespace ecc
