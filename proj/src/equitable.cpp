#include "ecc/equitable.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ecc {

void Partition::validate(int n) const {
    if (cells.empty()) throw std::invalid_argument("Partition: no cells");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int covered = 0;
    for (const auto& cell : cells) {
        if (cell.empty()) throw std::invalid_argument("Partition: empty cell");
        for (int v : cell) {
            if (v < 0 || v >= n) throw std::invalid_argument("Partition: index out of range");
            if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("Partition: duplicate index");
            seen[static_cast<std::size_t>(v)] = 1;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("Partition: cells do not cover the index set");
}

std::vector<int> Partition::sizes() const {
    std::vector<int> out;
    out.reserve(cells.size());
    for (const auto& c : cells) out.push_back(static_cast<int>(c.size()));
    return out;
}

namespace {

bool is_integral(const Eigen::MatrixXd& m) {
    return (m.array() == m.array().round()).all();
}

// Row sums of block (ci, cj); writes the common sum to out. Returns false
// if the sums differ (beyond tol for non-integral input).
bool block_row_sum(const Eigen::MatrixXd& m, const std::vector<int>& rows,
                   const std::vector<int>& cols, bool exact, double tol, double& out) {
    bool first = true;
    for (int r : rows) {
        double sum = 0.0;
        for (int c : cols) sum += m(r, c);
        if (first) {
            out = sum;
            first = false;
        } else if (exact ? (sum != out) : (std::abs(sum - out) > tol)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_equitable(const SymMatrix& m, const Partition& p) {
    p.validate(m.order());
    bool exact = is_integral(m.m);
    double sum = 0.0;
    for (const auto& rows : p.cells)
        for (const auto& cols : p.cells)
            if (!block_row_sum(m.m, rows, cols, exact, 1e-9, sum)) return false;
    return true;
}

QuotientMatrix quotient(const SymMatrix& m, const Partition& p) {
    p.validate(m.order());
    if (!is_equitable(m, p))
        throw std::invalid_argument("quotient: partition is not equitable for this matrix");
    int k = p.cell_count();
    QuotientMatrix q;
    q.entries.resize(k, k);
    q.source_sizes = p.sizes();
    bool exact = is_integral(m.m);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            double sum = 0.0;
            block_row_sum(m.m, p.cells[static_cast<std::size_t>(i)],
                          p.cells[static_cast<std::size_t>(j)], exact, 1e-9, sum);
            q.entries(i, j) = sum;
        }
    return q;
}

SymMatrix symmetrized_quotient(const QuotientMatrix& q) {
    int k = q.order();
    if (static_cast<int>(q.source_sizes.size()) != k)
        throw std::invalid_argument("symmetrized_quotient: size metadata mismatch");
    for (int s : q.source_sizes)
        if (s <= 0) throw std::invalid_argument("symmetrized_quotient: nonpositive cell size");

    Eigen::MatrixXd s(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            s(i, j) = q.entries(i, j) *
                      std::sqrt(static_cast<double>(q.source_sizes[static_cast<std::size_t>(i)]) /
                                static_cast<double>(q.source_sizes[static_cast<std::size_t>(j)]));

    double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    if ((s - s.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
        throw std::invalid_argument("symmetrized_quotient: result asymmetric; quotient is not from an equitable partition of a symmetric matrix");
    // force exact symmetry before the eigensolver
    Eigen::MatrixXd sym = 0.5 * (s + s.transpose());
    return SymMatrix(std::move(sym));
}

Spectrum quotient_spectrum(const QuotientMatrix& q) {
    return eig_sym(symmetrized_quotient(q));
}

QuotientTheoremReport verify_quotient_theorems(const SymMatrix& m, const Partition& p, double tol) {
    QuotientTheoremReport rep;
    std::ostringstream detail;
    rep.equitable = is_equitable(m, p);
    if (!rep.equitable) {
        rep.detail = "partition is not equitable";
        return rep;
    }
    QuotientMatrix q = quotient(m, p);
    Spectrum qs = quotient_spectrum(q);
    Spectrum full = eig_sym(m);

    rep.containment_ok = multiset_contains(qs.values, full.values, tol);
    detail << "containment " << (rep.containment_ok ? "ok" : "FAILED");

    rep.radius_applicable = (q.entries.array() >= 0.0).all() &&
                            support_strongly_connected(
                                q.entries.unaryExpr([](double x) { return x != 0.0 ? 1.0 : 0.0; })
                                    .cast<int>());
    if (rep.radius_applicable) {
        rep.radius_diff = std::abs(spectral_radius(qs) - spectral_radius(full));
        rep.radius_ok = rep.radius_diff <= tol;
        detail << "; spectral radius diff " << rep.radius_diff
               << (rep.radius_ok ? " ok" : " FAILED");
    } else {
        detail << "; spectral-radius check not applicable";
    }
    rep.pass = rep.containment_ok && (!rep.radius_applicable || rep.radius_ok);
    rep.detail = detail.str();
    return rep;
}

Partition read_partition(const std::string& text) {
    Partition p;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<int> cell;
        int v;
        while (ls >> v) cell.push_back(v);
        if (!ls.eof()) throw std::invalid_argument("read_partition: non-integer token");
        if (!cell.empty()) p.cells.push_back(std::move(cell));
    }
    if (p.cells.empty()) throw std::invalid_argument("read_partition: no cells");
    return p;
}

Partition read_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open partition file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return read_partition(buf.str());
}

}  // namespace ecc
