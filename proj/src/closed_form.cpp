#include "ecc/closed_form.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ecc {

double CharPoly::eval(double x) const {
    double acc = 0.0;
    for (double c : coeffs) acc = acc * x + c;
    return acc;
}

double CharPoly::coeff_scale() const {
    double s = 0.0;
    for (double c : coeffs) s = std::max(s, std::abs(c));
    return s;
}

std::vector<double> real_roots(const CharPoly& p) {
    if (p.coeffs.empty() || p.coeffs.front() != 1.0)
        throw std::invalid_argument("real_roots: polynomial must be monic");
    int deg = p.degree();
    if (deg > 8) throw std::invalid_argument("real_roots: degree > 8 unsupported");

    std::vector<double> roots;
    if (deg == 0) return roots;
    if (deg == 1) {
        roots.push_back(-p.coeffs[1]);
    } else if (deg == 2) {
        // x^2 + bx + c, stable form avoiding cancellation
        double b = p.coeffs[1], c = p.coeffs[2];
        double disc = b * b - 4.0 * c;
        if (disc < 0) {
            if (disc < -1e-12 * std::max(1.0, b * b))
                throw std::invalid_argument("real_roots: complex quadratic roots");
            disc = 0.0;
        }
        double sq = std::sqrt(disc);
        double q = -0.5 * (b + (b >= 0 ? sq : -sq));
        if (q == 0.0) {
            roots = {0.0, -b};
        } else {
            roots = {q, c / q};
        }
    } else {
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
        for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
        for (int i = 0; i < deg; ++i)
            companion(i, deg - 1) = -p.coeffs[static_cast<std::size_t>(deg - i)];
        Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("real_roots: companion eigensolver failed");
        for (int i = 0; i < deg; ++i) {
            std::complex<double> z = solver.eigenvalues()[i];
            if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z)))
                throw std::invalid_argument("real_roots: complex root encountered");
            roots.push_back(z.real());
        }
    }

    double bound = 1e-6 * std::max(1.0, p.coeff_scale());
    for (double r : roots)
        if (std::abs(p.eval(r)) > bound)
            throw std::invalid_argument("real_roots: root residual exceeds bound (bad coefficients?)");
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<double> SpectrumSpec::values() const {
    int count = static_cast<int>(residual_roots.size());
    for (const FixedEig& f : fixed) count += f.multiplicity;
    if (count != total)
        throw std::logic_error("SpectrumSpec: multiplicities do not sum to the total order");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(total));
    for (const FixedEig& f : fixed)
        out.insert(out.end(), static_cast<std::size_t>(f.multiplicity), f.value);
    out.insert(out.end(), residual_roots.begin(), residual_roots.end());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

MatchResult match_spectrum(const SpectrumSpec& spec, const Spectrum& numeric, double tol) {
    MatchResult res;
    std::ostringstream msg;
    if (numeric.size() != spec.total) {
        msg << "order mismatch: numeric " << numeric.size() << " vs predicted " << spec.total;
        res.detail = msg.str();
        return res;
    }
    std::vector<double> vals = numeric.values;
    std::vector<char> used(vals.size(), 0);

    // residual roots first: each must hit a distinct numeric eigenvalue
    for (double r : spec.residual_roots) {
        int best = -1;
        double bestd = 0.0;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (used[i]) continue;
            double d = std::abs(vals[i] - r);
            if (best < 0 || d < bestd) {
                best = static_cast<int>(i);
                bestd = d;
            }
        }
        if (best < 0 || bestd > tol) {
            msg << "quotient eigenvalue " << r << " not found (closest off by " << bestd << ")";
            res.detail = msg.str();
            return res;
        }
        used[static_cast<std::size_t>(best)] = 1;
    }

    // then the enumerated eigenvalues, consuming every nearby numeric value
    for (const FixedEig& f : spec.fixed) {
        int count = 0;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (!used[i] && std::abs(vals[i] - f.value) <= tol) {
                used[i] = 1;
                ++count;
            }
        }
        if (count < f.multiplicity || (!f.at_least && count != f.multiplicity)) {
            msg << "eigenvalue " << f.value << ": found " << count << ", need "
                << (f.at_least ? ">= " : "== ") << f.multiplicity;
            res.detail = msg.str();
            return res;
        }
    }

    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (!used[i]) {
            msg << "numeric eigenvalue " << vals[i] << " unexplained";
            res.detail = msg.str();
            return res;
        }
    }
    res.ok = true;
    res.detail = "ok";
    return res;
}

QuotientMatrix coalescence_quotient(const CoalescenceSpec& spec) {
    spec.validate();
    int l = static_cast<int>(spec.parts.size());
    int k = spec.k;
    QuotientMatrix q;
    q.entries = Eigen::MatrixXd::Zero(l + 1, l + 1);
    q.source_sizes.assign(static_cast<std::size_t>(l + 1), 0);
    q.source_sizes[0] = k;
    q.entries(0, 0) = k - 1;
    for (int j = 0; j < l; ++j) {
        int private_j = spec.parts[static_cast<std::size_t>(j)] - k;
        q.source_sizes[static_cast<std::size_t>(j + 1)] = private_j;
        q.entries(0, j + 1) = private_j;
        q.entries(j + 1, 0) = k;
        for (int i = 0; i < l; ++i)
            if (i != j) q.entries(i + 1, j + 1) = 2 * private_j;
    }
    return q;
}

namespace {

void check_case_params(int n, int l) {
    if (n < 3 || l < 2)
        throw std::invalid_argument("edge-deletion closed forms need n >= 3, l >= 2");
}

QuotientMatrix make_quotient(std::vector<std::vector<double>> rows, std::vector<int> sizes) {
    QuotientMatrix q;
    int k = static_cast<int>(rows.size());
    q.entries.resize(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            q.entries(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    q.source_sizes = std::move(sizes);
    return q;
}

}  // namespace

QuotientMatrix case1_quotient(int n, int l) {
    check_case_params(n, l);
    double N = n, L = l;
    return make_quotient({{N - 3, 2, L * N},
                          {N - 2, 2, 0},
                          {N - 2, 0, 2 * N * (L - 1)}},
                         {n - 2, 2, l * n});
}

QuotientMatrix case2_quotient(int n, int l) {
    check_case_params(n, l);
    double N = n, L = l;
    return make_quotient({{0, N - 1, 2, 0, 0},
                          {1, N - 2, 1, N - 1, N * (L - 1)},
                          {2, N - 1, 0, 0, 2 * N * (L - 1)},
                          {0, N - 1, 0, 0, 2 * N * (L - 1)},
                          {0, N - 1, 2, 2 * (N - 1), 2 * N * (L - 2)}},
                         {1, n - 1, 1, n - 1, n * (l - 1)});
}

QuotientMatrix case3_quotient(int n, int l) {
    check_case_params(n, l);
    double N = n, L = l;
    return make_quotient({{N - 1, 2, N - 2, N * (L - 1)},
                          {N, 2, 0, 2 * N * (L - 1)},
                          {N, 0, 0, 2 * N * (L - 1)},
                          {N, 4, 2 * (N - 2), 2 * N * (L - 2)}},
                         {n, 2, n - 2, n * (l - 1)});
}

CharPoly case1_poly(int n, int l) {
    check_case_params(n, l);
    double N = n, L = l;
    return CharPoly{{1.0,
                     N + 1 - 2 * N * L,
                     2 * N + L * N * N - 2 * N * N - 2,
                     2 * L * N * N - 4 * N}};
}

CharPoly case2_poly(int n, int l) {
    check_case_params(n, l);
    double N = n, L = l;
    double N2 = N * N, N3 = N2 * N;
    return CharPoly{{1.0,
                     -2 * N * L + 3 * N + 2,
                     -3 * N * L + 7 * N - 3 * L * N2 - 3,
                     -12 * N + 6 * L * N - 4 * L * N2 + 2 * L * N3 + 4 * N2 - 4 * N3 - 4,
                     -12 * N - 4 * L * N + 8 * L * N2 + 4 * L * N3 - 4 * N2 - 4 * N3 + 4,
                     -8 * L * N3 + 32 * L * N2 - 24 * L * N + 16 * N3 - 48 * N2 + 32 * N}};
}

CharPoly case3_poly(int n, int l) {
    check_case_params(n, l);
    double N = n, L = l;
    double N2 = N * N, N3 = N2 * N;
    return CharPoly{{1.0,
                     -(2 * N * L - 3 * N + 1),
                     -(2 * N - 2 * N * L + 3 * L * N2 + 2),
                     4 * N - 12 * L * N + 2 * L * N2 + 2 * L * N3 + 4 * N2 - 4 * N3,
                     16 * N - 24 * N2 + 8 * N3 - 16 * L * N + 16 * L * N2 - 4 * L * N3}};
}

CharPoly family_quadratic(int n, int l) {
    FamilySpec{n, l}.validate();
    double N = n, L = l;
    return CharPoly{{1.0, 1 - N * (2 * L - 1), N * N * (L - 2) - 2 * N * (L - 1)}};
}

SpectrumSpec spectrum_coalescence(const CoalescenceSpec& spec) {
    spec.validate();
    SpectrumSpec out;
    int zeros = 0;
    for (int a : spec.parts) zeros += a - spec.k - 1;
    if (spec.k > 1) out.fixed.push_back({-1.0, spec.k - 1, true});
    if (zeros > 0) out.fixed.push_back({0.0, zeros, true});
    out.residual_roots = quotient_spectrum(coalescence_quotient(spec)).values;
    out.total = spec.total_order();
    return out;
}

SpectrumSpec spectrum_family(int n, int l) {
    FamilySpec{n, l}.validate();
    SpectrumSpec out;
    out.fixed.push_back({-1.0, n - 1, true});
    out.fixed.push_back({0.0, (n - 1) * l, true});
    out.fixed.push_back({-2.0 * n, l - 1, false});  // the (x + 2n)^{l-1} factor
    out.residual_roots = real_roots(family_quadratic(n, l));
    out.residual_poly = family_quadratic(n, l);
    out.total = n * (l + 1);
    return out;
}

namespace {

SpectrumSpec case_spectrum_common(int n, int l, std::vector<FixedEig> fixed,
                                  const QuotientMatrix& q, CharPoly poly) {
    SpectrumSpec out;
    for (FixedEig& f : fixed)
        if (f.multiplicity > 0) out.fixed.push_back(f);
    out.residual_roots = quotient_spectrum(q).values;
    out.residual_poly = std::move(poly);
    out.total = n * (l + 1);
    return out;
}

}  // namespace

SpectrumSpec case1_spectrum(int n, int l) {
    check_case_params(n, l);
    return case_spectrum_common(n, l,
                                {{-1.0, n - 3, true},
                                 {-2.0, 1, true},
                                 {0.0, (n - 1) * l, true},
                                 {-2.0 * n, l - 1, false}},
                                case1_quotient(n, l), case1_poly(n, l));
}

SpectrumSpec case2_spectrum(int n, int l) {
    check_case_params(n, l);
    return case_spectrum_common(n, l,
                                {{-1.0, n - 2, true},
                                 {0.0, (n - 1) * (l - 1) + n - 2, true},
                                 {-2.0 * n, l - 2, true}},
                                case2_quotient(n, l), case2_poly(n, l));
}

SpectrumSpec case3_spectrum(int n, int l) {
    check_case_params(n, l);
    return case_spectrum_common(n, l,
                                {{-1.0, n - 1, true},
                                 {-2.0, 1, true},
                                 {0.0, (n - 3) + (n - 1) * (l - 1), true},
                                 {-2.0 * n, l - 2, true}},
                                case3_quotient(n, l), case3_poly(n, l));
}

double rho_family(int n, int l) {
    FamilySpec{n, l}.validate();
    double a = n * (2.0 * l - 1) - 1;
    double b = static_cast<double>(n) * n * (l - 2) - 2.0 * n * (l - 1);
    double disc = a * a - 4 * b;
    return (a + std::sqrt(disc)) / 2.0;
}

double sign_quantity(int n, int l) {
    FamilySpec{n, l}.validate();
    double a = n * (2.0 * l - 1) - 1;
    double b = static_cast<double>(n) * n * (l - 2) - 2.0 * n * (l - 1);
    double disc = a * a - 4 * b;
    // product-of-roots form: exact zero when b = 0, no cancellation otherwise
    return 2.0 * b / (a + std::sqrt(disc));
}

Inertia inertia_family(int n, int l) {
    Inertia out;
    out.negatives = n + l - 2;
    out.zeros = (n - 1) * l;
    out.positives = 1;
    out.zero_tolerance = 1e-9;
    double x = sign_quantity(n, l);
    if (x < -out.zero_tolerance)
        ++out.negatives;
    else if (x > out.zero_tolerance)
        ++out.positives;
    else
        ++out.zeros;
    return out;
}

Inertia inertia_two_parts(int a1, int a2, int k) {
    CoalescenceSpec{k, {a1, a2}}.validate();
    return Inertia{k + 1, a1 + a2 - 2 * k - 2, 1, 0.0};
}

double energy_family(int n, int l) {
    double a = n * (2.0 * l - 1) - 1;
    double b = static_cast<double>(n) * n * (l - 2) - 2.0 * n * (l - 1);
    double disc = a * a - 4 * b;
    if (sign_quantity(n, l) > 1e-9) return 2.0 * a;
    return a + std::sqrt(disc);
}

std::vector<Inertia> inertia_family_table(int n, int l) {
    FamilySpec{n, l}.validate();
    std::vector<Inertia> rows;
    auto add = [&](int neg, int zero, int pos) { rows.push_back(Inertia{neg, zero, pos, 0.0}); };
    if (l == 2) add(n + 1, 2 * (n - 1), 1);
    if (l == 3 && n == 4) add(5, 10, 1);
    if (l == 3 && n > 4) add(n + 1, 3 * (n - 1), 2);
    if (l == 3 && n < 4) add(n + 2, 3 * (n - 1), 1);
    if (l >= 4 && n == 2) add(l + 1, l, 1);
    if (l > 4 && n >= 3) add(n + l - 2, (n - 1) * l, 2);
    if (l == 4 && n == 3) add(5, 9, 1);
    if (l == 4 && n == 2) add(5, 4, 1);
    if (l == 4 && n > 3) add(n + l - 2, (n - 1) * l, 2);
    return rows;
}

std::vector<std::string> inertia_table_findings(int n, int l) {
    std::vector<std::string> findings;
    std::vector<Inertia> rows = inertia_family_table(n, l);
    Inertia canonical = inertia_family(n, l);
    auto fmt = [](const Inertia& i) {
        std::ostringstream os;
        os << '(' << i.negatives << ',' << i.zeros << ',' << i.positives << ')';
        return os.str();
    };
    if (rows.empty()) {
        std::ostringstream os;
        os << "inertia table: no branch covers n=" << n << " l=" << l;
        findings.push_back(os.str());
        return findings;
    }
    for (const Inertia& r : rows) {
        if (!(r == canonical)) {
            std::ostringstream os;
            os << "inertia table branch " << fmt(r) << " disagrees with sign-based "
               << fmt(canonical) << " at n=" << n << " l=" << l;
            findings.push_back(os.str());
        }
    }
    return findings;
}

namespace {

std::vector<int> range_cell(int begin, int count) {
    std::vector<int> cell(static_cast<std::size_t>(count));
    std::iota(cell.begin(), cell.end(), begin);
    return cell;
}

// Private-block cells of the family graph, parts first..l-1, each of size n.
void append_parts(Partition& p, int n, int from_part, int l, bool merged) {
    if (merged) {
        std::vector<int> cell;
        for (int i = from_part; i < l; ++i) {
            std::vector<int> c = range_cell(n * (i + 1), n);
            cell.insert(cell.end(), c.begin(), c.end());
        }
        p.cells.push_back(std::move(cell));
    } else {
        for (int i = from_part; i < l; ++i) p.cells.push_back(range_cell(n * (i + 1), n));
    }
}

}  // namespace

Partition case1_partition(int n, int l, bool merged) {
    check_case_params(n, l);
    Partition p;
    p.cells.push_back(range_cell(2, n - 2));  // clique minus the deleted pair
    p.cells.push_back({0, 1});
    append_parts(p, n, 0, l, merged);
    return p;
}

Partition case2_partition(int n, int l, bool merged) {
    check_case_params(n, l);
    Partition p;
    p.cells.push_back({0});                   // clique endpoint of the deleted edge
    p.cells.push_back(range_cell(1, n - 1));  // rest of the clique
    p.cells.push_back({n});                   // private endpoint
    p.cells.push_back(range_cell(n + 1, n - 1));
    append_parts(p, n, 1, l, merged);
    return p;
}

Partition case3_partition(int n, int l, bool merged) {
    check_case_params(n, l);
    Partition p;
    p.cells.push_back(range_cell(0, n));  // the whole clique
    p.cells.push_back({n, n + 1});        // deleted pair
    p.cells.push_back(range_cell(n + 2, n - 2));
    append_parts(p, n, 1, l, merged);
    return p;
}

}  // namespace ecc
