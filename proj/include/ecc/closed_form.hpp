#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecc/equitable.hpp"
#include "ecc/graph.hpp"
#include "ecc/spectral.hpp"

namespace ecc {

// Monic real polynomial, coefficients highest degree first.
struct CharPoly {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double x) const;
    double coeff_scale() const;  // max |coefficient|
};

// All real roots (with multiplicity), sorted ascending. Degree <= 2 is solved
// in closed form; otherwise roots come from the companion matrix. Each root
// must satisfy |p(r)| <= 1e-6 * max|coeff|, else the coefficients are
// presumed mistranscribed and an exception is thrown.
std::vector<double> real_roots(const CharPoly& p);

struct FixedEig {
    double value = 0.0;
    int multiplicity = 0;
    bool at_least = false;
};

// An analytically predicted spectrum: enumerated eigenvalues (some with
// lower-bound multiplicities) plus the eigenvalues of a small quotient
// matrix that complete it. The printed characteristic polynomial, when the
// source states one, is kept as a residual cross-check.
struct SpectrumSpec {
    std::vector<FixedEig> fixed;
    std::vector<double> residual_roots;
    std::optional<CharPoly> residual_poly;
    int total = 0;

    // Expanded value list, sorted descending. Valid because every
    // constructor here pins multiplicities that sum to the total.
    std::vector<double> values() const;
};

struct MatchResult {
    bool ok = false;
    std::string detail;
};

// Multiset comparison of a predicted spectrum against a numeric one,
// resolving at-least multiplicities by count.
MatchResult match_spectrum(const SpectrumSpec& spec, const Spectrum& numeric, double tol);

// --- quotient matrices from the structure of the coalescence family ---

// Quotient of eps(K_{a_1} o_k ... o_k K_{a_l}) over the natural partition:
// first row (k-1, a_1-k, ..., a_l-k).
QuotientMatrix coalescence_quotient(const CoalescenceSpec& spec);

// 3x3 quotient for a deleted clique-internal edge, cells
// (clique rest, deleted pair, all private vertices).
QuotientMatrix case1_quotient(int n, int l);

// 5x5 quotient for a deleted clique-incident edge.
QuotientMatrix case2_quotient(int n, int l);

// 4x4 quotient for a deleted private-private edge.
QuotientMatrix case3_quotient(int n, int l);

// Printed characteristic polynomials of the quotients above.
CharPoly case1_poly(int n, int l);
CharPoly case2_poly(int n, int l);
CharPoly case3_poly(int n, int l);
CharPoly family_quadratic(int n, int l);

// --- predicted spectra ---

SpectrumSpec spectrum_coalescence(const CoalescenceSpec& spec);
SpectrumSpec spectrum_family(int n, int l);
SpectrumSpec case1_spectrum(int n, int l);
SpectrumSpec case2_spectrum(int n, int l);
SpectrumSpec case3_spectrum(int n, int l);

// --- scalar formulas for the K_{2n} chain ---

double rho_family(int n, int l);

// x_{l,n}: the smaller root of the family quadratic; its sign settles the
// one inertia slot the enumerated eigenvalues leave open.
double sign_quantity(int n, int l);

Inertia inertia_family(int n, int l);
Inertia inertia_two_parts(int a1, int a2, int k);
double energy_family(int n, int l);

// Verbatim piecewise inertia table rows that apply to (n, l); disagreements
// with the sign-based computation (or among overlapping rows) are reported
// as findings rather than resolved silently.
std::vector<Inertia> inertia_family_table(int n, int l);
std::vector<std::string> inertia_table_findings(int n, int l);

// --- proof partitions for the deleted graphs (canonical edges) ---

Partition case1_partition(int n, int l, bool merged);
Partition case2_partition(int n, int l, bool merged);
Partition case3_partition(int n, int l, bool merged);

}  // namespace ecc
