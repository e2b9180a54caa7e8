// Acceptance suite: one check per contract criterion, one PASS/FAIL line
// each. Run with no arguments for all criteria, or with a single number.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ecc/closed_form.hpp"
#include "ecc/eccentricity.hpp"
#include "ecc/equitable.hpp"
#include "ecc/experiment.hpp"
#include "ecc/graph.hpp"
#include "ecc/spectral.hpp"
#include "test_util.hpp"

using namespace ecc;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> details;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            details.push_back(what);
        }
    }
    void info(const std::string& what) { details.push_back(what); }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// 1. Figure-one graph: both energies, and a unique positive eigenvalue.
Outcome criterion1() {
    Outcome out;
    Graph f4 = build_friendship(4);
    Spectrum s = eig_sym(ecc_matrix(f4));
    double e_before = energy(s);
    out.require(std::abs(e_before - 25.2664) <= 5e-4,
                "F4 energy " + fmt(e_before) + " vs 25.2664 +/- 0.0005");
    Inertia in = inertia(s, default_zero_tolerance(s));
    out.require(in.positives == 1, "F4 should have exactly one positive eigenvalue");

    double e_after = energy(eig_sym(ecc_matrix(delete_edge(f4, EdgeRef(0, 1), true))));
    out.require(std::abs(e_after - 20.159) <= 5e-3,
                "F4 minus hub edge energy " + fmt(e_after) + " vs 20.159 +/- 0.005");
    return out;
}

// 2. Published before/after energy table at half a unit of print.
Outcome criterion2() {
    Outcome out;
    Report rep = reproduce_paper_values();
    for (const PaperValueRow& row : rep.paper_values) {
        if (row.label.find("closed-form") != std::string::npos) continue;
        std::ostringstream os;
        os << row.label << ": printed " << fmt(row.expected) << ", computed " << fmt(row.actual)
           << " (tol " << fmt(row.tolerance) << ")";
        if (!row.ok) out.require(false, os.str());
    }
    for (const std::string& n : rep.notes) out.info("note: " + n);
    return out;
}

// 3. Closed-form spectra match numeric spectra across the grid.
Outcome criterion3() {
    Outcome out;
    for (int n = 3; n <= 8; ++n)
        for (int l = 2; l <= 6; ++l) {
            FamilySpec fs{n, l};
            Graph g = build_family(fs);
            auto check = [&](int c, const SpectrumSpec& spec, const Graph& graph) {
                MatchResult m = match_spectrum(spec, eig_sym(ecc_matrix(graph)), 1e-7);
                std::ostringstream os;
                os << "n=" << n << " l=" << l << " case " << c << ": " << m.detail;
                out.require(m.ok, os.str());
            };
            check(0, spectrum_family(n, l), g);
            check(1, case1_spectrum(n, l), delete_edge(g, EdgeRef(0, 1), true));
            check(2, case2_spectrum(n, l), delete_edge(g, EdgeRef(0, n), true));
            check(3, case3_spectrum(n, l), delete_edge(g, EdgeRef(n, n + 1), true));
        }
    return out;
}

// 4. Inertia formula against numeric inertia, boundary branches included.
Outcome criterion4() {
    Outcome out;
    for (int n = 2; n <= 8; ++n)
        for (int l = 2; l <= 6; ++l) {
            Spectrum s = eig_sym(ecc_matrix(build_family({n, l})));
            Inertia numeric = inertia(s, default_zero_tolerance(s));
            Inertia predicted = inertia_family(n, l);
            std::ostringstream os;
            os << "n=" << n << " l=" << l << ": formula (" << predicted.negatives << ","
               << predicted.zeros << "," << predicted.positives << ") vs numeric ("
               << numeric.negatives << "," << numeric.zeros << "," << numeric.positives << ")";
            out.require(predicted == numeric, os.str());
            for (const std::string& f : inertia_table_findings(n, l)) out.info("finding: " + f);
        }
    out.require(inertia_family(4, 3) == Inertia{5, 10, 1}, "boundary (n=4,l=3) inertia");
    out.require(inertia_family(3, 4) == Inertia{5, 9, 1}, "boundary (n=3,l=4) inertia");
    return out;
}

// 5. Energy monotonicity for every edge over the verification grid.
Outcome criterion5() {
    Outcome out;
    Report rep = sweep(3, 6, 2, 5, SweepMode::AllEdges, 4);
    out.require(rep.pass, "some deletion decreased the energy");
    out.require(rep.strict, "monotonicity held but not strictly");
    for (const std::string& f : rep.findings) out.require(false, f);
    const char* names[] = {"clique_internal", "clique_incident", "clique_external"};
    std::ostringstream os;
    os << rep.rows.size() << " deletions";
    for (int c = 0; c < 3; ++c)
        if (rep.cases[c].any) os << "; min delta " << names[c] << " " << fmt(rep.cases[c].min_delta);
    out.info(os.str());
    return out;
}

// 6. Quotient theorems hold for the natural partition on the grid.
Outcome criterion6() {
    Outcome out;
    for (int n = 3; n <= 8; ++n)
        for (int l = 2; l <= 6; ++l) {
            SymMatrix m = SymMatrix::from_ecc(ecc_matrix(build_family({n, l})));
            Partition p;
            p.cells = natural_partition(FamilySpec{n, l}.to_coalescence());
            QuotientTheoremReport rep = verify_quotient_theorems(m, p, 1e-7);
            std::ostringstream os;
            os << "n=" << n << " l=" << l << ": " << rep.detail;
            out.require(rep.equitable && rep.containment_ok && rep.radius_applicable &&
                            rep.radius_ok,
                        os.str());
        }
    return out;
}

// 7. Perron ingredients for the two-part case-3 argument.
Outcome criterion7() {
    Outcome out;
    for (int n = 3; n <= 8; ++n) {
        Report rep = check_perron_monotonicity(n);
        for (const std::string& f : rep.findings) out.require(false, "n=" + std::to_string(n) + ": " + f);
    }
    return out;
}

// 8. Spectral identities, hand-checked matrices, irreducibility cross-check.
Outcome criterion8() {
    Outcome out;
    for (const auto& [name, g] : ecc::testing::corpus()) {
        if (g.order() < 2) continue;
        EccMatrix m = ecc_matrix(g);
        Spectrum s = eig_sym(m);
        double scale = std::max(1.0, m.entries.cast<double>().cwiseAbs().maxCoeff());
        double sum = 0.0, sumsq = 0.0;
        for (double v : s.values) {
            sum += v;
            sumsq += v * v;
        }
        out.require(std::abs(sum) <= 1e-8 * g.order() * scale, name + ": trace identity");
        out.require(std::abs(sumsq - m.entries.cast<double>().squaredNorm()) <=
                        1e-8 * g.order() * scale * scale,
                    name + ": Frobenius identity");
        out.require(is_ecc_irreducible(g) == support_strongly_connected(m.entries),
                    name + ": irreducibility criteria disagree");
    }

    for (int n : {2, 4, 6, 9}) {
        Spectrum s = eig_sym(ecc_matrix(build_complete(n)));
        bool ok = std::abs(s.values[0] - (n - 1)) <= 1e-10 * n;
        for (int i = 1; i < n; ++i) ok = ok && std::abs(s.values[i] + 1.0) <= 1e-10 * n;
        out.require(ok, "complete-graph spectrum n=" + std::to_string(n));
    }

    Eigen::MatrixXi p3(3, 3);
    p3 << 0, 1, 2, 1, 0, 1, 2, 1, 0;
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    out.require(ecc_matrix(path).entries == p3, "P3 eccentricity matrix");
    return out;
}

struct Criterion {
    int id;
    const char* label;
    double time_limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "figure-one energies and unique positive eigenvalue", 1.0, criterion1},
        {2, "published energy table at half-unit precision", 5.0, criterion2},
        {3, "closed-form vs numeric spectra on the grid", 60.0, criterion3},
        {4, "inertia formula on the grid", 0.0, criterion4},
        {5, "exhaustive edge-deletion monotonicity", 120.0, criterion5},
        {6, "quotient eigenvalue and spectral-radius theorems", 0.0, criterion6},
        {7, "entrywise dominance, irreducibility, radius monotonicity", 0.0, criterion7},
        {8, "matrix identities and hand-checked cases", 0.0, criterion8},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.details.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs > c.time_limit_s) {
            out.ok = false;
            out.details.push_back("runtime " + fmt(secs) + "s exceeds " + fmt(c.time_limit_s) + "s");
        }
        std::printf("[%s] criterion %d: %s (%.2fs)\n", out.ok ? "PASS" : "FAIL", c.id, c.label,
                    secs);
        for (const std::string& d : out.details) std::printf("    %s\n", d.c_str());
        if (!out.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
