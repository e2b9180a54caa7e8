#pragma once

#include <array>
#include <string>
#include <vector>

#include "ecc/closed_form.hpp"
#include "ecc/graph.hpp"

namespace ecc {

enum class SweepMode { Representative, AllEdges };

// One edge deletion: energies before/after and the closed-form agreement
// column. energy_after/delta are NaN when the deletion disconnects.
struct SweepRow {
    int n = 0;
    int l = 0;
    EdgeCase edge_case = EdgeCase::CliqueInternal;
    EdgeRef edge;
    double energy_before = 0.0;
    double energy_after = 0.0;
    double delta = 0.0;
    bool connected_after = true;
    bool closed_form_agrees = true;
};

// One printed value from the source tables, reproduced numerically.
struct PaperValueRow {
    std::string label;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool ok = false;
};

struct CaseSummary {
    int count = 0;
    double min_delta = 0.0;
    bool any = false;
};

struct Report {
    int schema_version = 1;
    std::vector<SweepRow> rows;
    std::vector<PaperValueRow> paper_values;
    std::vector<std::string> findings;  // anomalies; nonempty means exit 1
    std::vector<std::string> notes;     // informational records
    std::array<CaseSummary, 3> cases;   // indexed by EdgeCase
    bool pass = true;    // every delta >= -1e-7 and every paper row ok
    bool strict = true;  // every connected delta strictly positive

    void merge(const Report& other);
};

// Energy comparison threshold: deltas below this count as decreases.
inline constexpr double kDeltaTolerance = -1e-7;

// Deletes one canonical edge per case (representative) or every edge, and
// checks that eccentricity energy never decreases; each deleted spectrum is
// also matched against its closed form.
Report verify_monotonicity(int n, int l, SweepMode mode, double closed_form_tol = 1e-7);

// Reproduces the printed energy table: the Figure-1 pair and the
// before/after values of the edge-deletion notes, each at half a unit of
// its last printed decimal.
Report reproduce_paper_values();

// Batched verify_monotonicity over a grid; rows ordered by (n, l, case,
// edge). The guardrail caps ranges at 3..12 x 2..8 unless force is set.
Report sweep(int n_lo, int n_hi, int l_lo, int l_hi, SweepMode mode, int jobs = 1,
             bool force = false, double closed_form_tol = 1e-7);

// The three ingredients behind the two-part case-3 argument: entrywise
// dominance of the eccentricity matrices, irreducibility of the deleted
// one, and spectral-radius monotonicity. Requires l = 2.
Report check_perron_monotonicity(int n, int l = 2);

std::string to_json(const Report& r);
std::string to_csv(const Report& r);

}  // namespace ecc
