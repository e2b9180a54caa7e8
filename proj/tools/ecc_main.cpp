// Command-line front end: eccentricity spectra, closed forms, quotient
// checks, and the edge-deletion verification harness.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "ecc/closed_form.hpp"
#include "ecc/eccentricity.hpp"
#include "ecc/equitable.hpp"
#include "ecc/experiment.hpp"
#include "ecc/graph.hpp"
#include "ecc/spectral.hpp"

namespace {

struct GlobalOpts {
    std::string format = "json";
    double tol = 1e-7;
    int jobs = 1;
    std::string out;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + g.out);
    f << text;
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Shared schema for `spectrum` and `closed-form`.
std::string spectrum_text(const GlobalOpts& g, const std::vector<double>& values,
                          double residual_bound) {
    ecc::Spectrum s;
    s.values = values;
    s.residual_bound = residual_bound;
    double tau = ecc::default_zero_tolerance(s);
    ecc::Inertia in = ecc::inertia(s, tau);
    double e = ecc::energy(s);
    double rho = ecc::spectral_radius(s);

    if (g.format == "csv") {
        std::string text = "i,eigenvalue,energy,inertia_neg,inertia_zero,inertia_pos,spectral_radius\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
            text += std::to_string(i) + ',' + fmt_double(values[i]) + ',' + fmt_double(e) + ',' +
                    std::to_string(in.negatives) + ',' + std::to_string(in.zeros) + ',' +
                    std::to_string(in.positives) + ',' + fmt_double(rho) + '\n';
        }
        return text;
    }
    nlohmann::json j;
    j["order"] = values.size();
    j["eigenvalues"] = values;
    j["energy"] = e;
    j["inertia"] = {{"negatives", in.negatives},
                    {"zeros", in.zeros},
                    {"positives", in.positives},
                    {"zero_tolerance", tau}};
    j["spectral_radius"] = rho;
    j["residual_bound"] = residual_bound;
    return j.dump(2) + "\n";
}

int report_exit(const ecc::Report& r) {
    return (r.pass && r.findings.empty()) ? 0 : 1;
}

// "a..b" -> [a, b]
std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("range must look like a..b");
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eccentricity-matrix spectra of coalescences of complete graphs"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tol", g.tol, "closed-form comparison tolerance")->check(CLI::PositiveNumber);
    app.add_option("--jobs", g.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "write output to a file instead of stdout");

    std::string graph_path, partition_path;
    bool as_json = false, as_csv = false;

    CLI::App* spectrum = app.add_subcommand("spectrum", "eccentricity spectrum of a graph file");
    spectrum->add_option("graph-file", graph_path)->required();
    spectrum->add_flag("--json", as_json, "same as --format json");
    spectrum->add_flag("--csv", as_csv, "same as --format csv");

    CLI::App* energy_cmd = app.add_subcommand("energy", "eccentricity energy of a graph file");
    energy_cmd->add_option("graph-file", graph_path)->required();

    CLI::App* eccm = app.add_subcommand("ecc-matrix", "dump the eccentricity matrix");
    eccm->add_option("graph-file", graph_path)->required();

    int cf_n = 0, cf_l = 0, cf_case = 0;
    CLI::App* closed = app.add_subcommand("closed-form", "predicted spectrum for the K_{2n} chain");
    closed->add_option("--n", cf_n)->required();
    closed->add_option("--l", cf_l)->required();
    closed->add_option("--case", cf_case, "0 = undeleted, 1..3 = deleted edge case")
        ->check(CLI::Range(0, 3));
    closed->add_flag("--json", as_json);
    closed->add_flag("--csv", as_csv);

    CLI::App* qcheck = app.add_subcommand("quotient-check", "equitable partition and quotient theorems");
    qcheck->add_option("graph-file", graph_path)->required();
    qcheck->add_option("partition-file", partition_path)->required();

    int v_n = 0, v_l = 0;
    bool all_edges = false, force = false;
    CLI::App* verify = app.add_subcommand("verify", "energy monotonicity under edge deletion");
    verify->add_option("--n", v_n)->required();
    verify->add_option("--l", v_l)->required();
    verify->add_flag("--all-edges", all_edges);

    std::string n_range, l_range;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "verify over a parameter grid");
    sweep_cmd->add_option("--n-range", n_range, "e.g. 3..6")->required();
    sweep_cmd->add_option("--l-range", l_range, "e.g. 2..5")->required();
    sweep_cmd->add_flag("--all-edges", all_edges);
    sweep_cmd->add_flag("--force", force, "override the grid guardrail");

    CLI::App* paper = app.add_subcommand("reproduce-paper", "reproduce the printed energy table");
    (void)paper;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (as_csv) g.format = "csv";
    if (as_json) g.format = "json";

    try {
        if (spectrum->parsed()) {
            ecc::Graph gr = ecc::read_graph_file(graph_path);
            ecc::Spectrum s = ecc::eig_sym(ecc::ecc_matrix(gr));
            emit(g, spectrum_text(g, s.values, s.residual_bound));
            return 0;
        }
        if (energy_cmd->parsed()) {
            ecc::Graph gr = ecc::read_graph_file(graph_path);
            double e = ecc::energy(ecc::eig_sym(ecc::ecc_matrix(gr)));
            if (g.format == "csv")
                emit(g, "energy\n" + fmt_double(e) + "\n");
            else
                emit(g, nlohmann::json{{"energy", e}}.dump(2) + "\n");
            return 0;
        }
        if (eccm->parsed()) {
            ecc::Graph gr = ecc::read_graph_file(graph_path);
            emit(g, ecc::write_matrix(ecc::ecc_matrix(gr).entries));
            return 0;
        }
        if (closed->parsed()) {
            ecc::SpectrumSpec spec;
            switch (cf_case) {
                case 0: spec = ecc::spectrum_family(cf_n, cf_l); break;
                case 1: spec = ecc::case1_spectrum(cf_n, cf_l); break;
                case 2: spec = ecc::case2_spectrum(cf_n, cf_l); break;
                case 3: spec = ecc::case3_spectrum(cf_n, cf_l); break;
            }
            emit(g, spectrum_text(g, spec.values(), 0.0));
            return 0;
        }
        if (qcheck->parsed()) {
            ecc::Graph gr = ecc::read_graph_file(graph_path);
            ecc::Partition p = ecc::read_partition_file(partition_path);
            ecc::SymMatrix m = ecc::SymMatrix::from_ecc(ecc::ecc_matrix(gr));
            ecc::QuotientTheoremReport rep = ecc::verify_quotient_theorems(m, p, g.tol);
            if (g.format == "csv") {
                std::string text = "check,ok\n";
                text += "equitable," + std::string(rep.equitable ? "true" : "false") + "\n";
                text += "containment," + std::string(rep.containment_ok ? "true" : "false") + "\n";
                text += "spectral_radius," +
                        std::string(!rep.radius_applicable ? "n/a" : (rep.radius_ok ? "true" : "false")) +
                        "\n";
                emit(g, text);
            } else {
                nlohmann::json j{{"equitable", rep.equitable},
                                 {"containment_ok", rep.containment_ok},
                                 {"radius_applicable", rep.radius_applicable},
                                 {"radius_ok", rep.radius_ok},
                                 {"radius_diff", rep.radius_diff},
                                 {"pass", rep.pass},
                                 {"detail", rep.detail}};
                if (rep.equitable) {
                    ecc::QuotientMatrix q = ecc::quotient(m, p);
                    std::vector<std::vector<double>> rows;
                    for (int i = 0; i < q.order(); ++i) {
                        std::vector<double> r;
                        for (int jj = 0; jj < q.order(); ++jj) r.push_back(q.entries(i, jj));
                        rows.push_back(std::move(r));
                    }
                    j["quotient"] = rows;
                }
                emit(g, j.dump(2) + "\n");
            }
            return rep.pass ? 0 : 1;
        }
        if (verify->parsed()) {
            ecc::Report rep = ecc::verify_monotonicity(
                v_n, v_l, all_edges ? ecc::SweepMode::AllEdges : ecc::SweepMode::Representative,
                g.tol);
            emit(g, g.format == "csv" ? ecc::to_csv(rep) : ecc::to_json(rep));
            return report_exit(rep);
        }
        if (sweep_cmd->parsed()) {
            auto [n_lo, n_hi] = parse_range(n_range);
            auto [l_lo, l_hi] = parse_range(l_range);
            ecc::Report rep = ecc::sweep(
                n_lo, n_hi, l_lo, l_hi,
                all_edges ? ecc::SweepMode::AllEdges : ecc::SweepMode::Representative, g.jobs,
                force, g.tol);
            emit(g, g.format == "csv" ? ecc::to_csv(rep) : ecc::to_json(rep));
            return report_exit(rep);
        }
        if (paper->parsed()) {
            ecc::Report rep = ecc::reproduce_paper_values();
            emit(g, g.format == "csv" ? ecc::to_csv(rep) : ecc::to_json(rep));
            return report_exit(rep);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
