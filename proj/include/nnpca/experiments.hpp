#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nnpca/common.hpp"

namespace nnpca {

// One trial's serializable outcome. Metrics keep insertion order so CSV
// emission is reproducible.
struct ExperimentRecord {
    std::string experiment;
    int n = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, double>> metrics;

    double metric(const std::string& key) const;
    bool has_metric(const std::string& key) const;
    void set(const std::string& key, double value);
};

struct RunConfig {
    std::string experiment;
    int n = 150;
    std::vector<int> n_list;  // fig-witness levels; empty means the default ladder
    int trials = 10;
    double delta = 0.04;
    double beta = -0.99;
    double gamma = 1.05;
    double rho = 0.01;
    double eps = 0.1;
    double tol = 1e-6;
    std::uint64_t master_seed = 1;
    std::string out_dir = "out";
    int jobs = 1;
};

// key=value file, one pair per line, '#' comments. Keys mirror the RunConfig
// field names; n_list takes a comma-separated list.
void apply_config_file(const std::string& path, RunConfig& cfg);

std::vector<ExperimentRecord> run_fig_primal(const RunConfig& cfg);
std::vector<ExperimentRecord> run_fig_dual(const RunConfig& cfg);
std::vector<ExperimentRecord> run_fig_witness(const RunConfig& cfg);
std::vector<ExperimentRecord> run_reduction_demo(const RunConfig& cfg);

// Writes results.csv (per-experiment column set), results.json (all records
// plus failure accounting), one figure SVG, and the figure's numeric sidecar
// CSV. results.csv bytes depend only on the records.
void emit_outputs(const std::vector<ExperimentRecord>& records, const std::string& out_dir);

// Levels used by fig-witness when cfg.n_list is empty.
std::vector<int> default_witness_levels();

} // namespace nnpca
