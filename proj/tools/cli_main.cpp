#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "nnpca/ensembles.hpp"
#include "nnpca/experiments.hpp"
#include "nnpca/io.hpp"
#include "nnpca/sdp.hpp"
#include "nnpca/spectral.hpp"

namespace {

using namespace nnpca;

// Flags shared by the four experiment subcommands. Values land in `cli`;
// merge_config() later reconciles them with an optional config file so that
// explicit flags win over the file and the file wins over defaults.
struct ExperimentArgs {
    RunConfig cli;
    std::string config_path;
};

void add_experiment_flags(CLI::App* sub, ExperimentArgs& args) {
    sub->add_option("--seed", args.cli.master_seed, "master seed for the trial streams");
    sub->add_option("--out", args.cli.out_dir, "output directory");
    sub->add_option("--config", args.config_path, "key=value config file")
        ->check(CLI::ExistingFile);
    sub->add_option("--trials", args.cli.trials, "trials per setting")
        ->check(CLI::PositiveNumber);
    sub->add_option("--n", args.cli.n, "matrix dimension")->check(CLI::PositiveNumber);
    sub->add_option("--n-list", args.cli.n_list, "dimension ladder (fig-witness)")
        ->delimiter(',');
    sub->add_option("--delta", args.cli.delta, "top-eigenspace fraction");
    sub->add_option("--beta", args.cli.beta, "spike strength");
    sub->add_option("--gamma", args.cli.gamma, "Wishart aspect ratio n/N");
    sub->add_option("--rho", args.cli.rho, "spike sparsity");
    sub->add_option("--eps", args.cli.eps, "certification margin below the spectral edge");
    sub->add_option("--tol", args.cli.tol, "solver residual tolerance");
    sub->add_option("--jobs", args.cli.jobs, "worker threads")->check(CLI::PositiveNumber);
}

RunConfig merge_config(const CLI::App* sub, const ExperimentArgs& args,
                       const std::string& experiment) {
    RunConfig merged;
    if (!args.config_path.empty()) apply_config_file(args.config_path, merged);
    const auto keep_cli = [&](const char* flag) { return sub->count(flag) > 0; };
    if (keep_cli("--seed")) merged.master_seed = args.cli.master_seed;
    if (keep_cli("--out")) merged.out_dir = args.cli.out_dir;
    if (keep_cli("--trials")) merged.trials = args.cli.trials;
    if (keep_cli("--n")) merged.n = args.cli.n;
    if (keep_cli("--n-list")) merged.n_list = args.cli.n_list;
    if (keep_cli("--delta")) merged.delta = args.cli.delta;
    if (keep_cli("--beta")) merged.beta = args.cli.beta;
    if (keep_cli("--gamma")) merged.gamma = args.cli.gamma;
    if (keep_cli("--rho")) merged.rho = args.cli.rho;
    if (keep_cli("--eps")) merged.eps = args.cli.eps;
    if (keep_cli("--tol")) merged.tol = args.cli.tol;
    if (keep_cli("--jobs")) merged.jobs = args.cli.jobs;
    merged.experiment = experiment;
    return merged;
}

int run_experiment(const RunConfig& cfg) {
    std::vector<ExperimentRecord> records;
    if (cfg.experiment == "fig-primal") records = run_fig_primal(cfg);
    else if (cfg.experiment == "fig-dual") records = run_fig_dual(cfg);
    else if (cfg.experiment == "fig-witness") records = run_fig_witness(cfg);
    else if (cfg.experiment == "reduction-demo") records = run_reduction_demo(cfg);
    else throw InvalidParameter("unknown experiment: " + cfg.experiment);
    emit_outputs(records, cfg.out_dir);
    std::printf("%s: %zu records -> %s\n", cfg.experiment.c_str(), records.size(),
                cfg.out_dir.c_str());
    return 0;
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::converged: return "converged";
        case SolveStatus::max_iters: return "max_iters";
        default: return "numeric_failure";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Primal/dual experiments for the simplex-constrained "
                 "nonnegative PCA relaxation on random matrices"};
    app.require_subcommand(1);

    ExperimentArgs fig_primal_args, fig_dual_args, fig_witness_args, reduction_args;
    auto* sub_primal =
        app.add_subcommand("fig-primal", "solve the SDP on GOE draws, record the optimizer rank");
    add_experiment_flags(sub_primal, fig_primal_args);
    auto* sub_dual =
        app.add_subcommand("fig-dual", "record spectra of W and the dual-corrected W + Y");
    add_experiment_flags(sub_dual, fig_dual_args);
    auto* sub_witness =
        app.add_subcommand("fig-witness", "feasible-witness lower bound across a dimension ladder");
    add_experiment_flags(sub_witness, fig_witness_args);
    auto* sub_reduction =
        app.add_subcommand("reduction-demo", "embed spiked Wishart samples and run the detector");
    add_experiment_flags(sub_reduction, reduction_args);

    // sdp-solve: one matrix in, one report out.
    std::string solve_input, solve_output;
    double solve_tol = 1e-6;
    auto* sub_solve = app.add_subcommand("sdp-solve", "solve the SDP for a matrix file");
    sub_solve->add_option("input", solve_input, "matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    sub_solve->add_option("--out", solve_output, "write the optimizer to this matrix file");
    sub_solve->add_option("--tol", solve_tol, "residual tolerance");

    // gen: sample a matrix and write it out.
    std::string gen_output, gen_model = "goe";
    int gen_n = 150;
    double gen_beta = 1.5;
    std::uint64_t gen_seed = 1;
    auto* sub_gen = app.add_subcommand("gen", "sample a random matrix and write it to a file");
    sub_gen->add_option("--out", gen_output, "output matrix file")->required();
    sub_gen->add_option("--n", gen_n, "matrix dimension")->check(CLI::PositiveNumber);
    sub_gen->add_option("--seed", gen_seed, "seed");
    sub_gen->add_option("--beta", gen_beta, "spike strength for the spiked models");
    sub_gen->add_option("--model", gen_model, "goe, spiked, or spiked-pos")
        ->check(CLI::IsMember({"goe", "spiked", "spiked-pos"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub_primal->parsed()) return run_experiment(merge_config(sub_primal, fig_primal_args, "fig-primal"));
        if (sub_dual->parsed()) return run_experiment(merge_config(sub_dual, fig_dual_args, "fig-dual"));
        if (sub_witness->parsed()) return run_experiment(merge_config(sub_witness, fig_witness_args, "fig-witness"));
        if (sub_reduction->parsed()) return run_experiment(merge_config(sub_reduction, reduction_args, "reduction-demo"));

        if (sub_solve->parsed()) {
            const Mat w = read_matrix_file(solve_input);
            SdpConfig cfg;
            cfg.primal_tol = cfg.dual_tol = solve_tol;
            const SdpSolution sol = solve_primal(w, cfg);
            const FeasibilityReport feas = check_feasibility(sol.x_opt, 10 * solve_tol);
            std::printf("n               = %d\n", static_cast<int>(w.rows()));
            std::printf("status          = %s\n", status_name(sol.status));
            std::printf("iters           = %d\n", sol.iters);
            std::printf("value           = %s\n", format_double(sol.value).c_str());
            std::printf("dual_value      = %s\n", format_double(sol.dual_value).c_str());
            std::printf("gap             = %s\n", format_double(sol.dual_value - sol.value).c_str());
            std::printf("dual_usable     = %s\n", sol.dual_usable ? "yes" : "no");
            std::printf("numerical_rank  = %d\n", numerical_rank(sol.x_opt));
            std::printf("min_entry       = %s\n", format_double(feas.min_entry).c_str());
            std::printf("trace_error     = %s\n", format_double(feas.trace_error).c_str());
            std::printf("min_eigenvalue  = %s\n", format_double(feas.min_eigenvalue).c_str());
            if (!solve_output.empty()) write_matrix_file(solve_output, sol.x_opt);
            return sol.status == SolveStatus::converged ? 0 : 2;
        }

        if (sub_gen->parsed()) {
            Mat m;
            if (gen_model == "goe") {
                m = sample_goe(gen_n, SeedSpec{gen_seed, 0});
            } else {
                const PriorKind kind =
                    gen_model == "spiked" ? PriorKind::sphere : PriorKind::positive_orthant;
                m = sample_spiked_wigner(gen_n, gen_beta, kind, SeedSpec{gen_seed, 0}).matrix;
            }
            write_matrix_file(gen_output, m);
            std::printf("wrote %dx%d matrix to %s\n", gen_n, gen_n, gen_output.c_str());
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
