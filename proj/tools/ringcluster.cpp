// ringcluster: ring-partitioned WSN cluster planning and simulation.
//
// Subcommands:
//   plan              per-ring head counts, probabilities, and energies
//   analytic          the full figure family (fig4..fig14) as data series
//   sweep             network totals across a range of ring counts (fig10)
//   simulate          Monte Carlo trials vs the closed-form plan
//   validate-moments  sampled vs closed-form distance moments
//   hetero            category-I node counts per ring
//   render            SVG of one realized deployment and its tessellation
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ringcluster/planner.hpp"
#include "ringcluster/report.hpp"
#include "ringcluster/rng.hpp"
#include "ringcluster/simulator.hpp"

namespace {

using namespace ringcluster;

// Everything the subcommands need, resolved from flags and defaults.
struct RunConfig {
    NetworkConfig network;
    std::string radio_path;
    std::string out = "-";  // "-" = stdout; analytic treats it as a directory
    OutputFormat format = OutputFormat::csv;
    std::uint64_t seed = 1;
    int trials = 200;
    long samples = 1000000;
    AssignPolicy policy = AssignPolicy::nearest_global;
    BranchMode branch = BranchMode::paper_faithful;
    ModelKind model = ModelKind::uepem;
    int threads = 0;  // 0 = pick automatically
    int rings_min = 1;
    int rings_max = 20;
};

void add_network_flags(CLI::App& cmd, RunConfig& run) {
    cmd.add_option("--nodes", run.network.node_count, "Deployed node count")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--area-m2", run.network.area_m2, "Field area in m^2")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--rings", run.network.ring_count, "Number of equal-width rings")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--epem-p", run.network.epem_p, "Fixed election probability, in (0, 1]")
        ->check(CLI::Range(0.0, 1.0).description("FLOAT in (0, 1]"))
        ->check([](const std::string& value) {
            return std::stod(value) > 0.0 ? std::string() : "--epem-p must be > 0";
        });
    cmd.add_option("--radio", run.radio_path, "Radio parameter file (key=value)")
        ->check(CLI::ExistingFile);
}

void add_output_flags(CLI::App& cmd, RunConfig& run) {
    cmd.add_option("--format", run.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"csv", OutputFormat::csv},
                                                {"json", OutputFormat::json}}));
    cmd.add_option("--out", run.out, "Output path; '-' writes to stdout");
}

void add_policy_flags(CLI::App& cmd, RunConfig& run) {
    cmd.add_option("--policy", run.policy, "Member-to-head assignment rule")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, AssignPolicy>{{"nearest-global", AssignPolicy::nearest_global},
                                                {"nearest-in-ring", AssignPolicy::nearest_in_ring}}));
    cmd.add_option("--branch", run.branch, "Amplifier branch selection")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, BranchMode>{{"paper-faithful", BranchMode::paper_faithful},
                                              {"thresholded", BranchMode::thresholded}}));
}

void add_model_flag(CLI::App& cmd, RunConfig& run) {
    cmd.add_option("--model", run.model, "Election model")
        ->transform(CLI::CheckedTransformer(std::map<std::string, ModelKind>{
            {"uepem", ModelKind::uepem}, {"epem", ModelKind::epem}}));
}

RadioParams resolve_radio(const RunConfig& run) {
    RadioParams radio = run.radio_path.empty() ? RadioParams{} : load_radio_params(run.radio_path);
    if (const auto note = crossover_note(radio)) std::cerr << "note: " << *note << "\n";
    return radio;
}

std::string extension(OutputFormat format) {
    return format == OutputFormat::csv ? ".csv" : ".json";
}

int run_plan(const RunConfig& run) {
    const RadioParams radio = resolve_radio(run);
    emit_series(plan_table(make_network_plan(run.network, radio)), run.format, run.out);
    return 0;
}

int run_analytic(const RunConfig& run) {
    const RadioParams radio = resolve_radio(run);
    const NetworkPlan plan = make_network_plan(run.network, radio);
    const std::vector<FigureSeries> figures = analytic_figures(plan);
    if (run.out == "-") {
        for (const FigureSeries& series : figures) emit_series(series, run.format, "-");
        return 0;
    }
    std::filesystem::create_directories(run.out);
    for (const FigureSeries& series : figures) {
        const std::filesystem::path path =
            std::filesystem::path(run.out) / (series.figure + extension(run.format));
        emit_series(series, run.format, path.string());
    }
    return 0;
}

int run_sweep(const RunConfig& run) {
    const RadioParams radio = resolve_radio(run);
    emit_series(sweep_figure(ring_sweep(run.network, radio, run.rings_min, run.rings_max)),
                run.format, run.out);
    return 0;
}

int run_simulate(const RunConfig& run) {
    const RadioParams radio = resolve_radio(run);
    const NetworkPlan plan = make_network_plan(run.network, radio);
    const TrialSummary uepem = run_trials(run.network, radio, ModelKind::uepem, run.trials,
                                          run.seed, run.policy, run.branch, run.threads);
    const TrialSummary epem = run_trials(run.network, radio, ModelKind::epem, run.trials,
                                         run.seed, run.policy, run.branch, run.threads);
    emit_series(simulate_table(plan, uepem, epem), run.format, run.out);
    return 0;
}

int run_validate_moments(const RunConfig& run) {
    const RadioParams radio = resolve_radio(run);
    validate(run.network);
    std::vector<double> k_per_ring;
    for (int ring = 0; ring < run.network.ring_count; ++ring)
        k_per_ring.push_back(k_opt(run.network, radio, ring));
    const std::vector<MomentEstimate> moments =
        estimate_moments(run.network, k_per_ring, run.samples, run.seed);
    emit_series(moments_table(moments), run.format, run.out);

    bool all_within = true;
    for (const MomentEstimate& m : moments) {
        if (std::abs(m.z2_mean_m2 - m.z2_closed_m2) > 3.0 * m.z2_se_m2) {
            std::cerr << "ring " << m.ring + 1 << ": E[Z^2] sample " << format_value(m.z2_mean_m2)
                      << " departs from closed form " << format_value(m.z2_closed_m2)
                      << " by more than 3 standard errors\n";
            all_within = false;
        }
        if (std::abs(m.y4_mean_m4 - m.y4_closed_m4) > 3.0 * m.y4_se_m4) {
            std::cerr << "ring " << m.ring + 1 << ": E[Y^4] sample " << format_value(m.y4_mean_m4)
                      << " departs from closed form " << format_value(m.y4_closed_m4)
                      << " by more than 3 standard errors\n";
            all_within = false;
        }
    }
    return all_within ? 0 : 1;
}

int run_hetero(const RunConfig& run) {
    const RadioParams radio = resolve_radio(run);
    emit_series(hetero_table(hetero_deployment(run.network, radio)), run.format, run.out);
    return 0;
}

int run_render(const RunConfig& run) {
    const RadioParams radio = resolve_radio(run);
    validate(run.network);
    const Deployment deployment = deploy(run.network, derive_seed(run.seed, 0));
    std::vector<double> probability;
    for (int ring = 0; ring < run.network.ring_count; ++ring)
        probability.push_back(election_probability(run.network, radio, ring, run.model));
    const std::vector<std::uint8_t> is_head =
        elect_heads(deployment, probability, derive_seed(run.seed, 1));
    const Assignment assignment = assign_members(deployment, is_head, run.policy);
    const std::string svg = render_svg(deployment, is_head, assignment);
    if (run.out == "-") {
        std::cout << svg;
        std::cout.flush();
    } else {
        write_file_atomic(run.out, svg);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig run;
    CLI::App app{"Ring-partitioned WSN cluster planner and simulator"};
    app.require_subcommand(1);

    CLI::App* plan = app.add_subcommand("plan", "Per-ring plan for both election models");
    add_network_flags(*plan, run);
    add_output_flags(*plan, run);

    CLI::App* analytic =
        app.add_subcommand("analytic", "Emit every analytic figure as a data series");
    add_network_flags(*analytic, run);
    analytic->add_option("--format", run.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"csv", OutputFormat::csv},
                                                {"json", OutputFormat::json}}));
    std::string analytic_out = "figures";
    analytic->add_option("--out", analytic_out,
                         "Output directory ('-' streams every series to stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "Network totals across ring counts");
    add_network_flags(*sweep, run);
    add_output_flags(*sweep, run);
    sweep->add_option("--rings-min", run.rings_min, "Smallest ring count")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--rings-max", run.rings_max, "Largest ring count")
        ->check(CLI::PositiveNumber);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo trials for both models");
    add_network_flags(*simulate, run);
    add_output_flags(*simulate, run);
    add_policy_flags(*simulate, run);
    simulate->add_option("--seed", run.seed, "Base seed for trial derivation");
    simulate->add_option("--trials", run.trials, "Independent trials")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--threads", run.threads, "Worker threads (0 = auto)")
        ->check(CLI::NonNegativeNumber);

    CLI::App* validate_moments =
        app.add_subcommand("validate-moments", "Sampled vs closed-form distance moments");
    add_network_flags(*validate_moments, run);
    add_output_flags(*validate_moments, run);
    validate_moments->add_option("--seed", run.seed, "Sampling seed");
    validate_moments->add_option("--samples", run.samples, "Draws per moment")
        ->check(CLI::Range(static_cast<long>(2), std::numeric_limits<long>::max()));

    CLI::App* hetero = app.add_subcommand("hetero", "Category-I node counts per ring");
    add_network_flags(*hetero, run);
    add_output_flags(*hetero, run);

    CLI::App* render = app.add_subcommand("render", "SVG of one realized tessellation");
    add_network_flags(*render, run);
    add_policy_flags(*render, run);
    add_model_flag(*render, run);
    render->add_option("--seed", run.seed, "Deployment/election seed");
    std::string render_out = "tessellation.svg";
    render->add_option("--out", render_out, "Output path; '-' writes to stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (plan->parsed()) return run_plan(run);
        if (analytic->parsed()) {
            run.out = analytic_out;
            return run_analytic(run);
        }
        if (sweep->parsed()) return run_sweep(run);
        if (simulate->parsed()) return run_simulate(run);
        if (validate_moments->parsed()) return run_validate_moments(run);
        if (hetero->parsed()) return run_hetero(run);
        if (render->parsed()) {
            run.out = render_out;
            return run_render(run);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
