#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "elmono/cli/scenario.hpp"
#include "elmono/fem.hpp"
#include "elmono/ntd.hpp"
#include "elmono/recon.hpp"

namespace elmono::cli {

/// Background and true-medium solves for the scenario's load basis.
struct ForwardResult {
    SolutionSet background;
    SolutionSet truth;
    InertiaReport background_inertia;
    InertiaReport truth_inertia;
    Hash256 background_hash{};
    Hash256 truth_hash{};
    double seconds = 0.0;
};

/// Throws ResonanceError when either medium is numerically singular.
ForwardResult run_forward(const Problem& problem);

struct Timings {
    double forward = 0.0;
    double ntd = 0.0;
    double reconstruct = 0.0;
};

struct PipelineResult {
    ForwardResult forward;
    NtDMatrix g;
    NtDMatrix g0;
    ReconstructionResult reconstruction;
    ResolvedAlphas alphas;
    Timings timings;
};

ReconstructionConfig reconstruction_config(const Problem& problem, int threads);

/// forward -> NtD -> reconstruct, all in memory.
PipelineResult run_pipeline(const Problem& problem, int threads = 1);

/// Result document: scenario echo, per-block records, thresholds, advisor
/// statistics, summary counts and timings.
nlohmann::json result_json(const Problem& problem, const ReconstructionResult& result, const ResolvedAlphas& alphas,
                           const Timings& timings);

/// Legacy VTK structured-points file with per-block label and eigencounts.
void write_vtk(const std::filesystem::path& path, const TestGrid& grid, const ReconstructionResult& result);

/// Artifact locations below the output directory.
struct ArtifactPaths {
    std::filesystem::path root;
    std::filesystem::path background_solutions() const { return root / "U0.emnt"; }
    std::filesystem::path truth_solutions() const { return root / "U.emnt"; }
    std::filesystem::path forward_report() const { return root / "forward.json"; }
    std::filesystem::path g() const { return root / "G.emnt"; }
    std::filesystem::path g0() const { return root / "G0.emnt"; }
    std::filesystem::path ntd_report() const { return root / "ntd.json"; }
    std::filesystem::path result() const { return root / "result.json"; }
    std::filesystem::path vtk() const { return root / "labels.vtk"; }
};

/// Missing or stale upstream artifacts.
class ArtifactError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Solves both media, persists the snapshots and prints the inertia reports.
nlohmann::json cmd_forward(const Scenario& scenario, const std::filesystem::path& out, std::ostream& log);
/// Builds G and G0 from persisted snapshots.
nlohmann::json cmd_ntd(const Scenario& scenario, const std::filesystem::path& out, std::ostream& log);
/// Runs both tests on persisted operators and writes result.json.
nlohmann::json cmd_reconstruct(const Scenario& scenario, const std::filesystem::path& out, int threads, std::ostream& log);

struct SweepSpec {
    std::vector<LoadMode> modes{LoadMode::All, LoadMode::NormalOnly, LoadMode::TangentialOnly};
    std::vector<double> alpha_scales{1.0};
    /// Number of blocks timed with a full perturbed-medium re-solve.
    int resolve_blocks = 2;

    static SweepSpec parse(const std::string& yaml_text);
};

struct SweepRow {
    LoadMode mode = LoadMode::All;
    double alpha_scale = 1.0;
    Index loads = 0;
    Index threshold_d = -1;
    Index threshold_mu = -1;
    /// -1 when the corresponding test was skipped.
    Index d_min = -1, d_median = -1, d_max = -1;
    Index mu_min = -1, mu_median = -1, mu_max = -1;
    ThresholdAdvice advice_d;
    ThresholdAdvice advice_mu;
    std::vector<std::size_t> d_blocks;
    std::vector<std::size_t> mu_blocks;
    std::vector<BlockLabel> labels;
    double background_setup_seconds = 0.0;
    double linearized_per_block = 0.0;
    double full_resolve_per_block = 0.0;
    int resolved_blocks = 0;

    double speedup() const { return linearized_per_block > 0.0 ? full_resolve_per_block / linearized_per_block : 0.0; }
};

std::vector<SweepRow> run_sweep(const Scenario& scenario, const SweepSpec& spec, int threads, std::ostream& log);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace elmono::cli
