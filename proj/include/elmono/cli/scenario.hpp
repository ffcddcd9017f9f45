#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "elmono/materials.hpp"
#include "elmono/mesh.hpp"
#include "elmono/ntd.hpp"
#include "elmono/recon.hpp"

namespace elmono::cli {

/// Raised for malformed or inconsistent scenario input (usage error).
class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class AlphaPolicy : std::uint8_t { Explicit, FromContrast };

/// Everything needed to run the pipeline. Defaults mirror the separated
/// inclusion benchmark at desk scale.
struct Scenario {
    Box bounds{Vec3::Constant(-1.0), Vec3::Constant(1.0)};
    int elements_per_axis = 12;
    int patches_per_side = 4;
    LoadMode load_mode = LoadMode::All;
    double omega = 50.0;
    Material background = kReferenceBackground;
    std::vector<Inclusion> inclusions;
    std::vector<CubeFace> dirichlet;
    int test_blocks_per_axis = 6;

    AlphaPolicy alpha_policy = AlphaPolicy::FromContrast;
    double alpha_c = 0.0134;
    Alphas alpha_explicit;
    /// Include alpha2 in the support test (off: the support test probes lambda and rho only).
    bool d_test_includes_mu = false;

    ThresholdPolicy threshold_d;
    ThresholdPolicy threshold_mu;

    double solver_tolerance = 1e-8;
    double eigen_tolerance = kDefaultEigenTolerance;

    std::string output_dir = "out";
    bool write_vtk = true;
    std::uint64_t seed = 1;

    /// Parses YAML (JSON is accepted as a subset). Throws ScenarioError.
    static Scenario parse(const std::string& text);
    static Scenario load(const std::filesystem::path& path);

    /// Checks m | n, k | n, boxes inside bounds, positive parameters.
    void validate() const;

    /// Complete echo; parse(to_json().dump()) reproduces the scenario exactly.
    nlohmann::json to_json() const;
};

/// Test parameters actually used by the two tests.
struct ResolvedAlphas {
    /// (alpha1, 0, alpha3); alpha2 joins when requested or when it is the
    /// only nonzero channel.
    Alphas support;
    double shear = 0.0;
    /// The (alpha1, alpha2, alpha3) triple before channel selection.
    Alphas triple;
};

/// Mesh, patches, media, load basis and test grid built from a scenario.
/// Non-movable: snapshot fields keep a pointer to the mesh.
struct Problem {
    explicit Problem(const Scenario& scenario);
    Problem(const Problem&) = delete;
    Problem& operator=(const Problem&) = delete;

    Scenario scenario;
    Mesh mesh;
    PatchSet patches;
    MaterialField background;
    MaterialField truth;
    LoadBasis basis;
    TestGrid grid;

    ResolvedAlphas alphas() const;
    Hash256 background_hash() const;
    Hash256 truth_hash() const;
};

}  // namespace elmono::cli
