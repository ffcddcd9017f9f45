#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "elmono/cli/scenario.hpp"
#include "elmono/recon.hpp"

namespace elmono::cli {

enum class VerifyLevel : std::uint8_t { Fast, Full };

/// "fast" or "full"; anything else throws ScenarioError.
VerifyLevel verify_level_from_string(const std::string& name);

struct CheckResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Check ids in execution order: "C1".."C10" for the acceptance criteria plus
/// "linearity" (Frechet linearity and assembly-route agreement) and, at the
/// full level, "rods" (intersecting inclusions).
std::vector<std::string> check_ids(VerifyLevel level);

/// Runs one check; exceptions are reported as failures.
CheckResult run_check(const std::string& id, std::uint64_t seed = 1, int threads = 1);

/// Runs every check of the level, streaming one line per check to `progress`
/// when given.
std::vector<CheckResult> run_verification(VerifyLevel level, std::uint64_t seed = 1, int threads = 1,
                                          std::ostream* progress = nullptr);

std::string format_check(const CheckResult& result);

/// Desk-scale separated-inclusions benchmark: 12^3 elements on [-1, 1]^3, 4x4
/// patches per face, 6^3 test blocks, one shear-modulus inclusion block at
/// [-2/3, -1/3]^3 and one lambda inclusion block at [1/3, 2/3]^3.
Scenario separated_scenario(LoadMode mode = LoadMode::All);

/// Desk-scale intersecting rods: a lambda rod along x and a shear-modulus rod
/// along y, one test block thick, crossing in [0, 1/3]^3.
Scenario intersecting_scenario();

/// Test blocks touching a set of elements.
BlockMask blocks_covering(const TestGrid& grid, const ElementSet& elements);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations. Slow but
/// independent of Eigen's tridiagonal QR; used as the counting oracle.
Eigen::VectorXd jacobi_eigenvalues(const Eigen::MatrixXd& a, double tol = 1e-15, int max_sweeps = 100);

/// Negative count from jacobi_eigenvalues under the same relative threshold.
Index oracle_negative_count(const Eigen::MatrixXd& a, double eps_rel = kDefaultEigenTolerance);

/// Cavity filling by union-find over the unmarked complement.
BlockMask oracle_fill(const BlockMask& mask, int k);

}  // namespace elmono::cli
