#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "elmono/materials.hpp"
#include "elmono/mesh.hpp"
#include "elmono/ntd.hpp"

namespace elmono {

/// k x k x k grid-aligned test blocks, ordered lexicographically (x fastest).
struct TestGrid {
    int k = 0;
    std::vector<Box> blocks;
    std::vector<ElementSet> elements;

    std::size_t size() const { return blocks.size(); }
    std::size_t index(int i, int j, int l) const {
        return static_cast<std::size_t>(i) + static_cast<std::size_t>(k) * (static_cast<std::size_t>(j) + static_cast<std::size_t>(k) * l);
    }
};

/// Requires k | n so block faces lie on element faces.
TestGrid build_test_grid(const Mesh& mesh, int k);

inline constexpr double kDefaultEigenTolerance = 1e-10;

/// Eigenvalues below -eps_rel * max|sigma| of a symmetric matrix, with multiplicity.
Index count_negative_eigenvalues(const Eigen::MatrixXd& a, double eps_rel = kDefaultEigenTolerance);

struct BlockTest {
    Index count = 0;
    bool inside = false;
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
};

/// Spectrum test of G0 + D_B(alpha) - G for one block; inside iff count <= threshold.
BlockTest test_block(const Eigen::MatrixXd& g, const Eigen::MatrixXd& g0, const SnapshotFields& snapshots,
                     const ElementSet& block, const Alphas& alpha, Index threshold,
                     double eps_rel = kDefaultEigenTolerance);

struct EigencountReport {
    Alphas alpha;
    double eps_rel = kDefaultEigenTolerance;
    std::vector<Index> counts;
    std::vector<double> min_eigenvalue;
    std::vector<double> max_eigenvalue;
};

using BlockMask = std::vector<std::uint8_t>;

/// Runs the eigencount test on every block. Blocks are independent; output
/// does not depend on the worker count.
EigencountReport eigencount_sweep(const Eigen::MatrixXd& g, const Eigen::MatrixXd& g0, const SnapshotFields& snapshots,
                                  const TestGrid& grid, const Alphas& alpha, double eps_rel = kDefaultEigenTolerance,
                                  int threads = 1);

BlockMask threshold_mask(const EigencountReport& report, Index threshold);

struct TestOutcome {
    EigencountReport report;
    BlockMask mask;
    /// False when the test was skipped for a zero alpha; counts are then empty
    /// and the mask is all zero.
    bool ran = true;
};

/// Support test with alpha >= 0, alpha != 0.
TestOutcome reconstruct_d(const Eigen::MatrixXd& g, const Eigen::MatrixXd& g0, const SnapshotFields& snapshots,
                          const TestGrid& grid, const Alphas& alpha, Index threshold,
                          double eps_rel = kDefaultEigenTolerance, int threads = 1);

/// Shear-modulus support test with alpha = (0, alpha_mu, 0), alpha_mu > 0.
TestOutcome reconstruct_mu(const Eigen::MatrixXd& g, const Eigen::MatrixXd& g0, const SnapshotFields& snapshots,
                           const TestGrid& grid, double alpha_mu, Index threshold,
                           double eps_rel = kDefaultEigenTolerance, int threads = 1);

/// Adds every unmarked component (6-connectivity) not reaching the grid boundary.
BlockMask fill_cavities(const BlockMask& mask, int k);

enum class BlockLabel : std::uint8_t { Exterior = 0, D2 = 1, DOnly = 2 };

const char* to_string(BlockLabel label);

struct Classification {
    std::vector<BlockLabel> labels;
    /// D2 blocks outside the filled D mask; labelled D2 but never merged into D.
    std::vector<std::size_t> inconsistencies;
};

Classification classify(const BlockMask& d_filled, const BlockMask& d2_filled);

struct ThresholdAdvice {
    bool significant = false;
    std::optional<Index> suggested;
    /// Largest gap between consecutive sorted counts: (below, above).
    Index gap_low = 0;
    Index gap_high = 0;
    Index min_count = 0;
    Index max_count = 0;
    /// Largest gap over the mean spacing of all other consecutive pairs.
    double gap_ratio = 0.0;
    /// Largest gap over the count just above it.
    double relative_gap = 0.0;
};

inline constexpr double kGapSignificance = 3.0;
inline constexpr double kRelativeGapSignificance = 0.25;

/// Largest-gap split of the sorted counts. Suggests floor((below + above) / 2)
/// when the gap is at least 2, at least kGapSignificance times the mean
/// spacing of the other consecutive pairs, and at least
/// kRelativeGapSignificance of the count just above it.
ThresholdAdvice threshold_advisor(const std::vector<Index>& counts);

/// Threshold chosen explicitly or via the advisor.
struct ThresholdPolicy {
    std::optional<Index> fixed;

    /// Fixed value, else the advisor's suggestion, else -1 (nothing inside).
    Index resolve(const std::vector<Index>& counts) const;
};

struct ReconstructionConfig {
    Alphas alpha_d;
    double alpha_mu = 0.0;
    ThresholdPolicy threshold_d;
    ThresholdPolicy threshold_mu;
    double eps_rel = kDefaultEigenTolerance;
    int threads = 1;
};

struct ReconstructionResult {
    TestOutcome d;
    TestOutcome mu;
    Index threshold_d = -1;
    Index threshold_mu = -1;
    BlockMask d_filled;
    BlockMask mu_filled;
    BlockMask green;
    Classification classification;
};

/// Both tests, cavity filling and the three-way labelling. A test whose alpha
/// is zero is skipped and marks nothing; negative alphas throw.
ReconstructionResult reconstruct(const Eigen::MatrixXd& g, const Eigen::MatrixXd& g0, const SnapshotFields& snapshots,
                                 const TestGrid& grid, const ReconstructionConfig& config);

}  // namespace elmono
