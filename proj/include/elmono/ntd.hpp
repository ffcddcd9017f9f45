#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "elmono/fem.hpp"
#include "elmono/materials.hpp"
#include "elmono/mesh.hpp"

namespace elmono {

enum class LoadMode : std::uint8_t { All = 0, NormalOnly = 1, TangentialOnly = 2 };

const char* to_string(LoadMode mode);
LoadMode load_mode_from_string(const std::string& name);

struct LoadSpec {
    std::size_t patch;
    LoadDirection direction;
};

/// Patch-major, direction-minor (normal, t1, t2) set of traction loads.
struct LoadBasis {
    LoadMode mode = LoadMode::All;
    std::vector<LoadSpec> loads;
    /// Full-dof load vectors, one column per load.
    Eigen::MatrixXd f;

    Index size() const { return static_cast<Index>(loads.size()); }
};

/// Patches on `excluded_faces` (typically the Dirichlet part) carry no loads.
LoadBasis build_load_basis(const Mesh& mesh, const PatchSet& patches, LoadMode mode,
                           const std::vector<CubeFace>& excluded_faces = {});

using Hash256 = std::array<std::uint8_t, 32>;

std::string to_hex(const Hash256& hash);

/// SHA-256 over the mesh geometry, per-element parameters, omega, Dirichlet
/// faces, patch count and basis mode.
Hash256 provenance_hash(const Mesh& mesh, const MaterialField& field, double omega, int patches_per_side, LoadMode mode,
                        const std::vector<CubeFace>& dirichlet);

/// Galerkin NtD matrix G_ij = f_i^T S^-1 f_j.
struct NtDMatrix {
    Eigen::MatrixXd g;
    /// max|G - G^T| / max|G| before symmetrization.
    double asymmetry = 0.0;
    Hash256 provenance{};
    double omega = 0.0;
    LoadMode mode = LoadMode::All;
};

/// Forms F^T U from precomputed solutions, then symmetrizes.
NtDMatrix ntd_matrix(const LoadBasis& basis, const SolutionSet& solutions);
NtDMatrix ntd_matrix(const Factorization& factorization, const LoadBasis& basis);

/// (A + A^T) / 2 in place; returns the prior max asymmetry relative to max|A|.
double symmetrize(Eigen::MatrixXd& a);

/// Background solution fields evaluated at element quadrature points on
/// demand. Holds the nodal snapshots; everything else is recomputable.
/// The mesh must outlive this object.
class SnapshotFields {
public:
    SnapshotFields(const Mesh& mesh, Eigen::MatrixXd background_solutions, double omega);

    const Mesh& mesh() const { return *mesh_; }
    double omega() const { return omega_; }
    Index num_loads() const { return u_.cols(); }
    const Eigen::MatrixXd& solutions() const { return u_; }
    const QuadratureOperators& operators() const { return ops_; }

    /// Element dof values (24 x loads).
    Eigen::MatrixXd element_values(Index e) const;
    /// sqrt(weight)-scaled strain (48 x loads), divergence (8 x loads) and
    /// displacement (24 x loads) at the quadrature points of element e.
    Eigen::MatrixXd strain(Index e) const;
    Eigen::MatrixXd divergence(Index e) const;
    Eigen::MatrixXd displacement(Index e) const;

private:
    const Mesh* mesh_;
    Eigen::MatrixXd u_;
    double omega_;
    QuadratureOperators ops_;
};

/// Per-element perturbation direction (h_lambda, h_mu, h_rho).
struct Perturbation {
    Eigen::VectorXd lambda;
    Eigen::VectorXd mu;
    Eigen::VectorXd rho;

    static Perturbation zero(Index elements);
};

/// D[h]_ij = -sum_e int 2 h_mu eps_i:eps_j + h_lambda div_i div_j - omega^2 h_rho u_i.u_j,
/// accumulated from quadrature-point snapshots over elements with nonzero h.
Eigen::MatrixXd frechet_matrix(const SnapshotFields& snapshots, const Perturbation& h);

/// Positive semidefinite channel Grams over an element set:
/// lambda = int div div, mu = int 2 eps:eps, rho = omega^2 int u.u.
struct BlockGrams {
    Eigen::MatrixXd lambda;
    Eigen::MatrixXd mu;
    Eigen::MatrixXd rho;
};

/// Builds only the channels whose alpha is nonzero (others left empty).
BlockGrams block_grams(const SnapshotFields& snapshots, const ElementSet& block, const Alphas& channels);

/// D_B = -(alpha1 G_lambda + alpha2 G_mu + alpha3 G_rho), the Frechet matrix
/// for h = (alpha1, alpha2, -alpha3) chi_B. Negative semidefinite.
Eigen::MatrixXd frechet_block(const SnapshotFields& snapshots, const ElementSet& block, const Alphas& alpha);
Eigen::MatrixXd combine_block(const BlockGrams& grams, const Alphas& alpha, Index n);

}  // namespace elmono
