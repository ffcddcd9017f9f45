#pragma once

#include <array>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "elmono/materials.hpp"
#include "elmono/mesh.hpp"

namespace elmono {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, Index>;
using Matrix24 = Eigen::Matrix<double, 24, 24>;

/// Quadrature-point operators of the trilinear hexahedron on a 2x2x2 Gauss
/// rule. Rows are pre-multiplied by sqrt(weight) so that element integrals
/// become plain Gram products. Element dof order: node-major, xyz-minor.
struct QuadratureOperators {
    static constexpr int kPoints = 8;
    /// Symmetric gradient in scaled Voigt form (xx, yy, zz, sqrt2 xy, sqrt2 xz, sqrt2 yz): 6 rows per point.
    Eigen::Matrix<double, 6 * kPoints, 24> strain;
    /// Divergence: one row per point.
    Eigen::Matrix<double, kPoints, 24> divergence;
    /// Displacement: 3 rows per point.
    Eigen::Matrix<double, 3 * kPoints, 24> value;
};

QuadratureOperators quadrature_operators(const Vec3& h);

/// Unit-coefficient element matrices: K_mu = int 2 eps(u):eps(v),
/// K_lambda = int div(u) div(v), M = int u.v.
struct ElementMatrices {
    Matrix24 k_mu;
    Matrix24 k_lambda;
    Matrix24 mass;
};

ElementMatrices element_matrices(const Vec3& h);
inline ElementMatrices element_matrices(double h) { return element_matrices(Vec3::Constant(h)); }

/// S = K(lambda, mu) - omega^2 M(rho) restricted to the unconstrained dofs.
struct SystemMatrix {
    SparseMatrix s;
    double omega = 0.0;
    Index full_dofs = 0;
    std::vector<CubeFace> dirichlet_faces;
    /// Reduced index of each full dof, -1 when constrained.
    std::vector<Index> full_to_free;
    std::vector<Index> free_to_full;

    Index free_dofs() const { return static_cast<Index>(free_to_full.size()); }
};

/// Assembly from raw per-element coefficients; values may have any sign,
/// which is how perturbation operators K(h) - omega^2 M(h_rho) are built.
SystemMatrix assemble_coefficients(const Mesh& mesh, const Eigen::VectorXd& lambda, const Eigen::VectorXd& mu,
                                   const Eigen::VectorXd& rho, double omega, const std::vector<CubeFace>& dirichlet = {});

SystemMatrix assemble(const Mesh& mesh, const MaterialField& field, double omega,
                      const std::vector<CubeFace>& dirichlet = {});

enum class LoadDirection : std::uint8_t { Normal = 0, T1 = 1, T2 = 2 };

const char* to_string(LoadDirection d);

/// Consistent nodal load for a 1 Pa constant traction on one patch.
Eigen::VectorXd load_vector(const Mesh& mesh, const PatchSet& patches, std::size_t patch, LoadDirection direction);

/// Signature of the factorized matrix; the zero count uses the pivot ratio below.
struct InertiaReport {
    Index negative = 0;
    Index zero = 0;
    Index positive = 0;
    double min_abs_pivot = 0.0;
    double max_abs_pivot = 0.0;
    bool near_singular = false;

    std::string describe() const;
};

inline constexpr double kSingularPivotRatio = 1e-12;

class ResonanceError : public std::runtime_error {
public:
    ResonanceError(const std::string& what, InertiaReport report) : std::runtime_error(what), report_(report) {}
    const InertiaReport& report() const { return report_; }

private:
    InertiaReport report_;
};

struct SolutionSet {
    /// Full-dof displacements, one column per load.
    Eigen::MatrixXd u;
    /// Relative residual ||S u - f|| / ||f|| per column (0 for a zero load).
    Eigen::VectorXd residuals;
};

/// Sparse LDL^T (AMD ordering) of a symmetric, possibly indefinite, system
/// matrix. One factorization is reused for all right-hand sides.
class Factorization {
public:
    explicit Factorization(const SystemMatrix& system);
    ~Factorization();
    Factorization(Factorization&&) noexcept;
    Factorization& operator=(Factorization&&) noexcept;

    const SystemMatrix& system() const { return system_; }
    const InertiaReport& inertia() const { return inertia_; }

    /// Solves for every column of loads (full-dof rows). Constrained rows of
    /// the load are ignored and the solution is zero there. Throws
    /// ResonanceError when near singular or when a residual exceeds tol after
    /// iterative refinement.
    SolutionSet solve(const Eigen::MatrixXd& loads, double tol = 1e-8) const;

private:
    struct Impl;
    SystemMatrix system_;
    std::unique_ptr<Impl> impl_;
    InertiaReport inertia_;
};

Factorization factorize(const SystemMatrix& system);

inline SolutionSet solve(const Factorization& factorization, const Eigen::MatrixXd& loads, double tol = 1e-8) {
    return factorization.solve(loads, tol);
}

/// Inertia of S from the LDL^T pivots (Sylvester's law of inertia).
inline const InertiaReport& resonance_guard(const Factorization& factorization) { return factorization.inertia(); }

}  // namespace elmono
