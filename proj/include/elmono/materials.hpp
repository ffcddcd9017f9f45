#pragma once

#include <optional>
#include <vector>

#include "elmono/mesh.hpp"

namespace elmono {

/// Isotropic material: Lame parameters in Pa, density in kg/m^3.
struct Material {
    double lambda = 0.0;
    double mu = 0.0;
    double rho = 0.0;
};

/// Reference background and inclusion materials.
inline constexpr Material kReferenceBackground{6.0e5, 6.0e3, 3.0e3};
inline constexpr Material kReferenceInclusion{2.0e6, 2.0e4, 3.0e3};

/// Box inclusion overriding any subset of the background parameters.
struct Inclusion {
    Box box;
    std::optional<double> lambda;
    std::optional<double> mu;
    std::optional<double> rho;
};

/// Supports of lambda - lambda0, mu - mu0 and rho0 - rho.
struct PerturbationSupports {
    ElementSet d1;
    ElementSet d2;
    ElementSet d3;
    /// Union, ascending.
    ElementSet d;
};

/// Piecewise constant per-element parameters. Later inclusions override
/// earlier ones where they overlap.
class MaterialField {
public:
    MaterialField(const Mesh& mesh, const Material& background, std::vector<Inclusion> inclusions = {});

    const Material& background() const { return background_; }
    const std::vector<Inclusion>& inclusions() const { return inclusions_; }
    Index size() const { return static_cast<Index>(lambda_.size()); }

    const Eigen::VectorXd& lambda() const { return lambda_; }
    const Eigen::VectorXd& mu() const { return mu_; }
    const Eigen::VectorXd& rho() const { return rho_; }

    PerturbationSupports supports() const;

    /// Largest inclusion contrast per parameter: lambda1 - lambda0, mu1 - mu0, rho0 - rho1.
    Material contrast() const;

private:
    Material background_;
    std::vector<Inclusion> inclusions_;
    Eigen::VectorXd lambda_;
    Eigen::VectorXd mu_;
    Eigen::VectorXd rho_;
};

struct Wavelengths {
    double p = 0.0;
    double s = 0.0;
};

/// l = 2 pi v / omega with v_p = sqrt((lambda + 2 mu) / rho), v_s = sqrt(mu / rho).
Wavelengths wavelengths(const Material& background, double omega);

/// Test parameters (alpha1, alpha2, alpha3) for the lambda, mu and rho channels.
struct Alphas {
    double lambda = 0.0;
    double mu = 0.0;
    double rho = 0.0;

    bool is_zero() const { return lambda == 0.0 && mu == 0.0 && rho == 0.0; }
    bool nonnegative() const { return lambda >= 0.0 && mu >= 0.0 && rho >= 0.0; }
    Alphas scaled(double s) const { return {lambda * s, mu * s, rho * s}; }
};

/// alpha1 = C (lambda1 - lambda0), alpha2 = 2 C (mu1 - mu0),
/// alpha3 = C omega^2 (rho0 - rho1), each clamped at zero.
Alphas default_alphas(const MaterialField& field, double c, double omega);

}  // namespace elmono
