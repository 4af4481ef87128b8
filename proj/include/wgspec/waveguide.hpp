#pragma once

#include "wgspec/interp.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace wgspec {

/// Radial refractive-index profile n(r) on the core [0, R].
class CoreProfile {
  public:
    enum class Kind { Step, Parabolic, Coaxial, Tabulated };

    static CoreProfile step(double n_core);
    static CoreProfile parabolic(double n_axis);
    static CoreProfile coaxial(double n_ring, double r_inner, double r_outer);
    // Samples (r, n) strictly increasing in r and covering [0, R];
    // interpolation order 1 (linear) or 3 (monotone cubic).
    static CoreProfile tabulated(std::vector<std::pair<double, double>> samples,
                                 int interp_order = 3);

    Kind kind() const { return kind_; }
    double n_core() const { return a_; }
    double n_axis() const { return a_; }
    double n_ring() const { return a_; }
    double r_inner() const { return b_; }
    double r_outer() const { return c_; }
    const std::vector<std::pair<double, double>>& samples() const { return samples_; }
    int interp_order() const { return interp_order_; }
    std::string kind_name() const;

  private:
    friend class WaveguideSpec;
    CoreProfile() = default;
    Kind kind_ = Kind::Step;
    double a_ = 0.0, b_ = 0.0, c_ = 0.0;
    std::vector<std::pair<double, double>> samples_;
    int interp_order_ = 3;
};

/// Spectral classification of a real lambda relative to a waveguide.
enum class SpectralBand { BelowSpectrum, Guided, Radiative, Evanescent };

/// Validated, immutable problem definition.  Single source of truth for
/// q(r) = k^2 [n0^2 - n(r)^2] and its derived constants.
class WaveguideSpec {
  public:
    double k() const { return k_; }
    double n0() const { return n0_; }
    double n_cl() const { return n_cl_; }
    double R() const { return R_; }
    const CoreProfile& profile() const { return profile_; }

    /// k^2 (n0^2 - n_cl^2): the constant value of q on the cladding.
    double d2() const { return d2_; }
    /// sup of q over [0, inf).
    double q_sup() const { return q_sup_; }
    /// k^2 n0^2: branch point of the axial kernel / top of the radiative band.
    double kn0_sq() const { return kn0sq_; }

    double eval_n(double r) const;
    double eval_q(double r) const;

    /// beta with lambda = k^2 (n0^2 - beta^2); real only for lambda <= k^2 n0^2.
    double beta_from_lambda(double lambda) const;
    double lambda_from_beta(double beta) const { return k_ * k_ * (n0_ * n0_ - beta * beta); }
    SpectralBand classify(double lambda) const;

    /// Interior radii where q may be discontinuous or non-smooth (used by the
    /// radial integrator to restart cleanly); always includes R.
    const std::vector<double>& breakpoints() const { return breakpoints_; }

  private:
    friend WaveguideSpec make_spec(double, double, double, double, CoreProfile);
    WaveguideSpec() = default;

    double k_ = 0, n0_ = 0, n_cl_ = 0, R_ = 0;
    double d2_ = 0, q_sup_ = 0, kn0sq_ = 0;
    CoreProfile profile_;
    PchipInterpolator pchip_;
    LinearInterpolator linear_;
    std::vector<double> breakpoints_;
};

/// Validate and build a spec.  Throws config_error naming the violated
/// constraint.
WaveguideSpec make_spec(double k, double n0, double n_cl, double R, CoreProfile profile);

double eval_q(const WaveguideSpec& spec, double r);

} // namespace wgspec
