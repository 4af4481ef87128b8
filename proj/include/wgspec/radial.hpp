#pragma once

#include "wgspec/ode.hpp"
#include "wgspec/waveguide.hpp"

#include <vector>

namespace wgspec {

struct WEval {
    double w = 0.0;
    double w_prime = 0.0;
};

struct RadialOptions {
    double rtol = 1e-10;
    double atol = 1e-13;
    double handoff_eps = 1e-12; // bound on the first neglected Picard term
    double overflow_limit = 1e100;
};

// The regular solution j_m(r, lambda) of w'' + {lambda - q - (m^2-1/4)/r^2} w = 0
// normalized by j_m / r^{m+1/2} -> 1 at the origin.  Internally integrates the
// scaled variable sigma = w / r^{m+1/2} (regular at 0), which avoids underflow
// at high order; w is reconstructed on demand.
class RadialSolution {
  public:
    int m() const { return m_; }
    double lambda() const { return lambda_; }
    double R() const { return R_; }
    double r_max() const { return rmax_; }
    double r_handoff() const { return r_eps_; }

    /// j_m and its derivative anywhere in (0, r_max].
    WEval eval(double r) const;

    double boundary_w() const { return bw_; }        // j_m(R)
    double boundary_w_prime() const { return bwp_; } // j_m'(R)
    double core_l2() const { return core_l2_; }      // int_0^R j_m^2 dr

    /// Node views ("grid", "w", "w_prime" of the dense output).
    std::vector<double> grid() const;
    std::vector<double> w() const;
    std::vector<double> w_prime() const;

  private:
    friend RadialSolution solve_regular(const WaveguideSpec&, int, double, const RadialOptions&,
                                        double);
    struct Node {
        double r, sigma, dsigma, ddsigma;
    };

    WEval from_sigma(double r, double s, double ds) const;

    int m_ = 0;
    double lambda_ = 0;
    double R_ = 0, rmax_ = 0, r_eps_ = 0;
    double bw_ = 0, bwp_ = 0, core_l2_ = 0;
    std::vector<Node> nodes_;
};

/// Integrate the regular solution out to r_max (default: R).  Deterministic
/// for fixed inputs; throws numeric_error with (m, lambda, r) context on
/// integrator failure or overflow (|w| > overflow_limit).
RadialSolution solve_regular(const WaveguideSpec& spec, int m, double lambda,
                             const RadialOptions& opts = {}, double r_max = -1.0);

/// k_m(r, lambda) = sqrt(r) K_m(sqrt(d^2-lambda) r) and derivative; lambda < d^2, r > 0.
WEval cladding_k(const WaveguideSpec& spec, int m, double lambda, double r);

struct ABEval {
    double a, a_prime, b, b_prime;
};

/// a_m = sqrt(r) J_m(s r), b_m = sqrt(r) Y_m(s r), s = sqrt(lambda - d^2); lambda > d^2.
ABEval cladding_ab(const WaveguideSpec& spec, int m, double lambda, double r);

/// How j_m continues past R, by spectral position of lambda.
struct CladdingMatch {
    enum class Kind { Guided, Threshold, Continuum };
    Kind kind;
    double c = 0.0;          // Continuum: j = c a_m + d b_m
    double d = 0.0;
    double kappa = 0.0;      // Guided: j = kappa k_m (valid when the dispersion holds)
    double power_coef = 0.0; // Threshold: j = coef r^{1/2-m}
};

CladdingMatch match_cladding(const WaveguideSpec& spec, int m, double lambda,
                             const RadialSolution& sol);

// Exact continuation of a solution of the cladding equation past R from its
// boundary data.  With `guided_pure`, the exponentially growing component is
// dropped (Eq. of the guided proportionality); use it only at dispersion roots.
class CladdingExtension {
  public:
    WEval eval(double r) const;

  private:
    friend CladdingExtension make_cladding_extension(const WaveguideSpec&, int, double, double,
                                                     double, bool);
    int kind_ = 0; // 0: I/K combination, 1: threshold powers, 2: J/Y combination
    int m_ = 0;
    double R_ = 0;
    double gamma_ = 0; // sqrt(|lambda - d^2|)
    double A_ = 0, B_ = 0;
};

CladdingExtension make_cladding_extension(const WaveguideSpec& spec, int m, double lambda,
                                          double wR, double wpR, bool guided_pure = false);

/// Relative residual of the Lagrange identity
///   int_c^d w1 w2 dr = [w1' w2 - w1 w2']_c^d / (lambda2 - lambda1)
/// with the left side by quadrature and the right side from endpoint data.
double lagrange_identity_check(const RadialSolution& sol1, const RadialSolution& sol2, double c,
                               double d);

} // namespace wgspec
