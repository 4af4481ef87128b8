#include "wgspec/waveguide.hpp"
#include "wgspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wgspec {

CoreProfile CoreProfile::step(double n_core) {
    CoreProfile p;
    p.kind_ = Kind::Step;
    p.a_ = n_core;
    return p;
}

CoreProfile CoreProfile::parabolic(double n_axis) {
    CoreProfile p;
    p.kind_ = Kind::Parabolic;
    p.a_ = n_axis;
    return p;
}

CoreProfile CoreProfile::coaxial(double n_ring, double r_inner, double r_outer) {
    CoreProfile p;
    p.kind_ = Kind::Coaxial;
    p.a_ = n_ring;
    p.b_ = r_inner;
    p.c_ = r_outer;
    return p;
}

CoreProfile CoreProfile::tabulated(std::vector<std::pair<double, double>> samples,
                                   int interp_order) {
    CoreProfile p;
    p.kind_ = Kind::Tabulated;
    p.samples_ = std::move(samples);
    p.interp_order_ = interp_order;
    return p;
}

std::string CoreProfile::kind_name() const {
    switch (kind_) {
        case Kind::Step: return "step";
        case Kind::Parabolic: return "parabolic";
        case Kind::Coaxial: return "coaxial";
        case Kind::Tabulated: return "tabulated";
    }
    return "?";
}

WaveguideSpec make_spec(double k, double n0, double n_cl, double R, CoreProfile profile) {
    if (!(k > 0)) throw config_error("waveguide: k must be > 0");
    if (!(n0 > 0)) throw config_error("waveguide: n0 must be > 0");
    if (!(n_cl > 0)) throw config_error("waveguide: n_cl must be > 0");
    if (n_cl > n0) throw config_error("waveguide: n_cl must not exceed n0");
    if (!(R > 0)) throw config_error("waveguide: R must be > 0");

    WaveguideSpec s;
    s.k_ = k;
    s.n0_ = n0;
    s.n_cl_ = n_cl;
    s.R_ = R;
    s.d2_ = k * k * (n0 * n0 - n_cl * n_cl);
    s.kn0sq_ = k * k * n0 * n0;
    s.breakpoints_ = {R};

    switch (profile.kind()) {
        case CoreProfile::Kind::Step:
            if (profile.n_core() < n_cl || profile.n_core() > n0)
                throw config_error("waveguide: step profile n_core must lie in [n_cl, n0]");
            break;
        case CoreProfile::Kind::Parabolic:
            if (std::abs(profile.n_axis() - n0) > 1e-12 * n0)
                throw config_error("waveguide: parabolic profile requires n_axis == n0");
            break;
        case CoreProfile::Kind::Coaxial: {
            const double ri = profile.r_inner(), ro = profile.r_outer();
            if (!(ri >= 0 && ri < ro && ro <= R))
                throw config_error("waveguide: coaxial radii must satisfy 0 <= r_inner < r_outer <= R");
            if (profile.n_ring() < n_cl || profile.n_ring() > n0)
                throw config_error("waveguide: coaxial n_ring must lie in [n_cl, n0]");
            if (ri > 0) s.breakpoints_.push_back(ri);
            s.breakpoints_.push_back(ro);
            break;
        }
        case CoreProfile::Kind::Tabulated: {
            const auto& t = profile.samples();
            if (t.size() < 2) throw config_error("waveguide: tabulated profile needs >= 2 samples");
            if (std::abs(t.front().first) > 1e-12 * R || std::abs(t.back().first - R) > 1e-12 * R)
                throw config_error("waveguide: tabulated samples must cover [0, R]");
            std::vector<double> xs, ns;
            for (const auto& [r, n] : t) {
                if (!xs.empty() && !(r > xs.back()))
                    throw config_error("waveguide: tabulated r samples must strictly increase");
                if (n < n_cl - 1e-12 || n > n0 + 1e-12)
                    throw config_error("waveguide: tabulated n values must lie in [n_cl, n0]");
                xs.push_back(r);
                ns.push_back(n);
            }
            if (profile.interp_order() == 3)
                s.pchip_ = PchipInterpolator(xs, ns);
            else if (profile.interp_order() == 1)
                s.linear_ = LinearInterpolator(xs, ns);
            else
                throw config_error("waveguide: tabulated interpolation order must be 1 or 3");
            // Knots are only C^1 joints; give the integrator restart points.
            for (std::size_t i = 1; i + 1 < xs.size(); ++i) s.breakpoints_.push_back(xs[i]);
            break;
        }
    }

    s.profile_ = std::move(profile);
    std::sort(s.breakpoints_.begin(), s.breakpoints_.end());

    // q_sup: q is monotone in n, so the sample-based sup is exact for all
    // built-in kinds; pchip cannot overshoot its data.
    double n_min = n0;
    switch (s.profile_.kind()) {
        case CoreProfile::Kind::Step: n_min = std::min(s.profile_.n_core(), n_cl); break;
        case CoreProfile::Kind::Parabolic: n_min = n_cl; break;
        case CoreProfile::Kind::Coaxial: n_min = n_cl; break;
        case CoreProfile::Kind::Tabulated: {
            for (const auto& [r, n] : s.profile_.samples()) n_min = std::min(n_min, n);
            n_min = std::min(n_min, n_cl);
            break;
        }
    }
    s.q_sup_ = k * k * (n0 * n0 - n_min * n_min);
    return s;
}

double WaveguideSpec::eval_n(double r) const {
    if (r < 0) throw domain_error("eval_n: r must be >= 0");
    if (r >= R_) return n_cl_;
    switch (profile_.kind()) {
        case CoreProfile::Kind::Step:
            return profile_.n_core();
        case CoreProfile::Kind::Parabolic: {
            const double f = r / R_;
            const double n2 = n0_ * n0_ - (n0_ * n0_ - n_cl_ * n_cl_) * f * f;
            return std::sqrt(n2);
        }
        case CoreProfile::Kind::Coaxial:
            return (r >= profile_.r_inner() && r < profile_.r_outer()) ? profile_.n_ring() : n_cl_;
        case CoreProfile::Kind::Tabulated: {
            double n = (profile_.interp_order() == 3) ? pchip_(r) : linear_(r);
            return std::clamp(n, n_cl_, n0_);
        }
    }
    return n_cl_;
}

double WaveguideSpec::eval_q(double r) const {
    if (r >= R_) return d2_; // exact on the cladding
    const double n = eval_n(r);
    return k_ * k_ * (n0_ * n0_ - n * n);
}

double WaveguideSpec::beta_from_lambda(double lambda) const {
    const double b2 = n0_ * n0_ - lambda / (k_ * k_);
    return b2 >= 0 ? std::sqrt(b2) : std::numeric_limits<double>::quiet_NaN();
}

SpectralBand WaveguideSpec::classify(double lambda) const {
    if (lambda <= 0) return SpectralBand::BelowSpectrum;
    if (lambda <= d2_) return SpectralBand::Guided;
    if (lambda < kn0sq_) return SpectralBand::Radiative;
    return SpectralBand::Evanescent;
}

double eval_q(const WaveguideSpec& spec, double r) { return spec.eval_q(r); }

} // namespace wgspec
