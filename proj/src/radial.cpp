#include "wgspec/radial.hpp"

#include "wgspec/bessel.hpp"
#include "wgspec/errors.hpp"
#include "wgspec/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace wgspec {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

} // namespace

WEval RadialSolution::from_sigma(double r, double s, double ds) const {
    const double p = std::pow(r, m_ + 0.5);
    return {p * s, p * ds + (m_ + 0.5) * std::pow(r, m_ - 0.5) * s};
}

WEval RadialSolution::eval(double r) const {
    if (!(r > 0.0) || r > rmax_ * (1.0 + 1e-12))
        throw domain_error("RadialSolution::eval: r outside (0, r_max]");
    if (r <= r_eps_) return from_sigma(r, 1.0, 0.0);

    auto cmp = [](const Node& n, double v) { return n.r < v; };
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), r, cmp);
    std::size_t hi = static_cast<std::size_t>(it - nodes_.begin());
    if (hi >= nodes_.size()) hi = nodes_.size() - 1;
    const std::size_t lo = hi - (hi > 0 ? 1 : 0);
    const Node& a = nodes_[lo];
    const Node& b = nodes_[hi];
    if (b.r <= a.r) return from_sigma(r, b.sigma, b.dsigma);

    const QuinticHermite h{a.r, b.r, a.sigma, a.dsigma, a.ddsigma, b.sigma, b.dsigma, b.ddsigma};
    return from_sigma(r, h.value(r), h.deriv(r));
}

std::vector<double> RadialSolution::grid() const {
    std::vector<double> g;
    g.reserve(nodes_.size());
    for (const auto& n : nodes_)
        if (g.empty() || n.r > g.back()) g.push_back(n.r);
    return g;
}

std::vector<double> RadialSolution::w() const {
    std::vector<double> v;
    v.reserve(nodes_.size());
    double prev = -1.0;
    for (const auto& n : nodes_) {
        if (n.r <= prev) continue;
        v.push_back(from_sigma(n.r, n.sigma, n.dsigma).w);
        prev = n.r;
    }
    return v;
}

std::vector<double> RadialSolution::w_prime() const {
    std::vector<double> v;
    v.reserve(nodes_.size());
    double prev = -1.0;
    for (const auto& n : nodes_) {
        if (n.r <= prev) continue;
        v.push_back(from_sigma(n.r, n.sigma, n.dsigma).w_prime);
        prev = n.r;
    }
    return v;
}

RadialSolution solve_regular(const WaveguideSpec& spec, int m, double lambda,
                             const RadialOptions& opts, double r_max) {
    m = std::abs(m);
    const double R = spec.R();
    if (r_max < 0) r_max = R;
    if (r_max < R) throw domain_error("solve_regular: r_max must be >= R");

    const int k_ord = 2 * m + 1;

    // Start the integrator where the first neglected Picard term
    // (q_sup+|lambda|) r^2 / (2(k+1)) drops below handoff_eps.
    const double denom = spec.q_sup() + std::abs(lambda);
    double r_eps = 0.05 * R;
    if (denom * r_eps * r_eps / (2.0 * (k_ord + 1)) > opts.handoff_eps)
        r_eps = std::sqrt(2.0 * (k_ord + 1) * opts.handoff_eps / denom);

    RadialSolution sol;
    sol.m_ = m;
    sol.lambda_ = lambda;
    sol.R_ = R;
    sol.rmax_ = r_max;
    sol.r_eps_ = r_eps;

    // State: (sigma, sigma', L) with L = int_0^r s^{2m+1} sigma^2 ds = int w^2.
    using Stepper = Dopri5<3>;
    auto rhs = [&spec, lambda, k_ord, m](double r, const Stepper::State& y, Stepper::State& dy) {
        dy[0] = y[1];
        dy[1] = (spec.eval_q(r) - lambda) * y[0] - (k_ord / r) * y[1];
        dy[2] = std::pow(r, 2 * m + 1) * y[0] * y[0];
    };
    Stepper stepper(rhs, OdeOptions{opts.rtol, opts.atol});

    Stepper::State y{1.0, 0.0, std::pow(r_eps, 2 * m + 2) / (2 * m + 2)};

    std::vector<double> stops;
    for (double b : spec.breakpoints())
        if (b > r_eps && b < r_max) stops.push_back(b);
    if (R > r_eps && R < r_max) stops.push_back(R);
    stops.push_back(r_max);
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

    std::vector<OdeNode<3>> nodes;
    const double w_limit = opts.overflow_limit;
    auto guard = [&](double r, const Stepper::State& s) {
        const double wmag = std::abs(s[0]) * std::pow(std::max(r, 1.0), m + 0.5);
        if (!std::isfinite(s[0]) || wmag > w_limit)
            throw numeric_error("solve_regular: solution overflow", m, lambda, r);
    };

    double t = r_eps;
    for (double b : stops) {
        if (b <= t) continue;
        try {
            stepper.integrate(t, b, y, nodes, guard);
        } catch (const numeric_error& e) {
            if (e.has_context()) throw;
            throw numeric_error(std::string("solve_regular: ") + e.what(), m, lambda, t);
        }
        t = b;
        if (std::abs(b - R) <= 1e-14 * R) {
            const WEval be = sol.from_sigma(R, y[0], y[1]);
            sol.bw_ = be.w;
            sol.bwp_ = be.w_prime;
            sol.core_l2_ = y[2];
        }
    }

    sol.nodes_.reserve(nodes.size());
    for (const auto& n : nodes) sol.nodes_.push_back({n.t, n.y[0], n.y[1], n.dy[1]});
    return sol;
}

WEval cladding_k(const WaveguideSpec& spec, int m, double lambda, double r) {
    m = std::abs(m);
    if (!(lambda < spec.d2())) throw domain_error("cladding_k: requires lambda < d^2");
    if (!(r > 0)) throw domain_error("cladding_k: requires r > 0");
    const double g = std::sqrt(spec.d2() - lambda);
    const double sr = std::sqrt(r);
    const BesselValue K = bessel_k(m, g * r);
    return {sr * K.value, 0.5 / sr * K.value + sr * g * K.derivative};
}

ABEval cladding_ab(const WaveguideSpec& spec, int m, double lambda, double r) {
    m = std::abs(m);
    if (!(lambda > spec.d2())) throw domain_error("cladding_ab: requires lambda > d^2");
    if (!(r > 0)) throw domain_error("cladding_ab: requires r > 0");
    const double s = std::sqrt(lambda - spec.d2());
    const double sr = std::sqrt(r);
    const BesselValue J = bessel_j(m, s * r);
    const BesselValue Y = bessel_y(m, s * r);
    return {sr * J.value, 0.5 / sr * J.value + sr * s * J.derivative,
            sr * Y.value, 0.5 / sr * Y.value + sr * s * Y.derivative};
}

CladdingMatch match_cladding(const WaveguideSpec& spec, int m, double lambda,
                             const RadialSolution& sol) {
    m = std::abs(m);
    const double R = spec.R();
    const double jR = sol.boundary_w();
    const double jpR = sol.boundary_w_prime();
    CladdingMatch out{};
    if (lambda > spec.d2()) {
        const ABEval ab = cladding_ab(spec, m, lambda, R);
        out.kind = CladdingMatch::Kind::Continuum;
        out.c = 0.5 * kPi * (ab.b_prime * jR - jpR * ab.b);
        out.d = -0.5 * kPi * (ab.a_prime * jR - jpR * ab.a);
    } else if (lambda < spec.d2()) {
        out.kind = CladdingMatch::Kind::Guided;
        out.kappa = jR / cladding_k(spec, m, lambda, R).w;
    } else {
        out.kind = CladdingMatch::Kind::Threshold;
        out.power_coef = jR / std::pow(R, 0.5 - m);
    }
    return out;
}

CladdingExtension make_cladding_extension(const WaveguideSpec& spec, int m, double lambda,
                                          double wR, double wpR, bool guided_pure) {
    m = std::abs(m);
    CladdingExtension e;
    e.m_ = m;
    e.R_ = spec.R();
    const double R = spec.R();
    const double d2 = spec.d2();
    if (lambda < d2) {
        e.kind_ = 0;
        e.gamma_ = std::sqrt(d2 - lambda);
        const double g = e.gamma_;
        const double sr = std::sqrt(R);
        const BesselValue K = bessel_k(m, g * R);
        const BesselValue I = bessel_i(m, g * R);
        const double u1 = sr * K.value, u1p = 0.5 / sr * K.value + sr * g * K.derivative;
        const double u2 = sr * I.value, u2p = 0.5 / sr * I.value + sr * g * I.derivative;
        // Wronskian u1 u2' - u2 u1' = 1 exactly.
        e.B_ = wR * u2p - u2 * wpR; // K coefficient
        e.A_ = guided_pure ? 0.0 : u1 * wpR - wR * u1p;
        if (guided_pure) e.B_ = wR / u1;
    } else if (lambda == d2) {
        e.kind_ = 1;
        if (m == 0) {
            // basis sqrt(r), sqrt(r) ln r; Wronskian = 1
            const double u1 = std::sqrt(R), u1p = 0.5 / std::sqrt(R);
            const double u2 = std::sqrt(R) * std::log(R);
            const double u2p = 0.5 * std::log(R) / std::sqrt(R) + 1.0 / std::sqrt(R);
            e.A_ = wR * u2p - u2 * wpR;
            e.B_ = u1 * wpR - wR * u1p;
            (void)u1p;
        } else {
            // basis r^{1/2-m}, r^{1/2+m}; Wronskian = 2m
            const double u1 = std::pow(R, 0.5 - m), u1p = (0.5 - m) * std::pow(R, -0.5 - m);
            const double u2 = std::pow(R, 0.5 + m), u2p = (0.5 + m) * std::pow(R, m - 0.5);
            e.A_ = (wR * u2p - u2 * wpR) / (2.0 * m);
            e.B_ = (u1 * wpR - wR * u1p) / (2.0 * m);
        }
        if (guided_pure) e.B_ = 0.0;
    } else {
        e.kind_ = 2;
        e.gamma_ = std::sqrt(lambda - d2);
        const ABEval ab = cladding_ab(spec, m, lambda, R);
        // Wronskian b' a - a' b = 2/pi
        e.A_ = 0.5 * kPi * (ab.b_prime * wR - wpR * ab.b); // a_m coefficient
        e.B_ = -0.5 * kPi * (ab.a_prime * wR - wpR * ab.a); // b_m coefficient
    }
    return e;
}

WEval CladdingExtension::eval(double r) const {
    const double sr = std::sqrt(r);
    if (kind_ == 0) {
        const double g = gamma_;
        double w = 0.0, wp = 0.0;
        if (B_ != 0.0) {
            const BesselValue K = bessel_k(m_, g * r);
            w += B_ * sr * K.value;
            wp += B_ * (0.5 / sr * K.value + sr * g * K.derivative);
        }
        if (A_ != 0.0) {
            const BesselValue I = bessel_i(m_, g * r);
            w += A_ * sr * I.value;
            wp += A_ * (0.5 / sr * I.value + sr * g * I.derivative);
        }
        return {w, wp};
    }
    if (kind_ == 1) {
        if (m_ == 0) {
            const double lr = std::log(r);
            return {A_ * sr + B_ * sr * lr, A_ * 0.5 / sr + B_ * (0.5 * lr / sr + 1.0 / sr)};
        }
        const double u1 = std::pow(r, 0.5 - m_), u1p = (0.5 - m_) * std::pow(r, -0.5 - m_);
        const double u2 = std::pow(r, 0.5 + m_), u2p = (0.5 + m_) * std::pow(r, m_ - 0.5);
        return {A_ * u1 + B_ * u2, A_ * u1p + B_ * u2p};
    }
    const double s = gamma_;
    const BesselValue J = bessel_j(m_, s * r);
    const BesselValue Y = bessel_y(m_, s * r);
    return {A_ * sr * J.value + B_ * sr * Y.value,
            A_ * (0.5 / sr * J.value + sr * s * J.derivative) +
                B_ * (0.5 / sr * Y.value + sr * s * Y.derivative)};
}

double lagrange_identity_check(const RadialSolution& sol1, const RadialSolution& sol2, double c,
                               double d) {
    if (sol1.lambda() == sol2.lambda())
        throw domain_error("lagrange_identity_check: lambda values must differ");
    if (sol1.m() != sol2.m())
        throw domain_error("lagrange_identity_check: azimuthal orders must match");
    if (!(c > 0) || !(d > c) || d > std::min(sol1.r_max(), sol2.r_max()))
        throw domain_error("lagrange_identity_check: [c, d] outside the common grid span");

    const double lhs = integrate(
        [&](double r) { return sol1.eval(r).w * sol2.eval(r).w; }, c, d, QuadOptions{1e-11});

    auto bracket = [&](double r) {
        const WEval a = sol1.eval(r);
        const WEval b = sol2.eval(r);
        return a.w_prime * b.w - a.w * b.w_prime;
    };
    const double rhs = (bracket(d) - bracket(c)) / (sol2.lambda() - sol1.lambda());
    return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30);
}

} // namespace wgspec
