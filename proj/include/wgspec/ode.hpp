#pragma once

#include "wgspec/errors.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace wgspec {

// Adaptive Dormand-Prince 5(4) integrator for small fixed-size systems,
// recording every accepted step for dense evaluation.  The stored nodes
// carry the state and its derivative, so a two-point quintic Hermite
// (using the ODE for the second derivative) reconstructs the solution
// between nodes at the integrator's own accuracy.

template <std::size_t N>
struct OdeNode {
    double t;
    std::array<double, N> y;
    std::array<double, N> dy;
};

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-13;
    std::size_t max_steps = 4'000'000;
};

template <std::size_t N>
class Dopri5 {
  public:
    using State = std::array<double, N>;
    using Rhs = std::function<void(double, const State&, State&)>;

    Dopri5(Rhs rhs, OdeOptions opts = {}) : rhs_(std::move(rhs)), opts_(opts) {}

    // Integrate from t0 to t1 (t1 > t0), appending accepted nodes to `nodes`.
    // `y` is updated in place.  `on_accept` (optional) observes each accepted
    // state and may throw to abort.
    void integrate(double t0, double t1, State& y, std::vector<OdeNode<N>>& nodes,
                   const std::function<void(double, const State&)>& on_accept = {}) {
        double t = t0;
        State k1;
        rhs_(t, y, k1);
        nodes.push_back({t, y, k1});

        double h = initial_step(t0, t1, y, k1);
        std::size_t steps = 0;
        while (t < t1) {
            if (++steps > opts_.max_steps)
                throw numeric_error("ode: step limit exceeded at t=" + std::to_string(t));
            bool last = false;
            if (t + h >= t1) {
                h = t1 - t;
                last = true;
            }
            State ynew, k7;
            const double err = step(t, h, y, k1, ynew, k7);
            if (err <= 1.0) {
                t = last ? t1 : t + h;
                y = ynew;
                k1 = k7; // FSAL
                nodes.push_back({t, y, k1});
                if (on_accept) on_accept(t, y);
            }
            double fac = 0.9 * std::pow(err > 1e-30 ? err : 1e-30, -0.2);
            fac = std::min(5.0, std::max(0.2, fac));
            h *= fac;
            const double hmin = 4.0 * std::abs(t) * 2.3e-16 + 1e-300;
            if (h < hmin && !last)
                throw numeric_error("ode: step size underflow at t=" + std::to_string(t));
        }
    }

  private:
    double initial_step(double t0, double t1, const State& y, const State& dy) const {
        double ynorm = 0.0, dynorm = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            ynorm = std::max(ynorm, std::abs(y[i]));
            dynorm = std::max(dynorm, std::abs(dy[i]));
        }
        double h = (dynorm > 0.0) ? 0.01 * (ynorm + opts_.atol) / dynorm : 1e-6 * (t1 - t0);
        return std::min(h, 0.1 * (t1 - t0));
    }

    // One trial step; returns the scaled error norm and fills ynew, k7.
    double step(double t, double h, const State& y, const State& k1, State& ynew, State& k7) {
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                                a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                                a64 = 49.0 / 176, a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                                e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

        State k2, k3, k4, k5, k6, tmp;
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
        rhs_(t + h / 5, tmp, k2);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs_(t + 3 * h / 10, tmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs_(t + 4 * h / 5, tmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs_(t + 8 * h / 9, tmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs_(t + h, tmp, k6);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs_(t + h, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                  e6 * k6[i] + e7 * k7[i]);
            const double sc = opts_.atol + opts_.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (e / sc) * (e / sc);
        }
        return std::sqrt(err / N);
    }

    Rhs rhs_;
    OdeOptions opts_;
};

// Two-point quintic Hermite interpolation of f on [t0, t1] given
// (f, f', f'') at both ends.  Exact for degree-5 polynomials.
struct QuinticHermite {
    double t0, t1;
    double f0, d0, s0; // value, first, second derivative at t0
    double f1, d1, s1;

    double value(double t) const {
        const double h = t1 - t0;
        const double s = (t - t0) / h;
        double b[6];
        basis(s, b);
        return f0 * b[0] + h * d0 * b[1] + h * h * s0 * b[2] + f1 * b[3] + h * d1 * b[4] +
               h * h * s1 * b[5];
    }

    double deriv(double t) const {
        const double h = t1 - t0;
        const double s = (t - t0) / h;
        double db[6];
        dbasis(s, db);
        return (f0 * db[0] + h * d0 * db[1] + h * h * s0 * db[2] + f1 * db[3] + h * d1 * db[4] +
                h * h * s1 * db[5]) / h;
    }

  private:
    static void basis(double s, double b[6]) {
        const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
        b[0] = 1 - 10 * s3 + 15 * s4 - 6 * s5;
        b[1] = s - 6 * s3 + 8 * s4 - 3 * s5;
        b[2] = 0.5 * (s2 - 3 * s3 + 3 * s4 - s5);
        b[3] = 10 * s3 - 15 * s4 + 6 * s5;
        b[4] = -4 * s3 + 7 * s4 - 3 * s5;
        b[5] = 0.5 * (s3 - 2 * s4 + s5);
    }
    static void dbasis(double s, double db[6]) {
        const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
        db[0] = -30 * s2 + 60 * s3 - 30 * s4;
        db[1] = 1 - 18 * s2 + 32 * s3 - 15 * s4;
        db[2] = 0.5 * (2 * s - 9 * s2 + 12 * s3 - 5 * s4);
        db[3] = 30 * s2 - 60 * s3 + 30 * s4;
        db[4] = -12 * s2 + 28 * s3 - 15 * s4;
        db[5] = 0.5 * (3 * s2 - 8 * s3 + 5 * s4);
    }
};

} // namespace wgspec
