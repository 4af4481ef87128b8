#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

namespace wgspec {

struct QuadOptions {
    double rtol = 1e-10;
    double abstol = 1e-300;
    int max_depth = 48;
};

namespace detail {

// Gauss-Kronrod 7-15 pair on [a, b]; returns the Kronrod value and sets
// `err` to |K - G|.
template <typename F>
double gk15(const F& f, double a, double b, double& err) {
    static const double xgk[8] = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.0};
    static const double wgk[8] = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static const double wg[4] = {
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = wgk[7] * fc;
    double gauss = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * xgk[i];
        const double fs = f(c - dx) + f(c + dx);
        kron += wgk[i] * fs;
        if (i % 2 == 1) gauss += wg[i / 2] * fs;
    }
    kron *= h;
    gauss *= h;
    err = std::abs(kron - gauss);
    return kron;
}

template <typename F>
double adapt(const F& f, double a, double b, double tol, int depth, const QuadOptions& opt) {
    double err;
    const double v = gk15(f, a, b, err);
    if (err <= tol || depth >= opt.max_depth) return v;
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, 0.5 * tol, depth + 1, opt) + adapt(f, c, b, 0.5 * tol, depth + 1, opt);
}

} // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b].
template <typename F>
double integrate(const F& f, double a, double b, const QuadOptions& opt = {}) {
    if (a == b) return 0.0;
    double err;
    const double rough = detail::gk15(f, a, b, err);
    const double tol = std::max(opt.abstol, opt.rtol * std::abs(rough));
    if (err <= tol) return rough;
    return detail::adapt(f, a, b, std::max(tol, err * 1e-12), 0, opt);
}

// Composite trapezoid over tabulated values with uniform spacing h.
inline double trapezoid_uniform(const double* v, std::size_t n, double h) {
    if (n < 2) return 0.0;
    double s = 0.5 * (v[0] + v[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) s += v[i];
    return s * h;
}

} // namespace wgspec
