#include "wgspec/bessel.hpp"
#include "wgspec/errors.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace wgspec {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kPi = 3.14159265358979323846264338327950288;

// Branch switchovers.  Chosen so adjacent methods agree to ~1e-13 in an
// overlap region around each seam (exercised by the seam tests).
constexpr double kJSeriesMax = 2.0;   // ascending series for J below this
constexpr double kJAsympMin = 45.0;   // Hankel expansion for J/Y above this
constexpr double kISeriesMax = 12.0;  // ascending series for I below this
constexpr double kKSeriesMax = 1.0;   // log series for K below this
constexpr double kKAsympMin = 18.0;   // asymptotic expansion for K above this

constexpr double kRescaleLimit = 1e250;
constexpr double kOverflowLimit = 1e290;

void require_order(int m, const char* fn) {
    if (m < 0)
        throw domain_error(std::string(fn) + ": order must be >= 0 (map m to |m| first)");
}

[[noreturn]] void overflow(const char* fn, int m, double x) {
    throw numeric_error(std::string(fn) + ": result out of double range", m, x, 0.0);
}

// (x/2)^m / m! with graceful underflow for large m.
double half_pow_over_fact(int m, double x) {
    if (m == 0) return 1.0;
    const double lg = m * std::log(0.5 * x) - std::lgamma(m + 1.0);
    if (lg < -700.0) return 0.0;
    return std::exp(lg);
}

// --- ascending series -----------------------------------------------------

// J_m by its power series; reliable for x <= ~8 (used below kJSeriesMax).
double j_series(int m, double x) {
    const double q = -0.25 * x * x;
    double term = half_pow_over_fact(m, x);
    double sum = term;
    for (int k = 1; k < 80; ++k) {
        term *= q / (static_cast<double>(k) * (m + k));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-320) break;
    }
    return sum;
}

// I_m by its power series (all terms positive; no cancellation).
double i_series(int m, double x) {
    const double q = 0.25 * x * x;
    double term = half_pow_over_fact(m, x);
    double sum = term;
    for (int k = 1; k < 120; ++k) {
        term *= q / (static_cast<double>(k) * (m + k));
        sum += term;
        if (term < 1e-18 * sum + 1e-320) break;
    }
    return sum;
}

// --- Miller backward recurrence --------------------------------------------

// J_0..J_{m_hi}(x) by backward recurrence, normalized with
// J_0 + 2*sum_{k>=1} J_{2k} = 1.  Stable for all x > 0.
std::vector<double> j_miller(int m_hi, double x) {
    const int start = m_hi + 120 + static_cast<int>(1.2 * x);
    std::vector<double> out(static_cast<std::size_t>(m_hi) + 1, 0.0);
    double jp = 0.0;       // J_{k+1} trial value
    double jc = 1e-30;     // J_k trial value
    double norm = 0.0;
    for (int k = start; k >= 1; --k) {
        const double jm = (2.0 * k / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (k - 1 <= m_hi) out[static_cast<std::size_t>(k - 1)] = jc;
        if (((k - 1) & 1) == 0) norm += (k == 1 ? 1.0 : 2.0) * jc;
        if (std::abs(jc) > kRescaleLimit) {
            const double s = 1.0 / kRescaleLimit;
            jp *= s;
            jc *= s;
            norm *= s;
            for (double& v : out) v *= s;
        }
    }
    for (double& v : out) v /= norm;
    return out;
}

// e^{-x} I_0..I_{m_hi}(x) by backward recurrence, normalized with
// e^{-x} (I_0 + 2*sum_{k>=1} I_k) = 1.
std::vector<double> i_miller_scaled(int m_hi, double x) {
    const int base = std::max(m_hi, static_cast<int>(x));
    const int start = base + 50 + static_cast<int>(2.5 * std::sqrt(static_cast<double>(base) + 1.0));
    std::vector<double> out(static_cast<std::size_t>(m_hi) + 1, 0.0);
    double ip = 0.0;
    double ic = 1e-30;
    double norm = 0.0;
    for (int k = start; k >= 1; --k) {
        const double im = (2.0 * k / x) * ic + ip;
        ip = ic;
        ic = im;
        if (k - 1 <= m_hi) out[static_cast<std::size_t>(k - 1)] = ic;
        norm += (k == 1 ? 1.0 : 2.0) * ic;
        if (ic > kRescaleLimit) {
            const double s = 1.0 / kRescaleLimit;
            ip *= s;
            ic *= s;
            norm *= s;
            for (double& v : out) v *= s;
        }
    }
    for (double& v : out) v /= norm;
    return out;
}

// --- Hankel asymptotic expansions -------------------------------------------

// P, Q factors of the large-argument expansion for order nu in {0, 1}.
void hankel_pq(int nu, double x, double& p, double& q) {
    const double mu = 4.0 * nu * nu;
    const double ix8 = 1.0 / (8.0 * x);
    double term = 1.0;
    p = 1.0;
    q = 0.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 40; ++k) {
        const double f = (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / k;
        term *= f * ix8;
        if (std::abs(term) > prev) break; // asymptotic tail started to grow
        prev = std::abs(term);
        const int r = k & 3;
        if (r == 0) p += term;
        else if (r == 1) q += term;
        else if (r == 2) p -= term;
        else q -= term;
        if (std::abs(term) < 1e-19) break;
    }
}

// cos/sin of (x - (2nu+1) pi/4) via angle addition, so the accuracy is that
// of std::sin/std::cos at x rather than of a rounded phase difference.
void phase_cs(int nu, double x, double& c, double& s) {
    static const double cq[4] = {0.70710678118654752440, -0.70710678118654752440,
                                 -0.70710678118654752440, 0.70710678118654752440};
    static const double sq[4] = {0.70710678118654752440, 0.70710678118654752440,
                                 -0.70710678118654752440, -0.70710678118654752440};
    const int r = ((2 * nu + 1) / 2) & 3; // (2nu+1)pi/4 = pi/4 + nu*pi/2
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    // cos(x - a) = cos x cos a + sin x sin a, with a = pi/4 + nu*pi/2
    const double ca = cq[r % 4];
    const double sa = sq[r % 4];
    c = cx * ca + sx * sa;
    s = sx * ca - cx * sa;
}

double j_asymptotic(int nu, double x) {
    double p, q, c, s;
    hankel_pq(nu, x, p, q);
    phase_cs(nu, x, c, s);
    return std::sqrt(2.0 / (kPi * x)) * (p * c - q * s);
}

double y_asymptotic(int nu, double x) {
    double p, q, c, s;
    hankel_pq(nu, x, p, q);
    phase_cs(nu, x, c, s);
    return std::sqrt(2.0 / (kPi * x)) * (p * s + q * c);
}

// e^{x} K_nu(x) asymptotic expansion, nu in {0, 1}; x >= kKAsympMin.
// All terms enter with a plus sign; the numerators carry their own signs.
double k_asymptotic_scaled(int nu, double x) {
    const double mu = 4.0 * nu * nu;
    const double ix8 = 1.0 / (8.0 * x);
    double term = 1.0;
    double sum = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 40; ++k) {
        term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / k * ix8;
        if (std::abs(term) > prev) break;
        prev = std::abs(term);
        sum += term;
        if (std::abs(term) < 1e-19 * std::abs(sum)) break;
    }
    return std::sqrt(kPi / (2.0 * x)) * sum;
}

// --- K by the cosh integral --------------------------------------------------

// e^{x} K_nu(x) = int_0^inf e^{x(1 - cosh t)} cosh(nu t) dt.  The integrand is
// even and decays doubly exponentially, so the uniform trapezoid rule is
// spectrally accurate.  Used on the midrange where neither the log series nor
// the asymptotic expansion reaches 1e-13.
double k_integral_scaled(int nu, double x) {
    const double h = 0.08;
    double sum = 0.5; // t = 0 node: integrand is exactly 1
    for (int j = 1; j < 4000; ++j) {
        const double t = h * j;
        const double f = std::exp(x * (1.0 - std::cosh(t))) * std::cosh(nu * t);
        sum += f;
        if (f < 1e-20 * sum && t > 1.0) break;
    }
    return h * sum;
}

// --- small-x log series for Y and K ------------------------------------------

// Y_0, Y_1 for x <= kJSeriesMax via the standard log series.
void y_small_pair(double x, double& y0, double& y1) {
    const double j0 = j_series(0, x);
    const double j1 = j_series(1, x);
    const double lg = std::log(0.5 * x) + kEulerGamma;
    const double q = -0.25 * x * x;

    // Y_0 = (2/pi)[ (ln(x/2)+gamma) J_0 + sum_{k>=1} (-1)^{k+1} H_k q'^k/(k!)^2 ], q' = x^2/4
    double term = 1.0;
    double hk = 0.0;
    double sum0 = 0.0;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<double>(k) * k); // (-1)^k (x^2/4)^k/(k!)^2
        hk += 1.0 / k;
        sum0 -= term * hk; // (-1)^{k+1} = -(-1)^k
        if (std::abs(term) < 1e-19) break;
    }
    y0 = (2.0 / kPi) * (lg * j0 + sum0);

    // Y_1 = (2/pi) ln(x/2) J_1 - 2/(pi x)
    //       - (x/(2 pi)) sum_{k>=0} [psi(k+1)+psi(k+2)] (-x^2/4)^k / (k! (k+1)!)
    double t1 = 1.0; // (-x^2/4)^k / (k!(k+1)!)
    double psum = 0.0;
    double psi_a = -kEulerGamma;       // psi(1)
    double psi_b = -kEulerGamma + 1.0; // psi(2)
    for (int k = 0; k < 60; ++k) {
        psum += t1 * (psi_a + psi_b);
        t1 *= q / (static_cast<double>(k + 1) * (k + 2));
        psi_a += 1.0 / (k + 1);
        psi_b += 1.0 / (k + 2);
        if (std::abs(t1) < 1e-19) break;
    }
    y1 = (2.0 / kPi) * std::log(0.5 * x) * j1 - 2.0 / (kPi * x) - (0.5 * x / kPi) * psum;
}

// Y_0, Y_1 on the midrange from the Neumann series
//   Y_0 = (2/pi)(ln(x/2)+gamma) J_0 + (4/pi) sum_{k>=1} (-1)^{k+1} J_{2k}/k
// and its term-by-term derivative (Y_1 = -Y_0').
void y_mid_pair(double x, double& y0, double& y1) {
    const int khi = static_cast<int>(x) + 42;
    const std::vector<double> j = j_miller(2 * khi + 1, x);
    const double lg = std::log(0.5 * x) + kEulerGamma;

    double s0 = 0.0;
    double s1 = 0.0; // sum of (-1)^{k+1} J_{2k}'/k with J' = (J_{n-1}-J_{n+1})/2
    double sign = 1.0;
    for (int k = 1; k <= khi; ++k) {
        s0 += sign * j[static_cast<std::size_t>(2 * k)] / k;
        s1 += sign * 0.5 *
              (j[static_cast<std::size_t>(2 * k - 1)] - j[static_cast<std::size_t>(2 * k + 1)]) / k;
        sign = -sign;
    }
    y0 = (2.0 / kPi) * (lg * j[0] + 2.0 * s0);
    // d/dx of the series; J_0' = -J_1
    const double dy0 = (2.0 / kPi) * (j[0] / x - lg * j[1]) + (4.0 / kPi) * s1;
    y1 = -dy0;
}

// K_0 for x <= kKSeriesMax via the log series; K_1 from the Wronskian.
void k_small_pair(double x, double& k0, double& k1) {
    const double i0 = i_series(0, x);
    const double i1 = i_series(1, x);
    const double q = 0.25 * x * x;
    double term = 1.0;
    double hk = 0.0;
    double sum = 0.0;
    for (int k = 1; k < 60; ++k) {
        term *= q / (static_cast<double>(k) * k);
        hk += 1.0 / k;
        sum += term * hk;
        if (term < 1e-19) break;
    }
    k0 = -(std::log(0.5 * x) + kEulerGamma) * i0 + sum;
    k1 = (1.0 / x - i1 * k0) / i0; // I_0 K_1 + I_1 K_0 = 1/x
}

// J_m, J_{m+1} dispatch.
void j_pair(int m, double x, double& jm, double& jmp1) {
    if (x < kJSeriesMax) {
        jm = j_series(m, x);
        jmp1 = j_series(m + 1, x);
        return;
    }
    if (x < kJAsympMin || m + 1 >= static_cast<int>(0.8 * x)) {
        const std::vector<double> j = j_miller(m + 1, x);
        jm = j[static_cast<std::size_t>(m)];
        jmp1 = j[static_cast<std::size_t>(m) + 1];
        return;
    }
    // Large argument: asymptotic J_0, J_1 then forward recurrence (stable
    // while the order stays well below x).
    double a = j_asymptotic(0, x);
    double b = j_asymptotic(1, x);
    if (m == 0) {
        jm = a;
        jmp1 = b;
        return;
    }
    for (int k = 1; k < m; ++k) {
        const double c = (2.0 * k / x) * b - a;
        a = b;
        b = c;
    }
    jm = b;
    jmp1 = (2.0 * m / x) * b - a;
}

void y_pair(int m, double x, const char* fn, double& ym, double& ymp1) {
    double y0, y1;
    if (x < kJSeriesMax) y_small_pair(x, y0, y1);
    else if (x < kJAsympMin) y_mid_pair(x, y0, y1);
    else {
        y0 = y_asymptotic(0, x);
        y1 = y_asymptotic(1, x);
    }
    double a = y0, b = y1;
    for (int k = 1; k <= m; ++k) {
        const double c = (2.0 * k / x) * b - a;
        a = b;
        b = c;
        if (std::abs(b) > kOverflowLimit) overflow(fn, m, x);
    }
    if (m == 0) {
        ym = y0;
        ymp1 = y1;
    } else {
        ym = a;
        ymp1 = b;
    }
}

void k_scaled_pair(int m, double x, const char* fn, double& km, double& kmp1) {
    double k0, k1;
    if (x < kKSeriesMax) {
        k_small_pair(x, k0, k1);
        k0 *= std::exp(x);
        k1 *= std::exp(x);
    } else if (x < kKAsympMin) {
        k0 = k_integral_scaled(0, x);
        k1 = k_integral_scaled(1, x);
    } else {
        k0 = k_asymptotic_scaled(0, x);
        k1 = k_asymptotic_scaled(1, x);
    }
    double a = k0, b = k1;
    for (int k = 1; k <= m; ++k) {
        const double c = (2.0 * k / x) * b + a;
        a = b;
        b = c;
        if (b > kOverflowLimit) overflow(fn, m, x);
    }
    if (m == 0) {
        km = k0;
        kmp1 = k1;
    } else {
        km = a;
        kmp1 = b;
    }
}

} // namespace

BesselValue bessel_j(int m, double x) {
    require_order(m, "bessel_j");
    if (x < 0.0) throw domain_error("bessel_j: argument must be >= 0");
    if (x == 0.0) {
        if (m == 0) return {1.0, 0.0, false};
        if (m == 1) return {0.0, 0.5, false};
        return {0.0, 0.0, false};
    }
    double jm, jmp1;
    j_pair(m, x, jm, jmp1);
    return {jm, (m / x) * jm - jmp1, false};
}

BesselValue bessel_y(int m, double x) {
    require_order(m, "bessel_y");
    if (!(x > 0.0)) throw domain_error("bessel_y: argument must be > 0");
    double ym, ymp1;
    y_pair(m, x, "bessel_y", ym, ymp1);
    return {ym, (m / x) * ym - ymp1, false};
}

BesselValue bessel_i(int m, double x) {
    require_order(m, "bessel_i");
    if (!(x > 0.0)) throw domain_error("bessel_i: argument must be > 0");
    const BesselValue s = bessel_i_scaled(m, x);
    if (s.value > 0.0 && x + std::log(s.value) > 708.0) overflow("bessel_i", m, x);
    const double e = std::exp(x);
    return {s.value * e, s.derivative * e, false};
}

BesselValue bessel_i_scaled(int m, double x) {
    require_order(m, "bessel_i");
    if (!(x > 0.0)) throw domain_error("bessel_i: argument must be > 0");
    if (x < kISeriesMax) {
        const double e = std::exp(-x);
        const double im = i_series(m, x);
        const double imp1 = i_series(m + 1, x);
        return {im * e, (imp1 + (m / x) * im) * e, false};
    }
    const std::vector<double> iv = i_miller_scaled(m + 1, x);
    const double im = iv[static_cast<std::size_t>(m)];
    const double imp1 = iv[static_cast<std::size_t>(m) + 1];
    return {im, imp1 + (m / x) * im, false};
}

BesselValue bessel_k(int m, double x) {
    require_order(m, "bessel_k");
    if (!(x > 0.0)) throw domain_error("bessel_k: argument must be > 0");
    const BesselValue s = bessel_k_scaled(m, x);
    const double e = std::exp(-x);
    const double v = s.value * e;
    const double d = s.derivative * e;
    if (v == 0.0) return {0.0, 0.0, true};
    return {v, d, false};
}

BesselValue bessel_k_scaled(int m, double x) {
    require_order(m, "bessel_k");
    if (!(x > 0.0)) throw domain_error("bessel_k: argument must be > 0");
    double km, kmp1;
    k_scaled_pair(m, x, "bessel_k", km, kmp1);
    return {km, (m / x) * km - kmp1, false};
}

} // namespace wgspec
