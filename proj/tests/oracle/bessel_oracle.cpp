#include "bessel_oracle.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

namespace wgspec::testing {

namespace {

using mp = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<140>>;

const mp kPi = 4 * atan(mp(1));

mp euler_gamma() {
    // gamma to 60+ digits; enough headroom for a 1e-30-grade oracle.
    static const mp g("0.577215664901532860606512090082402431042159335939923598805767234884867726777664670936947063291746749514631447250");
    return g;
}

mp half_pow_over_fact(int m, const mp& x) {
    mp t = 1;
    for (int k = 1; k <= m; ++k) t *= x / (2 * k);
    return t;
}

mp j_series(int m, const mp& x) {
    const mp q = -x * x / 4;
    mp term = half_pow_over_fact(m, x);
    mp sum = term;
    for (int k = 1; k < 5000; ++k) {
        term *= q / (mp(k) * (m + k));
        sum += term;
        if (abs(term) < abs(sum) * mp("1e-135") + mp("1e-9000")) break;
    }
    return sum;
}

mp i_series(int m, const mp& x) {
    const mp q = x * x / 4;
    mp term = half_pow_over_fact(m, x);
    mp sum = term;
    for (int k = 1; k < 5000; ++k) {
        term *= q / (mp(k) * (m + k));
        sum += term;
        if (term < sum * mp("1e-135") + mp("1e-9000")) break;
    }
    return sum;
}

// P/Q sums of the Hankel expansion for order nu, argument x (x large).
void hankel_pq(int nu, const mp& x, mp& p, mp& q) {
    const mp mu = mp(4) * nu * nu;
    const mp ix8 = mp(1) / (8 * x);
    mp term = 1;
    p = 1;
    q = 0;
    mp prev = mp("1e9999");
    for (int k = 1; k <= 400; ++k) {
        term *= (mu - mp(2 * k - 1) * (2 * k - 1)) / k * ix8;
        if (abs(term) > prev) break;
        prev = abs(term);
        switch (k & 3) {
            case 0: p += term; break;
            case 1: q += term; break;
            case 2: p -= term; break;
            default: q -= term; break;
        }
        if (abs(term) < mp("1e-138")) break;
    }
}

void jy_asymptotic(int nu, const mp& x, mp& jv, mp& yv) {
    mp p, q;
    hankel_pq(nu, x, p, q);
    const mp chi = x - (2 * nu + 1) * kPi / 4;
    const mp c = cos(chi), s = sin(chi);
    const mp amp = sqrt(2 / (kPi * x));
    jv = amp * (p * c - q * s);
    yv = amp * (p * s + q * c);
}

// e^{x} K_nu(x) and e^{-x} I_nu(x) by asymptotic expansion (x large).
mp k_asymptotic_scaled(int nu, const mp& x) {
    const mp mu = mp(4) * nu * nu;
    const mp ix8 = mp(1) / (8 * x);
    mp term = 1, sum = 1;
    mp prev = mp("1e9999");
    for (int k = 1; k <= 400; ++k) {
        term *= (mu - mp(2 * k - 1) * (2 * k - 1)) / k * ix8;
        if (abs(term) > prev) break;
        prev = abs(term);
        sum += term;
        if (abs(term) < mp("1e-138")) break;
    }
    return sqrt(kPi / (2 * x)) * sum;
}

mp i_asymptotic_scaled(int nu, const mp& x) {
    const mp mu = mp(4) * nu * nu;
    const mp ix8 = mp(1) / (8 * x);
    mp term = 1, sum = 1;
    mp prev = mp("1e9999");
    for (int k = 1; k <= 400; ++k) {
        term *= (mu - mp(2 * k - 1) * (2 * k - 1)) / k * ix8;
        if (abs(term) > prev) break;
        prev = abs(term);
        sum += (k & 1) ? -term : term;
        if (abs(term) < mp("1e-138")) break;
    }
    return sum / sqrt(2 * kPi * x);
}

void y_small_pair(const mp& x, mp& y0, mp& y1) {
    const mp j0 = j_series(0, x);
    const mp j1 = j_series(1, x);
    const mp lg = log(x / 2) + euler_gamma();
    const mp q = -x * x / 4;

    mp term = 1, hk = 0, sum0 = 0;
    for (int k = 1; k < 3000; ++k) {
        term *= q / (mp(k) * k);
        hk += mp(1) / k;
        sum0 -= term * hk;
        if (abs(term) < mp("1e-140")) break;
    }
    y0 = (2 / kPi) * (lg * j0 + sum0);

    mp t1 = 1, psum = 0;
    mp psi_a = -euler_gamma();
    mp psi_b = -euler_gamma() + 1;
    for (int k = 0; k < 3000; ++k) {
        psum += t1 * (psi_a + psi_b);
        t1 *= q / (mp(k + 1) * (k + 2));
        psi_a += mp(1) / (k + 1);
        psi_b += mp(1) / (k + 2);
        if (abs(t1) < mp("1e-140")) break;
    }
    y1 = (2 / kPi) * log(x / 2) * j1 - 2 / (kPi * x) - (x / (2 * kPi)) * psum;
}

void k_small_pair(const mp& x, mp& k0, mp& k1) {
    const mp i0 = i_series(0, x);
    const mp i1 = i_series(1, x);
    const mp q = x * x / 4;
    mp term = 1, hk = 0, sum = 0;
    for (int k = 1; k < 3000; ++k) {
        term *= q / (mp(k) * k);
        hk += mp(1) / k;
        sum += term * hk;
        if (term < mp("1e-140")) break;
    }
    k0 = -(log(x / 2) + euler_gamma()) * i0 + sum;
    k1 = (1 / x - i1 * k0) / i0;
}

void check(int m, double x, double x_cap_high_m) {
    if (m < 0 || x <= 0.0) throw std::invalid_argument("oracle: bad (m, x)");
    if (x > x_cap_high_m && m > 10) throw std::invalid_argument("oracle: m too large for asymptotic range");
    if (x > 1e4) throw std::invalid_argument("oracle: x out of tested range");
}

void j_pair(int m, const mp& x, mp& jm, mp& jmp1) {
    if (x <= 40) {
        jm = j_series(m, x);
        jmp1 = j_series(m + 1, x);
        return;
    }
    mp j0, j1, y0, y1;
    jy_asymptotic(0, x, j0, y0);
    jy_asymptotic(1, x, j1, y1);
    mp a = j0, b = j1;
    for (int k = 1; k <= m; ++k) {
        const mp c = (2 * k / x) * b - a;
        a = b;
        b = c;
    }
    if (m == 0) {
        jm = j0;
        jmp1 = j1;
    } else {
        jm = a;
        jmp1 = b;
    }
}

} // namespace

OracleValue oracle_j(int m, double x) {
    if (m >= 0 && x == 0.0) {
        if (m == 0) return {1.0, 0.0};
        if (m == 1) return {0.0, 0.5};
        return {0.0, 0.0};
    }
    check(m, x, 40.0);
    const mp xx(x);
    mp jm, jmp1;
    j_pair(m, xx, jm, jmp1);
    const mp d = (m / xx) * jm - jmp1;
    return {static_cast<double>(jm), static_cast<double>(d)};
}

OracleValue oracle_y(int m, double x) {
    check(m, x, 40.0);
    const mp xx(x);
    mp y0, y1;
    if (x <= 40) {
        y_small_pair(xx, y0, y1);
    } else {
        mp j0, j1;
        jy_asymptotic(0, xx, j0, y0);
        jy_asymptotic(1, xx, j1, y1);
    }
    mp a = y0, b = y1;
    for (int k = 1; k <= m; ++k) {
        const mp c = (2 * k / xx) * b - a;
        a = b;
        b = c;
    }
    const mp ym = (m == 0) ? y0 : a;
    const mp ymp1 = (m == 0) ? y1 : b;
    const mp d = (m / xx) * ym - ymp1;
    return {static_cast<double>(ym), static_cast<double>(d)};
}

OracleValue oracle_i_scaled(int m, double x) {
    check(m, x, 60.0);
    const mp xx(x);
    mp im, imp1;
    if (x <= 60) {
        const mp e = exp(-xx);
        im = i_series(m, xx) * e;
        imp1 = i_series(m + 1, xx) * e;
    } else {
        mp i0 = i_asymptotic_scaled(0, xx);
        mp i1 = i_asymptotic_scaled(1, xx);
        mp a = i0, b = i1;
        for (int k = 1; k <= m; ++k) {
            const mp c = a - (2 * k / xx) * b;
            a = b;
            b = c;
        }
        im = (m == 0) ? i0 : a;
        imp1 = (m == 0) ? i1 : b;
    }
    const mp d = imp1 + (m / xx) * im;
    return {static_cast<double>(im), static_cast<double>(d)};
}

OracleValue oracle_i(int m, double x) {
    const OracleValue s = oracle_i_scaled(m, x);
    const double e = std::exp(x);
    return {s.value * e, s.derivative * e};
}

OracleValue oracle_k_scaled(int m, double x) {
    check(m, x, 60.0);
    const mp xx(x);
    mp k0, k1;
    if (x <= 60) {
        k_small_pair(xx, k0, k1);
        const mp e = exp(xx);
        k0 *= e;
        k1 *= e;
    } else {
        k0 = k_asymptotic_scaled(0, xx);
        k1 = k_asymptotic_scaled(1, xx);
    }
    mp a = k0, b = k1;
    for (int k = 1; k <= m; ++k) {
        const mp c = (2 * k / xx) * b + a;
        a = b;
        b = c;
    }
    const mp km = (m == 0) ? k0 : a;
    const mp kmp1 = (m == 0) ? k1 : b;
    const mp d = (m / xx) * km - kmp1;
    return {static_cast<double>(km), static_cast<double>(d)};
}

OracleValue oracle_k(int m, double x) {
    const OracleValue s = oracle_k_scaled(m, x);
    const double e = std::exp(-x);
    return {s.value * e, s.derivative * e};
}

} // namespace wgspec::testing
