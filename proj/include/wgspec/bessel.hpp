#pragma once

namespace wgspec {

/// Value/derivative pair of a cylinder function at a point.
/// `underflow` is set when the result underflowed to an exact zero
/// (only K_m at large argument does this silently; overflow throws).
struct BesselValue {
    double value = 0.0;
    double derivative = 0.0;
    bool underflow = false;
};

// Real-argument integer-order Bessel family, implemented from scratch:
// ascending series at small argument, backward (Miller) recurrence in the
// midrange for J and I, a cosh-integral for K in the midrange, and Hankel
// asymptotic expansions at large argument.  Orders are m >= 0; callers map
// m -> |m| (the even-order symmetry j_{-m} = j_m holds downstream).

BesselValue bessel_j(int m, double x); // x >= 0
BesselValue bessel_y(int m, double x); // x > 0
BesselValue bessel_i(int m, double x); // x > 0; throws on overflow
BesselValue bessel_k(int m, double x); // x > 0; underflows to flagged 0

// Scaled variants, finite over the full supported range:
//   value = e^{-x} I_m(x),  derivative = e^{-x} I_m'(x)
//   value = e^{+x} K_m(x),  derivative = e^{+x} K_m'(x)
BesselValue bessel_i_scaled(int m, double x);
BesselValue bessel_k_scaled(int m, double x);

} // namespace wgspec
