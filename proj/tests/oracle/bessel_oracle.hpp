#pragma once

// Test-only extended-precision oracle for the Bessel family, evaluated with
// ~140-decimal-digit software floats through independent series/asymptotic
// formulas.  Never used by the library itself.
//
// Valid ranges: any m <= 200 for x <= 40 (J/Y) or x <= 60 (I/K);
// m <= 10 for larger x (up to 1e4).  Results are exact to well below
// double rounding within those ranges.

namespace wgspec::testing {

struct OracleValue {
    double value;
    double derivative;
};

OracleValue oracle_j(int m, double x);
OracleValue oracle_y(int m, double x);
OracleValue oracle_i(int m, double x); // may overflow double; asserts range in tests
OracleValue oracle_k(int m, double x);

// Scaled counterparts (e^{-x} I, e^{x} K), finite everywhere tested.
OracleValue oracle_i_scaled(int m, double x);
OracleValue oracle_k_scaled(int m, double x);

} // namespace wgspec::testing
