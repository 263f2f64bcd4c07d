#pragma once

// Serial exact-arithmetic reference routines. They share no code with the
// modular kernels and are used to check them in tests and benchmarks.

#include "supergraph/spectral.hpp"

namespace supergraph::reference {

// Berkowitz's division-free algorithm over arbitrary-precision integers.
IntegerPolynomial char_poly_berkowitz(const IntegerMatrix& m);

// Fraction-free Gaussian elimination.
BigInt determinant_bareiss(IntegerMatrix m);
std::size_t rank_bareiss(IntegerMatrix m);

} // namespace supergraph::reference
