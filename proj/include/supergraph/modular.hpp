#pragma once

// Word-size modular kernels behind the exact spectral routines.

#include <cstdint>
#include <span>
#include <vector>

#include "supergraph/spectral.hpp"

namespace supergraph::modular {

using Residue = std::uint64_t;

// Primes below 2^31, in decreasing order; products of two residues fit in 64 bits.
const std::vector<Residue>& primes(std::size_t count);

// Distinct primes from primes() whose product exceeds `bound`.
std::vector<Residue> primes_exceeding(const BigInt& bound);

Residue inverse_mod(Residue a, Residue p);

struct ModMatrix {
    std::size_t dim = 0;
    std::vector<Residue> a;   // row-major
    Residue p = 0;

    Residue& at(std::size_t i, std::size_t j) { return a[i * dim + j]; }
};

ModMatrix reduce(const IntegerMatrix& m, Residue p);

// Characteristic polynomial det(xI - M) mod p, low to high, length dim + 1.
// The matrix is consumed (reduced to upper Hessenberg form in place).
std::vector<Residue> char_poly_mod(ModMatrix m);
Residue determinant_mod(ModMatrix m);

// Bound on |coefficient| of det(xI - M). Uses Maclaurin's inequality when M
// is a symmetric diagonally dominant matrix with nonnegative diagonal (hence
// positive semidefinite), otherwise a Gershgorin radius bound.
BigInt char_poly_coefficient_bound(const IntegerMatrix& m);
// Hadamard bound on |det M|; the diagonal product when M is dominant as above.
BigInt hadamard_bound(const IntegerMatrix& m);

/// Incremental Chinese remaindering of a vector of values.
class CrtAccumulator {
public:
    explicit CrtAccumulator(std::size_t width) : values_(width, 0) {}
    void add(std::span<const Residue> residues, Residue p);
    // Symmetric lift into (-M/2, M/2].
    std::vector<BigInt> signed_values() const;
    const BigInt& modulus() const { return modulus_; }

private:
    std::vector<BigInt> values_;
    BigInt modulus_ = 1;
};

} // namespace supergraph::modular
