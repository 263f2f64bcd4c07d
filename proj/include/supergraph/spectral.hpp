#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "supergraph/errors.hpp"
#include "supergraph/graph.hpp"

namespace supergraph {

using BigInt = mpz_class;

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    explicit IntegerMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    // Copy without row/column `skip`.
    IntegerMatrix minor(std::size_t skip) const;
    // M - t*I
    IntegerMatrix shifted(long t) const;

    bool is_symmetric() const;
    // Symmetric, zero row sums, off-diagonal entries in {0, -1}.
    bool is_laplacian() const;
    BigInt trace() const;

    bool operator==(const IntegerMatrix& other) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<BigInt> entries_;
};

/// Polynomial with integer coefficients, stored low to high.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<BigInt> coefficients);

    static IntegerPolynomial monomial(std::size_t degree);        // x^degree
    static IntegerPolynomial linear_root(long root);              // x - root

    // Degree of the zero polynomial is reported as 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(std::size_t power) const;

    BigInt evaluate(const BigInt& x) const;
    // Divides by (x - root) in place when the remainder is zero.
    bool divide_by_root(long root);

    IntegerPolynomial operator*(const IntegerPolynomial& rhs) const;
    bool operator==(const IntegerPolynomial& other) const = default;

    // "x^3 - 6*x^2 + 9*x"
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

struct Eigenpair {
    std::int64_t value = 0;
    std::int64_t multiplicity = 0;
    bool operator==(const Eigenpair&) const = default;
};

/// Integer eigenvalues with multiplicities, sorted by decreasing eigenvalue.
class SpectrumMultiset {
public:
    SpectrumMultiset() = default;
    // Merges repeated values and drops zero multiplicities.
    explicit SpectrumMultiset(std::vector<Eigenpair> pairs);

    const std::vector<Eigenpair>& pairs() const { return pairs_; }
    std::int64_t multiplicity_of(std::int64_t value) const;
    std::int64_t total_multiplicity() const;
    BigInt weighted_sum() const;                           // sum of value * multiplicity
    // Product of the nonzero eigenvalues, with multiplicity.
    BigInt nonzero_product() const;
    IntegerPolynomial to_polynomial() const;               // prod (x - value)^multiplicity
    std::string compact() const;                           // "10^1 6^4 5^3 1^1 0^1"
    std::string factored() const;                          // "(x-10)*(x-6)^4*...*x"

    bool operator==(const SpectrumMultiset&) const = default;

private:
    std::vector<Eigenpair> pairs_;
};

/// Raised when integer-root deflation leaves a nonconstant factor.
class NotIntegral : public Error {
public:
    NotIntegral(SpectrumMultiset integer_part, IntegerPolynomial residual);
    const SpectrumMultiset& integer_part() const { return integer_part_; }
    const IntegerPolynomial& residual() const { return residual_; }

private:
    SpectrumMultiset integer_part_;
    IntegerPolynomial residual_;
};

// Serial runs every kernel on the calling thread; Parallel spreads the
// independent per-prime / per-candidate work over OpenMP threads.
enum class Execution { Parallel, Serial };

void set_thread_count(int threads);
int thread_count();

IntegerMatrix laplacian(const SimpleGraph& g);
IntegerMatrix adjacency_matrix(const SimpleGraph& g);

/// det(xI - M), computed modulo word-sized primes by Hessenberg reduction
/// and lifted by Chinese remaindering against an a-priori coefficient bound.
IntegerPolynomial char_poly(const IntegerMatrix& m, Execution exec = Execution::Parallel);

/// Exact determinant by the same modular route (Hadamard bound).
BigInt determinant(const IntegerMatrix& m, Execution exec = Execution::Parallel);

/// N - rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t nullity(const IntegerMatrix& m);

struct Deflation {
    SpectrumMultiset roots;       // integer roots in the searched range
    IntegerPolynomial residual;   // what is left after dividing them out
};

// Divides out (x - t) for t = hi down to lo while the remainder vanishes.
Deflation deflate_integer_roots(IntegerPolynomial p, std::int64_t lo, std::int64_t hi);

enum class SpectrumStrategy { Deflation, Nullity };

/// Full Laplacian spectrum when every eigenvalue is an integer in [0, N].
/// Throws NotIntegral otherwise.
SpectrumMultiset integral_spectrum(const IntegerMatrix& laplacian,
                                   SpectrumStrategy strategy = SpectrumStrategy::Deflation,
                                   Execution exec = Execution::Parallel);
SpectrumMultiset integral_spectrum_from_poly(const IntegerPolynomial& char_poly);

/// Multiplicity of each integer t in [0, N] as an eigenvalue of L, from
/// nullity(L - tI). Entries with multiplicity zero are omitted.
SpectrumMultiset nullity_multiplicities(const IntegerMatrix& laplacian,
                                        Execution exec = Execution::Parallel);

struct TreeCounts {
    BigInt from_eigenvalues;   // |coefficient of x in char poly| / N
    BigInt from_cofactor;      // det of L with row and column 0 removed
};

TreeCounts spanning_tree_counts(const SimpleGraph& g, Execution exec = Execution::Parallel);
// Same, reusing an already computed Laplacian characteristic polynomial.
TreeCounts spanning_tree_counts(const IntegerMatrix& laplacian, const IntegerPolynomial& char_poly,
                                Execution exec = Execution::Parallel);

/// Matrix-Tree count; both routes are computed and must agree.
BigInt spanning_tree_count(const SimpleGraph& g, Execution exec = Execution::Parallel);

} // namespace supergraph
