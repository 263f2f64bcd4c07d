#include "supergraph/reference.hpp"

#include <utility>

namespace supergraph::reference {

IntegerPolynomial char_poly_berkowitz(const IntegerMatrix& m)
{
    const std::size_t n = m.dim();
    // High-to-low coefficients of the leading r x r block's polynomial.
    std::vector<BigInt> c{1};
    for (std::size_t r = 0; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R S, -R A S, -R A^2 S, ...
        std::vector<BigInt> q(r + 2);
        q[0] = 1;
        q[1] = -m(r, r);
        std::vector<BigInt> v(r), next(r);
        for (std::size_t j = 0; j < r; ++j) v[j] = m(r, j);
        for (std::size_t k = 0; k < r; ++k) {
            BigInt dot = 0;
            for (std::size_t j = 0; j < r; ++j) dot += v[j] * m(j, r);
            q[k + 2] = -dot;
            if (k + 1 == r) break;
            for (std::size_t j = 0; j < r; ++j) {
                next[j] = 0;
                for (std::size_t i = 0; i < r; ++i) next[j] += v[i] * m(i, j);
            }
            std::swap(v, next);
        }
        std::vector<BigInt> out(r + 2, 0);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < c.size(); ++j) out[i] += q[i - j] * c[j];
        c = std::move(out);
    }
    return IntegerPolynomial(std::vector<BigInt>(c.rbegin(), c.rend()));
}

BigInt determinant_bareiss(IntegerMatrix m)
{
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) swap(m(pivot, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt& e = m(i, j);
                e = e * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t rank_bareiss(IntegerMatrix m)
{
    const std::size_t n = m.dim();
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < n; ++c) {
        std::size_t pivot = rank;
        while (pivot < n && m(pivot, c) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < n; ++j) swap(m(pivot, j), m(rank, j));
        for (std::size_t i = rank + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                BigInt& e = m(i, j);
                e = e * m(rank, c) - m(i, c) * m(rank, j);
                mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(rank, c);
        ++rank;
    }
    return rank;
}

} // namespace supergraph::reference
