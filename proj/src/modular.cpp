#include "supergraph/modular.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

namespace supergraph::modular {

namespace {

bool is_prime(Residue v)
{
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (Residue d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

Residue mul(Residue a, Residue b, Residue p) { return a * b % p; }

Residue pow_mod(Residue base, Residue e, Residue p)
{
    Residue r = 1;
    for (base %= p; e; e >>= 1) {
        if (e & 1) r = mul(r, base, p);
        base = mul(base, base, p);
    }
    return r;
}

Residue to_residue(const BigInt& v, Residue p)
{
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

} // namespace

const std::vector<Residue>& primes(std::size_t count)
{
    static std::mutex guard;
    static std::vector<Residue> cache;
    std::lock_guard lock(guard);
    Residue candidate = cache.empty() ? (Residue{1} << 31) - 1 : cache.back() - 2;
    while (cache.size() < count) {
        if (is_prime(candidate)) cache.push_back(candidate);
        candidate -= 2;
    }
    return cache;
}

std::vector<Residue> primes_exceeding(const BigInt& bound)
{
    std::vector<Residue> chosen;
    BigInt product = 1;
    std::size_t want = 8;
    while (chosen.empty() || product <= bound) {
        const auto& pool = primes(want);
        for (std::size_t i = chosen.size(); i < pool.size() && (chosen.empty() || product <= bound); ++i) {
            chosen.push_back(pool[i]);
            product *= static_cast<unsigned long>(pool[i]);
        }
        want *= 2;
    }
    return chosen;
}

Residue inverse_mod(Residue a, Residue p) { return pow_mod(a, p - 2, p); }

ModMatrix reduce(const IntegerMatrix& m, Residue p)
{
    ModMatrix out{m.dim(), std::vector<Residue>(m.dim() * m.dim()), p};
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out.at(i, j) = to_residue(m(i, j), p);
    return out;
}

std::vector<Residue> char_poly_mod(ModMatrix m)
{
    const std::size_t n = m.dim;
    const Residue p = m.p;
    auto& a = m.a;

    // Similarity transforms to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && a[pivot * n + j] == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != j + 1) {
            std::swap_ranges(a.begin() + pivot * n, a.begin() + pivot * n + n, a.begin() + (j + 1) * n);
            for (std::size_t r = 0; r < n; ++r) std::swap(a[r * n + pivot], a[r * n + j + 1]);
        }
        const Residue inv = inverse_mod(a[(j + 1) * n + j], p);
        const Residue* prow = &a[(j + 1) * n];
        for (std::size_t r = j + 2; r < n; ++r) {
            Residue* row = &a[r * n];
            if (row[j] == 0) continue;
            const Residue u = mul(row[j], inv, p);
            const Residue neg = p - u;
            // row_r -= u * row_{j+1}
            for (std::size_t c = j; c < n; ++c) row[c] = (row[c] + neg * prow[c]) % p;
            // col_{j+1} += u * col_r
            for (std::size_t k = 0; k < n; ++k) {
                Residue& dst = a[k * n + j + 1];
                dst = (dst + u * a[k * n + r]) % p;
            }
        }
    }

    // Characteristic polynomial of the Hessenberg matrix by the standard
    // recurrence over leading principal blocks.
    std::vector<std::vector<Residue>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        auto& cur = polys[k];
        const auto& prev = polys[k - 1];
        cur.assign(k + 1, 0);
        const Residue diag = a[(k - 1) * n + (k - 1)];
        for (std::size_t d = 0; d < prev.size(); ++d) {
            cur[d + 1] = (cur[d + 1] + prev[d]) % p;
            cur[d] = (cur[d] + (p - diag) * prev[d]) % p;
        }
        Residue t = 1;
        for (std::size_t i = 1; i < k; ++i) {
            t = mul(t, a[(k - i) * n + (k - i - 1)], p);
            if (t == 0) break;
            const Residue coef = mul(t, a[(k - i - 1) * n + (k - 1)], p);
            if (coef == 0) continue;
            const Residue neg = p - coef;
            const auto& lower = polys[k - i - 1];
            for (std::size_t d = 0; d < lower.size(); ++d) cur[d] = (cur[d] + neg * lower[d]) % p;
        }
    }
    return std::move(polys[n]);
}

Residue determinant_mod(ModMatrix m)
{
    const std::size_t n = m.dim;
    const Residue p = m.p;
    auto& a = m.a;
    Residue det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot * n + c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap_ranges(a.begin() + pivot * n, a.begin() + pivot * n + n, a.begin() + c * n);
            det = p - det;
        }
        det = mul(det, a[c * n + c], p);
        const Residue inv = inverse_mod(a[c * n + c], p);
        for (std::size_t r = c + 1; r < n; ++r) {
            Residue* row = &a[r * n];
            if (row[c] == 0) continue;
            const Residue neg = p - mul(row[c], inv, p);
            for (std::size_t k = c; k < n; ++k) row[k] = (row[k] + neg * a[c * n + k]) % p;
        }
    }
    return det % p;
}

namespace {

bool is_psd_by_dominance(const IntegerMatrix& m)
{
    if (!m.is_symmetric()) return false;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        BigInt off = 0;
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (j != i) off += abs(m(i, j));
        if (m(i, i) < off) return false;
    }
    return true;
}

} // namespace

BigInt char_poly_coefficient_bound(const IntegerMatrix& m)
{
    const std::size_t n = m.dim();
    BigInt bound = 1;
    BigInt binom = 1;   // C(n, j)
    if (is_psd_by_dominance(m)) {
        // e_j(lambda) <= C(n, j) * (trace / n)^j for nonnegative lambda.
        const BigInt tr = m.trace();
        BigInt tr_pow = 1, n_pow = 1;
        for (std::size_t j = 1; j <= n; ++j) {
            binom = binom * static_cast<unsigned long>(n - j + 1) / static_cast<unsigned long>(j);
            tr_pow *= tr;
            n_pow *= static_cast<unsigned long>(n);
            BigInt term = binom * tr_pow;
            mpz_cdiv_q(term.get_mpz_t(), term.get_mpz_t(), n_pow.get_mpz_t());
            if (term > bound) bound = term;
        }
        return bound;
    }
    BigInt rho = 0;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row = 0;
        for (std::size_t j = 0; j < n; ++j) row += abs(m(i, j));
        if (row > rho) rho = row;
    }
    BigInt rho_pow = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        binom = binom * static_cast<unsigned long>(n - j + 1) / static_cast<unsigned long>(j);
        rho_pow *= rho;
        BigInt term = binom * rho_pow;
        if (term > bound) bound = term;
    }
    return bound;
}

BigInt hadamard_bound(const IntegerMatrix& m)
{
    BigInt bound = 1;
    if (is_psd_by_dominance(m)) {
        // det <= product of the diagonal for positive semidefinite matrices.
        for (std::size_t i = 0; i < m.dim(); ++i) bound *= m(i, i);
        return bound;
    }
    for (std::size_t i = 0; i < m.dim(); ++i) {
        BigInt sq = 0;
        for (std::size_t j = 0; j < m.dim(); ++j) sq += m(i, j) * m(i, j);
        BigInt root;
        mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
        if (root * root != sq) root += 1;
        bound *= root;
    }
    return bound;
}

void CrtAccumulator::add(std::span<const Residue> residues, Residue p)
{
    const auto up = static_cast<unsigned long>(p);
    const Residue m_inv = inverse_mod(mpz_fdiv_ui(modulus_.get_mpz_t(), up), p);
    BigInt step;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const Residue have = mpz_fdiv_ui(values_[i].get_mpz_t(), up);
        const Residue want = i < residues.size() ? residues[i] % p : 0;
        const Residue t = mul((want + p - have) % p, m_inv, p);
        if (t == 0) continue;
        mpz_mul_ui(step.get_mpz_t(), modulus_.get_mpz_t(), static_cast<unsigned long>(t));
        values_[i] += step;
    }
    modulus_ *= up;
}

std::vector<BigInt> CrtAccumulator::signed_values() const
{
    std::vector<BigInt> out = values_;
    for (auto& v : out)
        if (2 * v > modulus_) v -= modulus_;
    return out;
}

} // namespace supergraph::modular
