#include "supergraph/spectral.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <omp.h>

#include "supergraph/modular.hpp"
#include "supergraph/reference.hpp"

namespace supergraph {

// ---------------------------------------------------------------- matrices

IntegerMatrix IntegerMatrix::minor(std::size_t skip) const
{
    if (dim_ == 0 || skip >= dim_) throw DimensionMismatch("minor index out of range");
    IntegerMatrix out(dim_ - 1);
    for (std::size_t i = 0, oi = 0; i < dim_; ++i) {
        if (i == skip) continue;
        for (std::size_t j = 0, oj = 0; j < dim_; ++j) {
            if (j == skip) continue;
            out(oi, oj++) = (*this)(i, j);
        }
        ++oi;
    }
    return out;
}

IntegerMatrix IntegerMatrix::shifted(long t) const
{
    IntegerMatrix out = *this;
    for (std::size_t i = 0; i < dim_; ++i) out(i, i) -= t;
    return out;
}

bool IntegerMatrix::is_symmetric() const
{
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool IntegerMatrix::is_laplacian() const
{
    if (!is_symmetric()) return false;
    for (std::size_t i = 0; i < dim_; ++i) {
        BigInt sum = 0;
        for (std::size_t j = 0; j < dim_; ++j) {
            const BigInt& e = (*this)(i, j);
            if (i != j && e != 0 && e != -1) return false;
            sum += e;
        }
        if (sum != 0) return false;
    }
    return true;
}

BigInt IntegerMatrix::trace() const
{
    BigInt t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

// ------------------------------------------------------------- polynomials

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

void IntegerPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntegerPolynomial IntegerPolynomial::monomial(std::size_t degree)
{
    std::vector<BigInt> c(degree + 1, 0);
    c.back() = 1;
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::linear_root(long root)
{
    return IntegerPolynomial({BigInt(-root), BigInt(1)});
}

BigInt IntegerPolynomial::coefficient(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt IntegerPolynomial::evaluate(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool IntegerPolynomial::divide_by_root(long root)
{
    if (coeffs_.empty()) return false;
    const std::size_t n = coeffs_.size() - 1;
    if (n == 0) return false;
    std::vector<BigInt> q(n);
    BigInt carry = 0;
    for (std::size_t k = n; k >= 1; --k) {
        carry = coeffs_[k] + carry * root;
        q[k - 1] = carry;
    }
    if (coeffs_[0] + carry * root != 0) return false;
    coeffs_ = std::move(q);
    return true;
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& rhs) const
{
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return IntegerPolynomial(std::move(out));
}

std::string IntegerPolynomial::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigInt mag = abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return out;
}

// ---------------------------------------------------------------- spectrum

SpectrumMultiset::SpectrumMultiset(std::vector<Eigenpair> pairs)
{
    std::map<std::int64_t, std::int64_t, std::greater<>> merged;
    for (const auto& p : pairs) merged[p.value] += p.multiplicity;
    for (auto [value, mult] : merged)
        if (mult != 0) pairs_.push_back({value, mult});
}

std::int64_t SpectrumMultiset::multiplicity_of(std::int64_t value) const
{
    for (const auto& p : pairs_)
        if (p.value == value) return p.multiplicity;
    return 0;
}

std::int64_t SpectrumMultiset::total_multiplicity() const
{
    std::int64_t total = 0;
    for (const auto& p : pairs_) total += p.multiplicity;
    return total;
}

BigInt SpectrumMultiset::weighted_sum() const
{
    BigInt total = 0;
    for (const auto& p : pairs_) total += BigInt(static_cast<long>(p.value)) * static_cast<long>(p.multiplicity);
    return total;
}

BigInt SpectrumMultiset::nonzero_product() const
{
    BigInt product = 1;
    for (const auto& p : pairs_) {
        if (p.value == 0) continue;
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(std::abs(p.value)),
                      static_cast<unsigned long>(p.multiplicity));
        if (p.value < 0 && p.multiplicity % 2) power = -power;
        product *= power;
    }
    return product;
}

IntegerPolynomial SpectrumMultiset::to_polynomial() const
{
    IntegerPolynomial out = IntegerPolynomial::monomial(0);
    for (const auto& p : pairs_)
        for (std::int64_t i = 0; i < p.multiplicity; ++i) out = out * IntegerPolynomial::linear_root(p.value);
    return out;
}

std::string SpectrumMultiset::compact() const
{
    std::string out;
    for (const auto& p : pairs_) {
        if (!out.empty()) out += ' ';
        out += std::to_string(p.value) + "^" + std::to_string(p.multiplicity);
    }
    return out;
}

std::string SpectrumMultiset::factored() const
{
    std::string out;
    for (const auto& p : pairs_) {
        if (!out.empty()) out += '*';
        std::string factor;
        if (p.value == 0)
            factor = "x";
        else if (p.value > 0)
            factor = "(x-" + std::to_string(p.value) + ")";
        else
            factor = "(x+" + std::to_string(-p.value) + ")";
        out += factor;
        if (p.multiplicity > 1) out += "^" + std::to_string(p.multiplicity);
    }
    return out;
}

NotIntegral::NotIntegral(SpectrumMultiset integer_part, IntegerPolynomial residual)
    : Error("spectrum is not integral; residual factor " + residual.to_string()),
      integer_part_(std::move(integer_part)),
      residual_(std::move(residual))
{
}

// ----------------------------------------------------------------- kernels

void set_thread_count(int threads) { omp_set_num_threads(std::max(1, threads)); }

int thread_count() { return omp_get_max_threads(); }

IntegerMatrix laplacian(const SimpleGraph& g)
{
    const std::size_t n = g.vertex_count();
    IntegerMatrix l(n);
    for (Vertex u = 0; u < n; ++u) {
        l(u, u) = static_cast<unsigned long>(g.degree(u));
        for (Vertex v : g.neighbors(u)) l(u, v) = -1;
    }
    return l;
}

IntegerMatrix adjacency_matrix(const SimpleGraph& g)
{
    IntegerMatrix a(g.vertex_count());
    for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
    return a;
}

namespace {

// Runs kernel(prime) for every prime and merges the residue vectors in
// prime order, so the result does not depend on scheduling.
template <typename Kernel>
std::vector<BigInt> crt_over_primes(const std::vector<modular::Residue>& primes, std::size_t width,
                                    Execution exec, Kernel kernel)
{
    std::vector<std::vector<modular::Residue>> residues(primes.size());
    const auto count = static_cast<std::int64_t>(primes.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::Parallel)
    for (std::int64_t i = 0; i < count; ++i) residues[i] = kernel(primes[i]);

    modular::CrtAccumulator crt(width);
    for (std::size_t i = 0; i < primes.size(); ++i) crt.add(residues[i], primes[i]);
    return crt.signed_values();
}

} // namespace

IntegerPolynomial char_poly(const IntegerMatrix& m, Execution exec)
{
    const std::size_t n = m.dim();
    if (n == 0) return IntegerPolynomial::monomial(0);
    const BigInt bound = modular::char_poly_coefficient_bound(m);
    const auto primes = modular::primes_exceeding(2 * bound);
    auto coeffs = crt_over_primes(primes, n + 1, exec, [&](modular::Residue p) {
        return modular::char_poly_mod(modular::reduce(m, p));
    });
    return IntegerPolynomial(std::move(coeffs));
}

BigInt determinant(const IntegerMatrix& m, Execution exec)
{
    if (m.dim() == 0) return 1;
    const BigInt bound = modular::hadamard_bound(m);
    const auto primes = modular::primes_exceeding(2 * bound);
    auto value = crt_over_primes(primes, 1, exec, [&](modular::Residue p) {
        return std::vector<modular::Residue>{modular::determinant_mod(modular::reduce(m, p))};
    });
    return value.front();
}

std::size_t nullity(const IntegerMatrix& m) { return m.dim() - reference::rank_bareiss(m); }

Deflation deflate_integer_roots(IntegerPolynomial p, std::int64_t lo, std::int64_t hi)
{
    std::vector<Eigenpair> roots;
    for (std::int64_t t = hi; t >= lo; --t) {
        std::int64_t mult = 0;
        while (p.degree() > 0 && p.divide_by_root(static_cast<long>(t))) ++mult;
        if (mult) roots.push_back({t, mult});
    }
    return {SpectrumMultiset(std::move(roots)), std::move(p)};
}

SpectrumMultiset integral_spectrum_from_poly(const IntegerPolynomial& char_poly)
{
    const auto n = static_cast<std::int64_t>(char_poly.degree());
    Deflation d = deflate_integer_roots(char_poly, 0, n);
    if (d.residual.degree() > 0) throw NotIntegral(std::move(d.roots), std::move(d.residual));
    return std::move(d.roots);
}

SpectrumMultiset nullity_multiplicities(const IntegerMatrix& laplacian, Execution exec)
{
    const auto n = static_cast<std::int64_t>(laplacian.dim());
    std::vector<Eigenpair> found(n + 1);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::Parallel)
    for (std::int64_t t = n; t >= 0; --t)
        found[t] = {t, static_cast<std::int64_t>(nullity(laplacian.shifted(static_cast<long>(t))))};
    return SpectrumMultiset(std::move(found));
}

SpectrumMultiset integral_spectrum(const IntegerMatrix& laplacian, SpectrumStrategy strategy,
                                   Execution exec)
{
    if (strategy == SpectrumStrategy::Deflation) return integral_spectrum_from_poly(char_poly(laplacian, exec));

    SpectrumMultiset spectrum = nullity_multiplicities(laplacian, exec);
    if (spectrum.total_multiplicity() == static_cast<std::int64_t>(laplacian.dim())) return spectrum;
    Deflation d = deflate_integer_roots(char_poly(laplacian, exec), 0, static_cast<std::int64_t>(laplacian.dim()));
    throw NotIntegral(std::move(spectrum), std::move(d.residual));
}

TreeCounts spanning_tree_counts(const IntegerMatrix& laplacian, const IntegerPolynomial& char_poly,
                                Execution exec)
{
    const std::size_t n = laplacian.dim();
    if (n == 0) throw DimensionMismatch("graph has no vertices");
    TreeCounts counts;
    // char_poly = x * prod(x - lambda_i) over nonzero eigenvalues when connected.
    BigInt c1 = abs(char_poly.coefficient(1));
    BigInt rem;
    mpz_fdiv_qr_ui(counts.from_eigenvalues.get_mpz_t(), rem.get_mpz_t(), c1.get_mpz_t(),
                   static_cast<unsigned long>(n));
    if (rem != 0) throw std::logic_error("product of nonzero Laplacian eigenvalues is not divisible by N");
    counts.from_cofactor = n == 1 ? BigInt(1) : determinant(laplacian.minor(0), exec);
    return counts;
}

TreeCounts spanning_tree_counts(const SimpleGraph& g, Execution exec)
{
    const IntegerMatrix l = laplacian(g);
    return spanning_tree_counts(l, char_poly(l, exec), exec);
}

BigInt spanning_tree_count(const SimpleGraph& g, Execution exec)
{
    TreeCounts counts = spanning_tree_counts(g, exec);
    if (counts.from_eigenvalues != counts.from_cofactor)
        throw std::logic_error("Matrix-Tree routes disagree: " + counts.from_eigenvalues.get_str() +
                               " vs " + counts.from_cofactor.get_str());
    return counts.from_eigenvalues;
}

} // namespace supergraph
