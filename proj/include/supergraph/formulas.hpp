#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supergraph/compose.hpp"
#include "supergraph/spectral.hpp"

namespace supergraph {

/// Where a closed-form spectrum comes from. The characteristic-polynomial
/// theorems and the spectrum corollaries are stored separately because two
/// of them disagree.
enum class PredictionSource { TheoremPolynomial, CorollarySpectrum };

std::string_view source_name(PredictionSource s);   // "theorem-polynomial", "corollary-spectrum"

struct Prediction {
    GraphKind kind = GraphKind::CSEP;
    Family family = Family::Dihedral;
    unsigned n = 0;
    PredictionSource source = PredictionSource::CorollarySpectrum;
    // Factor exponents exactly as stated, before merging coincident values.
    std::vector<Eigenpair> stated;
    // Merged multiset.
    SpectrumMultiset spectrum;

    std::int64_t stated_degree() const;
    std::string parity() const { return n % 2 ? "odd" : "even"; }
};

/// Closed-form spectra for (kind, family) at n, theorem variant first.
std::vector<Prediction> predicted_spectrum(GraphKind kind, Family family, unsigned n);

/// Spanning-tree corollary evaluated exactly at n.
BigInt predicted_tree_count(GraphKind kind, Family family, unsigned n);

struct VariantCheck {
    Prediction prediction;
    bool degree_ok = false;      // multiplicities sum to N
    bool trace_ok = false;       // weighted sum equals 2|E|
    bool spectrum_match = false;
};

struct CaseRecord {
    GraphKind kind = GraphKind::CSEP;
    Family family = Family::Dihedral;
    unsigned n = 0;
    std::size_t order = 0;
    std::size_t edges = 0;

    bool structural_match = false;   // structure theorem build == definition build
    bool laplacian_ok = false;
    SpectrumMultiset computed;
    bool integral = false;
    std::string residual;            // nonconstant factor when not integral
    bool nullity_checked = false;
    bool nullity_agrees = false;

    std::vector<VariantCheck> variants;

    BigInt trees_from_eigenvalues;
    BigInt trees_from_cofactor;
    BigInt predicted_trees;
    bool tree_match = false;

    std::vector<std::string> notes;

    // Every internal check passed and some prediction variant reproduces
    // the computed spectrum.
    bool adjudicated_match() const;
    // Variants whose spectrum differs from the computed one.
    std::vector<const VariantCheck*> mismatched_variants() const;
};

struct VerificationReport {
    GraphKind kind = GraphKind::CSEP;
    Family family = Family::Dihedral;
    unsigned first = 0;
    unsigned last = 0;
    std::vector<CaseRecord> cases;

    bool all_adjudicated() const;
    std::size_t discrepancy_count() const;
};

struct VerifyOptions {
    // Recompute multiplicities as nullity(L - tI) for graphs up to this order.
    std::size_t nullity_limit = 200;
    Execution exec = Execution::Parallel;
};

CaseRecord verify_case(GraphKind kind, Family family, unsigned n, const VerifyOptions& options = {});

/// Builds, computes and compares every n in [first, last]. Mismatches are
/// recorded in the report, never reconciled.
VerificationReport verify(GraphKind kind, Family family, unsigned first, unsigned last,
                          const VerifyOptions& options = {});

} // namespace supergraph
