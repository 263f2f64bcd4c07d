#include "supergraph/formulas.hpp"

#include <memory>

namespace supergraph {

std::string_view source_name(PredictionSource s)
{
    return s == PredictionSource::TheoremPolynomial ? "theorem-polynomial" : "corollary-spectrum";
}

std::int64_t Prediction::stated_degree() const
{
    std::int64_t d = 0;
    for (const auto& t : stated) d += t.multiplicity;
    return d;
}

namespace {

using Terms = std::vector<Eigenpair>;

struct ClosedForm {
    Terms theorem;
    Terms corollary;
};

void require_supported(GraphKind kind, Family family, unsigned n)
{
    if (!has_closed_form(kind, family))
        throw UnsupportedCombination("no closed form for " + std::string(graph_kind_name(kind)) + " on " +
                                     std::string(family_name(family)));
    if (n < family_minimum(family))
        throw ParameterOutOfRange("n = " + std::to_string(n) + " is below the minimum for " +
                                  std::string(family_name(family)));
}

// Each list is written factor by factor in the order the closed form states it.
ClosedForm closed_form(GraphKind kind, Family family, unsigned n_)
{
    const std::int64_t n = n_;
    const bool odd = n % 2 == 1;
    if (kind == GraphKind::CSCom) {
        if (odd)
            return {{{0, 1}, {4, 1}, {4 * n, 4 * n - 5}, {4 * n + 4, 4 * n - 1}, {8 * n, 4}},
                    {{0, 1}, {4, 1}, {4 * n, 4 * n - 5}, {4 * n + 4, 4 * n - 1}, {8 * n, 4}}};
        return {{{0, 1}, {2, 2}, {2 * n + 2, 4 * n - 2}, {4 * n, 4 * n - 3}, {8 * n, 2}},
                {{0, 1}, {2, 2}, {2 * n + 2, 4 * n - 2}, {4 * n, 4 * n - 3}, {8 * n, 2}}};
    }
    switch (family) {
    case Family::Dihedral:
        if (odd)
            return {{{0, 1}, {1, 1}, {n + 1, n - 1}, {2 * n, 1}, {n, n - 2}},
                    {{0, 1}, {1, 1}, {n, n - 2}, {n + 1, n - 1}, {2 * n, 1}}};
        return {{{0, 1}, {1, 2}, {n / 2 + 1, n - 1}, {2 * n, 1}, {n, n - 2}},
                {{0, 1}, {1, 2}, {n / 2 + 1, n - 2}, {n, n - 2}, {2 * n, 1}}};
    case Family::Quaternion:
        if (odd)
            return {{{0, 1}, {2, 1}, {2 * n + 2, 2 * n - 1}, {4 * n, 2}, {2 * n, 2 * n - 3}},
                    {{0, 1}, {2, 1}, {2 * n, 2 * n - 3}, {2 * n + 2, 2 * n - 1}, {4 * n, 2}}};
        return {{{0, 1}, {2, 2}, {n + 2, 2 * n - 2}, {4 * n, 2}, {2 * n, 2 * n - 3}},
                {{0, 1}, {2, 2}, {n + 2, 2 * n - 2}, {2 * n, 2 * n - 3}, {4 * n, 2}}};
    case Family::Semidihedral:
        if (odd)
            return {{{0, 1}, {8 * n, 1}, {6 * n, 1}, {2, 1}, {4 * n, 4 * n - 3}, {1, 2}, {n + 1, 2 * n - 2},
                     {2 * n + 2, 2 * n - 1}},
                    {{0, 1}, {1, 2}, {2, 1}, {n + 1, 2 * n - 2}, {2 * n + 2, 2 * n - 1}, {4 * n, 4 * n - 3},
                     {6 * n, 1}, {8 * n, 1}}};
        return {{{0, 1}, {1, 1}, {2, 1}, {2 * n + 1, 2 * n - 1}, {2 * n + 2, 2 * n - 2}, {4 * n, 4 * n - 3},
                 {6 * n, 1}, {8 * n, 1}},
                {{0, 1}, {1, 1}, {2, 1}, {2 * n + 1, 2 * n - 1}, {2 * n + 2, 2 * n - 1}, {4 * n, 4 * n - 3},
                 {6 * n, 1}, {8 * n, 1}}};
    case Family::Cyclic: break;
    }
    throw UnsupportedCombination("no closed form for cyclic groups");
}

BigInt pw(std::int64_t base, std::int64_t exp)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

} // namespace

std::vector<Prediction> predicted_spectrum(GraphKind kind, Family family, unsigned n)
{
    require_supported(kind, family, n);
    const ClosedForm form = closed_form(kind, family, n);
    std::vector<Prediction> out;
    for (auto [source, terms] : {std::pair{PredictionSource::TheoremPolynomial, &form.theorem},
                                 std::pair{PredictionSource::CorollarySpectrum, &form.corollary}}) {
        for (const auto& t : *terms)
            if (t.multiplicity < 0)
                throw ParameterOutOfRange("closed form has a negative multiplicity at n = " + std::to_string(n));
        Prediction p;
        p.kind = kind;
        p.family = family;
        p.n = n;
        p.source = source;
        p.stated = *terms;
        p.spectrum = SpectrumMultiset(*terms);
        out.push_back(std::move(p));
    }
    return out;
}

BigInt predicted_tree_count(GraphKind kind, Family family, unsigned n_)
{
    require_supported(kind, family, n_);
    const std::int64_t n = n_;
    const bool odd = n % 2 == 1;
    if (kind == GraphKind::CSCom) {
        if (odd) return pw(2, 8 * n + 1) * pw(n, 4 * n - 2) * pw(4 * n + 4, 4 * n - 1);
        return pw(2, 8 * n - 1) * pw(n, 4 * n - 2) * pw(2 * n + 2, 4 * n - 2);
    }
    switch (family) {
    case Family::Dihedral:
        if (odd) return pw(n, n - 2) * pw(n + 1, n - 1);
        return pw(n, n - 2) * pw(n / 2 + 1, n - 2);
    case Family::Quaternion:
        if (odd) return pw(2, 2 * n) * pw(n, 2 * n - 2) * pw(2 * n + 2, 2 * n - 1);
        return pw(2, 2 * n + 1) * pw(n, 2 * n - 2) * pw(n + 2, 2 * n - 2);
    case Family::Semidihedral: {
        const BigInt common = 3 * pw(2, 8 * n - 4) * pw(n, 4 * n - 2) * pw(2 * n + 2, 2 * n - 1);
        if (odd) return common * pw(n + 1, 2 * n - 2);
        return common * pw(2 * n + 1, 2 * n - 1);
    }
    case Family::Cyclic: break;
    }
    throw UnsupportedCombination("no closed form for cyclic groups");
}

bool CaseRecord::adjudicated_match() const
{
    if (!structural_match || !laplacian_ok || !integral || !tree_match) return false;
    if (nullity_checked && !nullity_agrees) return false;
    for (const auto& v : variants)
        if (v.spectrum_match) return true;
    return false;
}

std::vector<const VariantCheck*> CaseRecord::mismatched_variants() const
{
    std::vector<const VariantCheck*> out;
    for (const auto& v : variants)
        if (!v.spectrum_match) out.push_back(&v);
    return out;
}

bool VerificationReport::all_adjudicated() const
{
    for (const auto& c : cases)
        if (!c.adjudicated_match()) return false;
    return true;
}

std::size_t VerificationReport::discrepancy_count() const
{
    std::size_t total = 0;
    for (const auto& c : cases) total += c.mismatched_variants().size();
    return total;
}

namespace {

void describe_mismatch(CaseRecord& rec, const VariantCheck& v)
{
    const std::string tag(source_name(v.prediction.source));
    if (!v.degree_ok)
        rec.notes.push_back(tag + ": stated multiplicities sum to " + std::to_string(v.prediction.stated_degree()) +
                            ", expected N = " + std::to_string(rec.order));
    if (!v.trace_ok)
        rec.notes.push_back(tag + ": weighted eigenvalue sum " + v.prediction.spectrum.weighted_sum().get_str() +
                            " differs from 2|E| = " + std::to_string(2 * rec.edges));
    std::vector<std::int64_t> values;
    for (const auto& p : v.prediction.spectrum.pairs()) values.push_back(p.value);
    for (const auto& p : rec.computed.pairs()) values.push_back(p.value);
    std::sort(values.begin(), values.end(), std::greater<>());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::int64_t value : values) {
        const auto predicted = v.prediction.spectrum.multiplicity_of(value);
        const auto computed = rec.computed.multiplicity_of(value);
        if (predicted != computed)
            rec.notes.push_back(tag + ": eigenvalue " + std::to_string(value) + " predicted multiplicity " +
                                std::to_string(predicted) + ", computed " + std::to_string(computed));
    }
}

} // namespace

CaseRecord verify_case(GraphKind kind, Family family, unsigned n, const VerifyOptions& options)
{
    require_supported(kind, family, n);
    CaseRecord rec;
    rec.kind = kind;
    rec.family = family;
    rec.n = n;

    auto group = std::make_shared<const GroupTable>(build_group(family, n));
    const SimpleGraph graph = named_super_graph(group, base_of(kind), Relation::Conjugacy);
    rec.order = graph.vertex_count();
    rec.edges = graph.edge_count();
    rec.structural_match = graph == structural_graph(kind, family, n);
    if (!rec.structural_match) rec.notes.push_back("structure theorem build differs from the definition build");

    const IntegerMatrix lap = laplacian(graph);
    rec.laplacian_ok = lap.is_laplacian() && lap.trace() == static_cast<unsigned long>(2 * rec.edges);
    const IntegerPolynomial poly = char_poly(lap, options.exec);

    try {
        rec.computed = integral_spectrum_from_poly(poly);
        rec.integral = true;
    } catch (const NotIntegral& e) {
        rec.computed = e.integer_part();
        rec.residual = e.residual().to_string();
        rec.notes.push_back("not L-integral, residual factor " + rec.residual);
    }
    if (rec.integral) {
        const bool sums_ok = rec.computed.total_multiplicity() == static_cast<std::int64_t>(rec.order) &&
                             rec.computed.weighted_sum() == static_cast<unsigned long>(2 * rec.edges) &&
                             rec.computed.multiplicity_of(0) == static_cast<std::int64_t>(graph.component_count());
        if (!sums_ok) {
            rec.laplacian_ok = false;
            rec.notes.push_back("computed spectrum violates the trace / multiplicity identities");
        }
    }

    if (rec.order <= options.nullity_limit) {
        rec.nullity_checked = true;
        rec.nullity_agrees = rec.integral;
        for (const auto& p : rec.computed.pairs())
            if (nullity(lap.shifted(static_cast<long>(p.value))) != static_cast<std::size_t>(p.multiplicity)) {
                rec.nullity_agrees = false;
                rec.notes.push_back("nullity of L - " + std::to_string(p.value) + "I disagrees with deflation");
            }
    }

    const TreeCounts trees = spanning_tree_counts(lap, poly, options.exec);
    rec.trees_from_eigenvalues = trees.from_eigenvalues;
    rec.trees_from_cofactor = trees.from_cofactor;
    rec.predicted_trees = predicted_tree_count(kind, family, n);
    rec.tree_match = trees.from_eigenvalues == trees.from_cofactor && trees.from_eigenvalues == rec.predicted_trees;
    if (trees.from_eigenvalues != trees.from_cofactor)
        rec.notes.push_back("eigenvalue-product and cofactor tree counts disagree");
    else if (!rec.tree_match)
        rec.notes.push_back("spanning-tree count " + trees.from_eigenvalues.get_str() + " differs from predicted " +
                            rec.predicted_trees.get_str());

    for (auto& prediction : predicted_spectrum(kind, family, n)) {
        VariantCheck v;
        v.degree_ok = prediction.stated_degree() == static_cast<std::int64_t>(rec.order);
        v.trace_ok = prediction.spectrum.weighted_sum() == static_cast<unsigned long>(2 * rec.edges);
        v.spectrum_match = prediction.spectrum == rec.computed;
        v.prediction = std::move(prediction);
        if (!v.spectrum_match) describe_mismatch(rec, v);
        rec.variants.push_back(std::move(v));
    }
    return rec;
}

VerificationReport verify(GraphKind kind, Family family, unsigned first, unsigned last,
                          const VerifyOptions& options)
{
    require_supported(kind, family, first);
    VerificationReport report;
    report.kind = kind;
    report.family = family;
    report.first = first;
    report.last = last;
    if (last < first) return report;
    report.cases.resize(last - first + 1);

    VerifyOptions inner = options;
    inner.exec = Execution::Serial;
    const auto count = static_cast<std::int64_t>(report.cases.size());
    // Larger n last in the list but first in the schedule.
#pragma omp parallel for schedule(dynamic, 1) if (options.exec == Execution::Parallel && count > 1)
    for (std::int64_t i = count - 1; i >= 0; --i)
        report.cases[i] = verify_case(kind, family, first + static_cast<unsigned>(i), count > 1 ? inner : options);
    return report;
}

} // namespace supergraph
