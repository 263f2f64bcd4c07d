// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "supergraph/formulas.hpp"
#include "oracles.hpp"

using namespace supergraph;

namespace {

using Clock = std::chrono::steady_clock;

BigInt pw(long base, long exp)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

struct Expectation {
    SpectrumMultiset spectrum;
    BigInt trees;
};

// Expected values restated from the corollaries, independently of the
// library's prediction tables.
Expectation expected(GraphKind kind, Family f, long n)
{
    const bool odd = n % 2;
    if (kind == GraphKind::CSCom) {
        if (odd)
            return {SpectrumMultiset({{8 * n, 4}, {4 * n + 4, 4 * n - 1}, {4 * n, 4 * n - 5}, {4, 1}, {0, 1}}),
                    pw(2, 8 * n + 1) * pw(n, 4 * n - 2) * pw(4 * n + 4, 4 * n - 1)};
        return {SpectrumMultiset({{8 * n, 2}, {4 * n, 4 * n - 3}, {2 * n + 2, 4 * n - 2}, {2, 2}, {0, 1}}),
                pw(2, 8 * n - 1) * pw(n, 4 * n - 2) * pw(2 * n + 2, 4 * n - 2)};
    }
    switch (f) {
    case Family::Dihedral:
        if (odd)
            return {SpectrumMultiset({{2 * n, 1}, {n + 1, n - 1}, {n, n - 2}, {1, 1}, {0, 1}}),
                    pw(n, n - 2) * pw(n + 1, n - 1)};
        return {SpectrumMultiset({{2 * n, 1}, {n, n - 2}, {n / 2 + 1, n - 2}, {1, 2}, {0, 1}}),
                pw(n, n - 2) * pw(n / 2 + 1, n - 2)};
    case Family::Quaternion:
        if (odd)
            return {SpectrumMultiset({{4 * n, 2}, {2 * n + 2, 2 * n - 1}, {2 * n, 2 * n - 3}, {2, 1}, {0, 1}}),
                    pw(2, 2 * n) * pw(n, 2 * n - 2) * pw(2 * n + 2, 2 * n - 1)};
        return {SpectrumMultiset({{4 * n, 2}, {2 * n, 2 * n - 3}, {n + 2, 2 * n - 2}, {2, 2}, {0, 1}}),
                pw(2, 2 * n + 1) * pw(n, 2 * n - 2) * pw(n + 2, 2 * n - 2)};
    default: {
        const BigInt common = 3 * pw(2, 8 * n - 4) * pw(n, 4 * n - 2) * pw(2 * n + 2, 2 * n - 1);
        if (odd)
            return {SpectrumMultiset({{8 * n, 1}, {6 * n, 1}, {4 * n, 4 * n - 3}, {2 * n + 2, 2 * n - 1},
                                      {n + 1, 2 * n - 2}, {2, 1}, {1, 2}, {0, 1}}),
                    common * pw(n + 1, 2 * n - 2)};
        return {SpectrumMultiset({{8 * n, 1}, {6 * n, 1}, {4 * n, 4 * n - 3}, {2 * n + 2, 2 * n - 1},
                                  {2 * n + 1, 2 * n - 1}, {2, 1}, {1, 1}, {0, 1}}),
                common * pw(2 * n + 1, 2 * n - 1)};
    }
    }
}

struct Sweep {
    GraphKind kind;
    Family family;
    unsigned first, last;
};

const Sweep kSweeps[] = {
    {GraphKind::CSEP, Family::Dihedral, 3, 25},
    {GraphKind::CSEP, Family::Quaternion, 2, 16},
    {GraphKind::CSEP, Family::Semidihedral, 2, 10},
    {GraphKind::CSCom, Family::Semidihedral, 2, 10},
};

struct Outcome {
    Sweep sweep;
    CaseRecord record;
    double seconds = 0;
};

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail)
{
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::string label(const Outcome& o)
{
    return std::string(graph_kind_name(o.sweep.kind)) + "/" + std::string(family_name(o.sweep.family)) + " n=" +
           std::to_string(o.record.n);
}

int cli_status(const std::string& args)
{
    const std::string command = std::string(SUPERGRAPH_CLI) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(command.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

} // namespace

int main()
{
    std::vector<Outcome> outcomes;
    for (const auto& s : kSweeps)
        for (unsigned n = s.first; n <= s.last; ++n) {
            const auto start = Clock::now();
            Outcome o{s, verify_case(s.kind, s.family, n), 0};
            o.seconds = std::chrono::duration<double>(Clock::now() - start).count();
            outcomes.push_back(std::move(o));
        }

    auto spectra_match = [&](std::function<bool(const Sweep&)> pick, double per_case_limit, std::string& detail) {
        bool ok = true;
        double slowest = 0;
        std::size_t cases = 0;
        for (const auto& o : outcomes) {
            if (!pick(o.sweep)) continue;
            ++cases;
            slowest = std::max(slowest, o.seconds);
            if (o.record.computed != expected(o.sweep.kind, o.sweep.family, o.record.n).spectrum) {
                ok = false;
                detail += label(o) + " got " + o.record.computed.compact() + "; ";
            }
            if (o.seconds > per_case_limit) {
                ok = false;
                detail += label(o) + " took " + std::to_string(o.seconds) + " s; ";
            }
        }
        if (ok) detail = std::to_string(cases) + " cases, slowest " + std::to_string(slowest) + " s";
        return ok;
    };

    {
        std::string detail;
        const bool ok = spectra_match([](const Sweep& s) { return s.family == Family::Dihedral; }, 1.0, detail);
        report(1, ok, "CSEP(D_2n) spectra, n = 3..25", detail);
    }
    {
        std::string detail;
        const bool ok = spectra_match([](const Sweep& s) { return s.family == Family::Quaternion; }, 1.0, detail);
        report(2, ok, "CSEP(Q_4n) spectra, n = 2..16", detail);
    }
    {
        std::string detail;
        const bool ok = spectra_match([](const Sweep& s) { return s.family == Family::Semidihedral; }, 60.0, detail);
        report(3, ok, "CSEP(SD_8n) and CSCom(SD_8n) spectra, n = 2..10", detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (const auto& o : outcomes) {
            const BigInt want = expected(o.sweep.kind, o.sweep.family, o.record.n).trees;
            if (o.record.trees_from_eigenvalues != o.record.trees_from_cofactor || o.record.trees_from_cofactor != want) {
                ok = false;
                detail += label(o) + "; ";
            }
        }
        if (ok) detail = std::to_string(outcomes.size()) + " cases, both Matrix-Tree routes";
        report(4, ok, "spanning-tree counts equal the corollary formulas", detail);
    }
    {
        // Exactly the theorem variant of the even CSEP(D_2n) and CSEP(SD_8n)
        // cases may disagree, with degrees 2n+1 and 8n-1.
        bool ok = true;
        std::string detail;
        std::size_t flagged = 0;
        for (const auto& o : outcomes) {
            const auto n = o.record.n;
            const bool d_even = o.sweep.kind == GraphKind::CSEP && o.sweep.family == Family::Dihedral && n % 2 == 0;
            const bool sd_even = o.sweep.kind == GraphKind::CSEP && o.sweep.family == Family::Semidihedral && n % 2 == 0;
            const auto bad = o.record.mismatched_variants();
            if (!d_even && !sd_even) {
                if (!bad.empty()) {
                    ok = false;
                    detail += "unexpected mismatch at " + label(o) + "; ";
                }
                continue;
            }
            const std::int64_t degree = d_even ? 2 * n + 1 : 8 * n - 1;
            if (bad.size() != 1 || bad.front()->prediction.source != PredictionSource::TheoremPolynomial ||
                bad.front()->prediction.stated_degree() != degree || bad.front()->degree_ok) {
                ok = false;
                detail += "wrong flag at " + label(o) + "; ";
            }
            flagged += bad.size();
        }
        const int d_status = cli_status("verify --kind csep --family d2n --range 4..24 --strict");
        const int sd_status = cli_status("verify --kind csep --family sd8n --range 2..10 --strict");
        const int d_lenient = cli_status("verify --kind csep --family d2n --range 3..25");
        const int sd_lenient = cli_status("verify --kind csep --family sd8n --range 2..10");
        if (d_status != 1 || sd_status != 1 || d_lenient != 0 || sd_lenient != 0) {
            ok = false;
            detail += "CLI exit codes strict " + std::to_string(d_status) + "/" + std::to_string(sd_status) +
                      ", lenient " + std::to_string(d_lenient) + "/" + std::to_string(sd_lenient) + "; ";
        }
        if (ok) detail = std::to_string(flagged) + " theorem-variant flags, all in the two known families";
        report(5, ok, "verify --strict isolates the two theorem-polynomial inconsistencies", detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (const auto& o : outcomes)
            if (!o.record.structural_match) {
                ok = false;
                detail += label(o) + "; ";
            }
        report(6, ok, "structure expressions equal the definition build", ok ? std::to_string(outcomes.size()) + " cases" : detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (const auto& o : outcomes)
            if (!o.record.integral || !o.record.laplacian_ok || (o.record.nullity_checked && !o.record.nullity_agrees)) {
                ok = false;
                detail += label(o) + " " + o.record.residual + "; ";
            }
        report(7, ok, "every graph is L-integral", ok ? std::to_string(outcomes.size()) + " cases" : detail);
    }
    {
        bool ok = true;
        std::size_t graphs = 0;
        auto check = [&](const SimpleGraph& g) {
            ++graphs;
            const IntegerMatrix l = laplacian(g);
            const IntegerPolynomial p = char_poly(l);
            const TreeCounts t = spanning_tree_counts(l, p);
            const Deflation d = deflate_integer_roots(p, 0, static_cast<std::int64_t>(g.vertex_count()));
            ok = ok && p == oracle::cofactor_char_poly(l) && t.from_eigenvalues == t.from_cofactor &&
                 t.from_cofactor == oracle::enumerate_spanning_trees(g) && d.roots == nullity_multiplicities(l);
        };
        std::mt19937_64 rng(424242);
        std::uniform_int_distribution<std::size_t> size(1, 10);
        std::uniform_real_distribution<double> density(0.05, 0.95);
        for (int i = 0; i < 200; ++i) check(oracle::random_graph(rng, size(rng), density(rng)));
        for (Family f : {Family::Dihedral, Family::Quaternion, Family::Semidihedral, Family::Cyclic})
            for (unsigned n = family_minimum(f); group_order(f, n) <= 10; ++n) {
                auto g = std::make_shared<const GroupTable>(build_group(f, n));
                for (BaseGraph b : {BaseGraph::Power, BaseGraph::Enhanced, BaseGraph::Commuting})
                    for (Relation r : {Relation::Equality, Relation::Conjugacy, Relation::Order})
                        check(named_super_graph(g, b, r));
            }
        report(8, ok, "char poly, tree count and multiplicities match the oracles", std::to_string(graphs) + " graphs");
    }
    {
        bool ok = true;
        std::size_t groups = 0;
        std::string detail;
        for (Family f : {Family::Dihedral, Family::Quaternion, Family::Semidihedral, Family::Cyclic})
            for (unsigned n = family_minimum(f); group_order(f, n) <= 100; ++n) {
                ++groups;
                auto g = std::make_shared<const GroupTable>(build_group(f, n));
                const bool chain = power_graph(g).is_spanning_subgraph_of(enhanced_power_graph(g)) &&
                                   enhanced_power_graph(g).is_spanning_subgraph_of(commuting_graph(g));
                const bool super = csep_graph(g).is_spanning_subgraph_of(cscom_graph(g));
                if (!chain || !super) {
                    ok = false;
                    detail += std::string(family_name(f)) + " n=" + std::to_string(n) + "; ";
                }
            }
        report(9, ok, "P <= P_E <= Com and CSEP <= CSCom for every group with N <= 100",
               ok ? std::to_string(groups) + " groups" : detail);
    }
    {
        const auto start = Clock::now();
        auto g = std::make_shared<const GroupTable>(build_group(Family::Semidihedral, 50));
        const IntegerMatrix l = laplacian(cscom_graph(g));
        bool ok = false;
        std::string detail;
        try {
            const SpectrumMultiset s = integral_spectrum(l);
            const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
            ok = s == expected(GraphKind::CSCom, Family::Semidihedral, 50).spectrum && seconds < 600;
            detail = "N = 400 in " + std::to_string(seconds) + " s, spectrum " + s.compact();
        } catch (const NotIntegral& e) {
            detail = e.what();
        }
        report(10, ok, "CSCom(SD_400) exact spectrum within 10 minutes", detail);
    }
    return failures == 0 ? 0 : 1;
}
