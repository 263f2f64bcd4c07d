#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "supergraph/formulas.hpp"

namespace supergraph {

using Json = nlohmann::ordered_json;

/// Which super graph to build on a group.
struct GraphSelector {
    BaseGraph base = BaseGraph::Enhanced;
    Relation relation = Relation::Conjugacy;
    bool class_cliques = true;

    static GraphSelector of(GraphKind kind) { return {base_of(kind), Relation::Conjugacy, true}; }
    // "csep", "cscom", or "<base>-<relation>", with "-literal" appended when
    // class cliques are off.
    std::string name() const;
    // The closed-form kind this selector denotes, if any.
    std::optional<GraphKind> kind() const;

    SimpleGraph build(const std::shared_ptr<const GroupTable>& g) const;
};

std::string group_text(const GroupTable& g);
Json group_json(const GroupTable& g);

struct SpectrumArtifact {
    std::string family;
    unsigned n = 0;
    std::string graph;
    std::size_t order = 0;
    std::size_t edges = 0;
    SpectrumMultiset spectrum;           // integer eigenvalues found
    std::string char_poly_factored;
    BigInt trees;
    bool integral = true;
    std::string residual;                // empty when integral

    bool operator==(const SpectrumArtifact&) const = default;
};

SpectrumArtifact spectrum_artifact(Family family, unsigned n, const GraphSelector& selector,
                                   Execution exec = Execution::Parallel);
Json to_json(const SpectrumArtifact& a);
SpectrumArtifact spectrum_from_json(const Json& j);

Json to_json(const VerificationReport& r);
std::string verification_table(const VerificationReport& r);

std::string csv_header();
// One row per case.
std::string csv_rows(const VerificationReport& r);

std::string export_dot(const SimpleGraph& g, const std::string& name = "G");
std::string export_edgelist(const SimpleGraph& g);
Json export_json(const SimpleGraph& g);

} // namespace supergraph
