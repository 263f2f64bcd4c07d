#include <doctest.h>

#include <sstream>

#include "supergraph/report.hpp"

using namespace supergraph;

namespace {

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::shared_ptr<const GroupTable> group(Family f, unsigned n)
{
    return std::make_shared<const GroupTable>(build_group(f, n));
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("selector names")
{
    CHECK(GraphSelector::of(GraphKind::CSEP).name() == "csep");
    CHECK(GraphSelector::of(GraphKind::CSCom).name() == "cscom");
    CHECK(GraphSelector{BaseGraph::Power, Relation::Order, true}.name() == "power-order");
    CHECK(GraphSelector{BaseGraph::Enhanced, Relation::Conjugacy, false}.name() == "csep-literal");
    CHECK_FALSE(GraphSelector{BaseGraph::Power, Relation::Conjugacy, true}.kind().has_value());
}

TEST_CASE("group reports")
{
    const GroupTable d6 = build_group(Family::Dihedral, 3);
    const std::string text = group_text(d6);
    CHECK(text.find("conjugacy classes (3)") != std::string::npos);
    CHECK(text.find("{b, a*b, a^2*b}") != std::string::npos);

    const Json q8 = group_json(build_group(Family::Quaternion, 2));
    CHECK(q8["center"] == Json({"e", "a^2"}));
    CHECK(q8["conjugacy_classes"].size() == 5);
    CHECK(q8["maximal_cyclic_subgroups"].size() == 3);

    const Json trivial = group_json(build_group(Family::Cyclic, 1));
    CHECK(trivial["order"] == 1);
    CHECK(trivial["labels"] == Json({"e"}));
}

TEST_CASE("spectrum artifacts")
{
    const SpectrumArtifact d10 = spectrum_artifact(Family::Dihedral, 5, GraphSelector::of(GraphKind::CSEP));
    const Json j = to_json(d10);
    CHECK(j["spectrum"] == Json::parse("[[10,1],[6,4],[5,3],[1,1],[0,1]]"));
    CHECK(j["trees"] == "162000");
    CHECK(j["char_poly_factored"] == "(x-10)*(x-6)^4*(x-5)^3*(x-1)*x");
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"family", "n", "graph", "order", "edges", "spectrum",
                                           "char_poly_factored", "trees", "integral"});

    const SpectrumArtifact k4 =
        spectrum_artifact(Family::Cyclic, 4, GraphSelector{BaseGraph::Power, Relation::Equality, true});
    CHECK(to_json(k4)["spectrum"] == Json::parse("[[4,3],[0,1]]"));

    const SpectrumArtifact sd16 = spectrum_artifact(Family::Semidihedral, 2, GraphSelector::of(GraphKind::CSCom));
    CHECK(to_json(sd16)["trees"] == "97844723712");
}

TEST_CASE("spectrum JSON round trips")
{
    for (auto [f, n] : {std::pair{Family::Dihedral, 4u}, {Family::Quaternion, 3u}, {Family::Semidihedral, 3u}}) {
        for (auto sel : {GraphSelector::of(GraphKind::CSEP), GraphSelector{BaseGraph::Power, Relation::Order, false}}) {
            const SpectrumArtifact a = spectrum_artifact(f, n, sel);
            const std::string text = to_json(a).dump();
            CHECK(spectrum_from_json(Json::parse(text)) == a);
            CHECK(to_json(spectrum_from_json(Json::parse(text))).dump() == text);
        }
    }
}

TEST_CASE("non-integral artifacts carry the residual")
{
    // The literal power graph on Q_12 is not L-integral.
    bool found = false;
    for (auto [f, n] : {std::pair{Family::Quaternion, 3u}, {Family::Dihedral, 5u}, {Family::Semidihedral, 2u}})
        for (BaseGraph b : {BaseGraph::Power, BaseGraph::Enhanced, BaseGraph::Commuting})
            for (Relation r : {Relation::Equality, Relation::Order}) {
                const SpectrumArtifact a = spectrum_artifact(f, n, GraphSelector{b, r, false});
                if (a.integral) continue;
                found = true;
                CHECK_FALSE(a.residual.empty());
                CHECK(a.char_poly_factored.find("(" + a.residual + ")") != std::string::npos);
                CHECK(a.spectrum.total_multiplicity() < static_cast<std::int64_t>(a.order));
                CHECK(spectrum_from_json(to_json(a)) == a);
            }
    CHECK(found);
}

TEST_CASE("verification serialisation")
{
    const VerificationReport r = verify(GraphKind::CSEP, Family::Dihedral, 3, 6);
    const Json j = to_json(r);
    CHECK(j["cases"].size() == 4);
    CHECK(j["all_adjudicated"] == true);
    CHECK(j["discrepancies"] == 2);
    CHECK(j["cases"][1]["variants"][0]["stated_degree"] == 9);
    CHECK(j.dump() == to_json(verify(GraphKind::CSEP, Family::Dihedral, 3, 6)).dump());

    const std::string table = verification_table(r);
    CHECK(table.find("all cases adjudicated") != std::string::npos);

    const std::string rows = csv_rows(r);
    CHECK(count_lines(rows) == 4);
    CHECK(rows.rfind("d2n,csep,3,6,9,6^1 4^2 3^1 1^1 0^1,48,1,1,1,1\n", 0) == 0);
    CHECK(csv_header().rfind("family,kind,n,order,edges,spectrum,trees", 0) == 0);
}

TEST_CASE("graph exports")
{
    const SimpleGraph d6 = csep_graph(group(Family::Dihedral, 3));
    const std::string dot = export_dot(d6, "d6");
    CHECK(dot.find("label=\"a^2*b\"") != std::string::npos);
    CHECK(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '-')) == 2 * 9);

    const SimpleGraph trivial = power_graph(group(Family::Cyclic, 1));
    CHECK(export_edgelist(trivial).empty());
    CHECK(export_dot(trivial).find("0 [label=\"e\"]") != std::string::npos);

    const SimpleGraph q8 = csep_graph(group(Family::Quaternion, 2));
    const std::string edges = export_edgelist(q8);
    CHECK(count_lines(edges) == 16);
    std::istringstream in(edges);
    Vertex u, v;
    std::size_t seen = 0;
    while (in >> u >> v) {
        CHECK(u < v);
        CHECK(q8.adjacent(u, v));
        ++seen;
    }
    CHECK(seen == 16);

    const Json j = export_json(q8);
    CHECK(j["labels"][2] == "a^2");
    CHECK(j["adjacency"][0].size() == 7);
}

}
