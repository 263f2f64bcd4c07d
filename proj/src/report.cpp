#include "supergraph/report.hpp"

#include <sstream>
#include <stdexcept>

namespace supergraph {

std::string GraphSelector::name() const
{
    std::string out;
    if (auto k = kind())
        out = graph_kind_name(*k);
    else
        out = std::string(base_graph_name(base)) + "-" + std::string(relation_name(relation));
    if (!class_cliques) out += "-literal";
    return out;
}

std::optional<GraphKind> GraphSelector::kind() const
{
    if (relation != Relation::Conjugacy) return std::nullopt;
    if (base == BaseGraph::Enhanced) return GraphKind::CSEP;
    if (base == BaseGraph::Commuting) return GraphKind::CSCom;
    return std::nullopt;
}

SimpleGraph GraphSelector::build(const std::shared_ptr<const GroupTable>& g) const
{
    return named_super_graph(g, base, relation, class_cliques);
}

namespace {

Json labelled_sets(const GroupTable& g, const std::vector<ElementSet>& sets)
{
    Json out = Json::array();
    for (const auto& s : sets) {
        Json labels = Json::array();
        for (Element x : s) labels.push_back(g.label(x));
        out.push_back(labels);
    }
    return out;
}

std::string describe(const GroupTable& g)
{
    return std::string(family_name(g.family())) + " n=" + std::to_string(g.parameter());
}

} // namespace

std::string group_text(const GroupTable& g)
{
    std::ostringstream out;
    out << "group " << describe(g) << "\n";
    out << "order " << g.order() << "\n";
    out << "center " << format_set(g, center(g)) << "\n";
    const Partition classes = conjugacy_classes(g);
    out << "conjugacy classes (" << classes.block_count() << ")\n";
    for (const auto& b : classes.blocks())
        out << "  " << format_set(g, b) << "  size " << b.size() << ", order " << element_order(g, b.front())
            << "\n";
    const auto maximal = maximal_cyclic_subgroups(g);
    out << "maximal cyclic subgroups (" << maximal.size() << ")\n";
    for (const auto& m : maximal) out << "  " << format_set(g, m) << "  order " << m.size() << "\n";
    return out.str();
}

Json group_json(const GroupTable& g)
{
    Json j;
    j["family"] = family_name(g.family());
    j["n"] = g.parameter();
    j["order"] = g.order();
    j["labels"] = Json(std::vector<std::string>(g.labels().begin(), g.labels().end()));
    j["center"] = labelled_sets(g, {center(g)}).front();
    j["conjugacy_classes"] = labelled_sets(g, conjugacy_classes(g).blocks());
    j["maximal_cyclic_subgroups"] = labelled_sets(g, maximal_cyclic_subgroups(g));
    return j;
}

SpectrumArtifact spectrum_artifact(Family family, unsigned n, const GraphSelector& selector, Execution exec)
{
    auto group = std::make_shared<const GroupTable>(build_group(family, n));
    const SimpleGraph graph = selector.build(group);
    const IntegerMatrix lap = laplacian(graph);
    const IntegerPolynomial poly = char_poly(lap, exec);

    SpectrumArtifact a;
    a.family = family_name(family);
    a.n = n;
    a.graph = selector.name();
    a.order = graph.vertex_count();
    a.edges = graph.edge_count();
    try {
        a.spectrum = integral_spectrum_from_poly(poly);
        a.char_poly_factored = a.spectrum.factored();
    } catch (const NotIntegral& e) {
        a.integral = false;
        a.spectrum = e.integer_part();
        a.residual = e.residual().to_string();
        a.char_poly_factored = a.spectrum.factored();
        if (!a.char_poly_factored.empty()) a.char_poly_factored += '*';
        a.char_poly_factored += "(" + a.residual + ")";
    }
    const TreeCounts trees = spanning_tree_counts(lap, poly, exec);
    if (trees.from_eigenvalues != trees.from_cofactor)
        throw std::logic_error("Matrix-Tree routes disagree for " + a.graph);
    a.trees = trees.from_eigenvalues;
    return a;
}

namespace {

Json spectrum_pairs(const SpectrumMultiset& s)
{
    Json out = Json::array();
    for (const auto& p : s.pairs()) out.push_back({p.value, p.multiplicity});
    return out;
}

} // namespace

Json to_json(const SpectrumArtifact& a)
{
    Json j;
    j["family"] = a.family;
    j["n"] = a.n;
    j["graph"] = a.graph;
    j["order"] = a.order;
    j["edges"] = a.edges;
    j["spectrum"] = spectrum_pairs(a.spectrum);
    j["char_poly_factored"] = a.char_poly_factored;
    j["trees"] = a.trees.get_str();
    j["integral"] = a.integral;
    if (!a.integral) j["residual"] = a.residual;
    return j;
}

SpectrumArtifact spectrum_from_json(const Json& j)
{
    SpectrumArtifact a;
    a.family = j.at("family").get<std::string>();
    a.n = j.at("n").get<unsigned>();
    a.graph = j.at("graph").get<std::string>();
    a.order = j.at("order").get<std::size_t>();
    a.edges = j.at("edges").get<std::size_t>();
    std::vector<Eigenpair> pairs;
    for (const auto& p : j.at("spectrum")) pairs.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
    a.spectrum = SpectrumMultiset(std::move(pairs));
    a.char_poly_factored = j.at("char_poly_factored").get<std::string>();
    a.trees = BigInt(j.at("trees").get<std::string>());
    a.integral = j.value("integral", true);
    a.residual = j.value("residual", std::string());
    return a;
}

Json to_json(const VerificationReport& r)
{
    Json j;
    j["kind"] = graph_kind_name(r.kind);
    j["family"] = family_name(r.family);
    j["range"] = {r.first, r.last};
    j["all_adjudicated"] = r.all_adjudicated();
    j["discrepancies"] = r.discrepancy_count();
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        Json cj;
        cj["n"] = c.n;
        cj["parity"] = c.n % 2 ? "odd" : "even";
        cj["order"] = c.order;
        cj["edges"] = c.edges;
        cj["structural_match"] = c.structural_match;
        cj["laplacian_ok"] = c.laplacian_ok;
        cj["integral"] = c.integral;
        if (!c.integral) cj["residual"] = c.residual;
        cj["computed"] = spectrum_pairs(c.computed);
        if (c.nullity_checked) cj["nullity_agrees"] = c.nullity_agrees;
        Json variants = Json::array();
        for (const auto& v : c.variants) {
            Json vj;
            vj["source"] = source_name(v.prediction.source);
            vj["stated_degree"] = v.prediction.stated_degree();
            vj["spectrum"] = spectrum_pairs(v.prediction.spectrum);
            vj["degree_ok"] = v.degree_ok;
            vj["trace_ok"] = v.trace_ok;
            vj["spectrum_match"] = v.spectrum_match;
            variants.push_back(vj);
        }
        cj["variants"] = variants;
        cj["trees"] = c.trees_from_eigenvalues.get_str();
        cj["trees_cofactor"] = c.trees_from_cofactor.get_str();
        cj["trees_predicted"] = c.predicted_trees.get_str();
        cj["tree_match"] = c.tree_match;
        cj["adjudicated_match"] = c.adjudicated_match();
        cj["notes"] = c.notes;
        cases.push_back(cj);
    }
    j["cases"] = cases;
    return j;
}

std::string verification_table(const VerificationReport& r)
{
    std::ostringstream out;
    out << graph_kind_name(r.kind) << " on " << family_name(r.family) << ", n = " << r.first << ".." << r.last
        << "\n";
    out << "   n      N    |E|  struct  integral  theorem  corollary  trees  verdict\n";
    auto mark = [](bool b) { return b ? "yes" : "NO"; };
    for (const auto& c : r.cases) {
        char line[160];
        std::snprintf(line, sizeof line, "%4u %6zu %6zu  %-6s  %-8s  %-7s  %-9s  %-5s  %s\n", c.n, c.order,
                      c.edges, mark(c.structural_match), mark(c.integral),
                      c.variants.size() > 0 ? mark(c.variants[0].spectrum_match) : "-",
                      c.variants.size() > 1 ? mark(c.variants[1].spectrum_match) : "-", mark(c.tree_match),
                      c.adjudicated_match() ? "match" : "FAIL");
        out << line;
        for (const auto& note : c.notes) out << "       " << note << "\n";
    }
    out << (r.all_adjudicated() ? "all cases adjudicated" : "some cases failed") << ", "
        << r.discrepancy_count() << " prediction variant mismatch(es)\n";
    return out.str();
}

std::string csv_header()
{
    return "family,kind,n,order,edges,spectrum,trees,structural_match,theorem_match,corollary_match,tree_match\n";
}

std::string csv_rows(const VerificationReport& r)
{
    std::ostringstream out;
    auto flag = [](bool b) { return b ? "1" : "0"; };
    for (const auto& c : r.cases) {
        bool theorem = false, corollary = false;
        for (const auto& v : c.variants)
            (v.prediction.source == PredictionSource::TheoremPolynomial ? theorem : corollary) = v.spectrum_match;
        out << family_name(c.family) << ',' << graph_kind_name(c.kind) << ',' << c.n << ',' << c.order << ','
            << c.edges << ',' << c.computed.compact() << ',' << c.trees_from_eigenvalues.get_str() << ','
            << flag(c.structural_match) << ',' << flag(theorem) << ',' << flag(corollary) << ','
            << flag(c.tree_match) << '\n';
    }
    return out.str();
}

std::string export_dot(const SimpleGraph& g, const std::string& name)
{
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << " [label=\"" << g.vertex_label(v) << "\"];\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_edgelist(const SimpleGraph& g)
{
    std::ostringstream out;
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Json export_json(const SimpleGraph& g)
{
    Json j;
    j["order"] = g.vertex_count();
    j["edges"] = g.edge_count();
    Json labels = Json::array();
    Json adjacency = Json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        labels.push_back(g.vertex_label(v));
        adjacency.push_back(g.neighbors(v));
    }
    j["labels"] = labels;
    j["adjacency"] = adjacency;
    return j;
}

} // namespace supergraph
