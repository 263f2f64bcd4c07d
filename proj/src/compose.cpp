#include "supergraph/compose.hpp"

#include <functional>

#include "supergraph/errors.hpp"

namespace supergraph {

SimpleGraph complete(std::size_t n)
{
    SimpleGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph edgeless(std::size_t n) { return SimpleGraph(n); }

SimpleGraph graph_union(const SimpleGraph& lhs, const SimpleGraph& rhs)
{
    const auto shift = static_cast<Vertex>(lhs.vertex_count());
    SimpleGraph g(lhs.vertex_count() + rhs.vertex_count());
    for (auto [u, v] : lhs.edges()) g.add_edge(u, v);
    for (auto [u, v] : rhs.edges()) g.add_edge(u + shift, v + shift);
    return g;
}

SimpleGraph join(const SimpleGraph& lhs, const SimpleGraph& rhs)
{
    SimpleGraph g = graph_union(lhs, rhs);
    const auto shift = static_cast<Vertex>(lhs.vertex_count());
    for (Vertex u = 0; u < lhs.vertex_count(); ++u)
        for (Vertex v = 0; v < rhs.vertex_count(); ++v) g.add_edge(u, v + shift);
    return g;
}

std::vector<std::size_t> CompositionSpec::part_offsets() const
{
    std::vector<std::size_t> offsets;
    offsets.reserve(parts.size() + 1);
    std::size_t total = 0;
    for (const auto& p : parts) {
        offsets.push_back(total);
        total += p.vertex_count();
    }
    offsets.push_back(total);
    return offsets;
}

std::size_t CompositionSpec::composed_order() const { return part_offsets().back(); }

SimpleGraph compose(const CompositionSpec& spec)
{
    if (spec.parts.empty()) throw ArityMismatch("composition needs at least one part");
    if (spec.parts.size() != spec.outer.vertex_count())
        throw ArityMismatch("outer graph has " + std::to_string(spec.outer.vertex_count()) +
                            " vertices but " + std::to_string(spec.parts.size()) +
                            " parts were given");
    for (const auto& p : spec.parts)
        if (p.vertex_count() == 0) throw ArityMismatch("composition part has no vertices");

    const auto offsets = spec.part_offsets();
    SimpleGraph g(offsets.back());
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        const auto base = static_cast<Vertex>(offsets[i]);
        for (auto [u, v] : spec.parts[i].edges()) g.add_edge(base + u, base + v);
    }
    for (auto [i, j] : spec.outer.edges())
        for (std::size_t p = offsets[i]; p < offsets[i + 1]; ++p)
            for (std::size_t q = offsets[j]; q < offsets[j + 1]; ++q)
                g.add_edge(static_cast<Vertex>(p), static_cast<Vertex>(q));
    return g;
}

std::string_view graph_kind_name(GraphKind k) { return k == GraphKind::CSEP ? "csep" : "cscom"; }

GraphKind parse_graph_kind(std::string_view s)
{
    if (s == "csep") return GraphKind::CSEP;
    if (s == "cscom") return GraphKind::CSCom;
    throw ParameterOutOfRange("unknown graph kind '" + std::string(s) + "'");
}

BaseGraph base_of(GraphKind k) { return k == GraphKind::CSEP ? BaseGraph::Enhanced : BaseGraph::Commuting; }

bool has_closed_form(GraphKind kind, Family family)
{
    if (family == Family::Cyclic) return false;
    return kind == GraphKind::CSEP || family == Family::Semidihedral;
}

namespace {

// Accumulates the parts of a composition together with their elements.
class PartList {
public:
    void clique(std::vector<Vertex> elements)
    {
        parts_.push_back(complete(elements.size()));
        elements_.insert(elements_.end(), elements.begin(), elements.end());
    }

    // One K_2 (or K_1 for a self-paired exponent) per rotation class, in
    // increasing exponent order, skipping the listed exponents.
    void rotation_classes(unsigned k, const std::function<unsigned(unsigned)>& partner,
                          const std::vector<unsigned>& skip)
    {
        std::vector<char> used(k, 0);
        for (unsigned s : skip) used[s % k] = 1;
        for (unsigned i = 1; i < k; ++i) {
            if (used[i]) continue;
            const unsigned j = partner(i) % k;
            used[i] = used[j] = 1;
            if (j == i)
                clique({i});
            else
                clique({i, j});
        }
    }

    // Reflections a^(first + step*t) b for t = 0, 1, ... while below k.
    void reflection_class(unsigned k, unsigned first, unsigned step)
    {
        std::vector<Vertex> elements;
        for (unsigned i = first; i < k; i += step) elements.push_back(k + i);
        clique(std::move(elements));
    }

    StructuralBuild finish(SimpleGraph outer)
    {
        return {CompositionSpec{std::move(outer), std::move(parts_)}, std::move(elements_)};
    }

private:
    std::vector<SimpleGraph> parts_;
    std::vector<Vertex> elements_;
};

SimpleGraph K(std::size_t n) { return complete(n); }

StructuralBuild csep_dihedral(unsigned n)
{
    const unsigned k = n;
    auto partner = [n](unsigned i) { return n - i; };
    PartList parts;
    if (n % 2 == 1) {
        // K_1 v (K_{(n-1)/2} u K_1) [K_1, K_2, ..., K_2, K_n]
        parts.clique({0});
        parts.rotation_classes(k, partner, {0});
        std::vector<Vertex> reflections;
        for (unsigned i = 1; i <= n; ++i) reflections.push_back(k + i % n);
        parts.clique(std::move(reflections));
        return parts.finish(join(K(1), graph_union(K((n - 1) / 2), K(1))));
    }
    // K_1 v ((K_1 v K_{(n-2)/2}) u K_1 u K_1) [K_1, K_1, K_2, ..., K_2, K_{n/2}, K_{n/2}]
    parts.clique({0});
    parts.clique({n / 2});
    parts.rotation_classes(k, partner, {0, n / 2});
    parts.reflection_class(k, 1, 2);
    parts.reflection_class(k, 0, 2);
    return parts.finish(
        join(K(1), graph_union(graph_union(join(K(1), K((n - 2) / 2)), K(1)), K(1))));
}

StructuralBuild csep_quaternion(unsigned n)
{
    const unsigned k = 2 * n;
    auto partner = [k](unsigned i) { return k - i; };
    PartList parts;
    parts.clique({0});
    parts.clique({n});
    parts.rotation_classes(k, partner, {0, n});
    parts.reflection_class(k, 1, 2);
    parts.reflection_class(k, 0, 2);
    if (n % 2 == 1)
        // K_2 v (K_{n-1} u K_2) [K_1, K_1, K_2, ..., K_2, K_n, K_n]
        return parts.finish(join(K(2), graph_union(K(n - 1), K(2))));
    // K_2 v (K_{n-1} u K_1 u K_1) [K_1, K_1, K_2, ..., K_2, K_n, K_n]
    return parts.finish(join(K(2), graph_union(graph_union(K(n - 1), K(1)), K(1))));
}

// Conjugation class partner of a^i in SD_8n.
unsigned semidihedral_partner(unsigned n, unsigned i)
{
    const unsigned k = 4 * n;
    return i % 2 == 0 ? (k - i) % k : (2 * n + k - i) % k;
}

StructuralBuild csep_semidihedral(unsigned n)
{
    const unsigned k = 4 * n;
    PartList parts;
    parts.clique({0});
    parts.clique({2 * n});
    if (n % 2 == 0) {
        // K_1 v ((K_1 v (K_{2n-1} u K_1)) u K_1) [K_1, K_1, K_2, ..., K_2, K_2n, K_2n]
        parts.rotation_classes(k, [n](unsigned i) { return semidihedral_partner(n, i); }, {0, 2 * n});
        parts.reflection_class(k, 1, 2);
        parts.reflection_class(k, 0, 2);
        return parts.finish(join(K(1), graph_union(join(K(1), graph_union(K(2 * n - 1), K(1))), K(1))));
    }
    // The central rotations a^n, a^3n share one K_2 part: they are adjacent
    // and have the same neighbourhood as every other non-central rotation.
    // K_1 v ((K_1 v (K_{2n-1} u K_1)) u K_1 u K_1) [K_1, K_1, K_2, ..., K_2, K_2n, K_n, K_n]
    parts.rotation_classes(
        k,
        [n](unsigned i) {
            if (i == n) return 3 * n;
            if (i == 3 * n) return n;
            return semidihedral_partner(n, i);
        },
        {0, 2 * n});
    parts.reflection_class(k, 1, 2);
    parts.reflection_class(k, 0, 4);
    parts.reflection_class(k, 2, 4);
    return parts.finish(join(
        K(1), graph_union(graph_union(join(K(1), graph_union(K(2 * n - 1), K(1))), K(1)), K(1))));
}

StructuralBuild cscom_semidihedral(unsigned n)
{
    const unsigned k = 4 * n;
    auto partner = [n](unsigned i) { return semidihedral_partner(n, i); };
    PartList parts;
    if (n % 2 == 1) {
        // K_4 v (K_{2n-2} u K_4) [K_1, K_1, K_1, K_1, K_2, ..., K_2, K_n, K_n, K_n, K_n]
        for (unsigned c : {0u, n, 2 * n, 3 * n}) parts.clique({c});
        parts.rotation_classes(k, partner, {0, n, 2 * n, 3 * n});
        for (unsigned j = 0; j < 4; ++j) parts.reflection_class(k, j, 4);
        return parts.finish(join(K(4), graph_union(K(2 * n - 2), K(4))));
    }
    // K_2 v (K_{2n-1} u K_1 u K_1) [K_1, K_1, K_2, ..., K_2, K_2n, K_2n]
    parts.clique({0});
    parts.clique({2 * n});
    parts.rotation_classes(k, partner, {0, 2 * n});
    parts.reflection_class(k, 1, 2);
    parts.reflection_class(k, 0, 2);
    return parts.finish(join(K(2), graph_union(graph_union(K(2 * n - 1), K(1)), K(1))));
}

} // namespace

StructuralBuild structural_composition(GraphKind kind, Family family, unsigned n)
{
    if (!has_closed_form(kind, family))
        throw UnsupportedCombination("no structure theorem for " + std::string(graph_kind_name(kind)) +
                                     " on " + std::string(family_name(family)));
    if (n < family_minimum(family))
        throw ParameterOutOfRange("n = " + std::to_string(n) + " is below the minimum for " +
                                  std::string(family_name(family)));
    if (kind == GraphKind::CSCom) return cscom_semidihedral(n);
    switch (family) {
    case Family::Dihedral: return csep_dihedral(n);
    case Family::Quaternion: return csep_quaternion(n);
    case Family::Semidihedral: return csep_semidihedral(n);
    case Family::Cyclic: break;
    }
    throw UnsupportedCombination("cyclic groups have no structure theorem");
}

SimpleGraph structural_graph(GraphKind kind, Family family, unsigned n)
{
    const StructuralBuild build = structural_composition(kind, family, n);
    SimpleGraph g = compose(build.spec).relabeled(build.element_of);
    g.set_label_context(std::make_shared<const GroupTable>(build_group(family, n)));
    return g;
}

} // namespace supergraph
