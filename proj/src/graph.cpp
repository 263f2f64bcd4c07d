#include "supergraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "supergraph/errors.hpp"

namespace supergraph {

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::shared_ptr<const GroupTable> context)
    : n_(vertex_count), words_((vertex_count + 63) / 64), bits_(n_ * words_, 0)
{
    set_label_context(std::move(context));
}

void SimpleGraph::set_label_context(std::shared_ptr<const GroupTable> context)
{
    if (context && context->order() != n_)
        throw DimensionMismatch("label context order " + std::to_string(context->order()) +
                                " differs from vertex count " + std::to_string(n_));
    context_ = std::move(context);
}

std::size_t SimpleGraph::degree(Vertex v) const
{
    std::size_t d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
}

std::size_t SimpleGraph::edge_count() const
{
    std::size_t twice = 0;
    for (auto w : bits_) twice += std::popcount(w);
    return twice / 2;
}

void SimpleGraph::add_edge(Vertex u, Vertex v)
{
    if (u >= n_ || v >= n_) throw ParameterOutOfRange("vertex index out of range");
    if (u == v) return;
    mutable_row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
    mutable_row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
}

void SimpleGraph::remove_edge(Vertex u, Vertex v)
{
    if (u >= n_ || v >= n_) throw ParameterOutOfRange("vertex index out of range");
    mutable_row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    mutable_row(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t w = 0; w < words_; ++w)
        for (std::uint64_t bits = r[w]; bits; bits &= bits - 1)
            out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
    return out;
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool SimpleGraph::is_spanning_subgraph_of(const SimpleGraph& other) const
{
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~other.bits_[i]) return false;
    return true;
}

bool SimpleGraph::is_clique(std::span<const Vertex> vertices) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!adjacent(vertices[i], vertices[j])) return false;
    return true;
}

std::size_t SimpleGraph::component_count() const
{
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack;
    std::size_t components = 0;
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
    }
    return components;
}

SimpleGraph SimpleGraph::relabeled(std::span<const Vertex> new_index) const
{
    if (new_index.size() != n_) throw DimensionMismatch("relabeling has the wrong length");
    std::vector<char> hit(n_, 0);
    for (Vertex v : new_index) {
        if (v >= n_ || hit[v]) throw DimensionMismatch("relabeling is not a permutation");
        hit[v] = 1;
    }
    SimpleGraph out(n_);
    for (auto [u, v] : edges()) out.add_edge(new_index[u], new_index[v]);
    return out;
}

std::string SimpleGraph::vertex_label(Vertex v) const
{
    return context_ ? context_->label(v) : std::to_string(v);
}

bool SimpleGraph::is_valid() const
{
    for (Vertex u = 0; u < n_; ++u) {
        if (adjacent(u, u)) return false;
        for (Vertex v : neighbors(u))
            if (!adjacent(v, u)) return false;
    }
    // Padding bits past n_ must stay clear.
    if (n_ % 64)
        for (Vertex u = 0; u < n_; ++u)
            if (row(u)[words_ - 1] >> (n_ % 64)) return false;
    return true;
}

std::string_view base_graph_name(BaseGraph b)
{
    switch (b) {
    case BaseGraph::Power: return "power";
    case BaseGraph::Enhanced: return "enhanced";
    case BaseGraph::Commuting: return "commuting";
    }
    return "?";
}

std::string_view relation_name(Relation r)
{
    switch (r) {
    case Relation::Equality: return "equality";
    case Relation::Conjugacy: return "conjugacy";
    case Relation::Order: return "order";
    }
    return "?";
}

BaseGraph parse_base_graph(std::string_view s)
{
    if (s == "power") return BaseGraph::Power;
    if (s == "enhanced") return BaseGraph::Enhanced;
    if (s == "commuting") return BaseGraph::Commuting;
    throw ParameterOutOfRange("unknown base graph '" + std::string(s) + "'");
}

Relation parse_relation(std::string_view s)
{
    if (s == "equality") return Relation::Equality;
    if (s == "conjugacy") return Relation::Conjugacy;
    if (s == "order") return Relation::Order;
    throw ParameterOutOfRange("unknown relation '" + std::string(s) + "'");
}

namespace {

using BitRow = std::vector<std::uint64_t>;

BitRow to_bits(const ElementSet& s, std::size_t words)
{
    BitRow r(words, 0);
    for (Element x : s) r[x >> 6] |= std::uint64_t{1} << (x & 63);
    return r;
}

// Row v of the result is produced by fill(v, row); rows are independent.
template <typename RowFill>
SimpleGraph build_rows(std::shared_ptr<const GroupTable> ctx, std::size_t n, RowFill fill)
{
    SimpleGraph out(n, std::move(ctx));
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < count; ++v) {
        auto r = out.mutable_row(static_cast<Vertex>(v));
        fill(static_cast<Vertex>(v), r);
        r[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    return out;
}

} // namespace

SimpleGraph power_graph(const std::shared_ptr<const GroupTable>& g)
{
    const std::size_t n = g->order();
    const std::size_t words = (n + 63) / 64;
    std::vector<BitRow> powers(n);
    for (Element x = 0; x < n; ++x) powers[x] = to_bits(cyclic_subgroup(*g, x), words);
    // x ~ y iff y in <x> or x in <y>; the second half is the transpose.
    return build_rows(g, n, [&](Vertex x, std::span<std::uint64_t> r) {
        for (std::size_t w = 0; w < words; ++w) r[w] = powers[x][w];
        for (Element y = 0; y < n; ++y)
            if ((powers[y][x >> 6] >> (x & 63)) & 1u) r[y >> 6] |= std::uint64_t{1} << (y & 63);
    });
}

SimpleGraph enhanced_power_graph(const std::shared_ptr<const GroupTable>& g)
{
    const std::size_t n = g->order();
    const std::size_t words = (n + 63) / 64;
    const auto maximal = maximal_cyclic_subgroups(*g);
    std::vector<BitRow> member_bits;
    std::vector<std::vector<std::size_t>> containing(n);
    for (std::size_t m = 0; m < maximal.size(); ++m) {
        member_bits.push_back(to_bits(maximal[m], words));
        for (Element x : maximal[m]) containing[x].push_back(m);
    }
    return build_rows(g, n, [&](Vertex x, std::span<std::uint64_t> r) {
        for (std::size_t m : containing[x])
            for (std::size_t w = 0; w < words; ++w) r[w] |= member_bits[m][w];
    });
}

SimpleGraph commuting_graph(const std::shared_ptr<const GroupTable>& g)
{
    const std::size_t n = g->order();
    return build_rows(g, n, [&](Vertex x, std::span<std::uint64_t> r) {
        for (Element y = 0; y < n; ++y)
            if (g->multiply(x, y) == g->multiply(y, x)) r[y >> 6] |= std::uint64_t{1} << (y & 63);
    });
}

Partition relation_partition(const GroupTable& g, Relation r)
{
    switch (r) {
    case Relation::Equality: return Partition::singletons(g.order());
    case Relation::Conjugacy: return conjugacy_classes(g);
    case Relation::Order: return order_partition(g);
    }
    throw UnsupportedCombination("unknown relation");
}

SimpleGraph super_graph(const SimpleGraph& a, const Partition& b, bool class_cliques)
{
    const std::size_t n = a.vertex_count();
    if (b.ground_size() != n)
        throw DimensionMismatch("graph has " + std::to_string(n) + " vertices, partition covers " +
                                std::to_string(b.ground_size()) + " elements");

    // Class-level relation: some A-edge runs between the two classes.
    const std::size_t k = b.block_count();
    std::vector<char> linked(k * k, 0);
    for (auto [u, v] : a.edges()) {
        const std::size_t cu = b.block_of(u), cv = b.block_of(v);
        linked[cu * k + cv] = linked[cv * k + cu] = 1;
    }
    if (class_cliques)
        for (std::size_t c = 0; c < k; ++c) linked[c * k + c] = 1;

    const std::size_t words = a.words_per_row();
    std::vector<BitRow> class_bits;
    class_bits.reserve(k);
    for (std::size_t c = 0; c < k; ++c) class_bits.push_back(to_bits(b.block(c), words));

    return build_rows(a.label_context(), n, [&](Vertex v, std::span<std::uint64_t> r) {
        const std::size_t cv = b.block_of(v);
        for (std::size_t c = 0; c < k; ++c)
            if (linked[cv * k + c])
                for (std::size_t w = 0; w < words; ++w) r[w] |= class_bits[c][w];
    });
}

SimpleGraph named_super_graph(const std::shared_ptr<const GroupTable>& g, BaseGraph base,
                              Relation relation, bool class_cliques)
{
    SimpleGraph a;
    switch (base) {
    case BaseGraph::Power: a = power_graph(g); break;
    case BaseGraph::Enhanced: a = enhanced_power_graph(g); break;
    case BaseGraph::Commuting: a = commuting_graph(g); break;
    }
    return super_graph(a, relation_partition(*g, relation), class_cliques);
}

SimpleGraph csep_graph(const std::shared_ptr<const GroupTable>& g)
{
    return named_super_graph(g, BaseGraph::Enhanced, Relation::Conjugacy);
}

SimpleGraph cscom_graph(const std::shared_ptr<const GroupTable>& g)
{
    return named_super_graph(g, BaseGraph::Commuting, Relation::Conjugacy);
}

bool HierarchyReport::base_chain_holds() const
{
    for (Relation r : {Relation::Equality, Relation::Conjugacy, Relation::Order})
        if (!holds(BaseGraph::Power, r, BaseGraph::Enhanced, r) ||
            !holds(BaseGraph::Enhanced, r, BaseGraph::Commuting, r))
            return false;
    return true;
}

bool HierarchyReport::relation_chain_holds() const
{
    for (BaseGraph b : {BaseGraph::Power, BaseGraph::Enhanced, BaseGraph::Commuting})
        if (!holds(b, Relation::Equality, b, Relation::Conjugacy) ||
            !holds(b, Relation::Conjugacy, b, Relation::Order))
            return false;
    return true;
}

HierarchyReport hierarchy_report(const std::shared_ptr<const GroupTable>& g)
{
    HierarchyReport report;
    const std::array<SimpleGraph, 3> bases{power_graph(g), enhanced_power_graph(g),
                                           commuting_graph(g)};
    const std::array<Partition, 3> relations{relation_partition(*g, Relation::Equality),
                                             relation_partition(*g, Relation::Conjugacy),
                                             relation_partition(*g, Relation::Order)};
    std::vector<SimpleGraph> graphs;
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t r = 0; r < 3; ++r) {
            report.graphs[3 * b + r] = {static_cast<BaseGraph>(b), static_cast<Relation>(r)};
            graphs.push_back(super_graph(bases[b], relations[r]));
        }
    for (std::size_t i = 0; i < HierarchyReport::kGraphs; ++i)
        for (std::size_t j = 0; j < HierarchyReport::kGraphs; ++j)
            report.contained[i][j] = graphs[i].is_spanning_subgraph_of(graphs[j]);
    return report;
}

} // namespace supergraph
