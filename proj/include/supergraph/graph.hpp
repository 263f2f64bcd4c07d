#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supergraph/group.hpp"

namespace supergraph {

using Vertex = std::uint32_t;

/// Undirected simple graph with bit-packed adjacency rows.
///
/// Vertices are 0..N-1. When the graph was built from a group, the vertex
/// index is the canonical element index and label_context() points at the
/// group so exporters can print element names.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t vertex_count,
                         std::shared_ptr<const GroupTable> context = nullptr);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const;
    std::size_t degree(Vertex v) const;

    bool adjacent(Vertex u, Vertex v) const
    {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    // Ignores u == v; edges are always stored in both rows.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::vector<Vertex> neighbors(Vertex v) const;
    // Sorted (u < v) edge list.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    // Each edge of *this is an edge of other, on the same vertex set.
    bool is_spanning_subgraph_of(const SimpleGraph& other) const;
    bool is_clique(std::span<const Vertex> vertices) const;
    std::size_t component_count() const;

    // Vertex i of *this becomes vertex new_index[i] of the result.
    SimpleGraph relabeled(std::span<const Vertex> new_index) const;

    const std::shared_ptr<const GroupTable>& label_context() const { return context_; }
    void set_label_context(std::shared_ptr<const GroupTable> context);
    std::string vertex_label(Vertex v) const;

    // Adjacency only; label context is ignored.
    bool operator==(const SimpleGraph& other) const
    {
        return n_ == other.n_ && bits_ == other.bits_;
    }

    std::span<const std::uint64_t> row(Vertex v) const
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::span<std::uint64_t> mutable_row(Vertex v)
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::size_t words_per_row() const { return words_; }

    // True when the adjacency relation is symmetric with an empty diagonal.
    bool is_valid() const;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::shared_ptr<const GroupTable> context_;
};

enum class BaseGraph { Power, Enhanced, Commuting };
enum class Relation { Equality, Conjugacy, Order };

std::string_view base_graph_name(BaseGraph b);   // "power", "enhanced", "commuting"
std::string_view relation_name(Relation r);      // "equality", "conjugacy", "order"
BaseGraph parse_base_graph(std::string_view s);
Relation parse_relation(std::string_view s);

SimpleGraph power_graph(const std::shared_ptr<const GroupTable>& g);
SimpleGraph enhanced_power_graph(const std::shared_ptr<const GroupTable>& g);
SimpleGraph commuting_graph(const std::shared_ptr<const GroupTable>& g);

Partition relation_partition(const GroupTable& g, Relation r);

/// B-super-A graph: g ~ h when some member of [g] is A-adjacent to some
/// member of [h]. With class_cliques every class is additionally made a
/// clique; without it a class is a clique only if it already holds an A-edge.
SimpleGraph super_graph(const SimpleGraph& a, const Partition& b, bool class_cliques = true);

SimpleGraph named_super_graph(const std::shared_ptr<const GroupTable>& g, BaseGraph base,
                              Relation relation, bool class_cliques = true);

// Convenience for the two graphs with closed-form spectra.
SimpleGraph csep_graph(const std::shared_ptr<const GroupTable>& g);
SimpleGraph cscom_graph(const std::shared_ptr<const GroupTable>& g);

/// Spanning-subgraph containment among the nine (base, relation) graphs.
struct HierarchyReport {
    static constexpr std::size_t kGraphs = 9;
    // Index = 3 * base + relation.
    std::array<std::pair<BaseGraph, Relation>, kGraphs> graphs;
    std::array<std::array<bool, kGraphs>, kGraphs> contained{};   // [i][j]: G_i <= G_j

    static std::size_t index(BaseGraph b, Relation r)
    {
        return 3 * static_cast<std::size_t>(b) + static_cast<std::size_t>(r);
    }
    bool holds(BaseGraph b1, Relation r1, BaseGraph b2, Relation r2) const
    {
        return contained[index(b1, r1)][index(b2, r2)];
    }
    // P <= P_E <= Com for each relation, and equality <= conjugacy <= order
    // for each base graph.
    bool base_chain_holds() const;
    bool relation_chain_holds() const;
};

HierarchyReport hierarchy_report(const std::shared_ptr<const GroupTable>& g);

} // namespace supergraph
