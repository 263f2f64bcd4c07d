#pragma once

#include <vector>

#include "supergraph/graph.hpp"

namespace supergraph {

SimpleGraph complete(std::size_t n);
SimpleGraph edgeless(std::size_t n);
// Disjoint union; vertices of rhs follow those of lhs.
SimpleGraph graph_union(const SimpleGraph& lhs, const SimpleGraph& rhs);
SimpleGraph join(const SimpleGraph& lhs, const SimpleGraph& rhs);

/// Generalized composition H[G_1, ..., G_k]: vertex i of the outer graph H
/// is replaced by parts[i]; two parts are fully joined when their outer
/// vertices are adjacent.
struct CompositionSpec {
    SimpleGraph outer;
    std::vector<SimpleGraph> parts;

    std::vector<std::size_t> part_offsets() const;
    std::size_t composed_order() const;
};

SimpleGraph compose(const CompositionSpec& spec);

enum class GraphKind { CSEP, CSCom };

std::string_view graph_kind_name(GraphKind k);   // "csep", "cscom"
GraphKind parse_graph_kind(std::string_view s);
BaseGraph base_of(GraphKind k);

// True for the (kind, family) pairs with a stated structure and spectrum.
bool has_closed_form(GraphKind kind, Family family);

/// A structure theorem expression together with the element each composed
/// vertex stands for.
struct StructuralBuild {
    CompositionSpec spec;
    std::vector<Vertex> element_of;   // composed vertex -> canonical element index
};

// Throws UnsupportedCombination or ParameterOutOfRange.
StructuralBuild structural_composition(GraphKind kind, Family family, unsigned n);

/// The structure theorem's graph, relabeled to canonical element indices so it
/// can be compared with the group-theoretic build by plain equality.
SimpleGraph structural_graph(GraphKind kind, Family family, unsigned n);

} // namespace supergraph
