#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace supergraph {

using Element = std::uint32_t;
using ElementSet = std::vector<Element>;   // always sorted ascending

enum class Family { Dihedral, Quaternion, Semidihedral, Cyclic };

std::string_view family_name(Family f);        // "d2n", "q4n", "sd8n", "cyclic"
Family parse_family(std::string_view name);    // throws ParameterOutOfRange
unsigned family_minimum(Family f);
// Exponent range of the generator a: n, 2n, 4n, n.
unsigned rotation_count(Family f, unsigned n);
unsigned group_order(Family f, unsigned n);

/// A finite group stored as an explicit Cayley table.
///
/// Elements are indexed canonically: a^i is index i for 0 <= i < k, and
/// a^i*b is index k + i, where k = rotation_count(family, n). The identity
/// is therefore always index 0.
class GroupTable {
public:
    GroupTable(Family family, unsigned parameter, std::vector<Element> product,
               std::vector<std::string> labels);

    std::size_t order() const { return order_; }
    Family family() const { return family_; }
    unsigned parameter() const { return parameter_; }
    unsigned rotations() const { return rotations_; }
    Element identity() const { return 0; }

    Element multiply(Element x, Element y) const { return product_[x * order_ + y]; }
    Element inverse(Element x) const { return inverse_[x]; }
    const std::string& label(Element x) const { return labels_[x]; }
    std::span<const std::string> labels() const { return labels_; }

    Element rotation(unsigned i) const { return i % rotations_; }
    Element reflection(unsigned i) const { return rotations_ + i % rotations_; }
    bool is_rotation(Element x) const { return x < rotations_; }

    // Exhaustive Latin-square / identity / inverse / associativity check.
    bool satisfies_axioms() const;

private:
    Family family_;
    unsigned parameter_;
    std::size_t order_;
    unsigned rotations_;
    std::vector<Element> product_;
    std::vector<Element> inverse_;
    std::vector<std::string> labels_;
};

/// An equivalence relation on the element indices of a group.
class Partition {
public:
    // Blocks are normalised: each sorted, ordered by smallest member.
    explicit Partition(std::vector<ElementSet> blocks);

    static Partition singletons(std::size_t n);

    std::size_t ground_size() const { return block_of_.size(); }
    std::size_t block_count() const { return blocks_.size(); }
    std::size_t block_of(Element x) const { return block_of_[x]; }
    const ElementSet& block(std::size_t id) const { return blocks_[id]; }
    const std::vector<ElementSet>& blocks() const { return blocks_; }
    const ElementSet& block_containing(Element x) const { return blocks_[block_of_[x]]; }

    bool same_block(Element x, Element y) const { return block_of_[x] == block_of_[y]; }
    // Every block of *this lies inside a block of coarser.
    bool refines(const Partition& coarser) const;

    bool operator==(const Partition& other) const { return blocks_ == other.blocks_; }

private:
    std::vector<ElementSet> blocks_;
    std::vector<std::size_t> block_of_;
};

GroupTable build_group(Family family, unsigned n);

unsigned element_order(const GroupTable& g, Element x);
ElementSet center(const GroupTable& g);
Partition conjugacy_classes(const GroupTable& g);
Partition order_partition(const GroupTable& g);

// <x> as a sorted element set.
ElementSet cyclic_subgroup(const GroupTable& g, Element x);
// All distinct cyclic subgroups, sorted lexicographically.
std::vector<ElementSet> cyclic_subgroups(const GroupTable& g);
// Cyclic subgroups not strictly contained in another cyclic subgroup.
std::vector<ElementSet> maximal_cyclic_subgroups(const GroupTable& g);

std::string format_set(const GroupTable& g, const ElementSet& s);   // "{e, a^2}"

} // namespace supergraph
